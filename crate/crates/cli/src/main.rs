//! `tcbound`: homology, cohomology rings, complements, covers and certified bounds for
//! topological complexity from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tcbound_core::homology::Coefficients;

mod bounds;
mod complexes;
mod covers;
mod io;

use io::{CliError, Doc};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "tcbound", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology groups of a complex.
    Homology {
        complex: PathBuf,
        #[arg(long, default_value = "z", value_parser = parse_coeff)]
        coeff: Coefficients,
    },
    /// Cohomology ring with cup-length and zero-divisor cup-length.
    Ring {
        complex: PathBuf,
        #[arg(long, default_value = "q", value_parser = parse_coeff)]
        coeff: Coefficients,
    },
    /// Zero-divisor cup-length with a witness.
    Zcl {
        complex: PathBuf,
        #[arg(long, default_value = "q", value_parser = parse_coeff)]
        coeff: Coefficients,
    },
    /// Complement of a subcomplex, computed both as a nerve (full subcomplexes only) and as an
    /// order complex.
    Complement { complex: PathBuf, sub: PathBuf },
    /// The r-skeleton.
    Skeleton { complex: PathBuf, r: usize },
    /// Barycentric subdivision.
    Subdivide { complex: PathBuf },
    /// Triangulated product of two complexes.
    Product { a: PathBuf, b: PathBuf },
    /// Discrete covers.
    Cover {
        #[command(subcommand)]
        action: CoverAction,
    },
    /// Interval bounds for a space descriptor.
    Bounds {
        descriptor: PathBuf,
        /// Include every candidate bound and the derivation log.
        #[arg(long)]
        explain: bool,
        /// Extra knowledge-base records, appended to the built-in ones.
        #[arg(long)]
        kb: Option<PathBuf>,
    },
    /// Interval bounds for an explicit complex.
    Analyze {
        complex: PathBuf,
        #[arg(long)]
        simply_connected: bool,
        #[arg(long)]
        aspherical: bool,
        #[arg(long)]
        h_space: bool,
        #[arg(long)]
        explain: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CoverAction {
    /// Multiplicity and the largest n for which the cover is an n-cover.
    Check { cover: PathBuf },
    /// Lengthen to m+1 sets.
    Extend { cover: PathBuf, m: usize },
    /// Combine two covers of the same ground set.
    Combine { a: PathBuf, b: PathBuf },
    /// Random trials of the multiplicity lemma and of cover combination.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        lemma_trials: usize,
        #[arg(long, default_value_t = 500)]
        combine_trials: usize,
    },
}

fn parse_coeff(s: &str) -> Result<Coefficients, String> {
    s.parse()
}

fn run(cli: Cli) -> Result<Doc, CliError> {
    match cli.command {
        Command::Homology { complex, coeff } => complexes::homology(&complex, coeff),
        Command::Ring { complex, coeff } => complexes::ring(&complex, coeff),
        Command::Zcl { complex, coeff } => complexes::zcl(&complex, coeff),
        Command::Complement { complex, sub } => complexes::complement(&complex, &sub),
        Command::Skeleton { complex, r } => complexes::skeleton(&complex, r),
        Command::Subdivide { complex } => complexes::subdivide(&complex),
        Command::Product { a, b } => complexes::product(&a, &b),
        Command::Cover { action } => match action {
            CoverAction::Check { cover } => covers::check(&cover),
            CoverAction::Extend { cover, m } => covers::extend(&cover, m),
            CoverAction::Combine { a, b } => covers::combine(&a, &b),
            CoverAction::Fuzz { lemma_trials, combine_trials } => {
                covers::fuzz(cli.seed, lemma_trials, combine_trials)
            }
        },
        Command::Bounds { descriptor, explain, kb } => {
            bounds::bounds(&descriptor, explain, kb.as_deref())
        }
        Command::Analyze { complex, simply_connected, aspherical, h_space, explain } => {
            bounds::analyze(&complex, simply_connected, aspherical, h_space, explain)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(doc) => {
            let out = match format {
                Format::Json => doc.json(),
                Format::Text => doc.text,
            };
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code())
        }
    }
}
