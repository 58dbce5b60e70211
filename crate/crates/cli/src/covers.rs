use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use tcbound_core::cover::io::CoverFile;
use tcbound_core::cover::{self, Cover, CoverError, PropertyOracle};

use crate::io::{read, CliError, Doc};

fn read_cover(path: &Path) -> Result<Cover, CliError> {
    let file: CoverFile = read(path)?;
    file.to_cover()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn cover_doc(c: &Cover, text: String) -> Doc {
    Doc {
        value: serde_json::to_value(CoverFile::from(c)).expect("covers serialize"),
        text,
    }
}

fn lemma_holds(c: &Cover, m: usize) -> Result<(), CliError> {
    match cover::check_multiplicity_lemma(c, m) {
        Ok(true) => Ok(()),
        Ok(false) => Err(CliError::invariant(
            "multiplicity lemma",
            format!("fails for m = {m} on a cover by {} sets", c.len()),
        )),
        Err(e) => Err(CliError::input(e)),
    }
}

pub fn check(path: &Path) -> Result<Doc, CliError> {
    let c = read_cover(path)?;
    let mut smallest = None;
    for n in 1..=c.len() {
        if cover::is_n_cover(&c, n).map_err(CliError::input)? {
            smallest = Some(n);
            break;
        }
    }
    for m in 0..c.len() {
        lemma_holds(&c, m)?;
    }
    let mult = cover::multiplicity(&c);
    let n = smallest.expect("every cover is an n-cover for n = number of sets");
    let text = format!(
        "{} sets on {} points, multiplicity {mult}, {n}-cover (every {n} sets cover)\n",
        c.len(),
        c.ground().len()
    );
    Ok(Doc {
        value: json!({
            "sets": c.len(),
            "points": c.ground().len(),
            "multiplicity": mult,
            "n_cover": n,
            "lemma_checked": c.len(),
        }),
        text,
    })
}

pub fn extend(path: &Path, m: usize) -> Result<Doc, CliError> {
    let c = read_cover(path)?;
    let e = cover::extend_cover(&c, m).map_err(CliError::input)?;
    e.check_tags(Some(&c), None)
        .map_err(|err| CliError::invariant("extended pieces lie in their tagged sets", err))?;
    if !cover::is_n_cover(&e, c.len()).map_err(CliError::input)? {
        return Err(CliError::invariant(
            "extension is a (k+1)-cover",
            format!("{} sets extended to {}", c.len(), e.len()),
        ));
    }
    let text = format!(
        "extended {} sets to {}, multiplicity {}\n",
        c.len(),
        e.len(),
        cover::multiplicity(&e)
    );
    Ok(cover_doc(&e, text))
}

fn combine_checked(a: &Cover, b: &Cover) -> Result<Cover, CoverError> {
    let pa = PropertyOracle::contained_in_some("inside a set of A", a.set_elements());
    let pb = PropertyOracle::contained_in_some("inside a set of B", b.set_elements());
    cover::combine_covers(a, b, &pa, &pb)
}

fn combined_is_valid(a: &Cover, b: &Cover, w: &Cover) -> Result<(), CliError> {
    if w.len() + 1 != a.len() + b.len() {
        return Err(CliError::invariant(
            "combined cover has k+m+1 sets",
            format!("{} and {} sets gave {}", a.len(), b.len(), w.len()),
        ));
    }
    if w.ground() != a.ground() {
        return Err(CliError::invariant("combined cover covers the ground set", "ground set changed"));
    }
    Ok(())
}

pub fn combine(pa: &Path, pb: &Path) -> Result<Doc, CliError> {
    let (a, b) = (read_cover(pa)?, read_cover(pb)?);
    let w = match combine_checked(&a, &b) {
        Ok(w) => w,
        Err(e @ (CoverError::BadTag { .. } | CoverError::NotDownwardClosed { .. })) => {
            return Err(CliError::invariant("combined pieces carry both properties", e))
        }
        Err(e) => return Err(CliError::input(e)),
    };
    combined_is_valid(&a, &b, &w)?;
    let text = format!("combined {} and {} sets into {}\n", a.len(), b.len(), w.len());
    Ok(cover_doc(&w, text))
}

pub fn fuzz(seed: u64, lemma_trials: usize, combine_trials: usize) -> Result<Doc, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..lemma_trials {
        let points = rng.random_range(1..=12);
        let sets = rng.random_range(1..=8);
        let c = cover::random_cover(&mut rng, points, sets);
        let m = rng.random_range(0..sets);
        lemma_holds(&c, m)?;
    }
    for _ in 0..combine_trials {
        let points = rng.random_range(1..=12);
        let (k, m) = (rng.random_range(1..=5), rng.random_range(1..=5));
        let a = cover::random_cover(&mut rng, points, k);
        let b = cover::random_cover(&mut rng, points, m);
        let w = combine_checked(&a, &b)
            .map_err(|e| CliError::invariant("combined pieces carry both properties", e))?;
        combined_is_valid(&a, &b, &w)?;
    }
    let mut text = String::new();
    let _ = writeln!(text, "seed {seed}: {lemma_trials} lemma trials, {combine_trials} combine trials, all passed");
    Ok(Doc {
        value: json!({
            "seed": seed,
            "lemma_trials": lemma_trials,
            "combine_trials": combine_trials,
            "failures": 0,
        }),
        text,
    })
}
