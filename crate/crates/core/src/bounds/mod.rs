//! Certified interval bounds for TC, TC^D, ~TC, cat, cat_1 and ~cat.
//!
//! A [`SpaceDescriptor`] is expanded into a small graph of related spaces (factors, the
//! classifying space of the fundamental group, the universal cover, `X × X`, ...). Every node
//! carries an [`Interval`] for each [`Invariant`]. Seeds come from the descriptor itself, computed
//! cohomology rings and the knowledge base; the rule base then tightens intervals until nothing
//! changes. Every tightening is logged with the rule that caused it and can be replayed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod descriptor;
mod engine;
pub mod formulas;
mod interval;
pub mod kb;
mod models;
mod report;
mod rules;

pub use descriptor::{AttributeSet, GroupClass, Profile, SpaceDescriptor, Tri};
pub use engine::{
    analyze, analyze_complex, binding, evaluate, propagate, seed_facts, seed_facts_with, Candidate,
    Derivation, InvariantState, Node, NodeRole, Side, Source,
};
pub use formulas::{secat_tilde_bound, tc_ceiling_bound, FormulaError};
pub use interval::{ExtNat, Interval};
pub use kb::KnowledgeBase;
pub use report::{report, BoundReport, CandidateReport, Gap, NodeReport, Report, ReportFormat};
pub use rules::{Provenance, Rule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid knowledge base: {0}")]
    InvalidKnowledgeBase(String),
    #[error(
        "conflict on {invariant}({node}): lower bound {lower} from {lower_by} exceeds upper bound {upper} from {upper_by}"
    )]
    Conflict {
        node: String,
        invariant: Invariant,
        lower: ExtNat,
        lower_by: String,
        upper: ExtNat,
        upper_by: String,
    },
    #[error("propagation did not converge within {0} passes")]
    NoFixpoint(usize),
    #[error("replay diverged at step {step}: {reason}")]
    Replay { step: usize, reason: String },
}

/// The invariants tracked per node.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Cat,
    Cat1,
    Tc,
    Tcd,
    Tctilde,
    Cattilde,
    Dim,
    Conn,
    Zcl,
    Cuplen,
}

impl Invariant {
    pub const ALL: [Invariant; 10] = [
        Invariant::Cat,
        Invariant::Cat1,
        Invariant::Tc,
        Invariant::Tcd,
        Invariant::Tctilde,
        Invariant::Cattilde,
        Invariant::Dim,
        Invariant::Conn,
        Invariant::Zcl,
        Invariant::Cuplen,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Machine name as used in JSON.
    pub fn key(self) -> &'static str {
        match self {
            Invariant::Cat => "cat",
            Invariant::Cat1 => "cat1",
            Invariant::Tc => "tc",
            Invariant::Tcd => "tcd",
            Invariant::Tctilde => "tctilde",
            Invariant::Cattilde => "cattilde",
            Invariant::Dim => "dim",
            Invariant::Conn => "conn",
            Invariant::Zcl => "zcl",
            Invariant::Cuplen => "cuplen",
        }
    }

    /// Mathematical notation.
    pub fn symbol(self) -> &'static str {
        match self {
            Invariant::Cat => "cat",
            Invariant::Cat1 => "cat_1",
            Invariant::Tc => "TC",
            Invariant::Tcd => "TC^D",
            Invariant::Tctilde => "~TC",
            Invariant::Cattilde => "~cat",
            Invariant::Dim => "dim",
            Invariant::Conn => "conn",
            Invariant::Zcl => "zcl",
            Invariant::Cuplen => "cuplen",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Invariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.key() == s)
            .ok_or_else(|| format!("unknown invariant `{s}`"))
    }
}
