use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::engine::{binding, Derivation, InvariantState, NodeRole, Side};
use super::interval::{ExtNat, Interval};
use super::Invariant;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    Text,
    #[default]
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            _ => Err(format!("unknown format `{s}`; expected text or json")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CandidateReport {
    pub source: String,
    pub value: ExtNat,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub inputs: String,
}

/// How one end of a root interval was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub invariant: Invariant,
    pub side: Side,
    pub value: ExtNat,
    /// Every source achieving the value.
    pub binding: Vec<String>,
    /// Every bound any source gives at the fixpoint, achieving or not.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<CandidateReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gap {
    pub space: String,
    pub group: String,
    pub statement: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeReport {
    pub id: usize,
    pub space: String,
    pub role: NodeRole,
    pub intervals: BTreeMap<Invariant, Interval>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub space: String,
    pub invariants: BTreeMap<Invariant, Interval>,
    pub bounds: Vec<BoundReport>,
    pub gaps: Vec<Gap>,
    pub notes: Vec<String>,
    pub nodes: Vec<NodeReport>,
    #[serde(default)]
    pub derivations: Vec<Derivation>,
}

fn intervals(st: &InvariantState, node: usize) -> BTreeMap<Invariant, Interval> {
    Invariant::ALL.into_iter().map(|i| (i, st.interval(node, i))).collect()
}

impl Report {
    /// With `explain`, every non-binding candidate and the full derivation log are included.
    pub fn new(st: &InvariantState, explain: bool) -> Report {
        let mut bounds = Vec::new();
        let candidates = st.candidates(0);
        for inv in Invariant::ALL {
            let iv = st.interval(0, inv);
            for (side, value) in [(Side::Lower, iv.lower), (Side::Upper, iv.upper)] {
                let cands = if explain {
                    candidates
                        .iter()
                        .filter(|c| c.invariant == inv && c.side == side)
                        .map(|c| CandidateReport {
                            source: c.source.to_string(),
                            value: c.value,
                            inputs: c.inputs.clone(),
                        })
                        .unique()
                        .collect()
                } else {
                    Vec::new()
                };
                bounds.push(BoundReport {
                    invariant: inv,
                    side,
                    value,
                    binding: binding(st, 0, inv, side),
                    candidates: cands,
                });
            }
        }
        let gaps = st
            .gaps()
            .into_iter()
            .map(|(x, g)| Gap {
                space: st.nodes[x].label.clone(),
                group: st.nodes[g].label.clone(),
                statement: format!(
                    "TC^D(X) ≤ {} < {} ≤ TC^D(π)",
                    st.interval(x, Invariant::Tcd).upper,
                    st.interval(g, Invariant::Tcd).lower
                ),
            })
            .collect();
        Report {
            space: st.root().label.clone(),
            invariants: intervals(st, 0),
            bounds,
            gaps,
            notes: st.notes.clone(),
            nodes: st
                .nodes
                .iter()
                .map(|n| NodeReport {
                    id: n.id,
                    space: n.label.clone(),
                    role: n.role,
                    intervals: intervals(st, n.id),
                })
                .collect(),
            derivations: if explain { st.log.clone() } else { Vec::new() },
        }
    }

    pub fn to_json(&self) -> String {
        crate::json::to_string(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.space);
        let from = |inv: Invariant, side: Side| {
            self.bounds
                .iter()
                .find(|b| b.invariant == inv && b.side == side)
                .map(|b| b.binding.join(", "))
                .filter(|b| !b.is_empty())
                .unwrap_or_else(|| "-".into())
        };
        let width = self
            .invariants
            .keys()
            .map(|&inv| from(inv, Side::Lower).chars().count())
            .max()
            .unwrap_or(0)
            .max(10);
        let _ = writeln!(s, "  {:<8} {:<10} {:<width$} upper from", "", "interval", "lower from");
        for (inv, iv) in &self.invariants {
            let _ = writeln!(
                s,
                "  {:<8} {:<10} {:<width$} {}",
                inv.symbol(),
                iv.to_string(),
                from(*inv, Side::Lower),
                from(*inv, Side::Upper)
            );
        }
        if !self.gaps.is_empty() {
            let _ = writeln!(s, "gaps:");
            for g in &self.gaps {
                let _ = writeln!(s, "  {}   (X = {}, K(π,1) = {})", g.statement, g.space, g.group);
            }
        }
        if !self.notes.is_empty() {
            let _ = writeln!(s, "notes:");
            for n in &self.notes {
                let _ = writeln!(s, "  {n}");
            }
        }
        if !self.derivations.is_empty() {
            let _ = writeln!(s, "derivation:");
            for d in &self.derivations {
                let (from, to) = match d.side {
                    Side::Lower => (d.before.lower, d.after.lower),
                    Side::Upper => (d.before.upper, d.after.upper),
                };
                let _ = writeln!(
                    s,
                    "  #{:<4} {:<18} {}({}) {} {} → {}",
                    d.step, d.rule, d.invariant.symbol(), d.space, d.side, from, to
                );
                if !d.inputs.is_empty() {
                    let _ = writeln!(s, "         from {}", d.inputs);
                }
                let _ = writeln!(s, "         cites {}", d.citation);
            }
        }
        s
    }
}

/// Renders a propagated state with its full derivation chain.
pub fn report(st: &InvariantState, format: ReportFormat) -> String {
    let r = Report::new(st, true);
    match format {
        ReportFormat::Json => r.to_json(),
        ReportFormat::Text => r.to_text(),
    }
}
