//! Tabulated values of the invariants on standard spaces.
//!
//! Records are plain JSON. A record without a citation or without a `primary`/`classical`
//! provenance is rejected when the knowledge base is loaded.

use serde::{Deserialize, Serialize};

use super::descriptor::SpaceDescriptor;
use super::interval::{ExtNat, Interval};
use super::rules::Provenance;
use super::{BoundsError, Invariant};

const DEFAULT_KB: &str = include_str!("../../data/kb.json");

/// Which values of `n` a record applies to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Selector {
    Exact(u64),
    OneOf(Vec<u64>),
    Named(NamedSelector),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedSelector {
    Any,
    Odd,
    Even,
    Pow2,
}

impl Selector {
    pub fn matches(&self, n: u64) -> bool {
        match self {
            Selector::Exact(m) => *m == n,
            Selector::OneOf(ms) => ms.contains(&n),
            Selector::Named(NamedSelector::Any) => true,
            Selector::Named(NamedSelector::Odd) => n % 2 == 1,
            Selector::Named(NamedSelector::Even) => n % 2 == 0,
            Selector::Named(NamedSelector::Pow2) => n.is_power_of_two(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Sphere,
    Torus,
    RealProjective,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpacePattern {
    Family {
        #[serde(rename = "type")]
        family: Family,
        n: Selector,
    },
    Exact { descriptor: SpaceDescriptor },
}

impl SpacePattern {
    /// `Some(n)` (the family parameter, or 0 for exact matches) when `d` matches.
    fn matches(&self, d: &SpaceDescriptor) -> Option<u64> {
        match (self, d) {
            (SpacePattern::Family { family: Family::Sphere, n }, SpaceDescriptor::Sphere { n: m })
            | (SpacePattern::Family { family: Family::Torus, n }, SpaceDescriptor::Torus { n: m })
            | (
                SpacePattern::Family { family: Family::RealProjective, n },
                SpaceDescriptor::RealProjective { n: m },
            ) if n.matches(*m) => Some(*m),
            (SpacePattern::Exact { descriptor }, d) if descriptor.normalize() == *d => Some(0),
            _ => None,
        }
    }
}

/// A value as a function of the family parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueExpr {
    Const(u64),
    N,
    TwoNMinusOne,
    Inf,
}

impl ValueExpr {
    pub fn eval(&self, n: u64) -> ExtNat {
        match self {
            ValueExpr::Const(c) => ExtNat::Fin(*c),
            ValueExpr::N => ExtNat::Fin(n),
            ValueExpr::TwoNMinusOne => ExtNat::Fin((2 * n).saturating_sub(1)),
            ValueExpr::Inf => ExtNat::Inf,
        }
    }
}

impl Serialize for ValueExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ValueExpr::Const(c) => s.serialize_u64(*c),
            ValueExpr::N => s.serialize_str("n"),
            ValueExpr::TwoNMinusOne => s.serialize_str("2n-1"),
            ValueExpr::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ValueExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(c) => Ok(ValueExpr::Const(c)),
            Raw::S(s) => match s.as_str() {
                "n" => Ok(ValueExpr::N),
                "2n-1" => Ok(ValueExpr::TwoNMinusOne),
                "inf" => Ok(ValueExpr::Inf),
                _ => Err(serde::de::Error::custom(format!(
                    "expected an integer, \"n\", \"2n-1\" or \"inf\", got \"{s}\""
                ))),
            },
        }
    }
}

/// Raw record as stored; the fields that must be present are optional here so that their
/// absence produces a knowledge-base error rather than a generic parse error.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    id: String,
    space: SpacePattern,
    invariant: Invariant,
    lower: ValueExpr,
    upper: ValueExpr,
    provenance: Option<Provenance>,
    citation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub space: SpacePattern,
    pub invariant: Invariant,
    pub lower: ValueExpr,
    pub upper: ValueExpr,
    pub provenance: Provenance,
    pub citation: String,
}

impl Record {
    /// The interval this record asserts for `d`, if it applies.
    pub fn interval_for(&self, d: &SpaceDescriptor) -> Option<Interval> {
        let n = self.space.matches(d)?;
        Some(Interval::new(self.lower.eval(n), self.upper.eval(n)))
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct KnowledgeBase {
    records: Vec<Record>,
}

impl KnowledgeBase {
    pub fn empty() -> Self {
        KnowledgeBase::default()
    }

    /// The records shipped with the crate.
    pub fn builtin() -> Self {
        KnowledgeBase::from_json(DEFAULT_KB).expect("the built-in knowledge base is valid")
    }

    pub fn from_json(text: &str) -> Result<Self, BoundsError> {
        let raw: Vec<RawRecord> = serde_json::from_str(text)
            .map_err(|e| BoundsError::InvalidKnowledgeBase(e.to_string()))?;
        let mut kb = KnowledgeBase::empty();
        for r in raw {
            let bad = |why: &str| BoundsError::InvalidKnowledgeBase(format!("record `{}`: {why}", r.id));
            let citation = match r.citation {
                Some(c) if !c.trim().is_empty() => c,
                _ => return Err(bad("missing citation")),
            };
            let provenance = r.provenance.ok_or_else(|| bad("missing provenance"))?;
            if let SpacePattern::Exact { descriptor } = &r.space {
                descriptor.validate().map_err(|e| bad(&e.to_string()))?;
            }
            kb.push(Record {
                id: r.id,
                space: r.space,
                invariant: r.invariant,
                lower: r.lower,
                upper: r.upper,
                provenance,
                citation,
            })?;
        }
        Ok(kb)
    }

    pub fn push(&mut self, r: Record) -> Result<(), BoundsError> {
        if self.records.iter().any(|o| o.id == r.id) {
            return Err(BoundsError::InvalidKnowledgeBase(format!("duplicate record id `{}`", r.id)));
        }
        self.records.push(r);
        Ok(())
    }

    /// Appends the records of `other`, keeping ids unique.
    pub fn extend(&mut self, other: KnowledgeBase) -> Result<(), BoundsError> {
        for r in other.records {
            self.push(r)?;
        }
        Ok(())
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    /// Records matching a normalized descriptor, with the interval each asserts.
    pub fn lookup<'a>(
        &'a self,
        d: &'a SpaceDescriptor,
    ) -> impl Iterator<Item = (&'a Record, Interval)> + 'a {
        self.records.iter().filter_map(move |r| r.interval_for(d).map(|i| (r, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads_and_matches() {
        let kb = KnowledgeBase::builtin();
        let rp8 = SpaceDescriptor::RealProjective { n: 8 };
        let hits: Vec<_> = kb.lookup(&rp8).map(|(r, i)| (r.invariant, i)).collect();
        assert!(hits.contains(&(Invariant::Tcd, Interval::exact(15))));
        assert!(hits.contains(&(Invariant::Tc, Interval::exact(15))));
        let rp6 = SpaceDescriptor::RealProjective { n: 6 };
        assert_eq!(kb.lookup(&rp6).count(), 0);
        let t3 = SpaceDescriptor::Torus { n: 3 };
        assert!(kb.lookup(&t3).any(|(r, i)| r.invariant == Invariant::Tc && i == Interval::exact(3)));
    }

    #[test]
    fn rejects_uncited_records() {
        let no_cite = r#"[{"id":"x","space":{"type":"sphere","n":2},"invariant":"tc","lower":2,"upper":2,"provenance":"primary"}]"#;
        assert!(matches!(
            KnowledgeBase::from_json(no_cite),
            Err(BoundsError::InvalidKnowledgeBase(m)) if m.contains("citation")
        ));
        let no_prov = r#"[{"id":"x","space":{"type":"sphere","n":2},"invariant":"tc","lower":2,"upper":2,"citation":"c"}]"#;
        assert!(KnowledgeBase::from_json(no_prov).is_err());
        let bad_prov = r#"[{"id":"x","space":{"type":"sphere","n":2},"invariant":"tc","lower":2,"upper":2,"citation":"c","provenance":"folklore"}]"#;
        assert!(KnowledgeBase::from_json(bad_prov).is_err());
    }

    #[test]
    fn exact_descriptor_records() {
        let text = r#"[{"id":"k","space":{"descriptor":{"type":"real_projective","n":6}},"invariant":"tc","lower":7,"upper":7,"provenance":"classical","citation":"immersion table"}]"#;
        let kb = KnowledgeBase::from_json(text).unwrap();
        let rp6 = SpaceDescriptor::RealProjective { n: 6 };
        assert_eq!(kb.lookup(&rp6).next().unwrap().1, Interval::exact(7));
    }
}
