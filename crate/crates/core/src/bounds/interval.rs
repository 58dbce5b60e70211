use std::fmt;

use serde::{Deserialize, Serialize};

/// A natural number or infinity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Fin(0);

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Fin(n) => Some(n),
            ExtNat::Inf => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    pub fn plus(self, other: ExtNat) -> ExtNat {
        match (self, other) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => ExtNat::Fin(a.saturating_add(b)),
            _ => ExtNat::Inf,
        }
    }

    /// `self − other` floored at 0; `None` when `other` is infinite (nothing can be concluded).
    pub fn minus(self, other: ExtNat) -> Option<ExtNat> {
        match (self, other) {
            (_, ExtNat::Inf) => None,
            (ExtNat::Inf, _) => Some(ExtNat::Inf),
            (ExtNat::Fin(a), ExtNat::Fin(b)) => Some(ExtNat::Fin(a.saturating_sub(b))),
        }
    }

    pub fn times(self, k: u64) -> ExtNat {
        match self {
            ExtNat::Fin(a) => ExtNat::Fin(a.saturating_mul(k)),
            ExtNat::Inf if k == 0 => ExtNat::ZERO,
            ExtNat::Inf => ExtNat::Inf,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Fin(n)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(n) => write!(f, "{n}"),
            ExtNat::Inf => f.write_str("∞"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Fin(n) => s.serialize_u64(*n),
            ExtNat::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(ExtNat::Fin(n)),
            Raw::S(s) if s == "inf" || s == "∞" => Ok(ExtNat::Inf),
            Raw::S(s) => Err(serde::de::Error::custom(format!(
                "expected a natural number or \"inf\", got \"{s}\""
            ))),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lower: ExtNat,
    pub upper: ExtNat,
}

impl Interval {
    pub const TOP: Interval = Interval { lower: ExtNat::ZERO, upper: ExtNat::Inf };

    pub fn exact(n: u64) -> Self {
        Interval { lower: ExtNat::Fin(n), upper: ExtNat::Fin(n) }
    }

    pub fn new(lower: ExtNat, upper: ExtNat) -> Self {
        Interval { lower, upper }
    }

    pub fn at_least(n: u64) -> Self {
        Interval { lower: ExtNat::Fin(n), upper: ExtNat::Inf }
    }

    pub fn at_most(n: ExtNat) -> Self {
        Interval { lower: ExtNat::ZERO, upper: n }
    }

    pub fn is_singleton(&self) -> bool {
        self.lower == self.upper
    }

    pub fn is_empty(&self) -> bool {
        self.lower > self.upper
    }

    pub fn contains(&self, n: ExtNat) -> bool {
        self.lower <= n && n <= self.upper
    }
}

impl Default for Interval {
    fn default() -> Self {
        Interval::TOP
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}
