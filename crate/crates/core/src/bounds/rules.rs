use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Whether a fact is one of the results the rule base is built around or standard background.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Primary,
    Classical,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Primary => "primary",
            Provenance::Classical => "classical",
        })
    }
}

/// The inequalities the engine knows. Each one is a monotone interval tightening.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    R13,
    R14,
    R15,
    R16,
    R17,
    R18,
    R19,
    R20,
    R21,
    R22,
}

impl Rule {
    pub const ALL: [Rule; 22] = [
        Rule::R1,
        Rule::R2,
        Rule::R3,
        Rule::R4,
        Rule::R5,
        Rule::R6,
        Rule::R7,
        Rule::R8,
        Rule::R9,
        Rule::R10,
        Rule::R11,
        Rule::R12,
        Rule::R13,
        Rule::R14,
        Rule::R15,
        Rule::R16,
        Rule::R17,
        Rule::R18,
        Rule::R19,
        Rule::R20,
        Rule::R21,
        Rule::R22,
    ];

    /// Application order: equalities and structural identities first, then inequalities.
    pub const ORDER: [Rule; 22] = [
        Rule::R22,
        Rule::R6,
        Rule::R10,
        Rule::R13,
        Rule::R14,
        Rule::R18,
        Rule::R20,
        Rule::R8,
        Rule::R12,
        Rule::R1,
        Rule::R2,
        Rule::R3,
        Rule::R4,
        Rule::R5,
        Rule::R7,
        Rule::R9,
        Rule::R11,
        Rule::R15,
        Rule::R16,
        Rule::R17,
        Rule::R19,
        Rule::R21,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R6 => "R6",
            Rule::R7 => "R7",
            Rule::R8 => "R8",
            Rule::R9 => "R9",
            Rule::R10 => "R10",
            Rule::R11 => "R11",
            Rule::R12 => "R12",
            Rule::R13 => "R13",
            Rule::R14 => "R14",
            Rule::R15 => "R15",
            Rule::R16 => "R16",
            Rule::R17 => "R17",
            Rule::R18 => "R18",
            Rule::R19 => "R19",
            Rule::R20 => "R20",
            Rule::R21 => "R21",
            Rule::R22 => "R22",
        }
    }

    pub fn provenance(self) -> Provenance {
        match self {
            Rule::R15 | Rule::R16 | Rule::R19 => Provenance::Classical,
            _ => Provenance::Primary,
        }
    }

    /// The statement in the engine's notation.
    pub fn statement(self) -> &'static str {
        match self {
            Rule::R1 => "cat(X) ≤ TC(X) ≤ cat(X × X)",
            Rule::R2 => "TC(X) ≤ TC(π) + dim X, when cd(π) < ∞",
            Rule::R3 => "TC(X) ≤ TC^D(X) + ~TC(X)",
            Rule::R4 => "TC(X) ≤ TC^D(X) + ⌈(2 dim X − k)/(k+1)⌉, universal cover k-connected",
            Rule::R5 => "TC^D(X) ≤ TC(X)",
            Rule::R6 => "X aspherical ⇒ TC^D(X) = TC(X)",
            Rule::R7 => "TC^D(X) ≤ TC^D(π)",
            Rule::R8 => "cd(π) ≤ max(2, k+1), universal cover k-connected ⇒ TC^D(X) = TC^D(π)",
            Rule::R9 => "cat_1(X) ≤ TC^D(X) ≤ cat_1(X × X)",
            Rule::R10 => "X an H-space ⇒ TC^D(X) = cat_1(X)",
            Rule::R11 => "~TC(X) ≤ ⌈(2 dim X − k)/(k+1)⌉, universal cover k-connected",
            Rule::R12 => "~TC(X) ≥ TC(universal cover of X)",
            Rule::R13 => "~TC(X) = 0 ⇔ X aspherical",
            Rule::R14 => "A aspherical, Y simply connected ⇒ TC^D(A × Y) = TC(A), ~TC(A × Y) = TC(Y)",
            Rule::R15 => "zcl(X) ≤ TC(X)",
            Rule::R16 => "cuplen(X) ≤ cat(X) ≤ dim X",
            Rule::R17 => "cat(X) ≤ cat_1(X) + ~cat(X), ~cat(X) ≤ ⌈(dim X − k)/(k+1)⌉",
            Rule::R18 => "TC^D(X) = 0 ⇔ X simply connected",
            Rule::R19 => "TC(X × Y) ≤ TC(X) + TC(Y)",
            Rule::R20 => "cat_1(T^n × Y) = n for Y simply connected",
            Rule::R21 => "TC(X) ≤ 2 dim X; cd(π) ≤ TC^D(π)",
            Rule::R22 => "TC^D(RP^n) = TC(RP^n)",
        }
    }

    /// Source anchor and the formula it states, as printed in derivations.
    pub fn citation(self) -> &'static str {
        match self {
            Rule::R1 => "[introthm:bounds] cat(X) ≤ TC(X) ≤ cat(X × X)",
            Rule::R2 => "[dr] TC(X) ≤ TC(π) + dim(X)",
            Rule::R3 => "[main1] TC(X) ≤ TC^D(X) + ~TC(X)",
            Rule::R4 => "[main4] TC(X) ≤ TC^D(X) + ⌈(2 dim X − k)/(k+1)⌉",
            Rule::R5 => "[prop:nonasph] TC^D(X) ≤ TC(X)",
            Rule::R6 => "[aspher] X aspherical locally finite cell complex ⇒ TC^D(X) = TC(X)",
            Rule::R7 => "[leq] TC^D(X) ≤ TC^D(π)",
            Rule::R8 => {
                "[equal] cd(π) ≤ 2 ⇒ TC^D(X) = TC^D(π); lemma following it: π_j(X) = 0 for 1 < j < k and cd(π) ≤ k ⇒ TC^D(X) = TC^D(π)"
            }
            Rule::R9 => "[cat1] cat_1(X) ≤ TC^D(X) ≤ cat_1(X × X)",
            Rule::R10 => "[thm:CWHspace] X a connected CW H-space ⇒ TC^D(X) = cat_1(X)",
            Rule::R11 => {
                "[main3] on the path tower over the diagonal cover: ~TC(X) ≤ ⌈(2 dim X − k)/(k+1)⌉; k = 0 case [two] ~TC(X) ≤ dim(X)"
            }
            Rule::R12 => "[cor:univcov] ~TC(X) ≥ TC(universal cover of X)",
            Rule::R13 => "[tcasph] X aspherical ⇔ ~TC(X) = 0",
            Rule::R14 => "[thm:product] Z = X × Y, X aspherical, Y simply connected ⇒ TC^D(Z) = TC(X), ~TC(Z) = TC(Y)",
            Rule::R15 => "classical, used in [exam:TCestimate]: zero-divisors-cup-length estimate zcl(X) ≤ TC(X)",
            Rule::R16 => "classical: cup-length ≤ cat(X) ≤ dim(X)",
            Rule::R17 => "[eqn:cattilde] cat(X) ≤ cat_1(X) + ~cat(X), with [main3] ~cat(X) ≤ ⌈(dim X − k)/(k+1)⌉",
            Rule::R18 => "[example after cor:covspace] TC^D(X) = 0 ⇔ X simply connected",
            Rule::R19 => "classical, recalled after [thm:product]: TC(X × Y) ≤ TC(X) + TC(Y)",
            Rule::R20 => "[text before thm:TCcat] cat_1(T^n × Y) = n for Y simply connected",
            Rule::R21 => "[example after equal] TC^D(X) ≤ TC(X) ≤ 2 dim X < cd(π) ≤ TC^D(π)",
            Rule::R22 => "[proposition before rem:immerse] TC^D(RP^n) = TC(RP^n)",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Rule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Rule::ALL
            .into_iter()
            .find(|r| r.id() == s)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

impl Serialize for Rule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
