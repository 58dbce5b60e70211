use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Exact rationals.
pub type Rational = BigRational;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Z2,
    Q,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Z2 => "Z/2",
            FieldKind::Q => "Q",
        })
    }
}

/// The arithmetic needed for exact linear algebra.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero.
    fn inverse(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// The field with two elements.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gf2(pub bool);

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Field for Gf2 {
    const KIND: FieldKind = FieldKind::Z2;

    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn from_i64(n: i64) -> Self {
        Gf2(n.rem_euclid(2) == 1)
    }
    fn plus(&self, rhs: &Self) -> Self {
        Gf2(self.0 ^ rhs.0)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Gf2(self.0 ^ rhs.0)
    }
    fn times(&self, rhs: &Self) -> Self {
        Gf2(self.0 & rhs.0)
    }
    fn negated(&self) -> Self {
        *self
    }
    fn inverse(&self) -> Self {
        assert!(self.0, "inverse of zero");
        *self
    }
}

impl Field for BigRational {
    const KIND: FieldKind = FieldKind::Q;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}

/// Sign helper: `(-1)^k` in any field.
pub fn sign<F: Field>(k: usize) -> F {
    if k % 2 == 0 {
        F::one()
    } else {
        F::one().negated()
    }
}
