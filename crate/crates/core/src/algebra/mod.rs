//! Exact linear algebra over Z/2, Q and Z.

pub mod echelon;
pub mod field;
pub mod gf2;
pub mod snf;
pub mod sparse;

pub use field::{Field, FieldKind, Gf2, Rational};
pub use sparse::SparseVec;
