//! Exact combinatorial topology and certified bounds for topological complexity.
//!
//! The crate is organised in layers:
//!
//! * [`complex`]: simplicial complexes, skeleta, subdivision, products and complements.
//! * [`homology`]: homology over Z/2, Q and Z, cohomology rings and cup-length searches.
//! * [`cover`]: finite covers with multiplicity, extension and combination.
//! * [`bounds`]: an interval propagation engine over a rule base of inequalities between
//!   topological complexity, its discrete variant, Lusternik–Schnirelmann category and friends.

pub mod algebra;
pub mod bounds;
pub mod complex;
pub mod cover;
pub mod homology;
pub mod json;

pub use complex::{LabeledComplex, Simplex, SimplicialComplex, Subcomplex};
