//! Simplicial homology and cohomology with exact arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::echelon;
use crate::algebra::gf2::{self, BitRow};
use crate::algebra::snf::{self, Overflow};
use crate::algebra::{Field, Rational, SparseVec};
use crate::complex::SimplicialComplex;

mod cup;
mod ring;
mod search;

pub use cup::{cohomology_ring, CohomologyClasses};
pub use ring::{AnyRing, GradedRing, RingError};
pub use search::{cup_length, indecomposable_generators, zero_divisor_cup_length, SearchResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0} is not a field; use integral homology instead")]
    NotAField(Coefficients),
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("connectivity needs a simply connected complex; pass the simply-connected assertion")]
    ConnectivityRefused,
    #[error("the simply connected assertion is contradicted: {0}")]
    AssertionContradicted(String),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    Z2,
    Q,
    Z,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::Z2 => "Z/2",
            Coefficients::Q => "Q",
            Coefficients::Z => "Z",
        })
    }
}

impl std::str::FromStr for Coefficients {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "z2" | "z/2" | "f2" => Ok(Coefficients::Z2),
            "q" => Ok(Coefficients::Q),
            "z" => Ok(Coefficients::Z),
            _ => Err(format!("unknown coefficients `{s}`; expected z2, q or z")),
        }
    }
}

/// Boundary of each `d`-simplex as a vector over the `(d-1)`-simplices. Empty for `d = 0`.
pub fn boundary_images<F: Field>(k: &SimplicialComplex, d: usize) -> Vec<SparseVec<F>> {
    if d == 0 {
        return vec![SparseVec::zero(); k.simplices(0).len()];
    }
    k.simplices(d)
        .iter()
        .map(|s| {
            SparseVec::from_entries(
                s.facets()
                    .map(|(i, f)| (k.index_of(&f).unwrap(), crate::algebra::field::sign(i)))
                    .collect(),
            )
        })
        .collect()
}

/// Coboundary of each dual basis cochain on `d`-simplices, as a vector over `(d+1)`-simplices.
pub fn coboundary_images<F: Field>(k: &SimplicialComplex, d: usize) -> Vec<SparseVec<F>> {
    let mut entries: Vec<Vec<(usize, F)>> = vec![Vec::new(); k.simplices(d).len()];
    for (t, tau) in k.simplices(d + 1).iter().enumerate() {
        for (i, f) in tau.facets() {
            entries[k.index_of(&f).unwrap()].push((t, crate::algebra::field::sign(i)));
        }
    }
    entries.into_iter().map(SparseVec::from_entries).collect()
}

fn boundary_ranks(k: &SimplicialComplex, coeff: Coefficients) -> Result<Vec<usize>, HomologyError> {
    // ranks[d] = rank of the boundary map out of d-chains; ranks[0] = 0
    let top = k.dim();
    let mut ranks = vec![0; top + 2];
    for (d, slot) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        *slot = match coeff {
            Coefficients::Z2 => {
                let width = k.simplices(d - 1).len();
                gf2::rank(k.simplices(d).iter().map(|s| {
                    BitRow::from_indices(width, s.facets().map(|(_, f)| k.index_of(&f).unwrap()))
                }))
            }
            Coefficients::Q => echelon::rank(boundary_images::<Rational>(k, d)),
            Coefficients::Z => return Err(HomologyError::NotAField(Coefficients::Z)),
        };
    }
    Ok(ranks)
}

/// Betti numbers `b_0, .., b_dim` over a field.
pub fn betti(k: &SimplicialComplex, coeff: Coefficients) -> Result<Vec<usize>, HomologyError> {
    let ranks = boundary_ranks(k, coeff)?;
    Ok((0..=k.dim())
        .map(|d| k.simplices(d).len() - ranks[d] - ranks[d + 1])
        .collect())
}

/// A finitely generated abelian group `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m` with `t_i | t_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

fn boundary_matrix_i64(k: &SimplicialComplex, d: usize) -> Vec<Vec<i64>> {
    // rows are (d-1)-simplices, columns are d-simplices
    let mut m = vec![vec![0i64; k.simplices(d).len()]; k.simplices(d - 1).len()];
    for (j, s) in k.simplices(d).iter().enumerate() {
        for (i, f) in s.facets() {
            m[k.index_of(&f).unwrap()][j] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Integral homology groups `H_0, .., H_dim` via Smith normal form.
pub fn integral_homology(k: &SimplicialComplex) -> Result<Vec<AbelianGroup>, HomologyError> {
    let top = k.dim();
    // factors[d] = invariant factors of the boundary map out of d-chains
    let mut factors: Vec<Vec<u64>> = vec![Vec::new(); top + 2];
    for (d, slot) in factors.iter_mut().enumerate().take(top + 1).skip(1) {
        *slot = snf::invariant_factors(boundary_matrix_i64(k, d))?;
    }
    Ok((0..=top)
        .map(|d| AbelianGroup {
            rank: k.simplices(d).len() - factors[d].len() - factors[d + 1].len(),
            torsion: factors[d + 1].iter().copied().filter(|&t| t > 1).collect(),
        })
        .collect())
}

/// Homological connectivity of a simply connected complex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connectivity {
    /// `n`-connected but not `(n+1)`-connected.
    Connected(usize),
    /// All homology groups vanish above degree 0.
    Contractible,
}

/// Connectivity of `k`, read off from integral homology through the Hurewicz theorem.
/// Only meaningful for simply connected complexes, which the caller has to assert.
pub fn connectivity(
    k: &SimplicialComplex,
    simply_connected: bool,
) -> Result<Connectivity, HomologyError> {
    if !simply_connected {
        return Err(HomologyError::ConnectivityRefused);
    }
    let h = integral_homology(k)?;
    if h[0].rank != 1 {
        return Err(HomologyError::AssertionContradicted(format!(
            "the complex has {} connected components",
            h[0].rank
        )));
    }
    match h.iter().enumerate().skip(1).find(|(_, g)| !g.is_trivial()) {
        None => Ok(Connectivity::Contractible),
        Some((1, g)) => Err(HomologyError::AssertionContradicted(format!("H_1 = {g}"))),
        Some((d, _)) => Ok(Connectivity::Connected(d - 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_betti() {
        let c = SimplicialComplex::simplex_boundary(2);
        assert_eq!(betti(&c, Coefficients::Q).unwrap(), vec![1, 1]);
        assert_eq!(betti(&c, Coefficients::Z2).unwrap(), vec![1, 1]);
        assert!(matches!(
            betti(&c, Coefficients::Z),
            Err(HomologyError::NotAField(_))
        ));
    }

    #[test]
    fn simplex_is_acyclic() {
        let k = SimplicialComplex::simplex(4);
        assert_eq!(betti(&k, Coefficients::Q).unwrap(), vec![1, 0, 0, 0, 0]);
        assert_eq!(connectivity(&k, true).unwrap(), Connectivity::Contractible);
    }

    #[test]
    fn sphere_connectivity() {
        let s3 = SimplicialComplex::simplex_boundary(4);
        assert_eq!(connectivity(&s3, true).unwrap(), Connectivity::Connected(2));
        assert_eq!(
            connectivity(&s3, false),
            Err(HomologyError::ConnectivityRefused)
        );
        let circle = SimplicialComplex::simplex_boundary(2);
        assert!(matches!(
            connectivity(&circle, true),
            Err(HomologyError::AssertionContradicted(_))
        ));
    }

    #[test]
    fn group_display() {
        let g = AbelianGroup {
            rank: 2,
            torsion: vec![2],
        };
        assert_eq!(g.to_string(), "Z^2 ⊕ Z/2");
        assert_eq!(
            AbelianGroup {
                rank: 0,
                torsion: vec![]
            }
            .to_string(),
            "0"
        );
    }
}
