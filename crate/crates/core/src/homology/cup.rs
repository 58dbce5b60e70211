//! Cohomology rings of simplicial complexes via the Alexander–Whitney cup product.

use crate::algebra::echelon::{kernel_basis, TaggedEchelon};
use crate::algebra::{Field, SparseVec};
use crate::complex::SimplicialComplex;

use super::coboundary_images;
use super::ring::GradedRing;

/// Cocycle representatives of a cohomology basis together with the machinery to express any
/// cocycle in that basis.
pub struct CohomologyClasses<F> {
    /// `reps[d][c]` is a cocycle on the `d`-simplices representing class `c` in degree `d`.
    pub reps: Vec<Vec<SparseVec<F>>>,
    reducers: Vec<TaggedEchelon<F>>,
}

impl<F: Field> CohomologyClasses<F> {
    pub fn compute(k: &SimplicialComplex) -> Self {
        let top = k.dim();
        let mut reps = Vec::with_capacity(top + 1);
        let mut reducers = Vec::with_capacity(top + 1);
        for d in 0..=top {
            let mut e = TaggedEchelon::new();
            if d > 0 {
                for b in coboundary_images::<F>(k, d - 1) {
                    e.insert(b, SparseVec::zero());
                }
            }
            let mut candidates = Vec::new();
            if d == 0 {
                // the unit class goes first
                candidates.push(SparseVec::from_dense(&vec![F::one(); k.simplices(0).len()]));
            }
            candidates.extend(kernel_basis(&coboundary_images::<F>(k, d)));
            let mut classes: Vec<SparseVec<F>> = Vec::new();
            for z in candidates {
                let c = classes.len();
                if e.insert(z.clone(), SparseVec::unit(c)).is_none() {
                    classes.push(z);
                }
            }
            reps.push(classes);
            reducers.push(e);
        }
        CohomologyClasses { reps, reducers }
    }

    /// Coordinates of the class of the cocycle `z` of degree `d`. Panics if `z` is not a cocycle
    /// in the span handled by the reducer.
    pub fn class_of(&self, d: usize, z: SparseVec<F>) -> SparseVec<F> {
        let (residual, tag) = self.reducers[d].reduce(z);
        assert!(residual.is_zero(), "cochain of degree {d} is not a cocycle");
        tag
    }

    pub fn betti(&self) -> Vec<usize> {
        self.reps.iter().map(Vec::len).collect()
    }
}

/// Alexander–Whitney cup product of a `p`-cochain and a `q`-cochain, as a `(p+q)`-cochain.
pub fn cup_cochains<F: Field>(
    k: &SimplicialComplex,
    p: usize,
    alpha: &[F],
    q: usize,
    beta: &[F],
) -> SparseVec<F> {
    SparseVec::from_entries(
        k.simplices(p + q)
            .iter()
            .enumerate()
            .filter_map(|(t, tau)| {
                let a = &alpha[k.index_of(&tau.front(p)).unwrap()];
                if a.is_zero() {
                    return None;
                }
                let b = &beta[k.index_of(&tau.back(p)).unwrap()];
                Some((t, a.times(b)))
            })
            .collect(),
    )
}

/// The cohomology ring `H^*(K; F)`. Basis element 0 is the class of the constant cocycle 1;
/// degree `d` class `c` is named `h{d}_{c}`.
pub fn cohomology_ring<F: Field>(k: &SimplicialComplex) -> GradedRing<F> {
    let classes = CohomologyClasses::<F>::compute(k);
    let mut degrees = Vec::new();
    let mut names = Vec::new();
    let mut offset = Vec::new();
    for (d, reps) in classes.reps.iter().enumerate() {
        offset.push(degrees.len());
        for c in 0..reps.len() {
            degrees.push(d);
            names.push(if d == 0 && c == 0 {
                "1".to_string()
            } else {
                format!("h{d}_{c}")
            });
        }
    }
    let dense: Vec<Vec<Vec<F>>> = classes
        .reps
        .iter()
        .enumerate()
        .map(|(d, reps)| {
            reps.iter()
                .map(|r| r.to_dense(k.simplices(d).len()))
                .collect()
        })
        .collect();
    let n = degrees.len();
    let mut table = vec![vec![SparseVec::zero(); n]; n];
    let basis: Vec<(usize, usize)> = classes
        .reps
        .iter()
        .enumerate()
        .flat_map(|(d, reps)| (0..reps.len()).map(move |c| (d, c)))
        .collect();
    for (i, &(p, a)) in basis.iter().enumerate() {
        for (j, &(q, b)) in basis.iter().enumerate() {
            if p + q > k.dim() {
                continue;
            }
            let cup = cup_cochains(k, p, &dense[p][a], q, &dense[q][b]);
            let class = classes.class_of(p + q, cup);
            table[i][j] = class.map_indices(|c| offset[p + q] + c);
        }
    }
    GradedRing::new(degrees, names, table).expect("cup products are homogeneous")
}
