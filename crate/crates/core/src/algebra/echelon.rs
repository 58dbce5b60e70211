//! Incremental echelon forms over a field, with an optional tag carried through every row
//! operation. Tags let one read off coordinates of a reduced vector in a chosen basis.

use std::collections::HashMap;

use super::field::Field;
use super::sparse::SparseVec;

#[derive(Clone, Debug)]
pub struct TaggedEchelon<F> {
    pivots: HashMap<usize, (SparseVec<F>, SparseVec<F>)>,
}

impl<F: Field> Default for TaggedEchelon<F> {
    fn default() -> Self {
        TaggedEchelon {
            pivots: HashMap::new(),
        }
    }
}

impl<F: Field> TaggedEchelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Writes `v = residual + Σ c_i p_i` over the stored rows `p_i` and returns the residual
    /// together with `Σ c_i tag(p_i)`.
    pub fn reduce(&self, mut v: SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut acc = SparseVec::zero();
        loop {
            let Some((lead, a)) = v.leading() else { break };
            let Some((p, tag)) = self.pivots.get(&lead) else {
                break;
            };
            let factor = a.times(&p.leading().unwrap().1.inverse());
            v.add_scaled(&factor.negated(), p);
            acc.add_scaled(&factor, tag);
        }
        (v, acc)
    }

    /// Inserts `v` with the given tag. Returns `None` if it was added as a new row, or the
    /// accumulated tag of its reduction if `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec<F>, tag: SparseVec<F>) -> Option<SparseVec<F>> {
        let (residual, acc) = self.reduce(v);
        match residual.leading() {
            None => Some(tag.sub(&acc)),
            Some((lead, _)) => {
                self.pivots.insert(lead, (residual, tag.sub(&acc)));
                None
            }
        }
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v.clone()).0.is_zero()
    }
}

/// Rank of the span of the given vectors.
pub fn rank<F: Field>(rows: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut e = TaggedEchelon::new();
    for r in rows {
        e.insert(r, SparseVec::zero());
    }
    e.rank()
}

/// Basis of the kernel of the linear map sending `e_i` to `images[i]`, as vectors over the
/// domain basis.
pub fn kernel_basis<F: Field>(images: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    let mut e = TaggedEchelon::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        if let Some(k) = e.insert(img.clone(), SparseVec::unit(i)) {
            out.push(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{Gf2, Rational};

    fn v(entries: &[(usize, i64)]) -> SparseVec<Rational> {
        SparseVec::from_entries(
            entries
                .iter()
                .map(|&(i, c)| (i, Rational::from_i64(c)))
                .collect(),
        )
    }

    fn apply(images: &[SparseVec<Rational>], x: &SparseVec<Rational>) -> SparseVec<Rational> {
        let mut out = SparseVec::zero();
        for (i, c) in x.iter() {
            out.add_scaled(c, &images[*i]);
        }
        out
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let images = vec![
            v(&[(0, 1), (1, 2)]),
            v(&[(0, 2), (1, 4)]),
            v(&[(0, -3), (1, -6)]),
        ];
        let ker = kernel_basis(&images);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            assert!(apply(&images, k).is_zero());
        }
        assert_eq!(rank(images), 1);
    }

    #[test]
    fn reduce_reports_coordinates() {
        let mut e = TaggedEchelon::<Rational>::new();
        assert!(e.insert(v(&[(0, 1), (2, 1)]), v(&[(0, 1)])).is_none());
        assert!(e.insert(v(&[(1, 1)]), v(&[(1, 1)])).is_none());
        let (res, tag) = e.reduce(v(&[(0, 2), (1, 3), (2, 2)]));
        assert!(res.is_zero());
        assert_eq!(tag, v(&[(0, 2), (1, 3)]));
    }

    #[test]
    fn gf2_kernel() {
        let one = Gf2(true);
        let images: Vec<SparseVec<Gf2>> = vec![
            SparseVec::from_entries(vec![(0, one), (1, one)]),
            SparseVec::from_entries(vec![(1, one), (2, one)]),
            SparseVec::from_entries(vec![(0, one), (2, one)]),
        ];
        assert_eq!(kernel_basis(&images).len(), 1);
    }
}
