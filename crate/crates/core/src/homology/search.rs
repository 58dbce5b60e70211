//! Cup length and zero-divisor cup length by exhaustive product search.
//!
//! Both searches run over products of basis elements that generate the ring as an algebra.
//! Over a field any product of `n` positive-degree elements expands into products of at least
//! `n` generators, and the zero-divisor ideal is generated by `x⊗1 − 1⊗x` for generators `x`,
//! so restricting to generators does not change either length.

use serde::Serialize;

use crate::algebra::echelon::TaggedEchelon;
use crate::algebra::field::sign;
use crate::algebra::{Field, SparseVec};

use super::ring::GradedRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub length: usize,
    /// Basis indices whose product (or product of zero-divisors) is nonzero.
    pub witness: Vec<usize>,
}

/// Basis elements of positive degree whose classes form a basis of the indecomposables
/// `R⁺ / (R⁺)²`. They generate `R` as an algebra.
pub fn indecomposable_generators<F: Field>(r: &GradedRing<F>) -> Vec<usize> {
    let n = r.dim();
    let top = r.top_degree();
    let mut e = TaggedEchelon::new();
    for i in 1..n {
        for j in 1..n {
            if r.degree(i) + r.degree(j) <= top {
                e.insert(r.mul_basis(i, j).clone(), SparseVec::zero());
            }
        }
    }
    (1..n)
        .filter(|&i| e.insert(SparseVec::unit(i), SparseVec::zero()).is_none())
        .collect()
}

struct Search<'a> {
    gens: &'a [usize],
    degrees: Vec<usize>,
    budget: usize,
    min_degree: usize,
    best: SearchResult,
    stack: Vec<usize>,
}

impl Search<'_> {
    fn run<F: Field>(
        &mut self,
        from: usize,
        cur: &SparseVec<F>,
        deg: usize,
        step: &dyn Fn(&SparseVec<F>, usize) -> SparseVec<F>,
    ) {
        if self.stack.len() > self.best.length {
            self.best = SearchResult {
                length: self.stack.len(),
                witness: self.stack.clone(),
            };
        }
        let room = (self.budget - deg) / self.min_degree;
        if self.stack.len() + room <= self.best.length {
            return;
        }
        for g in from..self.gens.len() {
            let gd = self.degrees[g];
            if deg + gd > self.budget {
                continue;
            }
            let next = step(cur, self.gens[g]);
            if next.is_zero() {
                continue;
            }
            self.stack.push(self.gens[g]);
            self.run(g, &next, deg + gd, step);
            self.stack.pop();
        }
    }
}

fn search<F: Field>(
    r: &GradedRing<F>,
    budget: usize,
    start: SparseVec<F>,
    step: &dyn Fn(&SparseVec<F>, usize) -> SparseVec<F>,
) -> SearchResult {
    let gens = indecomposable_generators(r);
    let empty = SearchResult {
        length: 0,
        witness: Vec::new(),
    };
    let Some(min_degree) = gens.iter().map(|&g| r.degree(g)).min() else {
        return empty;
    };
    let mut s = Search {
        gens: &gens,
        degrees: gens.iter().map(|&g| r.degree(g)).collect(),
        budget,
        min_degree,
        best: empty,
        stack: Vec::new(),
    };
    s.run(0, &start, 0, step);
    s.best
}

/// Largest `n` such that some product of `n` positive-degree classes is nonzero.
pub fn cup_length<F: Field>(r: &GradedRing<F>) -> SearchResult {
    search(r, r.top_degree(), SparseVec::unit(0), &|cur, g| {
        r.mul(cur, &SparseVec::unit(g))
    })
}

/// Largest `n` such that some product of `n` zero-divisors `x⊗1 − 1⊗x` in `R⊗R` is nonzero.
/// Elements of `R⊗R` are indexed by `i * dim + j` for the pair `(i, j)`.
pub fn zero_divisor_cup_length<F: Field>(r: &GradedRing<F>) -> SearchResult {
    let n = r.dim();
    let step = |cur: &SparseVec<F>, g: usize| -> SparseVec<F> {
        let dg = r.degree(g);
        let mut entries = Vec::new();
        for (p, c) in cur.iter() {
            let (a, b) = (p / n, p % n);
            // (a⊗b)(g⊗1) = (-1)^{|b||g|} ag⊗b
            let s: F = sign(r.degree(b) * dg);
            for (x, u) in r.mul_basis(a, g).iter() {
                entries.push((x * n + b, c.times(u).times(&s)));
            }
            // (a⊗b)(1⊗g) = a⊗bg, subtracted
            for (y, v) in r.mul_basis(b, g).iter() {
                entries.push((a * n + y, c.times(v).negated()));
            }
        }
        SparseVec::from_entries(entries)
    };
    search(r, 2 * r.top_degree(), SparseVec::unit(0), &step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gf2, Rational};

    #[test]
    fn sphere_lengths() {
        for n in 1..5 {
            let r = GradedRing::<Rational>::sphere(n, "x");
            assert_eq!(cup_length(&r).length, 1);
            let expected = if n % 2 == 0 { 2 } else { 1 };
            assert_eq!(zero_divisor_cup_length(&r).length, expected, "S^{n}");
        }
    }

    #[test]
    fn truncated_polynomial_over_z2() {
        // zcl of Z/2[a]/(a^{h+1}) is 2^{s+1} - 1 where 2^s <= h < 2^{s+1}
        for (h, expected) in [(1, 1), (2, 3), (3, 3), (4, 7), (5, 7), (7, 7), (8, 15)] {
            let r = GradedRing::<Gf2>::truncated_polynomial(1, h, "a");
            assert_eq!(zero_divisor_cup_length(&r).length, expected, "height {h}");
            assert_eq!(cup_length(&r).length, h);
        }
    }

    #[test]
    fn torus_lengths() {
        let mut t = GradedRing::<Rational>::sphere(1, "x1");
        for i in 2..=4 {
            t = t.tensor(&GradedRing::sphere(1, &format!("x{i}")));
        }
        assert_eq!(indecomposable_generators(&t).len(), 4);
        assert_eq!(cup_length(&t).length, 4);
        assert_eq!(zero_divisor_cup_length(&t).length, 4);
    }

    #[test]
    fn point_has_zero_lengths() {
        let p = GradedRing::<Gf2>::point();
        assert_eq!(cup_length(&p).length, 0);
        assert_eq!(zero_divisor_cup_length(&p).length, 0);
    }
}
