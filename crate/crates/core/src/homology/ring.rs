//! Finite-dimensional graded-commutative algebras given by a multiplication table on a basis.

use std::fmt;

use thiserror::Error;

use crate::algebra::field::sign;
use crate::algebra::{Field, FieldKind, Gf2, Rational, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring shape mismatch: {0}")]
    Shape(String),
    #[error("product {a}·{b} is not homogeneous of degree {degree}")]
    NotHomogeneous { a: String, b: String, degree: usize },
    #[error("unit law fails for {0}")]
    Unit(String),
    #[error("graded commutativity fails for {a} and {b}")]
    NotCommutative { a: String, b: String },
    #[error("associativity fails for ({a}·{b})·{c}")]
    NotAssociative { a: String, b: String, c: String },
    #[error("cannot combine a ring over {0} with a ring over {1}")]
    FieldMismatch(FieldKind, FieldKind),
}

/// A graded ring with basis element 0 the unit, basis sorted by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedRing<F> {
    degrees: Vec<usize>,
    names: Vec<String>,
    table: Vec<Vec<SparseVec<F>>>,
}

impl<F: Field> GradedRing<F> {
    /// Validates shapes, degree order and homogeneity. Algebra axioms are checked separately by
    /// [`GradedRing::validate`].
    pub fn new(
        degrees: Vec<usize>,
        names: Vec<String>,
        table: Vec<Vec<SparseVec<F>>>,
    ) -> Result<Self, RingError> {
        let n = degrees.len();
        if n == 0 || degrees[0] != 0 {
            return Err(RingError::Shape(
                "basis element 0 must have degree 0".into(),
            ));
        }
        if names.len() != n || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(RingError::Shape(format!(
                "expected {n} names and an {n}×{n} table"
            )));
        }
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(RingError::Shape("basis must be sorted by degree".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let deg = degrees[i] + degrees[j];
                if table[i][j]
                    .iter()
                    .any(|(k, _)| *k >= n || degrees[*k] != deg)
                {
                    return Err(RingError::NotHomogeneous {
                        a: names[i].clone(),
                        b: names[j].clone(),
                        degree: deg,
                    });
                }
            }
        }
        Ok(GradedRing {
            degrees,
            names,
            table,
        })
    }

    /// The cohomology ring of a point.
    pub fn point() -> Self {
        GradedRing {
            degrees: vec![0],
            names: vec!["1".into()],
            table: vec![vec![SparseVec::unit(0)]],
        }
    }

    /// `Λ[x]` with `x` in degree `n ≥ 1`, the cohomology of `S^n`.
    pub fn sphere(n: usize, name: &str) -> Self {
        assert!(n >= 1);
        Self::truncated_polynomial(n, 1, name)
    }

    /// `F[a]/(a^{height+1})` with `a` in degree `deg`.
    pub fn truncated_polynomial(deg: usize, height: usize, name: &str) -> Self {
        assert!(deg >= 1);
        let names = (0..=height)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => name.to_string(),
                _ => format!("{name}^{i}"),
            })
            .collect();
        let table = (0..=height)
            .map(|i| {
                (0..=height)
                    .map(|j| {
                        if i + j <= height {
                            SparseVec::unit(i + j)
                        } else {
                            SparseVec::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        GradedRing {
            degrees: (0..=height).map(|i| i * deg).collect(),
            names,
            table,
        }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn top_degree(&self) -> usize {
        *self.degrees.last().unwrap()
    }

    /// Dimension of each graded piece `0..=top_degree`.
    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![0; self.top_degree() + 1];
        for &d in &self.degrees {
            b[d] += 1;
        }
        b
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.table[i][j]
    }

    pub fn mul(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(&x.times(y), &self.table[*i][*j]);
            }
        }
        out
    }

    /// Degree of a homogeneous element, `None` for zero.
    pub fn degree_of(&self, a: &SparseVec<F>) -> Option<usize> {
        a.leading().map(|(i, _)| self.degrees[i])
    }

    fn check_unit(&self) -> Result<(), RingError> {
        for i in 0..self.dim() {
            let e = SparseVec::unit(i);
            if self.table[0][i] != e || self.table[i][0] != e {
                return Err(RingError::Unit(self.names[i].clone()));
            }
        }
        Ok(())
    }

    /// Checks the unit law, graded commutativity and associativity on basis elements.
    pub fn validate(&self) -> Result<(), RingError> {
        self.check_unit()?;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let s: F = sign(self.degrees[i] * self.degrees[j]);
                if self.table[i][j] != self.table[j][i].scaled(&s) {
                    return Err(RingError::NotCommutative {
                        a: self.names[i].clone(),
                        b: self.names[j].clone(),
                    });
                }
            }
        }
        let top = self.top_degree();
        for i in 1..n {
            for j in 1..n {
                if self.degrees[i] + self.degrees[j] > top {
                    break;
                }
                for k in 1..n {
                    if self.degrees[i] + self.degrees[j] + self.degrees[k] > top {
                        break;
                    }
                    let left = self.mul(&self.table[i][j], &SparseVec::unit(k));
                    let right = self.mul(&SparseVec::unit(i), &self.table[j][k]);
                    if left != right {
                        return Err(RingError::NotAssociative {
                            a: self.names[i].clone(),
                            b: self.names[j].clone(),
                            c: self.names[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Graded tensor product. Basis pairs `(i, j)` are ordered by total degree, then `j`, then
    /// `i`; `(a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut pairs: Vec<(usize, usize)> = (0..self.dim())
            .flat_map(|i| (0..other.dim()).map(move |j| (i, j)))
            .collect();
        pairs.sort_by_key(|&(i, j)| (self.degrees[i] + other.degrees[j], j, i));
        let mut pos = vec![0; self.dim() * other.dim()];
        for (p, &(i, j)) in pairs.iter().enumerate() {
            pos[i * other.dim() + j] = p;
        }
        let names = pairs
            .iter()
            .map(|&(i, j)| match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => self.names[i].clone(),
                (0, j) => other.names[j].clone(),
                (i, j) => format!("{}{}", self.names[i], other.names[j]),
            })
            .collect();
        let table = pairs
            .iter()
            .map(|&(a, b)| {
                pairs
                    .iter()
                    .map(|&(c, d)| {
                        let s: F = sign(other.degrees[b] * self.degrees[c]);
                        let mut entries = Vec::new();
                        for (x, u) in self.table[a][c].iter() {
                            for (y, v) in other.table[b][d].iter() {
                                entries.push((pos[x * other.dim() + y], u.times(v).times(&s)));
                            }
                        }
                        SparseVec::from_entries(entries)
                    })
                    .collect()
            })
            .collect();
        GradedRing {
            degrees: pairs
                .iter()
                .map(|&(i, j)| self.degrees[i] + other.degrees[j])
                .collect(),
            names,
            table,
        }
    }

    /// Renames basis elements, keeping the unit's name.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, RingError> {
        if names.len() != self.dim() {
            return Err(RingError::Shape("wrong number of names".into()));
        }
        self.names = names;
        Ok(self)
    }

    /// `x·y = z` for every nonzero product of positive-degree basis elements with `x ≤ y`.
    pub fn nonzero_products(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 1..self.dim() {
            for j in i..self.dim() {
                if !self.table[i][j].is_zero() {
                    out.push(format!(
                        "{}·{} = {}",
                        self.names[i],
                        self.names[j],
                        self.format_element(&self.table[i][j])
                    ));
                }
            }
        }
        out
    }

    pub fn format_element(&self, a: &SparseVec<F>) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.iter()
            .map(|(i, c)| {
                if c.is_one() {
                    self.names[*i].clone()
                } else {
                    format!("{c}·{}", self.names[*i])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<F: Field> fmt::Display for GradedRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graded ring over {} of total dimension {}",
            F::KIND,
            self.dim()
        )?;
        for (d, b) in self.betti().iter().enumerate() {
            if *b == 0 {
                continue;
            }
            let names: Vec<&str> = (0..self.dim())
                .filter(|&i| self.degrees[i] == d)
                .map(|i| self.names[i].as_str())
                .collect();
            writeln!(f, "  degree {d}: {}", names.join(", "))?;
        }
        let products = self.nonzero_products();
        if products.is_empty() {
            writeln!(f, "  all products of positive-degree classes vanish")?;
        } else {
            writeln!(f, "  nonzero products:")?;
            for p in products {
                writeln!(f, "    {p}")?;
            }
        }
        Ok(())
    }
}

/// A graded ring over a field chosen at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyRing {
    Z2(GradedRing<Gf2>),
    Q(GradedRing<Rational>),
}

impl AnyRing {
    pub fn field(&self) -> FieldKind {
        match self {
            AnyRing::Z2(_) => FieldKind::Z2,
            AnyRing::Q(_) => FieldKind::Q,
        }
    }

    pub fn tensor(&self, other: &AnyRing) -> Result<AnyRing, RingError> {
        match (self, other) {
            (AnyRing::Z2(a), AnyRing::Z2(b)) => Ok(AnyRing::Z2(a.tensor(b))),
            (AnyRing::Q(a), AnyRing::Q(b)) => Ok(AnyRing::Q(a.tensor(b))),
            _ => Err(RingError::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn validate(&self) -> Result<(), RingError> {
        match self {
            AnyRing::Z2(r) => r.validate(),
            AnyRing::Q(r) => r.validate(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyRing::Z2(r) => r.dim(),
            AnyRing::Q(r) => r.dim(),
        }
    }
}

impl fmt::Display for AnyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyRing::Z2(r) => r.fmt(f),
            AnyRing::Q(r) => r.fmt(f),
        }
    }
}
