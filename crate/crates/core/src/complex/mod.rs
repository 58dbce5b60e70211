//! Finite abstract simplicial complexes.
//!
//! A [`SimplicialComplex`] stores its simplices grouped by dimension, each group sorted
//! lexicographically. That order is the canonical basis order used by every chain and cochain
//! computation in the crate. Vertex ids are dense: every id below `vertex_count` is a vertex.
//!
//! Subcomplexes living in the id space of an ambient complex are carried by [`Subcomplex`],
//! which is allowed to be empty and to use a sparse set of vertex ids.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

mod complement;
pub mod io;
mod ops;

pub use complement::{
    complement_complex, complement_nerve, is_full_subcomplex, skeleton_complement_dimension,
};
pub use ops::{barycentric_subdivision, product, random_complex, skeleton};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("a complex needs at least one simplex")]
    Empty,
    #[error("empty simplex in input")]
    EmptySimplex,
    #[error("vertex {vertex} repeated in simplex {simplex:?}")]
    DuplicateVertex { vertex: usize, simplex: Vec<usize> },
    #[error("{0} is not a simplex of the ambient complex")]
    NotSubcomplex(Simplex),
    #[error("subcomplex is not full: {0} has all its vertices in the subcomplex but is not in it")]
    NotFull(Simplex),
    #[error("the subcomplex is the whole complex, so its complement is empty")]
    EmptyComplement,
    #[error("skeleton dimension {r} must be below the complex dimension {dim}")]
    SkeletonTooLarge { r: usize, dim: usize },
    #[error("dimension must be non-negative, got {0}")]
    NegativeDimension(i64),
}

/// An oriented simplex given by its strictly increasing vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::EmptySimplex);
        }
        let original = vertices.clone();
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateVertex {
                vertex: w[0],
                simplex: original,
            });
        }
        Ok(Simplex(vertices))
    }

    /// Caller guarantees the vertices are nonempty and strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces paired with the position of the dropped vertex.
    pub fn facets(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 }).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            (i, Simplex(v))
        })
    }

    /// Every nonempty face, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// Front face `[v_0, .., v_p]`.
    pub fn front(&self, p: usize) -> Simplex {
        Simplex(self.0[..=p].to_vec())
    }

    /// Back face `[v_p, .., v_dim]`.
    pub fn back(&self, p: usize) -> Simplex {
        Simplex(self.0[p..].to_vec())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.by_dim == other.by_dim
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Face closure of the given simplices, with vertex ids compacted to `0..n`.
    pub fn from_maximal_simplices<F: AsRef<[usize]>>(faces: &[F]) -> Result<Self, ComplexError> {
        Self::from_maximal_simplices_relabeled(faces).map(|(k, _)| k)
    }

    /// Like [`Self::from_maximal_simplices`], also returning the original id of each new vertex.
    pub fn from_maximal_simplices_relabeled<F: AsRef<[usize]>>(
        faces: &[F],
    ) -> Result<(Self, Vec<usize>), ComplexError> {
        if faces.is_empty() {
            return Err(ComplexError::Empty);
        }
        let simplices = faces
            .iter()
            .map(|f| Simplex::new(f.as_ref().to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        let original: Vec<usize> = simplices
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let new_id: HashMap<usize, usize> =
            original.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut closed = BTreeSet::new();
        for s in &simplices {
            let relabeled = Simplex(s.vertices().iter().map(|v| new_id[v]).collect());
            if closed.contains(&relabeled) {
                continue;
            }
            closed.extend(relabeled.faces());
        }
        Ok((Self::from_closed_set(closed), original))
    }

    /// Builds a complex from a face-closed set whose vertices are exactly `0..n`.
    pub(crate) fn from_closed_set(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for s in simplices {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, Vec::new);
            }
            by_dim[d].push(s);
        }
        for layer in &mut by_dim {
            layer.sort_unstable();
            layer.dedup();
        }
        let index = by_dim
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, s)| (s, i))
                    .collect()
            })
            .collect();
        let k = SimplicialComplex { by_dim, index };
        debug_assert!(k.check_face_closure().is_ok());
        debug_assert!(k
            .simplices(0)
            .iter()
            .enumerate()
            .all(|(i, s)| s.vertices() == [i]));
        k
    }

    /// The boundary of the standard `n`-simplex, a triangulated `(n-1)`-sphere.
    pub fn simplex_boundary(n: usize) -> Self {
        let full = Simplex((0..=n).collect());
        let facets: Vec<Vec<usize>> = full.facets().map(|(_, f)| f.0).collect();
        if facets.is_empty() {
            // the boundary of a point is empty; return the point itself
            return Self::from_closed_set([full]);
        }
        Self::from_maximal_simplices(&facets).expect("facets of a simplex are valid")
    }

    /// The full standard `n`-simplex.
    pub fn simplex(n: usize) -> Self {
        Self::from_closed_set(Simplex((0..=n).collect()).faces().collect::<Vec<_>>())
    }

    pub fn vertex_count(&self) -> usize {
        self.by_dim[0].len()
    }

    pub fn dim(&self) -> usize {
        self.by_dim.len() - 1
    }

    /// Simplices of dimension `d` in canonical order (empty slice above the top dimension).
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.by_dim.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(d, l)| {
                if d % 2 == 0 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for d in 0..=self.dim() {
            let mut covered = vec![false; self.by_dim[d].len()];
            for t in self.simplices(d + 1) {
                for (_, f) in t.facets() {
                    covered[self.index[d][&f]] = true;
                }
            }
            out.extend(
                self.by_dim[d]
                    .iter()
                    .zip(covered)
                    .filter(|(_, c)| !c)
                    .map(|(s, _)| s.clone()),
            );
        }
        out
    }

    /// Returns the first simplex whose facet is missing, if any.
    pub fn check_face_closure(&self) -> Result<(), Simplex> {
        for d in 1..self.by_dim.len() {
            for s in &self.by_dim[d] {
                for (_, f) in s.facets() {
                    if !self.index[d - 1].contains_key(&f) {
                        return Err(s.clone());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e.0[0]), find(&mut parent, e.0[1]));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|v| find(&mut parent, v) == root)
    }
}

/// A face-closed set of simplices in the vertex id space of some ambient complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subcomplex {
    simplices: BTreeSet<Simplex>,
}

impl Subcomplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Face closure of the given simplices; ids are kept as given. An empty list is allowed.
    pub fn from_maximal_simplices<F: AsRef<[usize]>>(faces: &[F]) -> Result<Self, ComplexError> {
        let mut simplices = BTreeSet::new();
        for f in faces {
            let s = Simplex::new(f.as_ref().to_vec())?;
            simplices.extend(s.faces());
        }
        Ok(Subcomplex { simplices })
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.simplices
            .iter()
            .filter(|s| s.dim() == 0)
            .map(|s| s.0[0])
            .collect()
    }

    pub(crate) fn check_inside(&self, k: &SimplicialComplex) -> Result<(), ComplexError> {
        match self.simplices.iter().find(|s| !k.contains(s)) {
            Some(s) => Err(ComplexError::NotSubcomplex(s.clone())),
            None => Ok(()),
        }
    }
}

impl From<&SimplicialComplex> for Subcomplex {
    fn from(k: &SimplicialComplex) -> Self {
        Subcomplex {
            simplices: k.iter().cloned().collect(),
        }
    }
}

/// A complex whose vertices are labelled by distinct simplices of a parent complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledComplex {
    pub complex: SimplicialComplex,
    pub labels: Vec<Simplex>,
}

impl LabeledComplex {
    pub fn label(&self, v: usize) -> &Simplex {
        &self.labels[v]
    }

    pub fn vertex_of(&self, label: &Simplex) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Checks that labels are pairwise distinct and name simplices of `parent`.
    pub fn check_labels(&self, parent: &SimplicialComplex) -> Result<(), ComplexError> {
        let mut seen = BTreeSet::new();
        for l in &self.labels {
            if !parent.contains(l) {
                return Err(ComplexError::NotSubcomplex(l.clone()));
            }
            if !seen.insert(l) {
                return Err(ComplexError::DuplicateVertex {
                    vertex: self.vertex_of(l).unwrap_or_default(),
                    simplex: l.vertices().to_vec(),
                });
            }
        }
        Ok(())
    }
}
