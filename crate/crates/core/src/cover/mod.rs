//! Finite covers of discrete ground sets, their multiplicity, and the extension and combination
//! constructions behind subadditivity of sectional-category-like invariants.
//!
//! A cover is a list of sets `U_0, .., U_k`. Each set is stored as a disjoint union of pieces,
//! and each piece remembers which sets of the input covers it was carved from (`parents_a`,
//! `parents_b`). On a discrete ground set the disjoint-union condition is only bookkeeping, but
//! it keeps the same structure the topological construction needs.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod io;

pub type Point = usize;
pub type PointSet = BTreeSet<Point>;

/// Largest number of sets for which the exhaustive `n`-cover check is attempted.
pub const MAX_SETS_FOR_N_COVER: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("the ground set is empty")]
    EmptyGround,
    #[error("set {set} contains point {point} outside the ground set")]
    OutsideGround { set: usize, point: Point },
    #[error("point {0} is not covered")]
    Uncovered(Point),
    #[error("set {set} has an empty piece")]
    EmptyPiece { set: usize },
    #[error("pieces of set {set} overlap in point {point}")]
    OverlappingPieces { set: usize, point: Point },
    #[error("n = {n} is out of range 1..={sets}")]
    OutOfRange { n: usize, sets: usize },
    #[error("{sets} sets exceed the limit of {limit} for the exhaustive check")]
    TooManySets { sets: usize, limit: usize },
    #[error("requested {wanted} sets but the cover already has {have}")]
    CannotShrink { wanted: usize, have: usize },
    #[error("the two covers live on different ground sets")]
    GroundMismatch,
    #[error("cover {which} is not a cover by sets with property {property}: set {set} fails")]
    PropertyFails {
        which: char,
        property: String,
        set: usize,
    },
    #[error("property {property} is not closed under subsets: it holds on {holds:?} but fails on {fails:?}")]
    NotDownwardClosed {
        property: String,
        holds: Vec<Point>,
        fails: Vec<Point>,
    },
    #[error("piece {piece} of set {set} has invalid parent tags: {reason}")]
    BadTag {
        set: usize,
        piece: usize,
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub elements: PointSet,
    #[serde(default)]
    pub parents_a: Vec<usize>,
    #[serde(default)]
    pub parents_b: Vec<usize>,
}

/// One set of a cover, as a disjoint union of pieces.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CoverSet {
    pub pieces: Vec<Piece>,
}

impl CoverSet {
    pub fn elements(&self) -> PointSet {
        self.pieces
            .iter()
            .flat_map(|p| p.elements.iter().copied())
            .collect()
    }

    pub fn contains(&self, x: Point) -> bool {
        self.pieces.iter().any(|p| p.elements.contains(&x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    ground: PointSet,
    sets: Vec<CoverSet>,
}

impl Cover {
    pub fn new(ground: PointSet, sets: Vec<CoverSet>) -> Result<Self, CoverError> {
        if ground.is_empty() {
            return Err(CoverError::EmptyGround);
        }
        let mut covered = PointSet::new();
        for (i, s) in sets.iter().enumerate() {
            let mut seen = PointSet::new();
            for p in &s.pieces {
                if p.elements.is_empty() {
                    return Err(CoverError::EmptyPiece { set: i });
                }
                for &x in &p.elements {
                    if !ground.contains(&x) {
                        return Err(CoverError::OutsideGround { set: i, point: x });
                    }
                    if !seen.insert(x) {
                        return Err(CoverError::OverlappingPieces { set: i, point: x });
                    }
                }
            }
            covered.extend(seen);
        }
        if let Some(&x) = ground.difference(&covered).next() {
            return Err(CoverError::Uncovered(x));
        }
        Ok(Cover { ground, sets })
    }

    /// A cover from plain sets; set `i` becomes a single piece tagged with parent `i`.
    pub fn from_sets(
        ground: impl IntoIterator<Item = Point>,
        sets: Vec<PointSet>,
    ) -> Result<Self, CoverError> {
        let sets = sets
            .into_iter()
            .enumerate()
            .map(|(i, s)| CoverSet {
                pieces: if s.is_empty() {
                    Vec::new()
                } else {
                    vec![Piece {
                        elements: s,
                        parents_a: vec![i],
                        parents_b: Vec::new(),
                    }]
                },
            })
            .collect();
        Cover::new(ground.into_iter().collect(), sets)
    }

    pub fn ground(&self) -> &PointSet {
        &self.ground
    }

    pub fn sets(&self) -> &[CoverSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set_elements(&self) -> Vec<PointSet> {
        self.sets.iter().map(CoverSet::elements).collect()
    }

    /// How many sets contain `x`.
    pub fn depth(&self, x: Point) -> usize {
        self.sets.iter().filter(|s| s.contains(x)).count()
    }

    /// Checks that every piece sits inside each parent it is tagged with.
    pub fn check_tags(&self, a: Option<&Cover>, b: Option<&Cover>) -> Result<(), CoverError> {
        for (i, s) in self.sets.iter().enumerate() {
            for (j, p) in s.pieces.iter().enumerate() {
                for (parents, cover, which) in [(&p.parents_a, a, 'A'), (&p.parents_b, b, 'B')] {
                    let Some(cover) = cover else { continue };
                    for &t in parents {
                        let bad = |reason: String| CoverError::BadTag {
                            set: i,
                            piece: j,
                            reason,
                        };
                        let parent = cover
                            .sets
                            .get(t)
                            .ok_or_else(|| bad(format!("{which}-index {t} out of range")))?
                            .elements();
                        if !p.elements.is_subset(&parent) {
                            return Err(bad(format!("not inside set {t} of {which}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Smallest depth over the ground set.
pub fn multiplicity(cover: &Cover) -> usize {
    cover
        .ground
        .iter()
        .map(|&x| cover.depth(x))
        .min()
        .unwrap_or(0)
}

/// Whether the union of any `n` of the sets is the whole ground set.
pub fn is_n_cover(cover: &Cover, n: usize) -> Result<bool, CoverError> {
    let k = cover.len();
    if n == 0 || n > k {
        return Err(CoverError::OutOfRange { n, sets: k });
    }
    if k > MAX_SETS_FOR_N_COVER {
        return Err(CoverError::TooManySets {
            sets: k,
            limit: MAX_SETS_FOR_N_COVER,
        });
    }
    let sets = cover.set_elements();
    Ok((0..k).combinations(n).all(|choice| {
        cover
            .ground
            .iter()
            .all(|x| choice.iter().any(|&i| sets[i].contains(x)))
    }))
}

/// Self-test of the characterisation of `(m+1)`-covers: a cover by `k+m+1` sets is an
/// `(m+1)`-cover exactly when every point lies in at least `k+1` of the sets.
/// Returns whether both sides agree.
pub fn check_multiplicity_lemma(cover: &Cover, m: usize) -> Result<bool, CoverError> {
    let sets = cover.len();
    if m >= sets {
        return Err(CoverError::OutOfRange { n: m + 1, sets });
    }
    let k = sets - m - 1;
    Ok(is_n_cover(cover, m + 1)? == (multiplicity(cover) > k))
}

/// Splits the ground set by least covering index: piece `j` holds the points whose first
/// covering set is `U_j`.
fn least_index_pieces(cover: &Cover) -> Vec<Piece> {
    let sets = cover.set_elements();
    let mut pieces: Vec<PointSet> = vec![PointSet::new(); sets.len()];
    for &x in &cover.ground {
        let j = sets
            .iter()
            .position(|s| s.contains(&x))
            .expect("covers reach every point");
        pieces[j].insert(x);
    }
    pieces
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_empty())
        .map(|(j, elements)| Piece {
            elements,
            parents_a: vec![j],
            parents_b: Vec::new(),
        })
        .collect()
}

/// Lengthens a cover `U_0, .., U_k` to `U_0, .., U_m` (`m ≥ k`). The first `k+1` sets are kept;
/// every new set is the whole ground set split into least-covering-index pieces, each tagged with
/// the original set containing it. The result has multiplicity at least `m−k+1`, so it is a
/// `(k+1)`-cover.
pub fn extend_cover(cover: &Cover, m: usize) -> Result<Cover, CoverError> {
    let have = cover.len();
    if m + 1 < have {
        return Err(CoverError::CannotShrink {
            wanted: m + 1,
            have,
        });
    }
    let pieces = least_index_pieces(cover);
    let mut sets = cover.sets.clone();
    sets.extend((have..=m).map(|_| CoverSet {
        pieces: pieces.clone(),
    }));
    Cover::new(cover.ground.clone(), sets)
}

/// A property of subsets of the ground set, expected to be inherited by subsets.
#[derive(Clone)]
pub struct PropertyOracle {
    name: String,
    predicate: Arc<dyn Fn(&PointSet) -> bool + Send + Sync>,
}

impl fmt::Debug for PropertyOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PropertyOracle")
            .field("name", &self.name)
            .finish()
    }
}

impl PropertyOracle {
    pub fn new(
        name: impl Into<String>,
        predicate: impl Fn(&PointSet) -> bool + Send + Sync + 'static,
    ) -> Self {
        PropertyOracle {
            name: name.into(),
            predicate: Arc::new(predicate),
        }
    }

    /// "Contained in one of these sets", which is closed under subsets by construction.
    pub fn contained_in_some(name: impl Into<String>, family: Vec<PointSet>) -> Self {
        Self::new(name, move |s| family.iter().any(|f| s.is_subset(f)))
    }

    pub fn always() -> Self {
        Self::new("any set", |_| true)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn holds(&self, s: &PointSet) -> bool {
        (self.predicate)(s)
    }

    /// Samples subsets of sets where the property holds and reports the first subset where it
    /// fails. Passing is evidence, not proof, of downward closure.
    pub fn spot_check<R: Rng>(
        &self,
        seeds: &[PointSet],
        rng: &mut R,
        samples: usize,
    ) -> Result<(), CoverError> {
        for s in seeds.iter().filter(|s| self.holds(s)) {
            for _ in 0..samples {
                let sub: PointSet = s.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
                if !self.holds(&sub) {
                    return Err(CoverError::NotDownwardClosed {
                        property: self.name.clone(),
                        holds: s.iter().copied().collect(),
                        fails: sub.into_iter().collect(),
                    });
                }
            }
        }
        Ok(())
    }
}

fn check_property(cover: &Cover, p: &PropertyOracle, which: char) -> Result<(), CoverError> {
    for (i, s) in cover.set_elements().iter().enumerate() {
        if !p.holds(s) {
            return Err(CoverError::PropertyFails {
                which,
                property: p.name.clone(),
                set: i,
            });
        }
    }
    Ok(())
}

/// Given a cover `A` by `k+1` sets with property `pA` and a cover `B` by `m+1` sets with
/// property `pB`, builds a cover by `k+m+1` sets each piece of which has both properties.
///
/// `A` is lengthened to a `(k+1)`-cover `Ã` and `B` to an `(m+1)`-cover `B̃`, both with `k+m+1`
/// sets, and `W_i = Ã_i ∩ B̃_i` piece by piece. Every piece records the set of `A` and the set of
/// `B` it lies in. Piece decompositions of the inputs are ignored; only their sets matter.
pub fn combine_covers(
    a: &Cover,
    b: &Cover,
    pa: &PropertyOracle,
    pb: &PropertyOracle,
) -> Result<Cover, CoverError> {
    if a.ground != b.ground {
        return Err(CoverError::GroundMismatch);
    }
    check_property(a, pa, 'A')?;
    check_property(b, pb, 'B')?;
    let plain_a = Cover::from_sets(a.ground.iter().copied(), a.set_elements())?;
    let plain_b = Cover::from_sets(b.ground.iter().copied(), b.set_elements())?;
    let last = a.len() + b.len() - 2;
    let ext_a = extend_cover(&plain_a, last)?;
    let ext_b = extend_cover(&plain_b, last)?;
    let sets = ext_a
        .sets
        .iter()
        .zip(&ext_b.sets)
        .map(|(u, v)| CoverSet {
            pieces: u
                .pieces
                .iter()
                .cartesian_product(&v.pieces)
                .filter_map(|(p, q)| {
                    let elements: PointSet =
                        p.elements.intersection(&q.elements).copied().collect();
                    (!elements.is_empty()).then(|| Piece {
                        elements,
                        parents_a: p.parents_a.clone(),
                        parents_b: q.parents_a.clone(),
                    })
                })
                .collect(),
        })
        .collect();
    let w = Cover::new(a.ground.clone(), sets)?;
    w.check_tags(Some(&plain_a), Some(&plain_b))?;
    for s in &w.sets {
        for p in &s.pieces {
            for (oracle, parent, cover) in [
                (pa, p.parents_a[0], &plain_a),
                (pb, p.parents_b[0], &plain_b),
            ] {
                if !oracle.holds(&p.elements) {
                    return Err(CoverError::NotDownwardClosed {
                        property: oracle.name.clone(),
                        holds: cover.sets[parent].elements().into_iter().collect(),
                        fails: p.elements.iter().copied().collect(),
                    });
                }
            }
        }
    }
    Ok(w)
}

/// A random cover of `{0, .., points-1}` by `sets` sets; every point lands in at least one set.
pub fn random_cover<R: Rng>(rng: &mut R, points: usize, sets: usize) -> Cover {
    assert!(points > 0 && sets > 0);
    let density = rng.random_range(0.1..0.7);
    let mut family: Vec<PointSet> = (0..sets)
        .map(|_| (0..points).filter(|_| rng.random_bool(density)).collect())
        .collect();
    for x in 0..points {
        if family.iter().all(|s| !s.contains(&x)) {
            let i = rng.random_range(0..sets);
            family[i].insert(x);
        }
    }
    Cover::from_sets(0..points, family).expect("every point was placed")
}

/// A random downward-closed property: being contained in one of a few random sets.
pub fn random_oracle<R: Rng>(rng: &mut R, name: &str, points: usize) -> PropertyOracle {
    let count = rng.random_range(1..=3);
    let family = (0..count)
        .map(|_| (0..points).filter(|_| rng.random_bool(0.6)).collect())
        .collect();
    PropertyOracle::contained_in_some(name, family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn single_sets_fail_as_one_covers() {
        let c = Cover::from_sets([1, 2], vec![set(&[1]), set(&[2]), set(&[1, 2])]).unwrap();
        assert!(!is_n_cover(&c, 1).unwrap());
        assert!(is_n_cover(&c, 3).unwrap());
        assert_eq!(multiplicity(&c), 2);
        assert!(is_n_cover(&c, 2).unwrap());
    }

    #[test]
    fn invalid_covers_are_rejected() {
        assert_eq!(
            Cover::from_sets([1, 2], vec![set(&[1])]),
            Err(CoverError::Uncovered(2))
        );
        assert!(matches!(
            Cover::from_sets([1], vec![set(&[1, 5])]),
            Err(CoverError::OutsideGround { point: 5, .. })
        ));
        let c = Cover::from_sets([0], vec![set(&[0])]).unwrap();
        assert!(matches!(
            is_n_cover(&c, 2),
            Err(CoverError::OutOfRange { .. })
        ));
        assert!(matches!(
            is_n_cover(&c, 0),
            Err(CoverError::OutOfRange { .. })
        ));
    }

    #[test]
    fn one_point_lemma() {
        let c = Cover::from_sets([0], vec![set(&[0])]).unwrap();
        assert!(check_multiplicity_lemma(&c, 0).unwrap());
    }

    #[test]
    fn extension_reaches_required_multiplicity() {
        let c = Cover::from_sets(0..5, vec![set(&[0, 1, 2]), set(&[2, 3]), set(&[3, 4])]).unwrap();
        for m in 2..7 {
            let e = extend_cover(&c, m).unwrap();
            assert_eq!(e.len(), m + 1);
            assert!(multiplicity(&e) >= m - 2 + 1);
            assert!(is_n_cover(&e, 3).unwrap());
            e.check_tags(Some(&c), None).unwrap();
        }
        assert!(matches!(
            extend_cover(&c, 1),
            Err(CoverError::CannotShrink { .. })
        ));
    }

    #[test]
    fn combination_has_both_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = random_cover(&mut rng, 10, 3);
            let b = random_cover(&mut rng, 10, 2);
            let pa = PropertyOracle::contained_in_some("in A", a.set_elements());
            let pb = PropertyOracle::contained_in_some("in B", b.set_elements());
            let w = combine_covers(&a, &b, &pa, &pb).unwrap();
            assert_eq!(w.len(), 4);
        }
    }

    #[test]
    fn combination_checks_input_properties() {
        let a = Cover::from_sets(0..2, vec![set(&[0, 1])]).unwrap();
        let never = PropertyOracle::new("never", |_| false);
        assert!(matches!(
            combine_covers(&a, &a, &never, &PropertyOracle::always()),
            Err(CoverError::PropertyFails { which: 'A', .. })
        ));
    }

    #[test]
    fn spot_check_finds_upward_closed_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let big = PropertyOracle::new("at least 3 points", |s| s.len() >= 3);
        let err = big.spot_check(&[set(&[0, 1, 2, 3])], &mut rng, 20);
        assert!(matches!(err, Err(CoverError::NotDownwardClosed { .. })));
    }
}
