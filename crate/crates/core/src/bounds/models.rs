//! Cohomology rings of descriptors, used to seed cup-length and zero-divisor cup-length.

use crate::algebra::{Gf2, Rational};
use crate::homology::{self, GradedRing, SearchResult};

use super::descriptor::SpaceDescriptor;

/// Rings larger than this are not searched.
pub(crate) const CUPLEN_DIM_CAP: usize = 256;
pub(crate) const ZCL_DIM_CAP: usize = 64;

pub(crate) struct Models {
    pub z2: GradedRing<Gf2>,
    pub q: GradedRing<Rational>,
}

pub(crate) struct Lengths {
    pub cuplen: Option<(SearchResult, SearchResult)>,
    pub zcl: Option<(SearchResult, SearchResult)>,
    pub dim: usize,
}

fn torus<F: crate::algebra::Field>(n: u64) -> GradedRing<F> {
    (0..n).fold(GradedRing::point(), |acc, i| {
        acc.tensor(&GradedRing::sphere(1, &format!("t{}", i + 1)))
    })
}

/// Rings over Z/2 and Q, when the descriptor pins them down.
pub(crate) fn models(d: &SpaceDescriptor) -> Option<Models> {
    use SpaceDescriptor as D;
    Some(match d {
        d if d.is_point() => Models { z2: GradedRing::point(), q: GradedRing::point() },
        D::Sphere { n } => Models {
            z2: GradedRing::sphere(*n as usize, "s"),
            q: GradedRing::sphere(*n as usize, "s"),
        },
        D::Torus { n } if 1usize.checked_shl(*n as u32).is_some_and(|d| d <= CUPLEN_DIM_CAP) => {
            Models { z2: torus(*n), q: torus(*n) }
        }
        D::RealProjective { n } => Models {
            z2: GradedRing::truncated_polynomial(1, *n as usize, "a"),
            q: if n % 2 == 1 {
                GradedRing::sphere(*n as usize, "u")
            } else {
                GradedRing::point()
            },
        },
        D::Product { factors } => {
            let mut acc = Models { z2: GradedRing::point(), q: GradedRing::point() };
            for f in factors {
                let m = models(f)?;
                if acc.z2.dim() * m.z2.dim() > CUPLEN_DIM_CAP {
                    return None;
                }
                acc = Models { z2: acc.z2.tensor(&m.z2), q: acc.q.tensor(&m.q) };
            }
            acc
        }
        D::Explicit { complex, .. } => Models {
            z2: homology::cohomology_ring(complex),
            q: homology::cohomology_ring(complex),
        },
        _ => return None,
    })
}

pub(crate) fn lengths(m: &Models) -> Lengths {
    let dim = m.z2.dim().max(m.q.dim());
    let cuplen = (dim <= CUPLEN_DIM_CAP)
        .then(|| (homology::cup_length(&m.z2), homology::cup_length(&m.q)));
    let zcl = (dim <= ZCL_DIM_CAP).then(|| {
        (homology::zero_divisor_cup_length(&m.z2), homology::zero_divisor_cup_length(&m.q))
    });
    Lengths { cuplen, zcl, dim }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t2_s2_lengths() {
        let d: SpaceDescriptor = serde_json::from_str(
            r#"{"type":"product","factors":[{"type":"torus","n":2},{"type":"sphere","n":2}]}"#,
        )
        .unwrap();
        let l = lengths(&models(&d).unwrap());
        let (z2, q) = l.zcl.unwrap();
        assert_eq!(q.length, 4);
        assert_eq!(z2.length, 3);
        assert_eq!(l.cuplen.unwrap().1.length, 3);
    }

    #[test]
    fn rp_lengths() {
        let l = lengths(&models(&SpaceDescriptor::RealProjective { n: 8 }).unwrap());
        assert_eq!(l.cuplen.as_ref().unwrap().0.length, 8);
        assert_eq!(l.zcl.unwrap().0.length, 15);
    }
}
