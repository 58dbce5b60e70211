use super::ops::{order_complex, skeleton};
use super::{ComplexError, LabeledComplex, Simplex, SimplicialComplex, Subcomplex};

fn fullness_witness(k: &SimplicialComplex, l: &Subcomplex) -> Option<Simplex> {
    let vs = l.vertices();
    k.iter()
        .find(|s| s.vertices().iter().all(|v| vs.contains(v)) && !l.contains(s))
        .cloned()
}

/// Whether every simplex of `k` spanned by vertices of `l` already lies in `l`.
pub fn is_full_subcomplex(k: &SimplicialComplex, l: &Subcomplex) -> Result<bool, ComplexError> {
    l.check_inside(k)?;
    Ok(fullness_witness(k, l).is_none())
}

fn check_proper(k: &SimplicialComplex, l: &Subcomplex) -> Result<(), ComplexError> {
    l.check_inside(k)?;
    if l.len() == k.len() {
        return Err(ComplexError::EmptyComplement);
    }
    Ok(())
}

/// The subcomplex of `k` induced on the vertices outside `l`, for a full subcomplex `l`.
///
/// Vertex `i` of the result is labelled by the 0-simplex of `k` it came from.
pub fn complement_nerve(
    k: &SimplicialComplex,
    l: &Subcomplex,
) -> Result<LabeledComplex, ComplexError> {
    check_proper(k, l)?;
    if let Some(s) = fullness_witness(k, l) {
        return Err(ComplexError::NotFull(s));
    }
    let used = l.vertices();
    let rest: Vec<usize> = (0..k.vertex_count())
        .filter(|v| !used.contains(v))
        .collect();
    let mut new_id = vec![usize::MAX; k.vertex_count()];
    for (i, &v) in rest.iter().enumerate() {
        new_id[v] = i;
    }
    let simplices = k
        .iter()
        .filter(|s| s.vertices().iter().all(|&v| new_id[v] != usize::MAX))
        .map(|s| Simplex::from_sorted(s.vertices().iter().map(|&v| new_id[v]).collect()))
        .collect::<Vec<_>>();
    Ok(LabeledComplex {
        complex: SimplicialComplex::from_closed_set(simplices),
        labels: rest
            .into_iter()
            .map(|v| Simplex::from_sorted(vec![v]))
            .collect(),
    })
}

/// The order complex of the simplices of `k` that are not in `l`.
///
/// This is the full subcomplex of the barycentric subdivision spanned by barycenters of
/// simplices outside `l`, which is a deformation retract of `|K| − |L|`.
pub fn complement_complex(
    k: &SimplicialComplex,
    l: &Subcomplex,
) -> Result<LabeledComplex, ComplexError> {
    check_proper(k, l)?;
    Ok(order_complex(
        k.iter().filter(|s| !l.contains(s)).cloned().collect(),
    ))
}

/// Dimension of the complement of the `r`-skeleton, computed from the chain construction.
pub fn skeleton_complement_dimension(
    k: &SimplicialComplex,
    r: usize,
) -> Result<usize, ComplexError> {
    if r >= k.dim() {
        return Err(ComplexError::SkeletonTooLarge { r, dim: k.dim() });
    }
    let sk = Subcomplex::from(&skeleton(k, r));
    Ok(complement_complex(k, &sk)?.complex.dim())
}
