use rand::seq::index;
use rand::Rng;

use super::{LabeledComplex, Simplex, SimplicialComplex};

/// The `r`-skeleton: all simplices of dimension at most `r`.
pub fn skeleton(k: &SimplicialComplex, r: usize) -> SimplicialComplex {
    SimplicialComplex::from_closed_set(
        (0..=r.min(k.dim())).flat_map(|d| k.simplices(d).iter().cloned()),
    )
}

/// A random complex on at most `max_vertices` vertices of dimension at most `max_dim`, given by
/// one to five random maximal faces. The first face has at least two vertices when possible.
pub fn random_complex<R: Rng>(rng: &mut R, max_vertices: usize, max_dim: usize) -> SimplicialComplex {
    assert!(max_vertices >= 1);
    let n = rng.random_range(1..=max_vertices);
    let widest = (max_dim + 1).min(n);
    let faces: Vec<Vec<usize>> = (0..rng.random_range(1..=5))
        .map(|i| {
            let least = if i == 0 { widest.min(2) } else { 1 };
            let size = rng.random_range(least..=widest);
            index::sample(rng, n, size).into_vec()
        })
        .collect();
    SimplicialComplex::from_maximal_simplices(&faces).expect("random faces are valid")
}

/// Order complex of a family of simplices under strict inclusion.
///
/// `elements` must be sorted by dimension first, so that `a ⊊ b` implies `a` comes before `b`.
/// Vertex `i` of the result is labelled by `elements[i]`.
pub(crate) fn order_complex(elements: Vec<Simplex>) -> LabeledComplex {
    debug_assert!(elements.windows(2).all(|w| w[0].dim() <= w[1].dim()));
    let n = elements.len();
    let above: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (i + 1..n)
                .filter(|&j| {
                    elements[j].dim() > elements[i].dim() && elements[i].is_face_of(&elements[j])
                })
                .collect()
        })
        .collect();

    let mut chains = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn extend(above: &[Vec<usize>], stack: &mut Vec<usize>, out: &mut Vec<Simplex>) {
        out.push(Simplex::from_sorted(stack.clone()));
        let top = *stack.last().unwrap();
        for &j in &above[top] {
            stack.push(j);
            extend(above, stack, out);
            stack.pop();
        }
    }
    for i in 0..n {
        stack.push(i);
        extend(&above, &mut stack, &mut chains);
        stack.pop();
    }
    LabeledComplex {
        complex: SimplicialComplex::from_closed_set(chains),
        labels: elements,
    }
}

/// First barycentric subdivision. Vertex `i` is the barycenter of the `i`-th simplex of `k`
/// in canonical order (by dimension, then lexicographically).
pub fn barycentric_subdivision(k: &SimplicialComplex) -> LabeledComplex {
    order_complex(k.iter().cloned().collect())
}

/// Triangulation of `|K| × |L|` by staircase chains in the product of vertex orders.
///
/// The vertex `(a, b)` gets id `a * |V(L)| + b`.
pub fn product(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    let nl = l.vertex_count();
    let mut maximal = Vec::new();
    for s in k.maximal_simplices() {
        for t in l.maximal_simplices() {
            let (p, q) = (s.dim(), t.dim());
            // each staircase is a shuffle of p steps in the first factor and q in the second
            let mut path = Vec::with_capacity(p + q + 1);
            staircases(p, q, 0, 0, &mut path, &mut |cells| {
                maximal.push(
                    cells
                        .iter()
                        .map(|&(x, y)| s.vertices()[x] * nl + t.vertices()[y])
                        .collect::<Vec<_>>(),
                );
            });
        }
    }
    SimplicialComplex::from_maximal_simplices(&maximal)
        .expect("products of nonempty complexes are nonempty")
}

fn staircases(
    p: usize,
    q: usize,
    x: usize,
    y: usize,
    path: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    path.push((x, y));
    if x == p && y == q {
        emit(path);
    }
    if x < p {
        staircases(p, q, x + 1, y, path, emit);
    }
    if y < q {
        staircases(p, q, x, y + 1, path, emit);
    }
    path.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn skeleton_truncates() {
        let k = SimplicialComplex::simplex(4);
        let s = skeleton(&k, 1);
        assert_eq!(s.f_vector(), vec![5, 10]);
        assert_eq!(skeleton(&k, 9), k);
    }

    #[test]
    fn subdivision_of_simplex_counts_flags() {
        // the d-simplices of sd(Δ^n) are the maximal flags, (n+1)! of them
        for n in 0..5 {
            let sd = barycentric_subdivision(&SimplicialComplex::simplex(n));
            let facts: usize = (1..=n + 1).product();
            assert_eq!(sd.complex.simplices(n).len(), facts);
            assert_eq!(sd.complex.vertex_count(), (1 << (n + 1)) - 1);
        }
    }

    #[test]
    fn subdivision_preserves_euler_characteristic() {
        let k = SimplicialComplex::simplex_boundary(3);
        let sd = barycentric_subdivision(&k);
        assert_eq!(sd.complex.euler_characteristic(), 2);
        assert_eq!(sd.complex.dim(), 2);
    }

    #[test]
    fn product_of_simplices_has_binomial_top_cells() {
        for p in 0..4 {
            for q in 0..4 {
                let prod = product(
                    &SimplicialComplex::simplex(p),
                    &SimplicialComplex::simplex(q),
                );
                assert_eq!(prod.dim(), p + q);
                assert_eq!(prod.simplices(p + q).len(), binomial(p + q, p));
                assert_eq!(prod.euler_characteristic(), 1);
            }
        }
    }

    #[test]
    fn product_euler_is_multiplicative() {
        let circle = SimplicialComplex::simplex_boundary(2);
        let sphere = SimplicialComplex::simplex_boundary(3);
        assert_eq!(product(&circle, &sphere).euler_characteristic(), 0);
        assert_eq!(product(&sphere, &sphere).euler_characteristic(), 4);
    }
}
