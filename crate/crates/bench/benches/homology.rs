use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tcbound_bench::{random_complexes, rp2, torus7};
use tcbound_core::algebra::{Gf2, Rational};
use tcbound_core::complex::{barycentric_subdivision, product, skeleton_complement_dimension};
use tcbound_core::homology::{self, Coefficients};
use tcbound_core::SimplicialComplex;

fn betti(c: &mut Criterion) {
    let sd = barycentric_subdivision(&torus7()).complex;
    let mut g = c.benchmark_group("betti");
    for coeff in [Coefficients::Z2, Coefficients::Q] {
        g.bench_with_input(BenchmarkId::new("sd(torus)", format!("{coeff:?}")), &sd, |b, k| {
            b.iter(|| homology::betti(black_box(k), coeff).unwrap())
        });
    }
    g.bench_function("integral sd(RP^2)", |b| {
        let k = barycentric_subdivision(&rp2()).complex;
        b.iter(|| homology::integral_homology(black_box(&k)).unwrap())
    });
    g.finish();
}

fn rings(c: &mut Criterion) {
    let torus = torus7();
    let circle = SimplicialComplex::simplex_boundary(2);
    let t4 = product(&product(&circle, &circle), &product(&circle, &circle));
    let mut g = c.benchmark_group("rings");
    g.sample_size(20);
    g.bench_function("cohomology ring torus7 Q", |b| {
        b.iter(|| homology::cohomology_ring::<Rational>(black_box(&torus)))
    });
    g.bench_function("cohomology ring T^4 Z/2", |b| {
        b.iter(|| homology::cohomology_ring::<Gf2>(black_box(&t4)))
    });
    let r = homology::cohomology_ring::<Rational>(&t4);
    g.bench_function("zcl T^4 Q", |b| {
        b.iter(|| homology::zero_divisor_cup_length(black_box(&r)))
    });
    g.finish();
}

fn complements(c: &mut Criterion) {
    let ks = random_complexes(50);
    c.bench_function("complement dimension, 50 random complexes", |b| {
        b.iter(|| {
            for k in &ks {
                for r in 0..k.dim() {
                    black_box(skeleton_complement_dimension(k, r).unwrap());
                }
            }
        })
    });
}

criterion_group!(benches, betti, rings, complements);
criterion_main!(benches);
