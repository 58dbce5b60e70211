//! Inputs shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tcbound_core::bounds::SpaceDescriptor;
use tcbound_core::complex::{self, io::ComplexFile};
use tcbound_core::SimplicialComplex;

fn parse_complex(text: &str) -> SimplicialComplex {
    serde_json::from_str::<ComplexFile>(text)
        .unwrap()
        .to_complex()
        .unwrap()
}

pub fn torus7() -> SimplicialComplex {
    parse_complex(include_str!("../../../data/torus7.json"))
}

pub fn rp2() -> SimplicialComplex {
    parse_complex(include_str!("../../../data/rp2.json"))
}

pub fn descriptor(name: &str) -> SpaceDescriptor {
    let text = match name {
        "t2xs2" => include_str!("../../../data/t2xs2.json"),
        "rp8" => include_str!("../../../data/rp8.json"),
        "skeleton_t5" => include_str!("../../../data/skeleton_t5.json"),
        _ => panic!("no descriptor {name}"),
    };
    serde_json::from_str(text).unwrap()
}

/// Fixed-seed random complexes on at most 8 vertices of dimension at most 4.
pub fn random_complexes(count: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    (0..count)
        .map(|_| complex::random_complex(&mut rng, 8, 4))
        .collect()
}
