//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.
//!
//! All comparisons are exact integer equalities. Runtime limits are pinned below and measured
//! in the test profile.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tcbound_core::algebra::{Field, Gf2, Rational};
use tcbound_core::bounds::{
    self, binding, secat_tilde_bound, tc_ceiling_bound, ExtNat, Interval, Invariant,
    InvariantState, Side, SpaceDescriptor,
};
use tcbound_core::complex::{self, io::ComplexFile};
use tcbound_core::cover::{self, PropertyOracle};
use tcbound_core::homology::{self, Coefficients, GradedRing};
use tcbound_core::{SimplicialComplex, Subcomplex};

const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
const FUZZ_LIMIT: Duration = Duration::from_secs(30);
const SEED: u64 = 0x7c_b0_0d;
const RANDOM_COMPLEXES: usize = 50;
const MIN_FULL_PAIRS: usize = 25;
const LEMMA_TRIALS: usize = 1000;
const COMBINE_TRIALS: usize = 500;
const FORMULA_MAX_DIM: i64 = 50;

type Outcome = Result<String, String>;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn load_complex(name: &str) -> SimplicialComplex {
    let text = std::fs::read_to_string(data(name)).expect("shipped data exists");
    serde_json::from_str::<ComplexFile>(&text)
        .expect("shipped data parses")
        .to_complex()
        .expect("shipped complexes are valid")
}

fn load_descriptor(name: &str) -> SpaceDescriptor {
    serde_json::from_str(&std::fs::read_to_string(data(name)).expect("shipped data exists"))
        .expect("shipped descriptors parse")
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn within(what: &str, start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    if t < limit {
        Ok(t)
    } else {
        Err(format!("{what} took {t:?}, limit {limit:?}"))
    }
}

fn node(st: &InvariantState, label: &str) -> Result<usize, String> {
    st.nodes
        .iter()
        .find(|n| n.label == label)
        .map(|n| n.id)
        .ok_or_else(|| format!("no node {label}"))
}

fn binds(st: &InvariantState, x: usize, inv: Invariant, side: Side, rule: &str) -> Result<(), String> {
    let b = binding(st, x, inv, side);
    if b.iter().any(|s| s == rule) {
        Ok(())
    } else {
        Err(format!("{inv:?} {side:?} at {} is bound by {b:?}, not {rule}", st.nodes[x].label))
    }
}

fn c1_product_example() -> Outcome {
    let start = Instant::now();
    let st = bounds::analyze(&load_descriptor("t2xs2.json")).map_err(|e| e.to_string())?;
    expect("TC", st.interval(0, Invariant::Tc), Interval::exact(4))?;
    expect("zcl", st.interval(0, Invariant::Zcl), Interval::exact(4))?;
    binds(&st, 0, Invariant::Tc, Side::Lower, "R15")?;
    binds(&st, 0, Invariant::Tc, Side::Upper, "R3")?;
    expect("TC^D", st.interval(0, Invariant::Tcd), Interval::exact(2))?;
    expect("~TC", st.interval(0, Invariant::Tctilde), Interval::exact(2))?;
    binds(&st, 0, Invariant::Tcd, Side::Upper, "R14")?;
    binds(&st, 0, Invariant::Tctilde, Side::Upper, "R14")?;
    for f in ["T^2", "S^2"] {
        expect(&format!("TC({f})"), st.interval(node(&st, f)?, Invariant::Tc), Interval::exact(2))?;
    }
    let q = GradedRing::<Rational>::sphere(1, "a")
        .tensor(&GradedRing::sphere(1, "b"))
        .tensor(&GradedRing::sphere(2, "s"));
    expect("zcl over Q of the tensor ring", homology::zero_divisor_cup_length(&q).length, 4)?;
    let t = within("analysis", start, EXAMPLE_LIMIT)?;
    Ok(format!("TC = [4,4], lower R15 (zcl 4 over Q), upper R3 with TC^D = ~TC = 2 via R14, {t:.0?}"))
}

fn c2_projective_spaces() -> Outcome {
    let start = Instant::now();
    for n in [2, 4, 6, 8] {
        let st = bounds::analyze(&SpaceDescriptor::RealProjective { n }).map_err(|e| e.to_string())?;
        expect(&format!("~TC(RP^{n})"), st.interval(0, Invariant::Tctilde), Interval::exact(2))?;
        binds(&st, 0, Invariant::Tctilde, Side::Lower, "R12")?;
        binds(&st, 0, Invariant::Tctilde, Side::Upper, "R11")?;
        expect(&format!("TC(S^{n})"), st.interval(node(&st, &format!("S^{n}"))?, Invariant::Tc), Interval::exact(2))?;
        expect("R11 ceiling", tc_ceiling_bound(n as i64, n as i64 - 1), Ok(2))?;
        if n == 8 {
            expect("TC^D(RP^8)", st.interval(0, Invariant::Tcd), Interval::exact(15))?;
            expect("TC(RP^8)", st.interval(0, Invariant::Tc), Interval::exact(15))?;
            let r4 = st
                .candidates(0)
                .into_iter()
                .filter(|c| c.source.to_string() == "R4" && c.invariant == Invariant::Tc && c.side == Side::Upper)
                .map(|c| c.value)
                .collect::<Vec<_>>();
            expect("R4 candidates for TC(RP^8)", r4, vec![ExtNat::Fin(17)])?;
        }
    }
    let t = within("analysis", start, EXAMPLE_LIMIT)?;
    Ok(format!("~TC(RP^n) = [2,2] for n = 2,4,6,8; RP^8: TC^D = TC = 15, R4 gives 17, {t:.0?}"))
}

fn c3_skeleton_gap() -> Outcome {
    let start = Instant::now();
    let st = bounds::analyze(&load_descriptor("skeleton_t5.json")).map_err(|e| e.to_string())?;
    let tcd = st.interval(0, Invariant::Tcd);
    expect("TC^D upper", tcd.upper, ExtNat::Fin(4))?;
    let b = binding(&st, 0, Invariant::Tcd, Side::Upper);
    if !b.iter().any(|r| r == "R5" || r == "R21") {
        return Err(format!("TC^D upper bound by {b:?}, expected R5 or R21"));
    }
    let g = st.nodes[0].group.ok_or("no fundamental group node")?;
    expect("TC^D(π)", st.interval(g, Invariant::Tcd), Interval::exact(5))?;
    expect("TC(Z^5)", st.interval(g, Invariant::Tc), Interval::exact(5))?;
    let report = bounds::Report::new(&st, false);
    let gap = report
        .gaps
        .iter()
        .find(|gap| gap.space == st.nodes[0].label)
        .ok_or("no gap reported at the root")?;
    expect("gap statement", gap.statement.as_str(), "TC^D(X) ≤ 4 < 5 ≤ TC^D(π)")?;
    let t = within("analysis", start, EXAMPLE_LIMIT)?;
    Ok(format!("{} ({:?}), {t:.0?}", gap.statement, b))
}

fn c4_complement_dimension() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0;
    for i in 0..RANDOM_COMPLEXES {
        let k = complex::random_complex(&mut rng, 8, 4);
        for r in 0..k.dim() {
            let d = complex::skeleton_complement_dimension(&k, r).map_err(|e| e.to_string())?;
            if d + r + 1 > k.dim() {
                return Err(format!("complex {i}: dim {} r {r} complement dim {d}", k.dim()));
            }
            checks += 1;
        }
    }
    let t = within("corollary check", start, FUZZ_LIMIT)?;
    Ok(format!("{RANDOM_COMPLEXES} complexes, {checks} skeleta, all within dim K − r − 1, {t:.0?}"))
}

/// Induced subcomplexes are full by construction.
fn induced(k: &SimplicialComplex, keep: &[usize]) -> Subcomplex {
    let faces: Vec<Vec<usize>> = k
        .iter()
        .filter(|s| s.vertices().iter().all(|v| keep.contains(v)))
        .map(|s| s.vertices().to_vec())
        .collect();
    Subcomplex::from_maximal_simplices(&faces).expect("nonempty induced subcomplex")
}

fn c5_complement_oracles() -> Outcome {
    let start = Instant::now();
    let mut pairs: Vec<(String, SimplicialComplex, Subcomplex)> = Vec::new();
    for name in ["torus7.json", "rp2.json", "sphere2.json", "sphere3.json"] {
        let k = load_complex(name);
        pairs.push((format!("{name} − vertex"), k.clone(), induced(&k, &[0])));
        pairs.push((format!("{name} − edge"), k.clone(), induced(&k, &[0, 1])));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    while pairs.len() < 40 {
        let k = complex::random_complex(&mut rng, 8, 4);
        let n = k.vertex_count();
        if n < 2 {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        if keep.is_empty() || keep.len() == n {
            continue;
        }
        let l = induced(&k, &keep);
        pairs.push((format!("random {}", pairs.len()), k, l));
    }
    let mut full = 0;
    for (name, k, l) in &pairs {
        if !complex::is_full_subcomplex(k, l).map_err(|e| e.to_string())? {
            return Err(format!("{name}: induced subcomplex reported as not full"));
        }
        let nerve = complex::complement_nerve(k, l).map_err(|e| format!("{name}: {e}"))?;
        let order = complex::complement_complex(k, l).map_err(|e| format!("{name}: {e}"))?;
        for c in [Coefficients::Z2, Coefficients::Q] {
            let a = homology::betti(&nerve.complex, c).map_err(|e| e.to_string())?;
            let b = homology::betti(&order.complex, c).map_err(|e| e.to_string())?;
            // the order complex can be higher dimensional; trailing zeros do not count
            let trim = |v: Vec<usize>| {
                let last = v.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
                v[..last].to_vec()
            };
            expect(&format!("{name} over {c}"), trim(a), trim(b))?;
        }
        full += 1;
    }
    if full < MIN_FULL_PAIRS {
        return Err(format!("only {full} full pairs"));
    }
    let t = start.elapsed();
    Ok(format!("{full} full pairs, nerve and order complex Betti numbers agree over Z/2 and Q, {t:.0?}"))
}

fn c6_cover_lemmas() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for i in 0..LEMMA_TRIALS {
        let points = rng.random_range(1..=12);
        let sets = rng.random_range(1..=8);
        let c = cover::random_cover(&mut rng, points, sets);
        let m = rng.random_range(0..sets);
        if !cover::check_multiplicity_lemma(&c, m).map_err(|e| e.to_string())? {
            return Err(format!("lemma trial {i} failed"));
        }
    }
    for i in 0..COMBINE_TRIALS {
        let points = rng.random_range(1..=12);
        let (ka, kb) = (rng.random_range(1..=5), rng.random_range(1..=5));
        let a = cover::random_cover(&mut rng, points, ka);
        let b = cover::random_cover(&mut rng, points, kb);
        let pa = PropertyOracle::contained_in_some("A", a.set_elements());
        let pb = PropertyOracle::contained_in_some("B", b.set_elements());
        let w = cover::combine_covers(&a, &b, &pa, &pb).map_err(|e| format!("trial {i}: {e}"))?;
        expect("sets", w.len(), ka + kb - 1)?;
        let (sa, sb) = (a.set_elements(), b.set_elements());
        for x in a.ground() {
            if !w.sets().iter().any(|s| s.contains(*x)) {
                return Err(format!("trial {i}: point {x} uncovered"));
            }
        }
        for p in w.sets().iter().flat_map(|s| &s.pieces) {
            let (ia, ib) = (p.parents_a[0], p.parents_b[0]);
            if !p.elements.is_subset(&sa[ia]) || !p.elements.is_subset(&sb[ib]) {
                return Err(format!("trial {i}: piece outside its tagged parents"));
            }
            if !pa.holds(&p.elements) || !pb.holds(&p.elements) {
                return Err(format!("trial {i}: oracle fails on a piece"));
            }
        }
    }
    let t = within("cover fuzzing", start, FUZZ_LIMIT)?;
    Ok(format!("{LEMMA_TRIALS} lemma trials and {COMBINE_TRIALS} combinations passed, {t:.0?}"))
}

fn ring_invariants<F: Field>(r: &GradedRing<F>) -> (Vec<usize>, usize, usize) {
    (
        r.betti(),
        homology::cup_length(r).length,
        homology::zero_divisor_cup_length(r).length,
    )
}

fn c7_ring_cross_validation() -> Outcome {
    let tensor = GradedRing::<Rational>::sphere(1, "a").tensor(&GradedRing::sphere(1, "b"));
    let circle = SimplicialComplex::simplex_boundary(2);
    let prod = homology::cohomology_ring::<Rational>(&complex::product(&circle, &circle));
    let torus = homology::cohomology_ring::<Rational>(&load_complex("torus7.json"));
    let want = (vec![1, 2, 1], 2, 2);
    expect("tensor ring", ring_invariants(&tensor), want.clone())?;
    expect("product complex", ring_invariants(&prod), want.clone())?;
    expect("7-vertex torus", ring_invariants(&torus), want)?;
    Ok("Betti (1,2,1), cup-length 2, zcl 2 over Q for all three models".into())
}

fn c8_coefficients() -> Outcome {
    let s2 = load_complex("sphere2.json");
    let zq = homology::zero_divisor_cup_length(&homology::cohomology_ring::<Rational>(&s2)).length;
    let z2 = homology::zero_divisor_cup_length(&homology::cohomology_ring::<Gf2>(&s2)).length;
    expect("zcl(S^2) over Q", zq, 2)?;
    expect("zcl(S^2) over Z/2", z2, 1)?;
    let rp2 = load_complex("rp2.json");
    expect("cup-length(RP^2) over Z/2", homology::cup_length(&homology::cohomology_ring::<Gf2>(&rp2)).length, 2)?;
    let h = homology::integral_homology(&rp2).map_err(|e| e.to_string())?;
    expect("H_1(RP^2) torsion", h[1].torsion.clone(), vec![2])?;
    Ok("zcl(S^2) = 2 over Q, 1 over Z/2; cup-length(RP^2) = 2 over Z/2; H_1(RP^2) = Z/2".into())
}

/// Smallest `n ≥ 0` with `n·den ≥ num`, by counting.
fn ceil_oracle(num: i64, den: i64) -> u64 {
    let mut n = 0;
    while n * den < num {
        n += 1;
    }
    n as u64
}

fn c9_formulas() -> Outcome {
    let mut cases = 0;
    for dim in 0..=FORMULA_MAX_DIM {
        for k in 0..=dim {
            expect(&format!("secat ({dim},{k})"), secat_tilde_bound(dim, k), Ok(ceil_oracle(dim - k, k + 1)))?;
            let tc = tc_ceiling_bound(dim, k);
            if k == 0 {
                if tc.is_ok() {
                    return Err(format!("tc_ceiling_bound({dim}, 0) accepted"));
                }
            } else {
                expect(&format!("tc ({dim},{k})"), tc, Ok(ceil_oracle(2 * dim - k, k + 1)))?;
            }
            cases += 1;
        }
    }
    for d in 0..=FORMULA_MAX_DIM {
        expect("k = 0 anchor", secat_tilde_bound(d, 0), Ok(d as u64))?;
        expect("k = 1 anchor", tc_ceiling_bound(d, 1), Ok(d as u64))?;
        expect("k = 2 anchor", tc_ceiling_bound(d, 2), Ok(ceil_oracle(2 * d - 2, 3)))?;
    }
    for n in 2..=FORMULA_MAX_DIM {
        expect("RP^n anchor", tc_ceiling_bound(n, n - 1), Ok(2))?;
    }
    Ok(format!("{cases} (dim, k) pairs and the k = 0, 1, 2 and RP^n anchors match"))
}

fn tcbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcbound"))
        .args(args)
        .current_dir(data(""))
        .output()
        .expect("the binary runs")
}

fn c10_determinism() -> Outcome {
    let commands: [&[&str]; 9] = [
        &["bounds", "t2xs2.json", "--explain"],
        &["bounds", "rp8.json", "--explain"],
        &["bounds", "skeleton_t5.json", "--explain"],
        &["--format", "text", "bounds", "t2xs2.json", "--explain"],
        &["homology", "rp2.json", "--coeff", "z"],
        &["ring", "torus7.json"],
        &["zcl", "sphere2.json", "--coeff", "z2"],
        &["complement", "torus7.json", "sphere1.json"],
        &["--seed", "7", "cover", "fuzz"],
    ];
    for args in commands {
        let (a, b) = (tcbound(args), tcbound(args));
        if !a.status.success() {
            return Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&a.stderr)));
        }
        if a.stdout != b.stdout {
            return Err(format!("{args:?}: outputs differ"));
        }
    }
    for name in ["t2xs2.json", "rp8.json", "skeleton_t5.json", "sphere2_sc.json", "torus7_aspherical.json"] {
        let st = bounds::analyze(&load_descriptor(name)).map_err(|e| e.to_string())?;
        st.replay().map_err(|e| format!("{name}: {e}"))?;
        let again = bounds::analyze(&load_descriptor(name)).map_err(|e| e.to_string())?;
        if serde_json::to_string(&again.log).unwrap() != serde_json::to_string(&st.log).unwrap() {
            return Err(format!("{name}: derivation logs differ between runs"));
        }
    }
    Ok(format!("{} commands byte-identical across runs; 5 derivation logs replay", commands.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("T^2 × S^2 product example", c1_product_example),
        ("even real projective spaces", c2_projective_spaces),
        ("skeleton gap", c3_skeleton_gap),
        ("complement dimension corollary", c4_complement_dimension),
        ("nerve and order complex agree", c5_complement_oracles),
        ("cover lemmas", c6_cover_lemmas),
        ("ring cross-validation", c7_ring_cross_validation),
        ("coefficient sensitivity", c8_coefficients),
        ("ceiling formulas", c9_formulas),
        ("determinism and replay", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
