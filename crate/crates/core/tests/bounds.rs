use tcbound_core::bounds::{
    analyze, analyze_complex, report, AttributeSet, ExtNat, Interval, Invariant, Report,
    ReportFormat, Side, SpaceDescriptor, Tri,
};
use tcbound_core::SimplicialComplex;

fn parse(s: &str) -> SpaceDescriptor {
    serde_json::from_str(s).unwrap()
}

fn t2xs2() -> SpaceDescriptor {
    parse(r#"{"type":"product","factors":[{"type":"torus","n":2},{"type":"sphere","n":2}]}"#)
}

#[test]
fn t2_times_s2() {
    let st = analyze(&t2xs2()).unwrap();
    assert_eq!(st.interval(0, Invariant::Tc), Interval::exact(4));
    assert_eq!(st.interval(0, Invariant::Tcd), Interval::exact(2));
    assert_eq!(st.interval(0, Invariant::Tctilde), Interval::exact(2));
    let r = Report::new(&st, true);
    let lower = r.bounds.iter().find(|b| b.invariant == Invariant::Tc && b.side == Side::Lower).unwrap();
    assert_eq!(lower.binding, vec!["R15"]);
    let upper = r.bounds.iter().find(|b| b.invariant == Invariant::Tc && b.side == Side::Upper).unwrap();
    assert!(upper.binding.contains(&"R3".to_string()));
    let setter = st
        .log
        .iter()
        .rev()
        .find(|d| d.node == 0 && d.invariant == Invariant::Tc && d.side == Side::Upper)
        .unwrap();
    assert_eq!(setter.rule, "R3");
    assert!(setter.citation.contains("main1"));
    st.replay().unwrap();
    println!("{}", report(&st, ReportFormat::Text));
}

#[test]
fn even_projective_spaces() {
    for n in [2u64, 4, 6, 8] {
        let st = analyze(&SpaceDescriptor::RealProjective { n }).unwrap();
        assert_eq!(st.interval(0, Invariant::Tctilde), Interval::exact(2), "RP^{n}");
        st.replay().unwrap();
    }
    let st = analyze(&SpaceDescriptor::RealProjective { n: 8 }).unwrap();
    assert_eq!(st.interval(0, Invariant::Tcd), Interval::exact(15));
    assert_eq!(st.interval(0, Invariant::Tc), Interval::exact(15));
    assert_eq!(st.interval(0, Invariant::Cat), Interval::exact(8));
    let r = Report::new(&st, true);
    let upper = r.bounds.iter().find(|b| b.invariant == Invariant::Tc && b.side == Side::Upper).unwrap();
    assert!(upper.candidates.iter().any(|c| c.source == "R4" && c.value == ExtNat::Fin(17)));
    println!("{}", report(&st, ReportFormat::Text));
}

#[test]
fn skeleton_gap() {
    let st = analyze(&parse(r#"{"type":"skeleton","base":{"type":"torus","n":5},"r":2}"#)).unwrap();
    assert!(st.interval(0, Invariant::Tcd).upper <= ExtNat::Fin(4));
    let r = Report::new(&st, true);
    assert_eq!(r.gaps[0].statement, "TC^D(X) ≤ 4 < 5 ≤ TC^D(π)");
    println!("{}", report(&st, ReportFormat::Text));
}

#[test]
fn boundary_of_tetrahedron() {
    let k = SimplicialComplex::simplex_boundary(3);
    let a = AttributeSet { simply_connected: Tri::Yes, ..Default::default() };
    let st = analyze_complex(&k, a).unwrap();
    assert_eq!(st.interval(0, Invariant::Tc), Interval::exact(2));
}

#[test]
fn point_is_all_zero() {
    let st = analyze(&SpaceDescriptor::point()).unwrap();
    for inv in Invariant::ALL {
        let want = if inv == Invariant::Conn { Interval::new(ExtNat::Inf, ExtNat::Inf) } else { Interval::exact(0) };
        assert_eq!(st.interval(0, inv), want);
    }
    assert!(st.log.iter().all(|d| d.rule.starts_with("seed:")));
    let r: Report = serde_json::from_str(&report(&st, ReportFormat::Json)).unwrap();
    assert_eq!(r.invariants[&Invariant::Tc], Interval::exact(0));
}
