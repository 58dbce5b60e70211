use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use tcbound_bench::descriptor;
use tcbound_core::bounds::{analyze, report, ReportFormat};

fn engine(c: &mut Criterion) {
    let mut g = c.benchmark_group("analyze");
    for name in ["t2xs2", "rp8", "skeleton_t5"] {
        let d = descriptor(name);
        g.bench_function(name, |b| b.iter(|| analyze(black_box(&d)).unwrap()));
    }
    g.finish();

    let st = analyze(&descriptor("skeleton_t5")).unwrap();
    c.bench_function("replay skeleton_t5", |b| b.iter(|| st.replay().unwrap()));
    c.bench_function("json report skeleton_t5", |b| {
        b.iter(|| report(black_box(&st), ReportFormat::Json))
    });
}

criterion_group!(benches, engine);
criterion_main!(benches);
