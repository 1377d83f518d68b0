use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use trigonal::{analyze_curve, harmonic_diagram, identify_trigonal_diagram, reduce_to_alternating, z_reduce};
use trigonal::{certify_lower_bound, TwoBridgeSpec};
use trigonal_bench::{maps, tangled_scheme};

fn curves(c: &mut Criterion) {
    let mut g = c.benchmark_group("analyze_curve");
    for (name, m) in maps() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &m, |b, m| {
            b.iter(|| analyze_curve(black_box(m)).unwrap())
        });
    }
    g.finish();
}

fn harmonic(c: &mut Criterion) {
    let mut g = c.benchmark_group("harmonic");
    for (a, b, k) in [(3, 4, 5), (3, 7, 11), (3, 11, 10)] {
        g.bench_function(format!("H({a},{b},{k})"), |bch| {
            bch.iter(|| identify_trigonal_diagram(&harmonic_diagram(a, b, k).unwrap()).unwrap())
        });
    }
    let d = harmonic_diagram(3, 7, 11).unwrap();
    g.bench_function("z_reduce H(3,7,11)", |b| b.iter(|| z_reduce(&d.x, &d.y, &d.z, &d).unwrap()));
    g.finish();
}

fn search(c: &mut Criterion) {
    let s = tangled_scheme();
    c.bench_function("reduce_to_alternating", |b| {
        b.iter(|| reduce_to_alternating(black_box(&s), 100_000).unwrap())
    });
    c.bench_function("certify C(4,3) b=10", |b| {
        b.iter(|| certify_lower_bound(&TwoBridgeSpec::Twist(4, 3), 10).unwrap())
    });
}

criterion_group!(benches, curves, harmonic, search);
criterion_main!(benches);
