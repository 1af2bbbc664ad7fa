use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use threepage::bracket::{bracket_skein, bracket_statesum};
use threepage::InvariantProfile;
use threepage_bench::{tnn_diagram, torus_closure, tpq};

fn brackets(c: &mut Criterion) {
    let mut g = c.benchmark_group("bracket");
    for (p, q) in [(2, 5), (3, 4), (3, 5)] {
        let d = torus_closure(p, q);
        let id = format!("T({p},{q})");
        g.bench_with_input(BenchmarkId::new("statesum", &id), &d, |b, d| b.iter(|| bracket_statesum(black_box(d))));
        g.bench_with_input(BenchmarkId::new("skein", &id), &d, |b, d| b.iter(|| bracket_skein(black_box(d))));
    }
    let d = torus_closure(5, 5);
    g.bench_function("skein/T(5,5)", |b| b.iter(|| bracket_skein(black_box(&d))));
    g.finish();
}

fn profiles(c: &mut Criterion) {
    let d = tnn_diagram(3);
    c.bench_function("profile/tnn(3)", |b| b.iter(|| InvariantProfile::of_diagram(black_box(&d))));
    let t = tpq(2, 5);
    c.bench_function("profile/tpq(2,5)", |b| b.iter(|| InvariantProfile::of_presentation(black_box(&t))));
}

criterion_group!(benches, brackets, profiles);
criterion_main!(benches);
