use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use threepage::search::{census, enumerate, SearchConstraints};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for n in [6, 7, 8] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate(&SearchConstraints::new(n)).unwrap().len())
        });
    }
    g.bench_function("9/three-components", |b| {
        b.iter(|| enumerate(&SearchConstraints::new(9).components(3)).unwrap().len())
    });
    g.finish();
}

fn censuses(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("6", |b| b.iter(|| census(6).unwrap().len()));
    g.finish();
}

criterion_group!(benches, enumeration, censuses);
criterion_main!(benches);
