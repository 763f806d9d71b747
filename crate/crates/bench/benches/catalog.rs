use criterion::{criterion_group, criterion_main, Criterion};
use patternforge::*;

fn catalog(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    group.bench_function("enumerate/6", |b| b.iter(|| enumerate_catalog(6).unwrap()));
    group.bench_function("enumerate/7", |b| b.iter(|| enumerate_catalog(7).unwrap()));
    group.finish();

    let g = Graph::new(10, (0..9).map(|i| (i, i + 1)).chain([(0, 9), (0, 5), (2, 7)])).unwrap();
    c.bench_function("canonical_form/10", |b| b.iter(|| canonical_form(&g).unwrap()));
}

criterion_group!(benches, catalog);
criterion_main!(benches);
