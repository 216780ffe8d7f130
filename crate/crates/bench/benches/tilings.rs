use criterion::{criterion_group, criterion_main, Criterion};
use kks_core::shapes::{aztec_type1, aztec_type2};
use kks_core::tilings::{enumerate_tilings, type_histogram, DEFAULT_CELL_CAP};
use kks_core::Partition;

fn tilings(c: &mut Criterion) {
    let triangle = aztec_type1(&Partition::arithmetic(1, 1, 4));
    c.bench_function("enumerate_aztec_triangle_4", |b| b.iter(|| enumerate_tilings(&triangle).unwrap().count()));
    c.bench_function("histogram_aztec_triangle_4", |b| b.iter(|| type_histogram(&triangle, DEFAULT_CELL_CAP).unwrap()));
    let type2 = aztec_type2(&Partition::arithmetic(2, 1, 3));
    c.bench_function("histogram_type2_s2_r1_n3", |b| b.iter(|| type_histogram(&type2, DEFAULT_CELL_CAP).unwrap()));
}

criterion_group!(benches, tilings);
criterion_main!(benches);
