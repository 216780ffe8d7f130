use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kks_core::kks::{kks_matrix, KksParams};

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("wd33_det");
    group.sample_size(10);
    for n in [10usize, 20, 30] {
        let m = kks_matrix(&KksParams::wd33(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("bareiss", n), &m, |b, m| b.iter(|| m.det_bareiss()));
        group.bench_with_input(BenchmarkId::new("modular", n), &m, |b, m| b.iter(|| m.det_modular().unwrap()));
    }
    group.finish();
}

criterion_group!(benches, determinants);
criterion_main!(benches);
