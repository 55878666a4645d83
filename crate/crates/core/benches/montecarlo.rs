use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use tritperm::experiments::{exact_zero_count, montecarlo_zero};

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("montecarlo");
    group.sample_size(10);
    let jobs = std::thread::available_parallelism().map_or(4, |n| n.get());
    for j in [1, jobs] {
        group.bench_with_input(BenchmarkId::new("n8_20k_trials", j), &j, |b, &j| {
            b.iter(|| montecarlo_zero(8, 20_000, black_box(1), j).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    group.bench_function("z3", |b| b.iter(|| exact_zero_count(black_box(3)).unwrap()));
    group.finish();
}

criterion_group!(benches, sampling, enumeration);
criterion_main!(benches);
