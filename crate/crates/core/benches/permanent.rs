//! Serial bitsliced walk vs. the chunked fork-join, plus the integer
//! reference for scale. Build with `--no-default-features` to see the
//! sequential fallback of the chunked path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use tritperm::experiments::TritSampler;
use tritperm::{perm_mod3_fast, perm_mod3_parallel, perm_ryser_reference};

fn engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("permanent");
    group.sample_size(10);
    let jobs = std::thread::available_parallelism().map_or(4, |n| n.get());
    for n in [16usize, 20, 22] {
        let a = TritSampler::new(0xbeef, n as u64).matrix(n);
        group.bench_with_input(BenchmarkId::new("mod3_serial", n), &a, |b, a| {
            b.iter(|| perm_mod3_fast(black_box(a)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new(format!("mod3_chunked_x{jobs}"), n), &a, |b, a| {
            b.iter(|| perm_mod3_parallel(black_box(a), jobs).unwrap())
        });
        if n <= 16 {
            group.bench_with_input(BenchmarkId::new("ryser_reference", n), &a, |b, a| {
                b.iter(|| perm_ryser_reference(black_box(a)).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, engines);
criterion_main!(benches);
