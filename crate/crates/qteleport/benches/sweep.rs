use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qteleport::sweep::{run_sweep_sequential, SweepConfig};

#[cfg(feature = "parallel")]
use qteleport::sweep::run_sweep_parallel;

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    for &trials in &[32usize, 128] {
        let config = SweepConfig {
            seed: 7,
            trials,
            dims: vec![2, 3, 4],
            tolerance: 1e-9,
        };
        group.bench_with_input(
            BenchmarkId::new("sequential", trials),
            &config,
            |b, config| b.iter(|| run_sweep_sequential(config)),
        );
        #[cfg(feature = "parallel")]
        group.bench_with_input(
            BenchmarkId::new("parallel", trials),
            &config,
            |b, config| b.iter(|| run_sweep_parallel(config)),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
