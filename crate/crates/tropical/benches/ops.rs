//! Compares the sequential and rayon matrix-product kernels.
//!
//! Run with `cargo bench -p tropical`; build with `--no-default-features`
//! to check that the sequential-only configuration still compiles.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical::{Matrix, TropicalValue};

fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.random_ratio(1, 8) {
            TropicalValue::Epsilon
        } else {
            TropicalValue::Finite(rng.random_range(-1_000..=1_000))
        }
    })
}

fn bench_mat_mul(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut group = c.benchmark_group("mat_mul");
    for &n in &[32usize, 64, 128, 256] {
        let a = random_matrix(n, n, &mut rng);
        let b = random_matrix(n, n, &mut rng);
        group.throughput(Throughput::Elements((n * n * n) as u64));
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |bench, _| {
            bench.iter(|| a.mul_sequential(&b).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |bench, _| {
            bench.iter(|| a.mul_parallel(&b).unwrap())
        });
    }
    group.finish();
}

fn bench_mat_pow(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut group = c.benchmark_group("mat_pow");
    for &n in &[32usize, 96] {
        let a = random_matrix(n, n, &mut rng);
        group.bench_with_input(BenchmarkId::new("k9", n), &n, |bench, _| {
            bench.iter(|| a.pow(9).unwrap())
        });
    }
    group.finish();
}

fn bench_evolve(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let transition = random_matrix(64, 64, &mut rng);
    let initial = random_matrix(64, 1, &mut rng);
    let problem = tropical::RecurrenceProblem::new(transition, initial, 50).unwrap();
    c.bench_function("evolve_horizon50_n64", |bench| {
        bench.iter(|| problem.evolve().unwrap())
    });
    c.bench_function("trajectory_horizon50_n64", |bench| {
        bench.iter(|| problem.trajectory().unwrap())
    });
}

criterion_group!(benches, bench_mat_mul, bench_mat_pow, bench_evolve);
criterion_main!(benches);
