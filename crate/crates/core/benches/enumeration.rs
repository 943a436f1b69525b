//! Benchmarks comparing the data-parallel enumeration core against the
//! sequential path (a one-thread pool; build with `--no-default-features`
//! for the rayon-free fallback).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use planepart_core::genfun::f_brute_all;
use planepart_core::parallel::{with_jobs, Jobs};
use planepart_core::verify::{run_suite, Suite, SuiteOptions};

fn worker_counts() -> Vec<usize> {
    let max = std::thread::available_parallelism().map_or(4, |n| n.get());
    if max > 1 {
        vec![1, max]
    } else {
        vec![1]
    }
}

/// The heaviest signed enumeration cell of the acceptance grid, split over
/// first-row branches. The cell is large enough that building the worker
/// pool inside the timed closure is noise.
fn bench_f_brute(crit: &mut Criterion) {
    let mut group = crit.benchmark_group("f_brute_all/n4_c5_k10");
    group.sample_size(10);
    for jobs in worker_counts() {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            b.iter(|| with_jobs(Jobs::Count(jobs), || f_brute_all(4, 5, 10)));
        });
    }
    group.finish();
}

/// A whole verification grid, split over instances.
fn bench_theorem1_suite(crit: &mut Criterion) {
    let mut group = crit.benchmark_group("verify_theorem1/n3_c3");
    group.sample_size(10);
    for jobs in worker_counts() {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            let opts = SuiteOptions {
                max_n: 3,
                max_c: 3,
                jobs: Jobs::Count(jobs),
                fast_filter: true,
            };
            b.iter(|| {
                let report = run_suite(Suite::Theorem1, &opts);
                assert!(report.all_pass());
                report.instances.len()
            });
        });
    }
    group.finish();
}

criterion_group!(benches, bench_f_brute, bench_theorem1_suite);
criterion_main!(benches);
