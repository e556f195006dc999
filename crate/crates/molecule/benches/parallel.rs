//! Parallel vs. sequential timings for the three data-parallel kernels:
//! the full center sweep, batch address location, and escape-time rendering.
//!
//! Built with the default `parallel` feature the pairs compare rayon against
//! the plain-iterator path; without it both sides run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use molecule::{
    all_centers_sweep, all_centers_sweep_seq, enumerate_addresses, escape_map, escape_map_seq,
    locate_addresses, locate_addresses_seq, PathFollowConfig, PlotSpec, SweepConfig,
};

fn sweep(c: &mut Criterion) {
    let cfg = SweepConfig::default();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    // n = 8 sits below the parallel degree threshold, so its pair coincides;
    // n = 10 (degree 512) exercises the rayon path
    for n in [8u64, 10] {
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| all_centers_sweep(n, &cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| all_centers_sweep_seq(n, &cfg).unwrap())
        });
    }
    group.finish();
}

fn locate(c: &mut Criterion) {
    let cfg = PathFollowConfig::default();
    let addresses = enumerate_addresses(8).unwrap();
    let mut group = c.benchmark_group("locate");
    group.sample_size(10);
    group.bench_function("parallel/n8", |b| {
        b.iter(|| locate_addresses(&addresses, &cfg).unwrap())
    });
    group.bench_function("sequential/n8", |b| {
        b.iter(|| locate_addresses_seq(&addresses, &cfg).unwrap())
    });
    group.finish();
}

fn render(c: &mut Criterion) {
    let spec = PlotSpec::default();
    let mut group = c.benchmark_group("render");
    group.sample_size(10);
    group.bench_function("parallel/800x600", |b| b.iter(|| escape_map(&spec)));
    group.bench_function("sequential/800x600", |b| b.iter(|| escape_map_seq(&spec)));
    group.finish();
}

criterion_group!(benches, sweep, locate, render);
criterion_main!(benches);
