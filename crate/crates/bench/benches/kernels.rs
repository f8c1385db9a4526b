use criterion::{criterion_group, criterion_main, Criterion};
use rcm_bench::{cubic, k5, petersen};
use rcm_core::config::{Caps, Tolerances};
use rcm_core::partition::{self, RcParams};
use rcm_core::rank2::SpinModel2;
use rcm_core::roots;
use rcm_core::subgraph_poly;
use rcm_core::{bethe, rank2};
use std::hint::black_box;

fn bench_subset_sum(c: &mut Criterion) {
    let caps = Caps::default();
    let g = petersen();
    let p = RcParams::new(2.5, 1.0).unwrap();
    c.bench_function("z_rc petersen (2^15 subsets)", |b| {
        b.iter(|| partition::z_rc(black_box(&g), p, &caps).unwrap())
    });
}

fn bench_vertex_sum(c: &mut Criterion) {
    let caps = Caps::default();
    let g = cubic(16);
    let p = RcParams::new(2.5, 1.0).unwrap();
    c.bench_function("z2 cubic n=16 (2^16 subsets)", |b| {
        b.iter(|| partition::z2(black_box(&g), p, &caps).unwrap())
    });
}

fn bench_tutte(c: &mut Criterion) {
    let caps = Caps::default();
    let g = k5();
    c.bench_function("tutte k5 (10 edges)", |b| {
        b.iter(|| partition::tutte(black_box(&g), &caps).unwrap())
    });
}

fn bench_graded_coeffs(c: &mut Criterion) {
    let caps = Caps::default();
    let tol = Tolerances::default();
    let g = k5();
    let frame = rank2::canonical_rc_frame(5.0, 3.0).unwrap();
    let t1 = rank2::find_t1(&frame, (1.0, 4.0), 4, &tol).unwrap();
    let v = frame.r_vector((1.0, 4.0), t1, 4);
    c.bench_function("f_z_coeffs k5", |b| {
        b.iter(|| subgraph_poly::f_z_coeffs(black_box(&g), &v, &caps).unwrap())
    });
}

fn bench_growth_rate(c: &mut Criterion) {
    let tol = Tolerances::default();
    c.bench_function("phi(8,5,1)", |b| {
        b.iter(|| bethe::phi(black_box(5.0), 1.0, 8, &tol).unwrap())
    });
    let m = SpinModel2::rc(5.0, 3.0).unwrap();
    c.bench_function("phi_via_bp(4,5,3)", |b| {
        b.iter(|| bethe::phi_via_bp(black_box(&m), 4, &tol))
    });
}

fn bench_roots(c: &mut Criterion) {
    let caps = Caps::default();
    let tol = Tolerances::default();
    let g = k5();
    let m = SpinModel2::rc(5.0, 3.0).unwrap();
    c.bench_function("circle_check k5 (degree 20)", |b| {
        b.iter(|| roots::circle_check(black_box(&g), &m, 4, &caps, &tol).unwrap())
    });
}

criterion_group!(
    benches,
    bench_subset_sum,
    bench_vertex_sum,
    bench_tutte,
    bench_graded_coeffs,
    bench_growth_rate,
    bench_roots
);
criterion_main!(benches);
