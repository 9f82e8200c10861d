use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use foldsig_core::generators::for_each_dense_triangulation;
use foldsig_core::{hexagon_fig1, hull_of, staircase, EnumerationOptions, LatticePoint, WronskiCoefficients, WronskiSystem};

fn signature(c: &mut Criterion) {
    let hex = hexagon_fig1();
    c.bench_function("signature/hexagon", |b| b.iter(|| black_box(&hex).signature_via_triangles().unwrap()));
    let stair = staircase(12).unwrap();
    c.bench_function("signature/staircase12", |b| b.iter(|| black_box(&stair).signature_via_triangles().unwrap()));
    c.bench_function("boundary_profile/hexagon", |b| b.iter(|| black_box(&hex).boundary_profile().unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let pts: Vec<LatticePoint> = [(0, 0), (2, 0), (2, 2), (0, 2)].map(LatticePoint::from).to_vec();
    let square = hull_of(&pts).unwrap();
    c.bench_function("enumerate/2x2", |b| {
        b.iter(|| for_each_dense_triangulation(black_box(&square), EnumerationOptions::default(), |_, _| {}).unwrap())
    });
}

fn wronski(c: &mut Criterion) {
    let t = staircase(2).unwrap();
    let sys = WronskiSystem::new(
        &t,
        WronskiCoefficients::from_integers([1, 2, -1]).unwrap(),
        WronskiCoefficients::from_integers([1, 5, 3]).unwrap(),
    )
    .unwrap();
    let mut group = c.benchmark_group("wronski");
    group.sample_size(20);
    group.bench_function("solve/staircase2", |b| b.iter(|| black_box(&sys).solve()));
    group.finish();
}

criterion_group!(benches, signature, enumeration, wronski);
criterion_main!(benches);
