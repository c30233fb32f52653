use criterion::{black_box, criterion_group, criterion_main, Criterion};

use twistcube_bench::fixture;
use twistcube_core::characters::generalized_demazure_character;
use twistcube_core::tableaux::enumerate_tableaux;

fn bench_lattice_points(c: &mut Criterion) {
    let small = fixture("A2", &[1, 2, 1], &[2, 1, 1]);
    let large = fixture("A3", &[1, 2, 3, 1, 2, 1], &[2, 1, 1, 1, 1, 1]);
    c.bench_function("lattice_points/A2_121_211", |b| {
        b.iter(|| black_box(&small).lattice_points())
    });
    c.bench_function("lattice_points/A3_123121_211111", |b| {
        b.iter(|| black_box(&large).lattice_points())
    });
}

fn bench_vertices(c: &mut Criterion) {
    let g2 = fixture("G2", &[1, 2, 1, 2], &[2, 1, 2, 1]);
    let a3 = fixture("A3", &[1, 2, 3, 1, 2], &[1, 1, 1, 1, 1]);
    c.bench_function("vertices/G2_1212_2121", |b| {
        b.iter(|| black_box(&g2).vertices())
    });
    c.bench_function("vertices/A3_12312_11111", |b| {
        b.iter(|| black_box(&a3).vertices())
    });
}

fn bench_tableaux(c: &mut Criterion) {
    let b2 = fixture("B2", &[1, 2, 1, 2], &[2, 1, 1, 1]);
    c.bench_function("tableaux/B2_1212_2111", |b| {
        b.iter(|| enumerate_tableaux(black_box(&b2)))
    });
}

fn bench_character(c: &mut Criterion) {
    let a3 = fixture("A3", &[1, 2, 3, 1, 2, 1], &[2, 1, 1, 1, 1, 1]);
    c.bench_function("demazure_character/A3_123121_211111", |b| {
        b.iter(|| generalized_demazure_character(black_box(&a3)))
    });
}

criterion_group!(
    benches,
    bench_lattice_points,
    bench_vertices,
    bench_tableaux,
    bench_character
);
criterion_main!(benches);
