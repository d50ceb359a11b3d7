use criterion::{criterion_group, criterion_main, Criterion};
use posgroup_core::theorems::{
    verify_coverage, verify_four_blocks, verify_three_blocks, verify_two_blocks, verify_wilson_range,
};
use std::hint::black_box;

fn lemmas(c: &mut Criterion) {
    c.bench_function("two_blocks_p199_all_r", |b| {
        b.iter(|| (0..199).map(|r| verify_two_blocks(black_box(199), r).unwrap().divides).filter(|&d| d).count())
    });
    c.bench_function("three_blocks_p199_all_r", |b| {
        b.iter(|| (0..199).map(|r| verify_three_blocks(black_box(199), r).unwrap().divides).filter(|&d| d).count())
    });
    c.bench_function("four_blocks_p199", |b| b.iter(|| verify_four_blocks(black_box(199)).unwrap()));
}

fn coverage(c: &mut Criterion) {
    c.bench_function("coverage_8..=10000", |b| b.iter(|| verify_coverage(8, black_box(10_000)).unwrap()));
}

fn wilson(c: &mut Criterion) {
    c.bench_function("wilson_range_2000", |b| b.iter(|| verify_wilson_range(black_box(2000))));
}

criterion_group!(benches, lemmas, coverage, wilson);
criterion_main!(benches);
