use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use posgroup_core::{check_pos, spectrum_bruteforce, spectrum_closed_form, GroupSpec};
use std::hint::black_box;

fn closed_form_symmetric(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed_form_symmetric");
    for n in [10u32, 30, 60, 90] {
        let spec = GroupSpec::symmetric(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &spec, |b, spec| {
            b.iter(|| spectrum_closed_form(black_box(spec)).unwrap())
        });
    }
    group.finish();
}

fn bruteforce(c: &mut Criterion) {
    let mut group = c.benchmark_group("bruteforce");
    group.sample_size(10);
    for spec in [
        GroupSpec::symmetric(8).unwrap(),
        GroupSpec::dihedral(2000).unwrap(),
        GroupSpec::quaternion(14).unwrap(),
        GroupSpec::z2_power(4, 4).unwrap(),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(spec), &spec, |b, spec| {
            b.iter(|| spectrum_bruteforce(black_box(spec)).unwrap())
        });
    }
    group.finish();
}

fn dihedral_checks(c: &mut Criterion) {
    c.bench_function("check_pos_dihedral_2..=500", |b| {
        b.iter(|| {
            (2..=500u64)
                .filter(|&n| check_pos(&GroupSpec::dihedral(n).unwrap()).unwrap().is_pos)
                .count()
        })
    });
}

criterion_group!(benches, closed_form_symmetric, bruteforce, dihedral_checks);
criterion_main!(benches);
