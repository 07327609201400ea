use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nsq_core::explore::{self, BoxModelParams, Sampler};
use nsq_core::rank::{full_rank_certificate, k_quotient_rep_search, med_decomposition};
use nsq_core::{quotient, quotient_rank_bounds, NumericalSemigroup, SearchBudget};

fn apery(c: &mut Criterion) {
    let mut group = c.benchmark_group("apery");
    for gens in [
        vec![3u64, 5],
        vec![67, 68, 70, 74, 82, 98],
        vec![1001, 1013, 1027, 1049, 1051],
    ] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{gens:?}")),
            &gens,
            |b, gens| b.iter(|| NumericalSemigroup::from_slice(black_box(gens)).unwrap()),
        );
    }
    group.finish();
}

fn quotients(c: &mut Criterion) {
    let s = NumericalSemigroup::from_slice(&[101, 117, 130, 143]).unwrap();
    c.bench_function("quotient by 7", |b| {
        b.iter(|| quotient(black_box(&s), 7).unwrap())
    });
}

fn rank(c: &mut Criterion) {
    let budget = SearchBudget::default();
    let full = NumericalSemigroup::from_slice(&[9, 10, 12]).unwrap();
    c.bench_function("full rank certificate", |b| {
        b.iter(|| full_rank_certificate(black_box(&full)).unwrap())
    });
    let two = NumericalSemigroup::from_slice(&[11, 13, 15, 17]).unwrap();
    c.bench_function("2-quotient search", |b| {
        b.iter(|| k_quotient_rep_search(black_box(&two), 2, &budget).unwrap())
    });
    let med = NumericalSemigroup::from_slice(&[5, 12, 13, 14, 16]).unwrap();
    c.bench_function("med decomposition", |b| {
        b.iter(|| med_decomposition(black_box(&med), &budget).unwrap())
    });
    c.bench_function("rank bounds", |b| {
        b.iter(|| quotient_rank_bounds(black_box(&med), &budget))
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("genus counts");
    group.sample_size(10);
    for g in [12u32, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| {
            b.iter(|| explore::genus_counts(g).unwrap())
        });
    }
    group.finish();
}

fn box_model(c: &mut Criterion) {
    let params = BoxModelParams {
        n: 4,
        bound: 50,
        trials: 200,
        seed: 1,
        coprime_only: false,
    };
    c.bench_function("box model 200 trials", |b| {
        b.iter(|| explore::box_experiment(&params, &[50], Sampler::Random).unwrap())
    });
}

criterion_group!(benches, apery, quotients, rank, enumeration, box_model);
criterion_main!(benches);
