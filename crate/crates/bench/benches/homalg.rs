use criterion::{black_box, criterion_group, criterion_main, Criterion};

use spinor_core::fixtures::builtin;
use spinor_core::homalg::{cohomology_table, simplicity_verdict, DEFAULT_SEED, WINDOW};
use spinor_core::{hom_space, is_isomorphic, IdealModule, MatrixFactorization};

fn module(label: &str) -> IdealModule {
    let fx = builtin(label).unwrap();
    IdealModule::build(&fx.space, &fx.w).unwrap()
}

fn factorization(label: &str) -> MatrixFactorization {
    module(label).factorization()
}

fn hom(c: &mut Criterion) {
    let h6 = factorization("F-H6");
    let h6a = factorization("F-H6a");
    c.bench_function("hom_space_h6_end", |b| b.iter(|| hom_space(black_box(&h6), &h6).unwrap()));
    c.bench_function("hom_space_h6a_end", |b| b.iter(|| hom_space(black_box(&h6a), &h6a).unwrap()));
}

fn iso(c: &mut Criterion) {
    let h6a = factorization("F-H6a");
    let shifted = h6a.shifted();
    let qs = factorization("F-QS");
    let qs_shifted = qs.shifted();
    c.bench_function("iso_h6a_vs_shift", |b| b.iter(|| is_isomorphic(black_box(&h6a), &shifted, DEFAULT_SEED).unwrap()));
    c.bench_function("iso_qs_vs_shift", |b| b.iter(|| is_isomorphic(black_box(&qs), &qs_shifted, DEFAULT_SEED).unwrap()));
}

fn numerics(c: &mut Criterion) {
    let h6 = factorization("F-H6");
    c.bench_function("cohomology_table_h6", |b| b.iter(|| cohomology_table(black_box(&h6), WINDOW).unwrap()));
    let o5 = module("F-O5");
    c.bench_function("simplicity_o5", |b| b.iter(|| simplicity_verdict(black_box(&o5)).unwrap()));
}

criterion_group!(benches, hom, iso, numerics);
criterion_main!(benches);
