use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use spinor_core::exactalg::Mat;
use spinor_core::fixtures::builtin;
use spinor_core::grid::grid_case;
use spinor_core::{CliffordAlgebra, CliffordElement, IdealModule};

fn ideal_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("ideal_build");
    for n in [4, 6, 8] {
        let case = grid_case(n, n, n / 2, 0).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &case, |b, case| {
            b.iter(|| IdealModule::build(&case.space, &case.w).unwrap().factorization())
        });
    }
    group.finish();
}

fn clifford_product(c: &mut Criterion) {
    let case = grid_case(8, 6, 1, 1).unwrap();
    let alg = CliffordAlgebra::new(case.space.clone()).unwrap();
    let dense: Vec<_> = (0..alg.size()).map(|i| spinor_core::Rat::from((i % 5) as i64 - 2)).collect();
    let x = CliffordElement::from_dense(&alg, &dense);
    c.bench_function("clifford_product_n8_dense", |b| b.iter(|| black_box(&x).mul(&x).unwrap()));
}

fn identity_check(c: &mut Criterion) {
    let fx = builtin("F-H6").unwrap();
    let mf = IdealModule::build(&fx.space, &fx.w).unwrap().factorization();
    c.bench_function("identity_check_h6", |b| b.iter(|| black_box(&mf).identity_holds()));
}

fn rank_8x8(c: &mut Criterion) {
    let m = Mat::from_vec(8, 8, (0..64).map(|i| spinor_core::Rat::from(((i * 7) % 11) as i64 - 5)).collect()).unwrap();
    c.bench_function("rank_8x8", |b| b.iter(|| black_box(&m).rank()));
}

criterion_group!(benches, ideal_build, clifford_product, identity_check, rank_8x8);
criterion_main!(benches);
