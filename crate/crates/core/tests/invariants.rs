use proptest::prelude::*;

use spinor_core::clifford::{reflect, CliffordAlgebra, CliffordElement, Parity};
use spinor_core::exactalg::{Mat, Rat, Vector};
use spinor_core::grid::grid_case;
use spinor_core::spinor::IdealModule;
use spinor_core::QuadraticSpace;

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn mat_strategy(max: usize) -> impl Strategy<Value = Mat> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(small(), r * c)
            .prop_map(move |d| Mat::from_vec(r, c, d.into_iter().map(Rat::from).collect()).unwrap())
    })
}

/// Symmetric Gram matrix with half-integer off-diagonal entries.
fn space_strategy(max_n: usize) -> impl Strategy<Value = QuadraticSpace> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(small(), n * n).prop_map(move |d| {
            let mut g = Mat::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    let v = if i == j { Rat::from(d[i * n + j]) } else { Rat::new(d[i * n + j], 2) };
                    g[(i, j)] = v.clone();
                    g[(j, i)] = v;
                }
            }
            QuadraticSpace::with_any_rank(g).unwrap()
        })
    })
}

fn element(alg: &std::sync::Arc<CliffordAlgebra>, coeffs: &[i64]) -> CliffordElement {
    let dense: Vec<Rat> = coeffs.iter().take(alg.size()).map(|&c| Rat::from(c)).collect();
    CliffordElement::from_dense(alg, &dense)
}

fn vector(n: usize, coeffs: &[i64]) -> Vector {
    coeffs.iter().take(n).map(|&c| Rat::from(c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_equals_transpose_rank(m in mat_strategy(6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_has_complementary_dimension(m in mat_strategy(6)) {
        let kernel = m.kernel();
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
        for k in &kernel {
            prop_assert!(m.mul_vec(k).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn solve_agrees_with_rank(m in mat_strategy(5), b in prop::collection::vec(small(), 5)) {
        let b: Vector = b.into_iter().take(m.rows()).map(Rat::from).collect();
        let augmented = m.hstack(&Mat::from_columns(m.rows(), &[b.clone()]));
        match m.solve(&b).unwrap() {
            Some(sol) => {
                prop_assert_eq!(m.mul_vec(&sol.particular), b);
                prop_assert_eq!(augmented.rank(), m.rank());
            }
            None => prop_assert!(augmented.rank() > m.rank()),
        }
    }

    #[test]
    fn clifford_product_is_associative(
        space in space_strategy(4),
        a in prop::collection::vec(small(), 16),
        b in prop::collection::vec(small(), 16),
        c in prop::collection::vec(small(), 16),
    ) {
        let alg = CliffordAlgebra::new(space).unwrap();
        let (a, b, c) = (element(&alg, &a), element(&alg, &b), element(&alg, &c));
        prop_assert!(a.mul(&b).unwrap().mul(&c).unwrap() == a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn transpose_reverses_products(
        space in space_strategy(4),
        a in prop::collection::vec(small(), 16),
        b in prop::collection::vec(small(), 16),
    ) {
        let alg = CliffordAlgebra::new(space).unwrap();
        let (a, b) = (element(&alg, &a), element(&alg, &b));
        prop_assert!(a.mul(&b).unwrap().transpose() == b.transpose().mul(&a.transpose()).unwrap());
        prop_assert!(a.transpose().transpose() == a);
    }

    #[test]
    fn vectors_square_to_q_and_grading_adds(
        space in space_strategy(4),
        v in prop::collection::vec(small(), 4),
        a in prop::collection::vec(small(), 16),
    ) {
        let n = space.dim();
        let v = vector(n, &v);
        let alg = CliffordAlgebra::new(space.clone()).unwrap();
        let ve = CliffordElement::vector(&alg, &v);
        prop_assert!(ve.mul(&ve).unwrap() == CliffordElement::scalar(&alg, space.q(&v)));
        let a = element(&alg, &a);
        for parity in [Parity::Even, Parity::Odd] {
            let part = a.grade_part(parity);
            let product = ve.mul(&part).unwrap();
            if !product.is_zero() {
                prop_assert_eq!(product.parity(), Some(parity.flip()));
            }
        }
    }

    #[test]
    fn reflections_preserve_q(
        space in space_strategy(5),
        u in prop::collection::vec(small(), 5),
        v in prop::collection::vec(small(), 5),
    ) {
        let n = space.dim();
        let (u, v) = (vector(n, &u), vector(n, &v));
        prop_assume!(!space.q(&u).is_zero());
        let r = reflect(&space, &u, &v).unwrap();
        prop_assert_eq!(space.q(&r), space.q(&v));
        // reflecting twice is the identity
        prop_assert_eq!(reflect(&space, &u, &r).unwrap(), v);
    }

    #[test]
    fn trace_is_cyclic_up_to_sign(
        space in space_strategy(4),
        a in prop::collection::vec(small(), 16),
        b in prop::collection::vec(small(), 16),
    ) {
        let alg = CliffordAlgebra::new(space).unwrap();
        let (a, b) = (element(&alg, &a), element(&alg, &b));
        for pa in [Parity::Even, Parity::Odd] {
            for pb in [Parity::Even, Parity::Odd] {
                let (x, y) = (a.grade_part(pa), b.grade_part(pb));
                let l = x.mul(&y).unwrap().trace();
                let r = y.mul(&x).unwrap().trace();
                prop_assert!(l == r || l == -r);
            }
        }
    }

    #[test]
    fn ideal_dimension_law_and_identity(n in 2usize..=5, rank_off in 0usize..4, a in 0usize..3, b in 0usize..4) {
        let rank = (2 + rank_off).min(n);
        let a = a.min(rank / 2);
        let b = b.min(n - rank);
        prop_assume!(a + b > 0);
        let case = grid_case(n, rank, a, b).unwrap();
        let module = IdealModule::build(&case.space, &case.w).unwrap();
        prop_assert_eq!(module.size(), 1 << (case.w.codim() - 1));
        prop_assert!(module.factorization().identity_holds());
        let recovered = module.factorization().intersection_with_radical();
        prop_assert!(recovered.same_as(&case.w.intersect(&case.space.radical())));
    }
}
