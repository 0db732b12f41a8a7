//! Randomized structural properties: exact linear algebra invariants on
//! small rational matrices, validator behavior on classical algebra
//! families, and theorems (δ² = 0, soundness of strict induction) that
//! must hold on arbitrary inputs of the right kind.

use avleib_core::{
    delta, induced_algebra, induced_representation, partial_avg, phi, self_representation,
    validate_averaging, validate_leibniz, validate_representation, AveragingOperator, Convention,
    InducedMode, LeibnizAlgebra, Matrix, MultilinearMap, Rat,
};
use num_traits::Zero;
use proptest::prelude::*;

fn qi(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn matrix_strategy(max_dim: usize) -> impl Strategy<Value = Matrix<Rat>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(rat_strategy(), r * c).prop_map(move |entries| {
            let mut m = Matrix::zero(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, entries[i * c + j].clone());
                }
            }
            m
        })
    })
}

fn vector_strategy(len: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec(rat_strategy(), len)
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix_strategy(4)) {
        let (r1, pivots1) = m.rref();
        let (r2, pivots2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(pivots1, pivots2);
    }

    #[test]
    fn rank_respects_transpose_and_bounds(m in matrix_strategy(4)) {
        let rank = m.rank();
        prop_assert!(rank <= m.rows().min(m.cols()));
        prop_assert_eq!(rank, m.transpose().rank());
    }

    #[test]
    fn kernel_vectors_are_exact_solutions(m in matrix_strategy(4)) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len(), m.cols() - m.rank());
        for v in &kernel {
            prop_assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_round_trips_on_images(m in matrix_strategy(4)) {
        let x: Vec<Rat> = (0..m.cols()).map(|j| qi(j as i64 % 3 - 1)).collect();
        let b = m.apply(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("b is in the image by construction");
        prop_assert_eq!(m.apply(&y).unwrap(), b);
    }

    #[test]
    fn solve_refuses_exactly_off_the_image(m in matrix_strategy(4), b in vector_strategy(4)) {
        prop_assume!(m.rows() == 4);
        let mut augmented = Matrix::zero(m.rows(), m.cols() + 1);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                augmented.set(i, j, m.get(i, j).clone());
            }
            augmented.set(i, m.cols(), b[i].clone());
        }
        let solvable = augmented.rank() == m.rank();
        match m.solve(&b).unwrap() {
            Some(y) => {
                prop_assert!(solvable);
                prop_assert_eq!(m.apply(&y).unwrap(), b);
            }
            None => prop_assert!(!solvable),
        }
    }
}

// ---- classical algebra families ----------------------------------------

#[derive(Debug, Clone)]
enum Family {
    Abelian(usize),
    Solvable2(Rat),
    Heisenberg(Rat),
    So3(Rat),
}

fn family_algebra(f: &Family) -> LeibnizAlgebra<Rat> {
    match f {
        Family::Abelian(n) => LeibnizAlgebra::zero(*n),
        // [e1,e2] = λe1 antisymmetrized: the 2-dim non-abelian Lie algebra.
        Family::Solvable2(lambda) => LeibnizAlgebra::from_entries(
            2,
            &[(0, 1, 0, lambda.clone()), (1, 0, 0, -lambda.clone())],
        )
        .unwrap(),
        // [e1,e2] = λe3 antisymmetrized, e3 central.
        Family::Heisenberg(lambda) => LeibnizAlgebra::from_entries(
            3,
            &[(0, 1, 2, lambda.clone()), (1, 0, 2, -lambda.clone())],
        )
        .unwrap(),
        // The cyclic cross-product relations, scaled.
        Family::So3(lambda) => LeibnizAlgebra::from_entries(
            3,
            &[
                (0, 1, 2, lambda.clone()),
                (1, 0, 2, -lambda.clone()),
                (1, 2, 0, lambda.clone()),
                (2, 1, 0, -lambda.clone()),
                (2, 0, 1, lambda.clone()),
                (0, 2, 1, -lambda.clone()),
            ],
        )
        .unwrap(),
    }
}

fn family_strategy() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1usize..=4).prop_map(Family::Abelian),
        rat_strategy().prop_map(Family::Solvable2),
        rat_strategy().prop_map(Family::Heisenberg),
        rat_strategy().prop_map(Family::So3),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lie_families_pass_both_conventions(f in family_strategy()) {
        let a = family_algebra(&f);
        prop_assert!(validate_leibniz(&a, Convention::Left).pass(), "{f:?} left");
        prop_assert!(validate_leibniz(&a, Convention::Right).pass(), "{f:?} right");
    }

    #[test]
    fn scalar_multiples_of_the_identity_are_averaging(
        f in family_strategy(),
        lambda in rat_strategy(),
    ) {
        let a = family_algebra(&f);
        let entries = vec![lambda; a.dim()];
        let t = AveragingOperator::diagonal(&entries);
        prop_assert!(validate_averaging(&a, &t).unwrap().pass());
    }

    #[test]
    fn strict_induction_preserves_validity(
        f in family_strategy(),
        lambda in rat_strategy(),
    ) {
        let a = family_algebra(&f);
        let t = AveragingOperator::diagonal(&vec![lambda; a.dim()]);
        let induced = induced_algebra(&a, &t, InducedMode::Strict).unwrap();
        prop_assert!(validate_leibniz(&induced, Convention::Left).pass());
        let rep = self_representation(&a, Some(&t));
        let irep = induced_representation(&rep, &t, InducedMode::Strict).unwrap();
        prop_assert!(validate_representation(&induced, &irep).unwrap().pass());
    }
}

// ---- cochain-level theorems ---------------------------------------------

/// Fills a cochain of the requested shape from a coefficient pool,
/// cycling when the pool is shorter than the coefficient count.
fn fill_cochain(arity: usize, gdim: usize, mdim: usize, pool: &[Rat]) -> MultilinearMap<Rat> {
    let mut f = MultilinearMap::zero(arity, gdim, mdim).unwrap();
    let mut next = 0usize;
    for tuple in avleib_core::basis_tuples(gdim, arity) {
        for p in 0..mdim {
            f.set(&tuple, p, pool[next % pool.len()].clone()).unwrap();
            next += 1;
        }
    }
    f
}

fn cochain_strategy(
    arity: usize,
    gdim: usize,
    mdim: usize,
) -> impl Strategy<Value = MultilinearMap<Rat>> {
    let slots = gdim.pow(arity as u32) * mdim;
    proptest::collection::vec(rat_strategy(), slots)
        .prop_map(move |coeffs| fill_cochain(arity, gdim, mdim, &coeffs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn delta_squares_to_zero(
        f in family_strategy(),
        arity in 0usize..=2,
        pool in proptest::collection::vec(rat_strategy(), 8..=24),
    ) {
        let a = family_algebra(&f);
        let rep = self_representation(&a, None);
        let cochain = fill_cochain(arity, a.dim(), a.dim(), &pool);
        let dd = delta(&a, &rep, &delta(&a, &rep, &cochain).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn strict_operator_differential_squares_to_zero(
        f in family_strategy(),
        lambda in rat_strategy(),
        arity in 0usize..=2,
        pool in proptest::collection::vec(rat_strategy(), 8..=24),
    ) {
        let a = family_algebra(&f);
        let t = AveragingOperator::diagonal(&vec![lambda; a.dim()]);
        let rep = self_representation(&a, Some(&t));
        let cochain = fill_cochain(arity, a.dim(), a.dim(), &pool);
        for mode in [InducedMode::Strict, InducedMode::Sum] {
            let once = partial_avg(&a, &rep, &t, mode, &cochain).unwrap();
            let twice = partial_avg(&a, &rep, &t, mode, &once).unwrap();
            prop_assert!(twice.is_zero(), "{f:?} mode {mode:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn differentials_are_linear(
        f in cochain_strategy(2, 2, 2),
        g in cochain_strategy(2, 2, 2),
        c in rat_strategy(),
    ) {
        let a = family_algebra(&Family::Solvable2(qi(1)));
        let t = AveragingOperator::diagonal(&[qi(0), qi(1)]);
        let rep = self_representation(&a, Some(&t));
        let combo = f.scale(&c).add(&g).unwrap();

        let lhs = delta(&a, &rep, &combo).unwrap();
        let rhs = delta(&a, &rep, &f).unwrap().scale(&c).add(&delta(&a, &rep, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);

        let lhs = phi(&rep, &t, &combo).unwrap();
        let rhs = phi(&rep, &t, &f).unwrap().scale(&c).add(&phi(&rep, &t, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);

        let lhs = partial_avg(&a, &rep, &t, InducedMode::Sum, &combo).unwrap();
        let rhs = partial_avg(&a, &rep, &t, InducedMode::Sum, &f)
            .unwrap()
            .scale(&c)
            .add(&partial_avg(&a, &rep, &t, InducedMode::Sum, &g).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
