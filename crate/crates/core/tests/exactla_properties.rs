use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use torsym_core::exactla::{
    binomial, cokernel_structure, integer_kernel, snf, BinomialRow, IntMatrix,
};

fn sized_matrix(
    rows: impl Strategy<Value = usize>,
    cols: impl Strategy<Value = usize>,
) -> impl Strategy<Value = IntMatrix> {
    (rows, cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(-20i64..=20, r * c)
            .prop_map(move |v| IntMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()))
    })
}

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    sized_matrix(1usize..=5, 1usize..=5)
}

fn square_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5).prop_flat_map(|n| sized_matrix(Just(n), Just(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn snf_contract(m in matrix_strategy()) {
        let f = snf(&m);
        prop_assert_eq!(&(&f.left * &m) * &f.right, f.diagonal.clone());
        prop_assert!(f.diagonal.is_diagonal());
        prop_assert!(f.left.determinant().abs().is_one());
        prop_assert!(f.right.determinant().abs().is_one());
        let d = f.invariants();
        prop_assert!(d.iter().all(|x| !x.is_negative()));
        for w in d.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        prop_assert_eq!(f.rank(), m.rank());
    }

    #[test]
    fn kernel_is_exact_and_saturated(m in matrix_strategy()) {
        let k = integer_kernel(&m);
        prop_assert_eq!(k.cols(), m.cols() - m.rank());
        prop_assert!((&m * &k).is_zero());
        // A saturated sublattice has trivial torsion in its cokernel.
        prop_assert!(cokernel_structure(&k).is_free());
    }

    #[test]
    fn square_cokernel_order_is_abs_det(m in square_strategy()) {
        let det = m.determinant();
        let g = cokernel_structure(&m);
        if det.is_zero() {
            prop_assert!(g.free_rank() > 0);
        } else {
            prop_assert_eq!(g.free_rank(), 0);
            prop_assert_eq!(g.torsion_order(), det.abs());
        }
    }

    #[test]
    fn pascal_identity(p in 1i64..=80, q in -3i64..=83) {
        prop_assert_eq!(
            binomial(p, q).unwrap(),
            binomial(p - 1, q - 1).unwrap() + binomial(p - 1, q).unwrap()
        );
    }

    #[test]
    fn binomial_symmetry(p in 0i64..=120, q in 0i64..=120) {
        prop_assert_eq!(binomial(p, q).unwrap(), binomial(p, p - q).unwrap());
    }
}

#[test]
fn binomial_row_sums_to_power_of_two() {
    for p in 0..=90 {
        let row = BinomialRow::new(p).unwrap();
        let sum: BigInt = (0..=p).map(|q| row.get(q)).sum();
        assert_eq!(sum, BigInt::one() << p as usize);
    }
}

#[test]
fn negative_top_is_rejected() {
    assert!(binomial(-1, 0).is_err());
}
