use monoidrep_linalg::{cyclo::cyc_arith, CycNum, CycOp, ExactMatrix, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn cyc() -> impl Strategy<Value = CycNum> {
    (
        prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]),
        prop::collection::vec((0i64..12, -5i64..6, 1i64..4), 1..4),
    )
        .prop_map(|(n, terms)| {
            let t: Vec<(i64, Rational)> = terms
                .into_iter()
                .map(|(k, a, b)| (k, Rational::new(BigInt::from(a), BigInt::from(b))))
                .collect();
            CycNum::from_exponents(n, &t)
        })
}

fn small_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-2i64..3, r * c).prop_map(move |v| {
            ExactMatrix::new(r, c, v.into_iter().map(CycNum::from_int).collect())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        if !b.is_zero() {
            let q = cyc_arith(&a, &b, CycOp::Div).unwrap();
            prop_assert_eq!(&q * &b, a.clone());
        } else {
            prop_assert!(cyc_arith(&a, &b, CycOp::Div).is_err());
        }
    }

    #[test]
    fn conductor_unification_is_associative(a in cyc(), b in cyc(), c in cyc()) {
        let l = &(&a + &b) - &c;
        let r = &a + &(&b - &c);
        prop_assert_eq!(&l, &r);
        prop_assert_eq!(l.conj(), r.conj());
    }

    #[test]
    fn rank_nullity(m in small_matrix()) {
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.len(), m.ncols());
        for v in &ns {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn det_multiplicative(a in prop::collection::vec(-3i64..4, 9), b in prop::collection::vec(-3i64..4, 9)) {
        let a = ExactMatrix::new(3, 3, a.into_iter().map(CycNum::from_int).collect());
        let b = ExactMatrix::new(3, 3, b.into_iter().map(CycNum::from_int).collect());
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        prop_assert_eq!(a.is_invertible(), !a.det().is_zero());
    }
}
