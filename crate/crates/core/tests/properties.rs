use num_bigint::BigInt;
use proptest::prelude::*;

use hochschild_core::linalg::{smith_normal_form, Matrix};
use hochschild_core::{Integer, Rational, RingSpec, Scalar, Zmod};

fn zmod(p: u64) -> impl Strategy<Value = Zmod> {
    (0..p).prop_map(move |v| Zmod::new(&BigInt::from(v), p))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn int_matrix(max_side: usize, bound: i64) -> impl Strategy<Value = Matrix<Integer>> {
    (1..=max_side, 1..=max_side).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            let data = v.into_iter().map(BigInt::from).collect();
            Matrix::from_vec(RingSpec::integers(), r, c, data).unwrap()
        })
    })
}

fn sized(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = Matrix<Integer>> {
    prop::collection::vec(-bound..=bound, rows * cols).prop_map(move |v| {
        let data = v.into_iter().map(BigInt::from).collect();
        Matrix::from_vec(RingSpec::integers(), rows, cols, data).unwrap()
    })
}

proptest! {
    #[test]
    fn zmod_is_a_commutative_ring(a in zmod(12), b in zmod(12), c in zmod(12)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn prime_zmod_inverts_nonzero(a in zmod(13)) {
        match a.inverse() {
            Some(inv) => prop_assert!(a.mul(&inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn rational_text_round_trips(a in rational()) {
        let back = Rational::parse_in(&RingSpec::rationals(), &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn zmod_text_round_trips(a in zmod(97)) {
        let ring = RingSpec::modular(97).unwrap();
        prop_assert_eq!(Zmod::parse_in(&ring, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn kronecker_mixed_product(
        a in sized(2, 3, 5), c in sized(3, 2, 5),
        b in sized(2, 2, 5), d in sized(2, 1, 5),
    ) {
        // (A ⊗ B)(C ⊗ D) = AC ⊗ BD
        let lhs = a.kronecker(&b).unwrap().mat_mul(&c.kronecker(&d).unwrap()).unwrap();
        let rhs = a.mat_mul(&c).unwrap().kronecker(&b.mat_mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_basis_has_complementary_size(m in int_matrix(5, 4)) {
        let q = m.map_ring(RingSpec::rationals(), |x| Rational::from_integer(x.clone()));
        let k = q.kernel_basis().unwrap();
        prop_assert_eq!(q.rank().unwrap() + k.cols(), q.cols());
        if k.cols() > 0 {
            prop_assert!(q.mat_mul(&k).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_is_transpose_invariant(m in int_matrix(6, 3)) {
        prop_assert_eq!(m.rank().unwrap(), m.transpose().rank().unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(a in sized(4, 4, 4), b in sized(4, 4, 4)) {
        let ab = a.mat_mul(&b).unwrap().determinant().unwrap();
        prop_assert_eq!(ab, a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn smith_form_certificate_holds(m in int_matrix(6, 9)) {
        let s = smith_normal_form(&m).unwrap();
        prop_assert!(s.verify(&m).is_empty(), "{:?}", s.verify(&m));
    }
}
