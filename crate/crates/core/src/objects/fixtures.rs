//! Small algebras given by structure constants.

use num_bigint::BigInt;

use super::MonoidObject;
use crate::linalg::Matrix;
use crate::monoidal::Category;
use crate::ring::{Rational, RingSpec, Scalar};

#[derive(Debug, Clone)]
pub struct Fixture<T> {
    pub name: &'static str,
    pub cat: Category<T>,
    pub monoid: MonoidObject<T>,
}

/// `product(i, j)` lists `(k, c)` with `e_i·e_j = Σ c·e_k`.
pub fn structure_constants<T: Scalar>(
    ring: RingSpec,
    dim: usize,
    product: impl Fn(usize, usize) -> Vec<(usize, i64)>,
) -> Matrix<T> {
    let mut mu = Matrix::<T>::zeros(ring, dim, dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            for (k, c) in product(i, j) {
                let v = mu.get(k, i * dim + j).add(&T::from_integer(&ring, &BigInt::from(c)));
                mu.set(k, i * dim + j, v);
            }
        }
    }
    mu
}

fn algebra<T: Scalar>(
    name: &'static str,
    mut cat: Category<T>,
    dim: usize,
    grades: Option<Vec<u32>>,
    product: impl Fn(usize, usize) -> Vec<(usize, i64)>,
    unit: &[i64],
) -> Fixture<T> {
    let ring = cat.ring();
    let m = match grades {
        Some(g) => cat.add_graded_atom("M", g),
        None => cat.add_atom("M", dim),
    }
    .expect("fixture atom");
    let mu = structure_constants(ring, dim, product);
    let eta = unit.iter().map(|&c| T::from_integer(&ring, &BigInt::from(c))).collect();
    let monoid = MonoidObject::from_matrices(&cat, m, mu, eta).expect("fixture shapes");
    Fixture { name, cat, monoid }
}

fn free<T: Scalar>(ring: RingSpec) -> Category<T> {
    Category::free_mod(ring).expect("ring representable")
}

/// The unit monoid: rank 1, `μ` and `η` the 1×1 identity.
pub fn unit_monoid<T: Scalar>(ring: RingSpec) -> Fixture<T> {
    algebra("unit monoid", free(ring), 1, None, |_, _| vec![(0, 1)], &[1])
}

/// `R[x]/(x²)` on the basis `{1, x}`.
pub fn dual_numbers<T: Scalar>(ring: RingSpec) -> Fixture<T> {
    algebra(
        "dual numbers",
        free(ring),
        2,
        None,
        |i, j| if i + j < 2 { vec![(i + j, 1)] } else { vec![] },
        &[1, 0],
    )
}

/// 2×2 matrices on the matrix units `e_ab` at index `2a + b`.
pub fn matrix_algebra_2<T: Scalar>(ring: RingSpec) -> Fixture<T> {
    algebra(
        "2x2 matrices",
        free(ring),
        4,
        None,
        |i, j| {
            let (a, b) = (i / 2, i % 2);
            let (c, d) = (j / 2, j % 2);
            if b == c {
                vec![(2 * a + d, 1)]
            } else {
                vec![]
            }
        },
        &[1, 0, 0, 1],
    )
}

/// The group ring of `C₂` on `{e, g}`.
pub fn group_ring_c2<T: Scalar>(ring: RingSpec) -> Fixture<T> {
    algebra("group ring C2", free(ring), 2, None, |i, j| vec![((i + j) % 2, 1)], &[1, 0])
}

/// `ℚ[g]/(g²)` with `g` in odd degree, inside `Z/2`-graded vector spaces
/// whose associator carries the sign `ω(1,1,1) = -1`.
pub fn graded_dual_numbers() -> Fixture<Rational> {
    let q = RingSpec::rationals();
    let one = Rational::from_integer(BigInt::from(1));
    let mut om = vec![one; 8];
    om[7] = Rational::from_integer(BigInt::from(-1));
    let cat = Category::graded_vec(q, 2, om).expect("valid cocycle");
    algebra(
        "graded dual numbers",
        cat,
        2,
        Some(vec![0, 1]),
        |i, j| if i + j < 2 { vec![(i + j, 1)] } else { vec![] },
        &[1, 0],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Associativity straight from the structure constants, no categories.
    fn brute_associative(mu: &Matrix<Rational>) -> bool {
        let d = mu.rows();
        let mul = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero_in(&mu.ring()); d];
            for i in 0..d {
                for j in 0..d {
                    let c = x[i].mul(&y[j]);
                    if c.is_zero() {
                        continue;
                    }
                    for (k, o) in out.iter_mut().enumerate() {
                        o.add_mul(&c, mu.get(k, i * d + j));
                    }
                }
            }
            out
        };
        let basis = |i: usize| -> Vec<Rational> {
            (0..d).map(|k| Rational::from_integer(BigInt::from(i64::from(k == i)))).collect()
        };
        (0..d).all(|a| {
            (0..d).all(|b| {
                (0..d).all(|c| {
                    let (ea, eb, ec) = (basis(a), basis(b), basis(c));
                    mul(&mul(&ea, &eb), &ec) == mul(&ea, &mul(&eb, &ec))
                })
            })
        })
    }

    #[test]
    fn matrix_units_are_associative() {
        let f = matrix_algebra_2::<Rational>(RingSpec::rationals());
        assert!(brute_associative(f.monoid.mu.matrix()));
        // e_12 · e_21 = e_11
        assert_eq!(f.monoid.mu.matrix().get(0, 4 + 2), &Rational::from_integer(BigInt::from(1)));
    }

    #[test]
    fn group_ring_is_associative() {
        let f = group_ring_c2::<Rational>(RingSpec::rationals());
        assert!(brute_associative(f.monoid.mu.matrix()));
    }

    #[test]
    fn graded_fixture_has_graded_basis() {
        let f = graded_dual_numbers();
        assert_eq!(f.monoid.m.grades().unwrap(), &[0, 1]);
    }
}
