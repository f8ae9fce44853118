use super::fixtures::*;
use super::*;
use crate::ring::{Integer, Rational, RingSpec};
use num_bigint::BigInt;

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[test]
fn fixtures_pass_monoid_and_regular_checks() {
    fn run<T: Scalar>(f: Fixture<T>) {
        let r = check_monoid_axioms(&f.cat, &f.monoid).unwrap();
        assert!(r.all_passed(), "{}: {r}", f.name);
        let x = regular_bimodule(&f.cat, &f.monoid).unwrap();
        let b = check_bimodule(&f.cat, &f.monoid, &x).unwrap();
        assert!(b.all_passed(), "{}: {b}", f.name);
        assert_eq!(b.outcomes.len(), 5);
    }
    run(unit_monoid::<Integer>(RingSpec::integers()));
    run(dual_numbers::<Rational>(RingSpec::rationals()));
    run(dual_numbers::<Integer>(RingSpec::integers()));
    run(matrix_algebra_2::<Rational>(RingSpec::rationals()));
    run(group_ring_c2::<Integer>(RingSpec::integers()));
    run(graded_dual_numbers());
}

#[test]
fn perturbed_mu_names_the_associative_relation() {
    let f = matrix_algebra_2::<Rational>(RingSpec::rationals());
    let bad = f.monoid.perturbed(&f.cat, 0, 0, &q(1)).unwrap();
    let r = check_monoid_axioms(&f.cat, &bad).unwrap();
    assert!(r.failed_names().contains(&ASSOCIATIVE));
    match &r.get(ASSOCIATIVE).unwrap().status {
        crate::report::Status::Failed { lhs, rhs } => assert_ne!(lhs, rhs),
        other => panic!("{other:?}"),
    }
    assert!(matches!(regular_bimodule(&f.cat, &bad), Err(ObjectError::AxiomsFailed(_))));
}

#[test]
fn column_space_is_a_left_module() {
    let mut f = matrix_algebra_2::<Rational>(RingSpec::rationals());
    let x = f.cat.add_atom("X", 2).unwrap();
    // e_ab ⊗ v_c ↦ δ_bc v_a, column index i·2 + c
    let mut nu = Matrix::zeros(RingSpec::rationals(), 2, 8);
    for i in 0..4 {
        for c in 0..2 {
            if i % 2 == c {
                nu.set(i / 2, i * 2 + c, q(1));
            }
        }
    }
    let omega = Matrix::zeros(RingSpec::rationals(), 2, 8);
    let xb = BimoduleObject::from_matrices(&f.cat, &f.monoid, x, nu, omega).unwrap();
    assert!(check_left_module(&f.cat, &f.monoid, &xb).unwrap().all_passed());
    let right = check_right_module(&f.cat, &f.monoid, &xb).unwrap();
    assert_eq!(right.failed_names(), vec![RIGHT_UNIT_ACTION]);
}

#[test]
fn scaled_right_action_breaks_unit_action() {
    let f = dual_numbers::<Rational>(RingSpec::rationals());
    let mut x = BimoduleObject::regular_unchecked(&f.monoid);
    x.omega = x.omega.scale(&q(2));
    let r = check_right_module(&f.cat, &f.monoid, &x).unwrap();
    assert!(r.failed_names().iter().any(|n| n.contains("unit action")));
}

#[test]
fn swapped_actions_rejected_at_shape_stage() {
    let mut f = matrix_algebra_2::<Rational>(RingSpec::rationals());
    let x = f.cat.add_atom("X", 2).unwrap();
    let mx = f.cat.tensor_objects(&f.monoid.m, &x).unwrap();
    let xm = f.cat.tensor_objects(&x, &f.monoid.m).unwrap();
    let nu = f.cat.zero(&mx, &x);
    let omega = f.cat.zero(&xm, &x);
    assert!(BimoduleObject::new(&f.cat, &f.monoid, x.clone(), nu.clone(), omega.clone()).is_ok());
    let err = BimoduleObject::new(&f.cat, &f.monoid, x, omega, nu).unwrap_err();
    assert!(matches!(err, ObjectError::Monoidal(MonoidalError::WordMismatch { .. })));
}

#[test]
fn monoid_must_be_an_atom() {
    let f = dual_numbers::<Rational>(RingSpec::rationals());
    let mm = f.cat.tensor_objects(&f.monoid.m, &f.monoid.m).unwrap();
    let mmmm = f.cat.tensor_objects(&mm, &mm).unwrap();
    let mu = f.cat.zero(&mmmm, &mm);
    let eta = f.cat.zero(&f.cat.unit(), &mm);
    assert!(matches!(
        MonoidObject::new(&f.cat, mm, mu, eta),
        Err(ObjectError::NotAtom(_))
    ));
}

#[test]
fn monoid_morphisms() {
    let mut f = matrix_algebra_2::<Rational>(RingSpec::rationals());
    let id = f.cat.identity(&f.monoid.m);
    assert!(check_monoid_morphism(&f.cat, &id, &f.monoid, &f.monoid).unwrap().all_passed());

    // ℚ → M₂(ℚ), 1 ↦ I
    let k = f.cat.add_atom("K", 1).unwrap();
    let kk = f.cat.tensor_objects(&k, &k).unwrap();
    let base = MonoidObject::new(
        &f.cat,
        k.clone(),
        f.cat.morphism(&kk, &k, Matrix::identity(RingSpec::rationals(), 1)).unwrap(),
        f.cat.morphism(&f.cat.unit(), &k, Matrix::identity(RingSpec::rationals(), 1)).unwrap(),
    )
    .unwrap();
    let incl = f
        .cat
        .morphism(&k, &f.monoid.m, Matrix::from_vec(RingSpec::rationals(), 4, 1, vec![q(1), q(0), q(0), q(1)]).unwrap())
        .unwrap();
    assert!(check_monoid_morphism(&f.cat, &incl, &base, &f.monoid).unwrap().all_passed());

    let zero = f.cat.zero(&k, &f.monoid.m);
    let r = check_monoid_morphism(&f.cat, &zero, &base, &f.monoid).unwrap();
    assert_eq!(r.failed_names(), vec![UNITS_PRESERVED]);
}

#[test]
fn bimodule_morphism_theorem() {
    let f = matrix_algebra_2::<Rational>(RingSpec::rationals());
    let x = regular_bimodule(&f.cat, &f.monoid).unwrap();
    let id = f.cat.identity(&x.x);
    let r = verify_bimodule_morphism_theorem(&f.cat, &id, &f.monoid, &x, &x).unwrap();
    assert!(r.get(BIMODULE_MORPHISM).unwrap().passed());

    // right multiplication by the central element 3·I
    let centre = {
        let mut m = Matrix::zeros(RingSpec::rationals(), 4, 4);
        for i in 0..4 {
            m.set(i, i, q(3));
        }
        m
    };
    let g = f.cat.morphism(&x.x, &x.x, centre).unwrap();
    let r = verify_bimodule_morphism_theorem(&f.cat, &g, &f.monoid, &x, &x).unwrap();
    assert!(r.get(BIMODULE_MORPHISM).unwrap().passed());

    // left multiplication by e_11 is a right-module map but not a left one
    let mut left_e11 = Matrix::zeros(RingSpec::rationals(), 4, 4);
    for j in 0..4 {
        if j / 2 == 0 {
            left_e11.set(j, j, q(1));
        }
    }
    let h = f.cat.morphism(&x.x, &x.x, left_e11).unwrap();
    let pre = check_module_morphism(&f.cat, &h, &f.monoid, &x, &x).unwrap();
    assert_eq!(pre.failed_names(), vec![LEFT_ACTION_PRESERVED]);
    let r = verify_bimodule_morphism_theorem(&f.cat, &h, &f.monoid, &x, &x).unwrap();
    assert!(matches!(
        r.get(BIMODULE_MORPHISM).unwrap().status,
        crate::report::Status::NotApplicable { .. }
    ));
    assert!(r.all_passed());
}
