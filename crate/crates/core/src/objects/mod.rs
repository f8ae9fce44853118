//! Monoid and bimodule objects given by explicit structure matrices, with
//! exact checkers for their defining diagrams.
//!
//! Nothing is assumed at construction beyond shapes: every axiom is a named
//! diagram in an [`AxiomReport`].

pub mod fixtures;

use thiserror::Error;

use crate::linalg::Matrix;
use crate::monoidal::{Category, MonoidalError, Morphism, Object, Word};
use crate::report::{AxiomReport, DiagramOutcome};
use crate::ring::Scalar;

pub const ASSOCIATIVE: &str = "associative relation";
pub const LEFT_UNITARITY: &str = "left unitarity relation";
pub const RIGHT_UNITARITY: &str = "right unitarity relation";
pub const LEFT_ACTION: &str = "left action";
pub const LEFT_UNIT_ACTION: &str = "left unit action";
pub const RIGHT_ACTION: &str = "right action";
pub const RIGHT_UNIT_ACTION: &str = "right unit action";
pub const BIMODULE_COMPAT: &str = "bimodule compatibility";
pub const MULT_PRESERVED: &str = "multiplication preserved";
pub const UNITS_PRESERVED: &str = "units preserved";
pub const LEFT_ACTION_PRESERVED: &str = "left action preserved";
pub const RIGHT_ACTION_PRESERVED: &str = "right action preserved";
pub const BIMODULE_MORPHISM: &str = "bimodule morphism theorem";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObjectError {
    #[error("{0} must be a single atom")]
    NotAtom(String),
    #[error("axioms fail: {}", .0.join(", "))]
    AxiomsFailed(Vec<String>),
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
}

/// `(M, μ: M⊗M → M, η: 𝟙 → M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidObject<T> {
    pub m: Object,
    pub mu: Morphism<T>,
    pub eta: Morphism<T>,
}

/// `(X, ν: M⊗X → X, ω: X⊗M → X)` over a fixed monoid `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleObject<T> {
    pub x: Object,
    pub nu: Morphism<T>,
    pub omega: Morphism<T>,
}

fn require_atom<T: Scalar>(cat: &Category<T>, o: &Object, what: &str) -> Result<(), ObjectError> {
    if matches!(**o.word(), Word::Atom(_)) {
        Ok(())
    } else {
        Err(ObjectError::NotAtom(format!("{what} {}", cat.describe(o))))
    }
}

fn require_ends<T: Scalar>(
    cat: &Category<T>,
    f: &Morphism<T>,
    dom: &Object,
    cod: &Object,
    what: &str,
) -> Result<(), ObjectError> {
    for (have, want) in [(f.dom(), dom), (f.cod(), cod)] {
        if have != want {
            return Err(MonoidalError::WordMismatch {
                expected: format!("{what} on {}", cat.describe(want)),
                found: cat.describe(have),
            }
            .into());
        }
    }
    Ok(())
}

impl<T: Scalar> MonoidObject<T> {
    pub fn new(cat: &Category<T>, m: Object, mu: Morphism<T>, eta: Morphism<T>) -> Result<Self, ObjectError> {
        require_atom(cat, &m, "monoid object")?;
        require_ends(cat, &mu, &cat.tensor_objects(&m, &m)?, &m, "μ")?;
        require_ends(cat, &eta, &cat.unit(), &m, "η")?;
        Ok(MonoidObject { m, mu, eta })
    }

    /// `mu` is `d × d²` with column `i·d + j` holding the product of basis
    /// elements `i` and `j`; `eta` is the coordinate vector of the unit.
    pub fn from_matrices(cat: &Category<T>, m: Object, mu: Matrix<T>, eta: Vec<T>) -> Result<Self, ObjectError> {
        let mm = cat.tensor_objects(&m, &m)?;
        let mu = cat.morphism(&mm, &m, mu)?;
        let eta_mat = Matrix::from_vec(cat.ring(), eta.len(), 1, eta).map_err(MonoidalError::from)?;
        let eta = cat.morphism(&cat.unit(), &m, eta_mat)?;
        Self::new(cat, m, mu, eta)
    }

    pub fn rank(&self) -> usize {
        self.m.rank()
    }

    /// Copy with one structure constant of `μ` shifted by `delta`.
    pub fn perturbed(&self, cat: &Category<T>, row: usize, col: usize, delta: &T) -> Result<Self, ObjectError> {
        let mut mat = self.mu.matrix().clone();
        let v = mat.get(row, col).add(delta);
        mat.set(row, col, v);
        Self::from_matrices(cat, self.m.clone(), mat, self.eta.matrix().column(0))
    }
}

impl<T: Scalar> BimoduleObject<T> {
    pub fn new(
        cat: &Category<T>,
        monoid: &MonoidObject<T>,
        x: Object,
        nu: Morphism<T>,
        omega: Morphism<T>,
    ) -> Result<Self, ObjectError> {
        require_atom(cat, &x, "bimodule object")?;
        require_ends(cat, &nu, &cat.tensor_objects(&monoid.m, &x)?, &x, "ν")?;
        require_ends(cat, &omega, &cat.tensor_objects(&x, &monoid.m)?, &x, "ω")?;
        Ok(BimoduleObject { x, nu, omega })
    }

    pub fn from_matrices(
        cat: &Category<T>,
        monoid: &MonoidObject<T>,
        x: Object,
        nu: Matrix<T>,
        omega: Matrix<T>,
    ) -> Result<Self, ObjectError> {
        let nu = cat.morphism(&cat.tensor_objects(&monoid.m, &x)?, &x, nu)?;
        let omega = cat.morphism(&cat.tensor_objects(&x, &monoid.m)?, &x, omega)?;
        Self::new(cat, monoid, x, nu, omega)
    }

    /// `X = M`, `ν = ω = μ`, without checking the monoid axioms.
    pub fn regular_unchecked(monoid: &MonoidObject<T>) -> Self {
        BimoduleObject {
            x: monoid.m.clone(),
            nu: monoid.mu.clone(),
            omega: monoid.mu.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.x.rank()
    }
}

/// The regular bimodule of a monoid that passes its axioms.
pub fn regular_bimodule<T: Scalar>(cat: &Category<T>, m: &MonoidObject<T>) -> Result<BimoduleObject<T>, ObjectError> {
    let report = check_monoid_axioms(cat, m)?;
    if !report.all_passed() {
        return Err(ObjectError::AxiomsFailed(
            report.failed_names().into_iter().map(String::from).collect(),
        ));
    }
    Ok(BimoduleObject::regular_unchecked(m))
}

pub fn check_monoid_axioms<T: Scalar>(cat: &Category<T>, m: &MonoidObject<T>) -> Result<AxiomReport<T>, MonoidalError> {
    let mo = &m.m;
    let id = cat.identity(mo);
    let mut report = AxiomReport::new();

    // μ∘(1⊗μ)∘α = μ∘(μ⊗1)
    let lhs = cat.compose_chain(&[
        cat.associator(mo, mo, mo)?,
        cat.tensor_morphisms(&id, &m.mu)?,
        m.mu.clone(),
    ])?;
    let rhs = cat.compose(&m.mu, &cat.tensor_morphisms(&m.mu, &id)?)?;
    report.push(DiagramOutcome::compare(ASSOCIATIVE, lhs.into_matrix(), rhs.into_matrix()));

    // μ∘(η⊗1)∘λ⁻¹ = 1 = μ∘(1⊗η)∘ρ⁻¹
    let left = cat.compose_chain(&[
        cat.left_unitor_inv(mo)?,
        cat.tensor_morphisms(&m.eta, &id)?,
        m.mu.clone(),
    ])?;
    report.push(DiagramOutcome::compare(LEFT_UNITARITY, left.into_matrix(), id.matrix().clone()));
    let right = cat.compose_chain(&[
        cat.right_unitor_inv(mo)?,
        cat.tensor_morphisms(&id, &m.eta)?,
        m.mu.clone(),
    ])?;
    report.push(DiagramOutcome::compare(RIGHT_UNITARITY, right.into_matrix(), id.matrix().clone()));
    Ok(report)
}

pub fn check_left_module<T: Scalar>(
    cat: &Category<T>,
    m: &MonoidObject<T>,
    x: &BimoduleObject<T>,
) -> Result<AxiomReport<T>, MonoidalError> {
    let (mo, xo) = (&m.m, &x.x);
    let id_m = cat.identity(mo);
    let id_x = cat.identity(xo);
    let mut report = AxiomReport::new();
    // ν∘(1⊗ν)∘α_{M,M,X} = ν∘(μ⊗1)
    let lhs = cat.compose_chain(&[
        cat.associator(mo, mo, xo)?,
        cat.tensor_morphisms(&id_m, &x.nu)?,
        x.nu.clone(),
    ])?;
    let rhs = cat.compose(&x.nu, &cat.tensor_morphisms(&m.mu, &id_x)?)?;
    report.push(DiagramOutcome::compare(LEFT_ACTION, lhs.into_matrix(), rhs.into_matrix()));
    // ν∘(η⊗1) = λ_X
    let unit = cat.compose(&x.nu, &cat.tensor_morphisms(&m.eta, &id_x)?)?;
    report.push(DiagramOutcome::compare(
        LEFT_UNIT_ACTION,
        unit.into_matrix(),
        cat.left_unitor(xo)?.into_matrix(),
    ));
    Ok(report)
}

pub fn check_right_module<T: Scalar>(
    cat: &Category<T>,
    m: &MonoidObject<T>,
    x: &BimoduleObject<T>,
) -> Result<AxiomReport<T>, MonoidalError> {
    let (mo, xo) = (&m.m, &x.x);
    let id_m = cat.identity(mo);
    let id_x = cat.identity(xo);
    let mut report = AxiomReport::new();
    // ω∘(ω⊗1) = ω∘(1⊗μ)∘α_{X,M,M}
    let lhs = cat.compose(&x.omega, &cat.tensor_morphisms(&x.omega, &id_m)?)?;
    let rhs = cat.compose_chain(&[
        cat.associator(xo, mo, mo)?,
        cat.tensor_morphisms(&id_x, &m.mu)?,
        x.omega.clone(),
    ])?;
    report.push(DiagramOutcome::compare(RIGHT_ACTION, lhs.into_matrix(), rhs.into_matrix()));
    // ω∘(1⊗η) = ρ_X
    let unit = cat.compose(&x.omega, &cat.tensor_morphisms(&id_x, &m.eta)?)?;
    report.push(DiagramOutcome::compare(
        RIGHT_UNIT_ACTION,
        unit.into_matrix(),
        cat.right_unitor(xo)?.into_matrix(),
    ));
    Ok(report)
}

/// `ν∘(1⊗ω)∘α_{M,X,M} = ω∘(ν⊗1)`.
pub fn check_bimodule_compat<T: Scalar>(
    cat: &Category<T>,
    m: &MonoidObject<T>,
    x: &BimoduleObject<T>,
) -> Result<AxiomReport<T>, MonoidalError> {
    let (mo, xo) = (&m.m, &x.x);
    let lhs = cat.compose_chain(&[
        cat.associator(mo, xo, mo)?,
        cat.tensor_morphisms(&cat.identity(mo), &x.omega)?,
        x.nu.clone(),
    ])?;
    let rhs = cat.compose(&x.omega, &cat.tensor_morphisms(&x.nu, &cat.identity(mo))?)?;
    let mut report = AxiomReport::new();
    report.push(DiagramOutcome::compare(BIMODULE_COMPAT, lhs.into_matrix(), rhs.into_matrix()));
    Ok(report)
}

/// Left, right and compatibility checks together.
pub fn check_bimodule<T: Scalar>(
    cat: &Category<T>,
    m: &MonoidObject<T>,
    x: &BimoduleObject<T>,
) -> Result<AxiomReport<T>, MonoidalError> {
    let mut report = check_left_module(cat, m, x)?;
    report.extend(check_right_module(cat, m, x)?);
    report.extend(check_bimodule_compat(cat, m, x)?);
    Ok(report)
}

pub fn check_monoid_morphism<T: Scalar>(
    cat: &Category<T>,
    f: &Morphism<T>,
    m1: &MonoidObject<T>,
    m2: &MonoidObject<T>,
) -> Result<AxiomReport<T>, MonoidalError> {
    if f.dom() != &m1.m || f.cod() != &m2.m {
        return Err(MonoidalError::Shape("monoid morphism must go M1 -> M2".into()));
    }
    let mut report = AxiomReport::new();
    let lhs = cat.compose(f, &m1.mu)?;
    let rhs = cat.compose(&m2.mu, &cat.tensor_morphisms(f, f)?)?;
    report.push(DiagramOutcome::compare(MULT_PRESERVED, lhs.into_matrix(), rhs.into_matrix()));
    let units = cat.compose(f, &m1.eta)?;
    report.push(DiagramOutcome::compare(UNITS_PRESERVED, units.into_matrix(), m2.eta.matrix().clone()));
    Ok(report)
}

/// The two action squares for `f: X → Y`.
pub fn check_module_morphism<T: Scalar>(
    cat: &Category<T>,
    f: &Morphism<T>,
    m: &MonoidObject<T>,
    x: &BimoduleObject<T>,
    y: &BimoduleObject<T>,
) -> Result<AxiomReport<T>, MonoidalError> {
    if f.dom() != &x.x || f.cod() != &y.x {
        return Err(MonoidalError::Shape("module morphism must go X -> Y".into()));
    }
    let id_m = cat.identity(&m.m);
    let mut report = AxiomReport::new();
    // f∘ν_X = ν_Y∘(1⊗f)
    let lhs = cat.compose(f, &x.nu)?;
    let rhs = cat.compose(&y.nu, &cat.tensor_morphisms(&id_m, f)?)?;
    report.push(DiagramOutcome::compare(LEFT_ACTION_PRESERVED, lhs.into_matrix(), rhs.into_matrix()));
    // f∘ω_X = ω_Y∘(f⊗1)
    let lhs = cat.compose(f, &x.omega)?;
    let rhs = cat.compose(&y.omega, &cat.tensor_morphisms(f, &id_m)?)?;
    report.push(DiagramOutcome::compare(RIGHT_ACTION_PRESERVED, lhs.into_matrix(), rhs.into_matrix()));
    Ok(report)
}

/// A morphism of left and right modules between bimodules respects the
/// bimodule structure: both routes `(M⊗X)⊗M → Y` through the compatibility
/// squares of `X` and `Y` agree. Skipped as not applicable unless `f`
/// preserves both actions and both bimodules are compatible.
pub fn verify_bimodule_morphism_theorem<T: Scalar>(
    cat: &Category<T>,
    f: &Morphism<T>,
    m: &MonoidObject<T>,
    x: &BimoduleObject<T>,
    y: &BimoduleObject<T>,
) -> Result<AxiomReport<T>, MonoidalError> {
    let mut pre = check_module_morphism(cat, f, m, x, y)?;
    pre.extend(check_bimodule_compat(cat, m, x)?);
    pre.extend(check_bimodule_compat(cat, m, y)?);
    let mut report = AxiomReport::new();
    if !pre.all_passed() {
        report.push(DiagramOutcome::not_applicable(
            BIMODULE_MORPHISM,
            format!("preconditions fail: {}", pre.failed_names().join(", ")),
        ));
        return Ok(report);
    }
    let (mo, xo) = (&m.m, &x.x);
    let id_m = cat.identity(mo);
    let lift = cat.tensor_morphisms(&cat.tensor_morphisms(&id_m, f)?, &id_m)?;
    // left face of the prism followed by f
    let via_x = cat.compose_chain(&[
        cat.associator(mo, xo, mo)?,
        cat.tensor_morphisms(&id_m, &x.omega)?,
        x.nu.clone(),
        f.clone(),
    ])?;
    // (1⊗f)⊗1 then the right face
    let via_y = cat.compose_chain(&[
        lift.clone(),
        cat.tensor_morphisms(&y.nu, &id_m)?,
        y.omega.clone(),
    ])?;
    report.push(DiagramOutcome::compare(
        BIMODULE_MORPHISM,
        via_x.into_matrix(),
        via_y.into_matrix(),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests;
