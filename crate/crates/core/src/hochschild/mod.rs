//! Hochschild cochains `C^k = Hom(M^{⊗k}, X)` as explicit matrices.
//!
//! Two independent builders produce the differentials:
//!
//! * [`Engine::build_cochain_complex`] sums the summands `χ_i` at the level
//!   of morphisms, routing every rebracketing through the generic coherence
//!   isomorphisms of the category.
//! * [`Engine::build_cosimplicial`] materializes the cofaces `δ^i` and
//!   codegeneracies `σ^i` from their literal composites (`α¹`, pair
//!   isolation, unitors) and leaves the differential as the alternating sum
//!   of coface matrices.
//!
//! [`compare_formulations`] asserts the two agree bitwise.

mod checks;
mod homspace;

use rayon::prelude::*;
use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::monoidal::{Category, MonoidalError, Morphism, Object};
use crate::objects::{check_bimodule, check_monoid_axioms, BimoduleObject, MonoidObject};
use crate::ring::Scalar;

pub use checks::{check_cosimplicial_identities, check_dd_zero, compare_formulations, realize_monotone};
pub use homspace::HomSpace;

pub const DEFAULT_RANK_CEILING: usize = 65536;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("axioms fail: {}", .0.join(", "))]
    Axioms(Vec<String>),
    #[error("resource ceiling: C^{degree} would have rank {rank}, above the ceiling {ceiling}")]
    ResourceCeiling { degree: usize, rank: String, ceiling: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest admissible `rank C^k`.
    pub rank_ceiling: usize,
    /// Refuse inputs whose monoid or bimodule axioms fail. Switched off only
    /// to build negative controls.
    pub require_axioms: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            rank_ceiling: DEFAULT_RANK_CEILING,
            require_axioms: true,
        }
    }
}

/// `C^0 → C^1 → ⋯ → C^{k_max}` with `D^k` for `k < k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplex<T> {
    pub k_max: usize,
    pub spaces: Vec<HomSpace>,
    pub differentials: Vec<Matrix<T>>,
}

/// Cofaces `cofaces[k][i]: A^k → A^{k+1}` (`i ≤ k+1`) and codegeneracies
/// `codegeneracies[k][i]: A^{k+1} → A^k` (`i ≤ k`), for `k < k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosimplicialModel<T> {
    pub k_max: usize,
    pub spaces: Vec<HomSpace>,
    pub cofaces: Vec<Vec<Matrix<T>>>,
    pub codegeneracies: Vec<Vec<Matrix<T>>>,
}

impl<T: Scalar> CosimplicialModel<T> {
    /// `Σ (-1)^i δ^i` at degree `k`.
    pub fn alternating_sum(&self, k: usize) -> Result<Matrix<T>, EngineError> {
        let row = self
            .cofaces
            .get(k)
            .ok_or_else(|| EngineError::IndexOutOfRange(format!("degree {k} not built")))?;
        alternating(row)
    }
}

fn alternating<T: Scalar>(maps: &[Matrix<T>]) -> Result<Matrix<T>, EngineError> {
    let first = maps
        .first()
        .ok_or_else(|| EngineError::Invariant("no cofaces".into()))?;
    let mut acc = Matrix::zeros(first.ring(), first.rows(), first.cols());
    let one = T::one_in(&first.ring());
    let minus = one.neg();
    for (i, m) in maps.iter().enumerate() {
        acc.add_scaled(if i % 2 == 0 { &one } else { &minus }, m)?;
    }
    Ok(acc)
}

type MorphismOp<'a, T> = dyn Fn(&Morphism<T>) -> Result<Morphism<T>, EngineError> + Sync + 'a;

/// A monoid `M` with coefficients in an `M`-bimodule `X`.
pub struct Engine<'a, T: Scalar> {
    cat: &'a Category<T>,
    m: &'a MonoidObject<T>,
    x: &'a BimoduleObject<T>,
    config: EngineConfig,
}

impl<'a, T: Scalar> Engine<'a, T> {
    pub fn new(
        cat: &'a Category<T>,
        m: &'a MonoidObject<T>,
        x: &'a BimoduleObject<T>,
        config: EngineConfig,
    ) -> Result<Self, EngineError> {
        if config.require_axioms {
            let mut report = check_monoid_axioms(cat, m)?;
            report.extend(check_bimodule(cat, m, x)?);
            if !report.all_passed() {
                return Err(EngineError::Axioms(
                    report.failed_names().into_iter().map(String::from).collect(),
                ));
            }
        }
        Ok(Engine { cat, m, x, config })
    }

    pub fn category(&self) -> &Category<T> {
        self.cat
    }

    fn w(&self, k: usize) -> Result<Object, EngineError> {
        Ok(self.cat.power(&self.m.m, k)?)
    }

    pub fn hom_space(&self, k: usize) -> Result<HomSpace, EngineError> {
        let rank = self
            .m
            .rank()
            .checked_pow(k as u32)
            .and_then(|p| p.checked_mul(self.x.rank()));
        if rank.is_none_or(|r| r > self.config.rank_ceiling) {
            return Err(EngineError::ResourceCeiling {
                degree: k,
                rank: rank.map_or_else(|| format!("{}·{}^{k}", self.x.rank(), self.m.rank()), |r| r.to_string()),
                ceiling: self.config.rank_ceiling,
            });
        }
        HomSpace::new(k, self.w(k)?, self.x.x.clone())
    }

    /// Matrix of the linear map `f ↦ op(f)` from `src` to `dst`, evaluated on
    /// each elementary hom of `src`. Columns are computed in parallel and
    /// assembled in order.
    fn evaluate(&self, src: &HomSpace, dst: &HomSpace, op: &MorphismOp<'_, T>) -> Result<Matrix<T>, EngineError> {
        let ring = self.cat.ring();
        let columns: Vec<Vec<T>> = (0..src.rank())
            .into_par_iter()
            .map(|c| {
                let f = self.cat.morphism(src.domain(), src.codomain(), src.basis_matrix(c, ring))?;
                let g = op(&f)?;
                if g.dom() != dst.domain() || g.cod() != dst.codomain() {
                    return Err(EngineError::Invariant(format!(
                        "composite lands in Hom({}, {}), expected Hom({}, {})",
                        self.cat.describe(g.dom()),
                        self.cat.describe(g.cod()),
                        self.cat.describe(dst.domain()),
                        self.cat.describe(dst.codomain()),
                    )));
                }
                dst.vectorize(g.matrix())
            })
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_columns(ring, dst.rank(), &columns))
    }

    // ---- cosimplicial formulation -------------------------------------------------

    /// `δ^i: A^k → A^{k+1}` for `0 ≤ i ≤ k+1`.
    pub fn coface(&self, k: usize, i: usize) -> Result<Matrix<T>, EngineError> {
        if i > k + 1 {
            return Err(EngineError::IndexOutOfRange(format!("coface δ^{i} at degree {k}")));
        }
        let (src, dst) = (self.hom_space(k)?, self.hom_space(k + 1)?);
        let cat = self.cat;
        let mo = &self.m.m;
        let id_m = cat.identity(mo);
        if i == 0 {
            // ν∘(1_M⊗f)∘α¹, with ρ⁻¹_M in place of α¹ at k = 0
            let pre = if k == 0 {
                cat.right_unitor_inv(mo)?
            } else {
                cat.isolate_first(mo, k + 1)?
            };
            let nu = &self.x.nu;
            return self.evaluate(&src, &dst, &|f| {
                Ok(cat.compose_chain(&[pre.clone(), cat.tensor_morphisms(&id_m, f)?, nu.clone()])?)
            });
        }
        if i == k + 1 {
            // ω∘(f⊗1_M), precomposed with λ⁻¹_M at k = 0
            let omega = &self.x.omega;
            let pre = if k == 0 { Some(cat.left_unitor_inv(mo)?) } else { None };
            return self.evaluate(&src, &dst, &|f| {
                let g = cat.compose(omega, &cat.tensor_morphisms(f, &id_m)?)?;
                Ok(match &pre {
                    Some(p) => cat.compose(&g, p)?,
                    None => g,
                })
            });
        }
        // f∘mult_i∘isolate_pair(k+1, i)
        let mult = if i == 1 {
            cat.whisker_right(&self.m.mu, mo, k - 1)?
        } else {
            let head = cat.identity(&self.w(i - 1)?);
            cat.whisker_right(&cat.tensor_morphisms(&head, &self.m.mu)?, mo, k - i)?
        };
        let pre = cat.compose(&mult, &cat.isolate_pair(mo, k + 1, i)?)?;
        self.evaluate(&src, &dst, &|f| Ok(cat.compose(f, &pre)?))
    }

    /// `σ^i: A^{k+1} → A^k` for `0 ≤ i ≤ k`: insert `η` as leaf `i`.
    pub fn codegeneracy(&self, k: usize, i: usize) -> Result<Matrix<T>, EngineError> {
        if i > k {
            return Err(EngineError::IndexOutOfRange(format!("codegeneracy σ^{i} at degree {k}")));
        }
        let (src, dst) = (self.hom_space(k + 1)?, self.hom_space(k)?);
        let cat = self.cat;
        let mo = &self.m.m;
        let id_m = cat.identity(mo);
        let eta = &self.m.eta;
        let pre = if k == 0 {
            eta.clone()
        } else if i == 0 {
            let lift = cat.tensor_morphisms(eta, &id_m)?;
            cat.compose(
                &cat.whisker_right(&lift, mo, k - 1)?,
                &cat.whisker_right(&cat.left_unitor_inv(mo)?, mo, k - 1)?,
            )?
        } else if i < k {
            let wi = self.w(i)?;
            let id_wi = cat.identity(&wi);
            let t = k - i - 1;
            cat.compose_chain(&[
                cat.whisker_right(&cat.tensor_morphisms(&id_wi, &cat.left_unitor_inv(mo)?)?, mo, t)?,
                cat.whisker_right(&cat.tensor_morphisms(&id_wi, &cat.tensor_morphisms(eta, &id_m)?)?, mo, t)?,
                cat.whisker_right(&cat.associator_inv(&wi, mo, mo)?, mo, t)?,
            ])?
        } else if k == 1 {
            cat.compose(&cat.tensor_morphisms(&id_m, eta)?, &cat.right_unitor_inv(mo)?)?
        } else {
            let head = self.w(k - 1)?;
            let id_h = cat.identity(&head);
            cat.compose_chain(&[
                cat.tensor_morphisms(&id_h, &cat.right_unitor_inv(mo)?)?,
                cat.tensor_morphisms(&id_h, &cat.tensor_morphisms(&id_m, eta)?)?,
                cat.associator_inv(&head, mo, mo)?,
            ])?
        };
        self.evaluate(&src, &dst, &|f| Ok(cat.compose(f, &pre)?))
    }

    /// `d^k = Σ_{i=0}^{k+1} (-1)^i δ^i` as a matrix sum.
    pub fn differential(&self, k: usize) -> Result<Matrix<T>, EngineError> {
        let maps = (0..=k + 1).map(|i| self.coface(k, i)).collect::<Result<Vec<_>, _>>()?;
        alternating(&maps)
    }

    pub fn build_cosimplicial(&self, k_max: usize) -> Result<CosimplicialModel<T>, EngineError> {
        let spaces = self.spaces(k_max)?;
        let mut cofaces = Vec::with_capacity(k_max);
        let mut codegeneracies = Vec::with_capacity(k_max);
        for k in 0..k_max {
            cofaces.push((0..=k + 1).map(|i| self.coface(k, i)).collect::<Result<Vec<_>, _>>()?);
            codegeneracies.push((0..=k).map(|i| self.codegeneracy(k, i)).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(CosimplicialModel {
            k_max,
            spaces,
            cofaces,
            codegeneracies,
        })
    }

    fn spaces(&self, k_max: usize) -> Result<Vec<HomSpace>, EngineError> {
        if k_max == 0 {
            return Err(EngineError::IndexOutOfRange("k_max must be at least 1".into()));
        }
        (0..=k_max).map(|k| self.hom_space(k)).collect()
    }

    // ---- cochain formulation ------------------------------------------------------

    /// The summand maps `χ_i`, each as a function on morphisms, with every
    /// bracketing change taken from the coherence isomorphisms.
    #[allow(clippy::type_complexity)]
    fn summands(&self, k: usize) -> Result<Vec<Box<MorphismOp<'_, T>>>, EngineError> {
        let cat = self.cat;
        let mo = self.m.m.clone();
        let wk = self.w(k)?;
        let wk1 = self.w(k + 1)?;
        let mut out: Vec<Box<MorphismOp<'_, T>>> = Vec::with_capacity(k + 2);

        let to_front = cat.rebracket(&wk1, &cat.tensor_objects(&mo, &wk)?)?;
        let id_m = cat.identity(&mo);
        let nu = self.x.nu.clone();
        {
            let id_m = id_m.clone();
            out.push(Box::new(move |f| {
                Ok(cat.compose_chain(&[to_front.clone(), cat.tensor_morphisms(&id_m, f)?, nu.clone()])?)
            }));
        }

        for i in 1..=k {
            // (⋯(W_{i-1}⊗(M⊗M))⊗M⋯)⊗M with k-i trailing factors
            let head = self.w(i - 1)?;
            let pair = cat.tensor_objects(&mo, &mo)?;
            let mut isolated = cat.tensor_objects(&head, &pair)?;
            for _ in 0..k - i {
                isolated = cat.tensor_objects(&isolated, &mo)?;
            }
            let mult = cat.whisker_right(
                &cat.tensor_morphisms(&cat.identity(&head), &self.m.mu)?,
                &mo,
                k - i,
            )?;
            let pre = cat.compose_chain(&[
                cat.rebracket(&wk1, &isolated)?,
                mult.clone(),
                cat.rebracket(mult.cod(), &wk)?,
            ])?;
            out.push(Box::new(move |f| Ok(cat.compose(f, &pre)?)));
        }

        let to_back = cat.rebracket(&wk1, &cat.tensor_objects(&wk, &mo)?)?;
        let omega = self.x.omega.clone();
        out.push(Box::new(move |f| {
            Ok(cat.compose_chain(&[to_back.clone(), cat.tensor_morphisms(f, &id_m)?, omega.clone()])?)
        }));
        Ok(out)
    }

    /// `D^k`, evaluating `Σ (-1)^i χ_i(f)` as a single morphism per basis hom.
    pub fn cochain_differential(&self, k: usize) -> Result<Matrix<T>, EngineError> {
        let (src, dst) = (self.hom_space(k)?, self.hom_space(k + 1)?);
        let summands = self.summands(k)?;
        let minus = T::one_in(&self.cat.ring()).neg();
        self.evaluate(&src, &dst, &|f| {
            let mut acc: Option<Morphism<T>> = None;
            for (i, chi) in summands.iter().enumerate() {
                let term = chi(f)?;
                let term = if i % 2 == 1 { term.scale(&minus) } else { term };
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term)?,
                });
            }
            acc.ok_or_else(|| EngineError::Invariant("empty differential".into()))
        })
    }

    pub fn build_cochain_complex(&self, k_max: usize) -> Result<CochainComplex<T>, EngineError> {
        let spaces = self.spaces(k_max)?;
        let differentials = (0..k_max)
            .map(|k| self.cochain_differential(k))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CochainComplex {
            k_max,
            spaces,
            differentials,
        })
    }
}
