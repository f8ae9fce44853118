//! `HH^k(M; X) = ker d^k / im d^{k-1}` over fields and over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::hochschild::CochainComplex;
use crate::linalg::{smith_normal_form, LinalgError, Matrix};
use crate::monoidal::{Category, CategoryKind};
use crate::objects::{BimoduleObject, MonoidObject};
use crate::ring::{RingKind, RingSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree {degree} not available: complex has differentials up to {available}")]
    DegreeOutOfRange { degree: usize, available: usize },
    #[error("cohomology over {0} is not supported (composite modulus)")]
    UnsupportedRing(RingSpec),
    #[error("the strict oracle needs a free-module instance")]
    NotFreeMod,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finitely generated abelian group `R^free ⊕ ⨁ R/t_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    /// Invariant factors above 1, each dividing the next; empty over fields.
    pub torsion: Vec<BigInt>,
}

impl CohomologyGroup {
    pub fn describe(&self, ring: RingSpec) -> String {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            let base = if ring.modulus().is_some() { format!("({ring})") } else { ring.to_string() };
            parts.push(if self.free_rank == 1 {
                ring.to_string()
            } else {
                format!("{base}^{}", self.free_rank)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HH^{}: free {}", self.degree, self.free_rank)?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(ToString::to_string).collect();
            write!(f, ", torsion {}", t.join(", "))?;
        }
        Ok(())
    }
}

fn check_ring(ring: RingSpec) -> Result<(), CohomologyError> {
    if ring.supports_linear_algebra() {
        Ok(())
    } else {
        Err(CohomologyError::UnsupportedRing(ring))
    }
}

fn ring_of<T: Scalar>(c: &CochainComplex<T>) -> Result<RingSpec, CohomologyError> {
    c.differentials
        .first()
        .map(Matrix::ring)
        .ok_or(CohomologyError::DegreeOutOfRange { degree: 0, available: 0 })
}

/// `D^{k-1}`, with `D^{-1}` the zero map into `C^0`.
fn previous<T: Scalar>(c: &CochainComplex<T>, k: usize, ring: RingSpec) -> Matrix<T> {
    if k == 0 {
        Matrix::zeros(ring, c.spaces[0].rank(), 0)
    } else {
        c.differentials[k - 1].clone()
    }
}

/// `HH^k` for `0 ≤ k < k_max`.
///
/// Over a field the dimension is `nullity(D^k) - rank(D^{k-1})`, confirmed
/// against the rank of the image written in kernel coordinates. Over Z the
/// image is written in coordinates of a saturated kernel basis and the Smith
/// form of that coordinate matrix gives free rank and torsion.
pub fn cohomology_at<T: Scalar>(c: &CochainComplex<T>, k: usize) -> Result<CohomologyGroup, CohomologyError> {
    if k >= c.differentials.len() {
        return Err(CohomologyError::DegreeOutOfRange {
            degree: k,
            available: c.differentials.len(),
        });
    }
    let ring = ring_of(c)?;
    check_ring(ring)?;
    let d = &c.differentials[k];
    let prev = previous(c, k, ring);
    let kernel = d.kernel_basis()?;
    let dim_k = kernel.cols();
    let coords = if dim_k == 0 {
        if !prev.is_zero() {
            return Err(CohomologyError::Invariant(format!("image of d^{} leaves ker d^{k}", k.wrapping_sub(1))));
        }
        Matrix::zeros(ring, 0, prev.cols())
    } else {
        kernel
            .solve_full_column_rank(&prev)
            .map_err(|e| CohomologyError::Invariant(format!("image not inside kernel at degree {k}: {e}")))?
    };

    if ring.is_field() {
        let by_ranks = d.cols() - d.rank()? - prev.rank()?;
        let by_quotient = dim_k - coords.rank()?;
        if by_ranks != by_quotient {
            return Err(CohomologyError::Invariant(format!(
                "degree {k}: rank-nullity gives {by_ranks}, quotient gives {by_quotient}"
            )));
        }
        return Ok(CohomologyGroup {
            degree: k,
            free_rank: by_ranks,
            torsion: Vec::new(),
        });
    }

    let snf = smith_normal_form(&coords)?;
    let factors = snf.invariant_factors();
    Ok(CohomologyGroup {
        degree: k,
        free_rank: dim_k - factors.len(),
        torsion: factors.into_iter().filter(|t| !One::is_one(t)).collect(),
    })
}

/// `HH^k` for every `k < k_max`.
pub fn cohomology_table<T: Scalar>(c: &CochainComplex<T>) -> Result<Vec<CohomologyGroup>, CohomologyError> {
    (0..c.differentials.len()).map(|k| cohomology_at(c, k)).collect()
}

/// Basis of `ker d^0 ⊆ Hom(𝟙, X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiCentre<T> {
    pub basis: Vec<Vec<T>>,
}

pub fn quasi_centre<T: Scalar>(c: &CochainComplex<T>) -> Result<QuasiCentre<T>, CohomologyError> {
    let ring = ring_of(c)?;
    check_ring(ring)?;
    let k = c.differentials[0].kernel_basis()?;
    Ok(QuasiCentre {
        basis: (0..k.cols()).map(|j| k.column(j)).collect(),
    })
}

// ---- independent oracle --------------------------------------------------------

/// Strict Hochschild differential from raw structure constants:
/// `(df)(a_1..a_{k+1}) = a_1·f(a_2..) + Σ (-1)^i f(..a_i a_{i+1}..) + (-1)^{k+1} f(..a_k)·a_{k+1}`.
/// Cochains are indexed `p·d^k + t` with `t` the base-`d` tuple code.
fn strict_differential<T: Scalar>(
    ring: RingSpec,
    mu: &Matrix<T>,
    left: &Matrix<T>,
    right: &Matrix<T>,
    k: usize,
) -> Matrix<T> {
    let d = mu.rows();
    let e = left.rows();
    let dk = d.pow(k as u32);
    let dk1 = dk * d;
    let mut out: Matrix<T> = Matrix::zeros(ring, e * dk1, e * dk);
    let one = T::one_in(&ring);
    let sign = |n: usize| if n.is_multiple_of(2) { one.clone() } else { one.neg() };
    let mut add = |row: usize, col: usize, v: &T| {
        let cur = out.get(row, col).add(v);
        out.set(row, col, cur);
    };
    for s in 0..dk1 {
        // digits of s, most significant first
        let mut digits = vec![0usize; k + 1];
        let mut rest = s;
        for slot in digits.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        let encode = |ds: &[usize]| ds.iter().fold(0usize, |acc, &x| acc * d + x);
        // a_1 · f(a_2 … a_{k+1})
        let t = encode(&digits[1..]);
        for p in 0..e {
            for r in 0..e {
                let v = left.get(r, digits[0] * e + p);
                if !v.is_zero() {
                    add(r * dk1 + s, p * dk + t, v);
                }
            }
        }
        // f(… a_i a_{i+1} …)
        for i in 0..k {
            for cidx in 0..d {
                let coef = mu.get(cidx, digits[i] * d + digits[i + 1]);
                if coef.is_zero() {
                    continue;
                }
                let mut merged = digits[..i].to_vec();
                merged.push(cidx);
                merged.extend_from_slice(&digits[i + 2..]);
                let t = encode(&merged);
                let v = coef.mul(&sign(i + 1));
                for p in 0..e {
                    add(p * dk1 + s, p * dk + t, &v);
                }
            }
        }
        // f(a_1 … a_k) · a_{k+1}
        let t = encode(&digits[..k]);
        for p in 0..e {
            for r in 0..e {
                let v = right.get(r, p * d + digits[k]);
                if !v.is_zero() {
                    add(r * dk1 + s, p * dk + t, &v.mul(&sign(k + 1)));
                }
            }
        }
    }
    out
}

/// Hochschild cohomology of a strict algebra straight from its structure
/// constants, for degrees `0..k_max`. Free rank is `nullity(D^k) - rank(D^{k-1})`
/// and torsion is read off the Smith form of `D^{k-1}` itself. Shares no code
/// with the categorical engine beyond exact linear algebra.
pub fn bar_oracle<T: Scalar>(
    cat: &Category<T>,
    m: &MonoidObject<T>,
    x: &BimoduleObject<T>,
    k_max: usize,
) -> Result<Vec<CohomologyGroup>, CohomologyError> {
    if !matches!(cat.kind(), CategoryKind::FreeMod) {
        return Err(CohomologyError::NotFreeMod);
    }
    let ring = cat.ring();
    check_ring(ring)?;
    let (mu, left, right) = (m.mu.matrix(), x.nu.matrix(), x.omega.matrix());
    let ds: Vec<Matrix<T>> = (0..k_max).map(|k| strict_differential(ring, mu, left, right, k)).collect();
    let mut out = Vec::with_capacity(k_max);
    for k in 0..k_max {
        let nullity = ds[k].cols() - ds[k].rank()?;
        let (prev_rank, torsion) = if k == 0 {
            (0, Vec::new())
        } else if ring.kind() == RingKind::Integers {
            let snf = smith_normal_form(&ds[k - 1])?;
            let f = snf.invariant_factors();
            (f.len(), f.into_iter().filter(|t| !One::is_one(t)).collect())
        } else {
            (ds[k - 1].rank()?, Vec::new())
        };
        out.push(CohomologyGroup {
            degree: k,
            free_rank: nullity - prev_rank,
            torsion,
        });
    }
    Ok(out)
}
