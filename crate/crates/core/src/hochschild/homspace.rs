use crate::linalg::Matrix;
use crate::monoidal::Object;
use crate::ring::{RingSpec, Scalar};

use super::EngineError;

const ABSENT: usize = usize::MAX;

/// `Hom(M^{⊗k}, X)` with basis the elementary homs `E_{p,q}` (row `p` of `X`,
/// column `q` of `M^{⊗k}`), ordered by `p·N + q`. In a graded category only
/// grade-preserving pairs are basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    degree: usize,
    domain: Object,
    codomain: Object,
    pairs: Vec<(usize, usize)>,
    lookup: Vec<usize>,
}

impl HomSpace {
    pub(super) fn new(degree: usize, domain: Object, codomain: Object) -> Result<Self, EngineError> {
        let (rows, cols) = (codomain.rank(), domain.rank());
        let mut pairs = Vec::new();
        let mut lookup = vec![ABSENT; rows * cols];
        for p in 0..rows {
            for q in 0..cols {
                let allowed = match (codomain.grades(), domain.grades()) {
                    (Some(gx), Some(gw)) => gx[p] == gw[q],
                    _ => true,
                };
                if allowed {
                    lookup[p * cols + q] = pairs.len();
                    pairs.push((p, q));
                }
            }
        }
        Ok(HomSpace {
            degree,
            domain,
            codomain,
            pairs,
            lookup,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn domain(&self) -> &Object {
        &self.domain
    }
    pub fn codomain(&self) -> &Object {
        &self.codomain
    }
    pub fn rank(&self) -> usize {
        self.pairs.len()
    }
    /// `(p, q)` of each basis vector, in order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `E_{p,q}` for the `idx`-th basis vector.
    pub fn basis_matrix<T: Scalar>(&self, idx: usize, ring: RingSpec) -> Matrix<T> {
        let (p, q) = self.pairs[idx];
        let mut m = Matrix::zeros(ring, self.codomain.rank(), self.domain.rank());
        m.set(p, q, T::one_in(&ring));
        m
    }

    /// Coordinates of a hom matrix; entries outside the basis must vanish.
    pub fn vectorize<T: Scalar>(&self, m: &Matrix<T>) -> Result<Vec<T>, EngineError> {
        let cols = self.domain.rank();
        if m.rows() != self.codomain.rank() || m.cols() != cols {
            return Err(EngineError::Invariant(format!(
                "{}x{} matrix is not in a hom space of shape {}x{}",
                m.rows(),
                m.cols(),
                self.codomain.rank(),
                cols
            )));
        }
        let mut out = vec![T::zero_in(&m.ring()); self.rank()];
        for (flat, v) in m.data().iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            match self.lookup[flat] {
                ABSENT => {
                    return Err(EngineError::Invariant(format!(
                        "entry ({}, {}) breaks the grading",
                        flat / cols,
                        flat % cols
                    )))
                }
                idx => out[idx] = v.clone(),
            }
        }
        Ok(out)
    }

    pub fn devectorize<T: Scalar>(&self, v: &[T], ring: RingSpec) -> Matrix<T> {
        let mut m = Matrix::zeros(ring, self.codomain.rank(), self.domain.rank());
        for (&(p, q), x) in self.pairs.iter().zip(v) {
            m.set(p, q, x.clone());
        }
        m
    }
}
