use crate::linalg::Matrix;
use crate::report::{AxiomReport, DiagramOutcome};
use crate::ring::Scalar;
use crate::simplex::{factorize, MonotoneMap, Step};

use super::{CochainComplex, CosimplicialModel, EngineError};

pub const DD_ZERO: &str = "d∘d = 0";
pub const COFACE_COFACE: &str = "coface-coface";
pub const CODEGEN_CODEGEN: &str = "codegeneracy-codegeneracy";
pub const MIXED_BELOW: &str = "mixed (i < j)";
pub const MIXED_IDENTITY: &str = "mixed (identity)";
pub const MIXED_ABOVE: &str = "mixed (i > j+1)";
pub const FORMULATIONS: &str = "differential equals alternating coface sum";

fn product<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    a.mat_mul(b).expect("model shapes chain")
}

/// `D^{k+1}·D^k = 0` at every built degree; failures carry a witness entry.
pub fn check_dd_zero<T: Scalar>(c: &CochainComplex<T>) -> AxiomReport<T> {
    let mut report = AxiomReport::new();
    for k in 0..c.differentials.len().saturating_sub(1) {
        let dd = product(&c.differentials[k + 1], &c.differentials[k]);
        let zero = Matrix::zeros(dd.ring(), dd.rows(), dd.cols());
        let witness = dd
            .first_nonzero()
            .map(|(r, col, v)| format!("degree {k}: entry ({r},{col}) = {v}"));
        let mut outcome = DiagramOutcome::compare(DD_ZERO, dd, zero);
        outcome = match witness {
            Some(w) => outcome.with_detail(w),
            None => outcome.with_detail(format!("degree {k}")),
        };
        report.push(outcome);
    }
    report
}

/// Every instance of the cosimplicial identities inside the built range:
///
/// * `δ^j δ^i = δ^i δ^{j-1}` for `i < j`
/// * `σ^j σ^i = σ^i σ^{j+1}` for `i ≤ j`
/// * `σ^j δ^i` equals `δ^i σ^{j-1}` for `i < j`, the identity for
///   `i ∈ {j, j+1}`, and `δ^{i-1} σ^j` for `i > j+1`.
pub fn check_cosimplicial_identities<T: Scalar>(a: &CosimplicialModel<T>) -> AxiomReport<T> {
    let mut report = AxiomReport::new();
    let cof = &a.cofaces;
    let cg = &a.codegeneracies;
    let n = a.k_max;
    for k in 0..n.saturating_sub(1) {
        for j in 0..=k + 2 {
            for i in 0..j {
                report.push(
                    DiagramOutcome::compare(
                        COFACE_COFACE,
                        product(&cof[k + 1][j], &cof[k][i]),
                        product(&cof[k + 1][i], &cof[k][j - 1]),
                    )
                    .with_detail(format!("k={k}, i={i}, j={j}")),
                );
            }
        }
        for j in 0..=k {
            for i in 0..=j {
                report.push(
                    DiagramOutcome::compare(
                        CODEGEN_CODEGEN,
                        product(&cg[k][j], &cg[k + 1][i]),
                        product(&cg[k][i], &cg[k + 1][j + 1]),
                    )
                    .with_detail(format!("k={k}, i={i}, j={j}")),
                );
            }
        }
    }
    for k in 0..n {
        for j in 0..=k {
            for i in 0..=k + 1 {
                let lhs = product(&cg[k][j], &cof[k][i]);
                let detail = format!("k={k}, i={i}, j={j}");
                let outcome = if i < j {
                    DiagramOutcome::compare(MIXED_BELOW, lhs, product(&cof[k - 1][i], &cg[k - 1][j - 1]))
                } else if i == j || i == j + 1 {
                    let id = Matrix::identity(lhs.ring(), lhs.rows());
                    DiagramOutcome::compare(MIXED_IDENTITY, lhs, id)
                } else {
                    DiagramOutcome::compare(MIXED_ABOVE, lhs, product(&cof[k - 1][i - 1], &cg[k - 1][j]))
                };
                report.push(outcome.with_detail(detail));
            }
        }
    }
    report
}

/// `D^k` from the cochain builder against `Σ (-1)^i δ^i` from the
/// cosimplicial builder, bitwise, at every common degree.
pub fn compare_formulations<T: Scalar>(
    c: &CochainComplex<T>,
    a: &CosimplicialModel<T>,
) -> Result<AxiomReport<T>, EngineError> {
    let mut report = AxiomReport::new();
    if c.k_max != a.k_max {
        return Err(EngineError::IndexOutOfRange(format!(
            "complex built to {}, model to {}",
            c.k_max, a.k_max
        )));
    }
    for (k, d) in c.differentials.iter().enumerate() {
        report.push(
            DiagramOutcome::compare(FORMULATIONS, d.clone(), a.alternating_sum(k)?)
                .with_detail(format!("degree {k}")),
        );
    }
    Ok(report)
}

/// `A(f)` for a monotone map, composed along its normal form:
/// `A(ε_i: [k-1] → [k]) = δ^i` on `A^{k-1}` and `A(ζ_i: [k+1] → [k]) = σ^i`
/// on `A^{k+1}`.
pub fn realize_monotone<T: Scalar>(a: &CosimplicialModel<T>, f: &MonotoneMap) -> Result<Matrix<T>, EngineError> {
    if f.source() > a.k_max || f.target() > a.k_max {
        return Err(EngineError::IndexOutOfRange(format!(
            "{f} leaves the built range [0, {}]",
            a.k_max
        )));
    }
    let ring = a.cofaces[0][0].ring();
    let mut acc = Matrix::identity(ring, a.spaces[f.source()].rank());
    for step in factorize(f).steps() {
        let m = match step {
            Step::Face(i, k) => &a.cofaces[k - 1][i],
            Step::Degeneracy(i, k) => &a.codegeneracies[k][i],
        };
        acc = m.mat_mul(&acc)?;
    }
    Ok(acc)
}
