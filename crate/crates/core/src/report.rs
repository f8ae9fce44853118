//! Outcomes of diagram checks.

use std::fmt;

use crate::linalg::Matrix;
use crate::ring::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status<T> {
    Passed,
    /// The two composites that should agree, as exact matrices.
    Failed { lhs: Matrix<T>, rhs: Matrix<T> },
    NotApplicable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramOutcome<T> {
    pub name: String,
    pub status: Status<T>,
    /// Extra context for failures, e.g. the degree and a witness entry.
    pub detail: Option<String>,
}

impl<T: Scalar> DiagramOutcome<T> {
    pub fn compare(name: impl Into<String>, lhs: Matrix<T>, rhs: Matrix<T>) -> Self {
        let status = if lhs == rhs {
            Status::Passed
        } else {
            Status::Failed { lhs, rhs }
        };
        DiagramOutcome {
            name: name.into(),
            status,
            detail: None,
        }
    }

    pub fn not_applicable(name: impl Into<String>, reason: impl Into<String>) -> Self {
        DiagramOutcome {
            name: name.into(),
            status: Status::NotApplicable { reason: reason.into() },
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Passed)
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Failed { .. })
    }
}

/// A list of named diagram checks. Empty failure list iff every checked
/// diagram commutes exactly; not-applicable entries are neither.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport<T> {
    pub outcomes: Vec<DiagramOutcome<T>>,
}

impl<T> Default for AxiomReport<T> {
    fn default() -> Self {
        AxiomReport { outcomes: Vec::new() }
    }
}

impl<T: Scalar> AxiomReport<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, outcome: DiagramOutcome<T>) {
        self.outcomes.push(outcome);
    }

    pub fn extend(&mut self, other: AxiomReport<T>) {
        self.outcomes.extend(other.outcomes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &DiagramOutcome<T>> {
        self.outcomes.iter().filter(|o| o.failed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.failures().map(|o| o.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&DiagramOutcome<T>> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

impl<T: Scalar> fmt::Display for AxiomReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let tag = match &o.status {
                Status::Passed => "pass",
                Status::Failed { .. } => "FAIL",
                Status::NotApplicable { .. } => "n/a",
            };
            write!(f, "{tag:>4}  {}", o.name)?;
            if let Some(d) = &o.detail {
                write!(f, " ({d})")?;
            }
            if let Status::NotApplicable { reason } = &o.status {
                write!(f, " ({reason})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
