//! Machine-readable reports and their table rendering.
//!
//! Everything that goes into the JSON form is a deterministic function of
//! the input file and flags. Elapsed time is only shown in tables.

use std::fmt::Write as _;

use serde::Serialize;

use hochschild_core::cohomology::CohomologyGroup;
use hochschild_core::linalg::Matrix;
use hochschild_core::report::{AxiomReport, Status};
use hochschild_core::{RingSpec, Scalar};

use crate::instance::FORMAT_VERSION;

#[derive(Debug, Serialize)]
pub struct Report {
    pub format_version: u32,
    pub command: CommandEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceSummary>,
    pub checks: Vec<Suite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexDump>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<Vec<HhRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<String>,
    pub status: &'static str,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct CommandEcho {
    pub name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct InstanceSummary {
    pub digest: String,
    pub ring: String,
    pub category: String,
    pub monoid_dim: usize,
    pub bimodule: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Suite {
    pub suite: String,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub failures: Vec<FailureEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FailureEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ComplexDump {
    pub ranks: Vec<usize>,
    pub differentials: Vec<MatrixDump>,
}

#[derive(Debug, Serialize)]
pub struct MatrixDump {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct HhRow {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub group: String,
}

impl Suite {
    pub fn new(name: impl Into<String>) -> Self {
        Suite {
            suite: name.into(),
            checked: 0,
            passed: 0,
            failed: 0,
            not_applicable: 0,
            failures: Vec::new(),
        }
    }

    pub fn pass(&mut self) {
        self.checked += 1;
        self.passed += 1;
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: Option<String>) {
        self.checked += 1;
        self.failed += 1;
        self.failures.push(FailureEntry {
            name: name.into(),
            detail,
        });
    }

    pub fn skip(&mut self) {
        self.checked += 1;
        self.not_applicable += 1;
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, detail: Option<String>) {
        if ok {
            self.pass()
        } else {
            self.fail(name, detail)
        }
    }

    pub fn absorb<T: Scalar>(&mut self, report: &AxiomReport<T>) {
        for o in &report.outcomes {
            match &o.status {
                Status::Passed => self.pass(),
                Status::NotApplicable { .. } => self.skip(),
                Status::Failed { lhs, rhs } => {
                    let witness = first_difference(lhs, rhs);
                    let detail = match (&o.detail, witness) {
                        (Some(d), Some(w)) => Some(format!("{d}; {w}")),
                        (Some(d), None) => Some(d.clone()),
                        (None, w) => w,
                    };
                    self.fail(o.name.clone(), detail)
                }
            }
        }
    }

    pub fn from_report<T: Scalar>(name: impl Into<String>, report: &AxiomReport<T>) -> Self {
        let mut s = Suite::new(name);
        s.absorb(report);
        s
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn first_difference<T: Scalar>(lhs: &Matrix<T>, rhs: &Matrix<T>) -> Option<String> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(format!(
            "shapes {}x{} and {}x{}",
            lhs.rows(),
            lhs.cols(),
            rhs.rows(),
            rhs.cols()
        ));
    }
    let cols = lhs.cols();
    lhs.data()
        .iter()
        .zip(rhs.data())
        .position(|(a, b)| a != b)
        .map(|i| {
            format!(
                "entry ({}, {}): {} vs {}",
                i / cols,
                i % cols,
                lhs.data()[i],
                rhs.data()[i]
            )
        })
}

pub fn dump<T: Scalar>(degree: usize, m: &Matrix<T>) -> MatrixDump {
    MatrixDump {
        degree,
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|i| m.row(i).iter().map(ToString::to_string).collect())
            .collect(),
    }
}

pub fn hh_row(g: &CohomologyGroup, ring: RingSpec) -> HhRow {
    HhRow {
        degree: g.degree,
        free_rank: g.free_rank,
        torsion: g.torsion.iter().map(ToString::to_string).collect(),
        group: g.describe(ring),
    }
}

impl Report {
    pub fn new(command: CommandEcho, instance: Option<InstanceSummary>) -> Self {
        Report {
            format_version: FORMAT_VERSION,
            command,
            instance,
            checks: Vec::new(),
            complex: None,
            cohomology: None,
            comparison: None,
            status: "pass",
            elapsed_ms: 0,
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(Suite::ok)
    }

    pub fn finish(&mut self, elapsed_ms: u128) {
        self.elapsed_ms = elapsed_ms;
        self.status = if self.all_checks_pass() { "pass" } else { "fail" };
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let c = &self.command;
        let _ = write!(out, "{}", c.name);
        if let Some(p) = &c.instance {
            let _ = write!(out, " {p}");
        }
        let _ = writeln!(out, " (max degree {})", c.max_degree);
        if let Some(i) = &self.instance {
            let _ = writeln!(
                out,
                "instance: ring {}, {}, monoid dim {}, bimodule {}",
                i.ring, i.category, i.monoid_dim, i.bimodule
            );
            let _ = writeln!(out, "digest:   {}", i.digest);
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out);
            let _ = writeln!(out, "{:<34} {:>7} {:>7} {:>7} {:>5}", "suite", "checked", "passed", "failed", "n/a");
            for s in &self.checks {
                let _ = writeln!(
                    out,
                    "{:<34} {:>7} {:>7} {:>7} {:>5}",
                    s.suite, s.checked, s.passed, s.failed, s.not_applicable
                );
                for f in s.failures.iter().take(10) {
                    let _ = match &f.detail {
                        Some(d) => writeln!(out, "  FAIL {} ({d})", f.name),
                        None => writeln!(out, "  FAIL {}", f.name),
                    };
                }
                if s.failures.len() > 10 {
                    let _ = writeln!(out, "  ... {} more", s.failures.len() - 10);
                }
            }
        }
        if let Some(cx) = &self.complex {
            let _ = writeln!(out);
            let ranks: Vec<String> = cx.ranks.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "ranks of C^k: {}", ranks.join(", "));
            for d in &cx.differentials {
                let _ = writeln!(out, "d^{}: {}x{}", d.degree, d.rows, d.cols);
                if d.rows * d.cols <= 256 {
                    for row in &d.entries {
                        let _ = writeln!(out, "  [{}]", row.join(" "));
                    }
                }
            }
        }
        if let Some(rows) = &self.cohomology {
            let _ = writeln!(out);
            let _ = writeln!(out, "{:<6} {:>5}  {:<12} group", "degree", "free", "torsion");
            for r in rows {
                let t = if r.torsion.is_empty() { "-".to_string() } else { r.torsion.join(",") };
                let _ = writeln!(out, "{:<6} {:>5}  {:<12} {}", r.degree, r.free_rank, t, r.group);
            }
        }
        if let Some(c) = &self.comparison {
            let _ = writeln!(out);
            let _ = writeln!(out, "{c}");
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "status: {}   elapsed: {} ms", self.status, self.elapsed_ms);
        out
    }
}
