//! Instance files: JSON with scalar strings, loaded into a category, a
//! monoid and a bimodule without assuming any axiom.

use std::path::Path;

use serde::Deserialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use hochschild_core::linalg::Matrix;
use hochschild_core::monoidal::Category;
use hochschild_core::objects::{BimoduleObject, MonoidObject};
use hochschild_core::ring::parse_scalar;
use hochschild_core::{RingSpec, Scalar};

use crate::Failure;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub ring: Value,
    pub category: CategoryField,
    pub monoid: MonoidField,
    #[serde(default)]
    pub bimodule: Option<BimoduleField>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CategoryField {
    FreeMod,
    GradedVec { group_order: u32, cocycle: Vec<String> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidField {
    pub dim: usize,
    pub mu: Vec<Vec<String>>,
    pub eta: Vec<String>,
    #[serde(default)]
    pub grades: Option<Vec<u32>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleField {
    pub dim: usize,
    pub nu: Vec<Vec<String>>,
    pub omega: Vec<Vec<String>>,
    #[serde(default)]
    pub grades: Option<Vec<u32>>,
}

/// Raw file plus what can be read off it before choosing a scalar type.
pub struct Source {
    pub digest: String,
    pub ring: RingSpec,
    pub file: InstanceFile,
}

pub struct Loaded<T: Scalar> {
    pub cat: Category<T>,
    pub monoid: MonoidObject<T>,
    pub bimodule: BimoduleObject<T>,
    /// `None` when the bimodule is the regular one.
    pub bimodule_dim: Option<usize>,
}

pub fn read(path: &Path) -> Result<Source, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let digest = format!("sha256:{}", hex::encode(Sha256::digest(&bytes)));
    let file: InstanceFile = serde_json::from_slice(&bytes)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    if file.format_version != FORMAT_VERSION {
        return Err(Failure::parse(format!(
            "format_version: expected {FORMAT_VERSION}, found {}",
            file.format_version
        )));
    }
    let ring = parse_ring(&file.ring)?;
    Ok(Source {
        digest,
        ring,
        file,
    })
}

fn parse_ring(v: &Value) -> Result<RingSpec, Failure> {
    let bad = || Failure::parse(format!("ring: expected \"Z\", \"Q\" or {{\"Zmod\": n}}, found {v}"));
    match v {
        Value::String(s) if s == "Z" => Ok(RingSpec::integers()),
        Value::String(s) if s == "Q" => Ok(RingSpec::rationals()),
        Value::Object(map) if map.len() == 1 => {
            let n = map.get("Zmod").and_then(Value::as_u64).ok_or_else(bad)?;
            RingSpec::modular(n).map_err(|e| Failure::parse(format!("ring: {e}")))
        }
        _ => Err(bad()),
    }
}

fn scalar<T: Scalar>(ring: &RingSpec, field: &str, text: &str) -> Result<T, Failure> {
    parse_scalar(ring, text).map_err(|e| Failure::parse(format!("{field}: {e}")))
}

fn matrix<T: Scalar>(
    ring: RingSpec,
    field: &str,
    rows: &[Vec<String>],
    want_rows: usize,
    want_cols: usize,
) -> Result<Matrix<T>, Failure> {
    if rows.len() != want_rows {
        return Err(Failure::parse(format!(
            "{field}: expected {want_rows} rows, found {}",
            rows.len()
        )));
    }
    let mut data = Vec::with_capacity(want_rows * want_cols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != want_cols {
            return Err(Failure::parse(format!(
                "{field}[{i}]: expected {want_cols} columns, found {}",
                row.len()
            )));
        }
        for (j, s) in row.iter().enumerate() {
            data.push(scalar(&ring, &format!("{field}[{i}][{j}]"), s)?);
        }
    }
    Matrix::from_vec(ring, want_rows, want_cols, data).map_err(|e| Failure::internal(e.to_string()))
}

fn grades_for(
    field: &str,
    grades: &Option<Vec<u32>>,
    dim: usize,
    order: Option<u32>,
) -> Result<Option<Vec<u32>>, Failure> {
    match (order, grades) {
        (None, None) => Ok(None),
        (None, Some(_)) => Err(Failure::parse(format!("{field}: grades are only allowed for graded_vec"))),
        (Some(_), None) => Err(Failure::parse(format!("{field}: graded_vec requires grades"))),
        (Some(n), Some(g)) => {
            if g.len() != dim {
                return Err(Failure::parse(format!("{field}: expected {dim} grades, found {}", g.len())));
            }
            if let Some(bad) = g.iter().find(|&&x| x >= n) {
                return Err(Failure::parse(format!("{field}: grade {bad} is not below {n}")));
            }
            Ok(Some(g.clone()))
        }
    }
}

pub fn build<T: Scalar>(src: &Source) -> Result<Loaded<T>, Failure> {
    let ring = src.ring;
    let f = &src.file;
    let shape = |e: &dyn std::fmt::Display| Failure::parse(e.to_string());
    let (mut cat, order) = match &f.category {
        CategoryField::FreeMod => (Category::free_mod(ring).map_err(|e| shape(&e))?, None),
        CategoryField::GradedVec { group_order, cocycle } => {
            let n = *group_order as usize;
            if cocycle.len() != n * n * n {
                return Err(Failure::parse(format!(
                    "category.cocycle: expected {} entries, found {}",
                    n * n * n,
                    cocycle.len()
                )));
            }
            let vals = cocycle
                .iter()
                .enumerate()
                .map(|(i, s)| scalar(&ring, &format!("category.cocycle[{i}]"), s))
                .collect::<Result<Vec<T>, _>>()?;
            let cat = Category::graded_vec(ring, *group_order, vals)
                .map_err(|e| Failure::parse(format!("category: {e}")))?;
            (cat, Some(*group_order))
        }
    };

    let d = f.monoid.dim;
    if d == 0 {
        return Err(Failure::parse("monoid.dim: must be positive"));
    }
    let m = match grades_for("monoid.grades", &f.monoid.grades, d, order)? {
        Some(g) => cat.add_graded_atom("M", g),
        None => cat.add_atom("M", d),
    }
    .map_err(|e| Failure::parse(format!("monoid: {e}")))?;
    let mu = matrix(ring, "monoid.mu", &f.monoid.mu, d, d * d)?;
    if f.monoid.eta.len() != d {
        return Err(Failure::parse(format!(
            "monoid.eta: expected {d} entries, found {}",
            f.monoid.eta.len()
        )));
    }
    let eta = f
        .monoid
        .eta
        .iter()
        .enumerate()
        .map(|(i, s)| scalar(&ring, &format!("monoid.eta[{i}]"), s))
        .collect::<Result<Vec<T>, _>>()?;
    let monoid = MonoidObject::from_matrices(&cat, m, mu, eta).map_err(|e| Failure::parse(format!("monoid: {e}")))?;

    let (bimodule, bimodule_dim) = match &f.bimodule {
        None => (BimoduleObject::regular_unchecked(&monoid), None),
        Some(b) => {
            let e = b.dim;
            if e == 0 {
                return Err(Failure::parse("bimodule.dim: must be positive"));
            }
            let x = match grades_for("bimodule.grades", &b.grades, e, order)? {
                Some(g) => cat.add_graded_atom("X", g),
                None => cat.add_atom("X", e),
            }
            .map_err(|err| Failure::parse(format!("bimodule: {err}")))?;
            let nu = matrix(ring, "bimodule.nu", &b.nu, e, d * e)?;
            let omega = matrix(ring, "bimodule.omega", &b.omega, e, e * d)?;
            let bm = BimoduleObject::from_matrices(&cat, &monoid, x, nu, omega)
                .map_err(|err| Failure::parse(format!("bimodule: {err}")))?;
            (bm, Some(e))
        }
    };
    Ok(Loaded {
        cat,
        monoid,
        bimodule,
        bimodule_dim,
    })
}

impl Source {
    pub fn category_name(&self) -> String {
        match &self.file.category {
            CategoryField::FreeMod => "free_mod".into(),
            CategoryField::GradedVec { group_order, .. } => format!("graded_vec(Z/{group_order})"),
        }
    }
}
