//! Dense exact matrices.
//!
//! Storage is row-major. Products skip zero entries of the left factor,
//! which is what keeps the Hochschild builders fast: most of the matrices
//! they multiply are elementary or block-diagonal.

mod hermite;
mod smith;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::{RingSpec, Scalar};

pub use hermite::{column_hermite_form, integer_kernel, HermiteForm};
pub use smith::{smith_normal_form, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error("entry {0} does not belong to {1}")]
    ForeignEntry(String, RingSpec),
    #[error("{op} is not supported over {ring}")]
    UnsupportedRing { op: &'static str, ring: RingSpec },
    #[error("no exact solution: {0}")]
    NoSolution(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            data: vec![T::zero_in(&ring); rows * cols],
        }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        let one = T::one_in(&ring);
        for i in 0..n {
            m.data[i * n + i] = one.clone();
        }
        m
    }

    pub fn diagonal(ring: RingSpec, diag: Vec<T>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(ring, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    /// Build from row-major data, checking length and ring membership.
    pub fn from_vec(ring: RingSpec, rows: usize, cols: usize, data: Vec<T>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|x| !x.belongs_to(&ring)) {
            return Err(LinalgError::ForeignEntry(bad.to_string(), ring));
        }
        Ok(Matrix { ring, rows, cols, data })
    }

    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        Self::from_vec(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Integer-literal convenience constructor, mostly for tests and fixtures.
    pub fn from_i64(ring: RingSpec, rows: &[&[i64]]) -> Self {
        let data: Vec<Vec<T>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| T::from_integer(&ring, &BigInt::from(x))).collect())
            .collect();
        Self::from_rows(ring, data).expect("well-formed literal")
    }

    /// Columns given as vectors of equal length `rows`.
    pub fn from_columns(ring: RingSpec, rows: usize, columns: &[Vec<T>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(ring, rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[T] {
        &self.data
    }
    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Position and value of some nonzero entry.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &T)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|p| (p / self.cols, p % self.cols, &self.data[p]))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        t
    }

    fn same_ring(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(LinalgError::RingMismatch(self.ring, other.ring))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip(other, "add", |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip(other, "sub", |a, b| a.sub(b))
    }

    fn zip(&self, other: &Self, what: &str, f: impl Fn(&T, &T) -> T) -> Result<Self, LinalgError> {
        self.same_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Dimension(format!(
                "{what}: {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, c: &T, other: &Self) -> Result<(), LinalgError> {
        self.same_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Dimension("add_scaled".into()));
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.add_mul(c, b);
        }
        Ok(())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::neg).collect(),
        }
    }

    /// `self · rhs`.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.same_ring(rhs)?;
        if self.cols != rhs.rows {
            return Err(LinalgError::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.ring, self.rows, rhs.cols);
        let p = rhs.cols;
        for i in 0..self.rows {
            let out_row = &mut out.data[i * p..(i + 1) * p];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, b) in out_row.iter_mut().zip(rhs.row(k)) {
                    o.add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Result<Vec<T>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension("apply".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero_in(&self.ring);
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect())
    }

    /// Kronecker product; row `i * b.rows + r` pairs row `i` of `self` with row `r` of `b`.
    pub fn kronecker(&self, b: &Self) -> Result<Self, LinalgError> {
        self.same_ring(b)?;
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut out = Self::zeros(self.ring, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for r in 0..b.rows {
                    let base = (i * b.rows + r) * cols + j * b.cols;
                    for (c, x) in b.row(r).iter().enumerate() {
                        if !x.is_zero() {
                            out.data[base + c] = a.mul(x);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Map entries into another ring by a closure (used for Z -> Q lifts).
    pub fn map_ring<U: Scalar>(&self, ring: RingSpec, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Select the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.ring, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + jj] = self.get(i, j).clone();
            }
        }
        out
    }

    fn require_domain(&self, op: &'static str) -> Result<(), LinalgError> {
        if self.ring.supports_linear_algebra() {
            Ok(())
        } else {
            Err(LinalgError::UnsupportedRing { op, ring: self.ring })
        }
    }

    /// Rank over the fraction field (over Z: the rank over Q of the same matrix).
    pub fn rank(&self) -> Result<usize, LinalgError> {
        self.require_domain("rank")?;
        if self.ring.is_field() {
            return Ok(field_rank(self.clone()));
        }
        let q = RingSpec::rationals();
        let int = to_integer_matrix(self)?;
        Ok(field_rank(int.map_ring(q, |x| num_rational::BigRational::from_integer(x.clone()))))
    }

    /// Determinant of a square matrix (Bareiss).
    pub fn determinant(&self) -> Result<T, LinalgError> {
        self.require_domain("determinant")?;
        if self.rows != self.cols {
            return Err(LinalgError::Dimension("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        let (rank, m, sign) = bareiss(self.clone());
        if rank < n {
            return Ok(T::zero_in(&self.ring));
        }
        if n == 0 {
            return Ok(T::one_in(&self.ring));
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if sign < 0 { d.neg() } else { d })
    }

    /// Basis of `{x : self · x = 0}` as the columns of the returned matrix.
    ///
    /// Over a field the basis comes from the reduced row echelon form; over Z
    /// it is a basis of the full integer solution lattice (saturated), taken
    /// from the unimodular transform of the column Hermite form.
    pub fn kernel_basis(&self) -> Result<Self, LinalgError> {
        self.require_domain("kernel")?;
        if self.ring.is_field() {
            Ok(field_kernel(self))
        } else {
            let int = to_integer_matrix(self)?;
            let k = integer_kernel(&int);
            Ok(k.map_ring(self.ring, |x| T::from_integer(&self.ring, x)))
        }
    }

    /// Reduced row echelon form over a field, with the pivot columns.
    pub fn rref(&self) -> Result<(Self, Vec<usize>), LinalgError> {
        if !self.ring.is_field() {
            return Err(LinalgError::UnsupportedRing { op: "rref", ring: self.ring });
        }
        Ok(rref(self.clone()))
    }

    /// Solve `self · X = rhs` exactly when `self` has full column rank.
    ///
    /// Over Z the solution is computed over Q and must come out integral.
    pub fn solve_full_column_rank(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.require_domain("solve")?;
        self.same_ring(rhs)?;
        if rhs.rows != self.rows {
            return Err(LinalgError::Dimension("solve: row counts differ".into()));
        }
        if self.ring.is_field() {
            return field_solve(self, rhs);
        }
        let q = RingSpec::rationals();
        let lift = |m: &Self| -> Result<Matrix<num_rational::BigRational>, LinalgError> {
            let int = to_integer_matrix(m)?;
            Ok(int.map_ring(q, |x| num_rational::BigRational::from_integer(x.clone())))
        };
        let sol = field_solve(&lift(self)?, &lift(rhs)?)?;
        let mut data = Vec::with_capacity(sol.data.len());
        for x in &sol.data {
            if !x.is_integer() {
                return Err(LinalgError::NoSolution(format!("non-integral coordinate {x}")));
            }
            data.push(T::from_integer(&self.ring, x.numer()));
        }
        Matrix::from_vec(self.ring, sol.rows, sol.cols, data)
    }
}

/// Convert a matrix over Z (of any element type representing Z) to `BigInt`s.
pub fn to_integer_matrix<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<BigInt>, LinalgError> {
    let mut data = Vec::with_capacity(m.data.len());
    for x in &m.data {
        data.push(x.to_integer().ok_or(LinalgError::UnsupportedRing {
            op: "integer conversion",
            ring: m.ring,
        })?);
    }
    Ok(Matrix {
        ring: RingSpec::integers(),
        rows: m.rows,
        cols: m.cols,
        data,
    })
}

/// Returns (rank, eliminated matrix, row-swap sign). For square full-rank input
/// the last diagonal entry is the determinant up to that sign.
fn bareiss<T: Scalar>(mut m: Matrix<T>) -> (usize, Matrix<T>, i32) {
    let (rows, cols) = (m.rows, m.cols);
    let ring = m.ring;
    let mut prev = T::one_in(&ring);
    let mut rank = 0;
    let mut sign = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m.get(r, c).is_zero()) else {
            continue;
        };
        if p != rank {
            swap_rows(&mut m, p, rank);
            sign = -sign;
        }
        let pivot = m.get(rank, c).clone();
        for r in rank + 1..rows {
            let factor = m.get(r, c).clone();
            for j in c..cols {
                let v = pivot
                    .mul(m.get(r, j))
                    .sub(&factor.mul(m.get(rank, j)));
                let v = v.exact_div(&prev).expect("Bareiss division is exact");
                m.data[r * cols + j] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    (rank, m, sign)
}

fn swap_rows<T>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a != b {
        let cols = m.cols;
        for j in 0..cols {
            m.data.swap(a * cols + j, b * cols + j);
        }
    }
}

/// Nonzero entries of row `r` from column `from` on.
fn support<T: Scalar>(m: &Matrix<T>, r: usize, from: usize) -> Vec<(usize, T)> {
    (from..m.cols)
        .filter_map(|j| {
            let v = m.get(r, j);
            (!v.is_zero()).then(|| (j, v.clone()))
        })
        .collect()
}

/// Forward elimination over a field. Only rows with a nonzero in the pivot
/// column and only the pivot row's support are touched, which keeps sparse
/// 0/±1 differentials cheap.
fn field_rank<T: Scalar>(mut m: Matrix<T>) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        swap_rows(&mut m, p, r);
        let inv = m.get(r, c).inverse().expect("nonzero field element");
        let row: Vec<(usize, T)> = support(&m, r, c + 1)
            .into_iter()
            .map(|(j, v)| (j, v.mul(&inv)))
            .collect();
        for i in r + 1..rows {
            if m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            m.data[i * cols + c] = T::zero_in(&m.ring);
            for (j, v) in &row {
                let x = m.get(i, *j).sub(&f.mul(v));
                m.data[i * cols + j] = x;
            }
        }
        r += 1;
    }
    r
}

fn rref<T: Scalar>(mut m: Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        swap_rows(&mut m, p, r);
        let inv = m.get(r, c).inverse().expect("nonzero field element");
        let row: Vec<(usize, T)> = support(&m, r, c)
            .into_iter()
            .map(|(j, v)| (j, v.mul(&inv)))
            .collect();
        for (j, v) in &row {
            m.data[r * cols + j] = v.clone();
        }
        for i in 0..rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for (j, v) in &row {
                let x = m.get(i, *j).sub(&f.mul(v));
                m.data[i * cols + j] = x;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

fn field_kernel<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let ring = a.ring;
    let (red, pivots) = rref(a.clone());
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    let columns: Vec<Vec<T>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![T::zero_in(&ring); a.cols];
            v[f] = T::one_in(&ring);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = red.get(r, f).neg();
            }
            v
        })
        .collect();
    Matrix::from_columns(ring, a.cols, &columns)
}

fn field_solve<T: Scalar>(a: &Matrix<T>, rhs: &Matrix<T>) -> Result<Matrix<T>, LinalgError> {
    let ring = a.ring;
    let (n, m, k) = (a.rows, a.cols, rhs.cols);
    let mut aug = Matrix::zeros(ring, n, m + k);
    for i in 0..n {
        for j in 0..m {
            aug.set(i, j, a.get(i, j).clone());
        }
        for j in 0..k {
            aug.set(i, m + j, rhs.get(i, j).clone());
        }
    }
    let (red, pivots) = rref(aug);
    if pivots.len() != m || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(LinalgError::NoSolution(
            "coefficient matrix lacks full column rank or system is inconsistent".into(),
        ));
    }
    for i in m..n {
        if (0..k).any(|j| !red.get(i, m + j).is_zero()) {
            return Err(LinalgError::NoSolution("inconsistent system".into()));
        }
    }
    let mut out = Matrix::zeros(ring, m, k);
    for i in 0..m {
        for j in 0..k {
            out.set(i, j, red.get(i, m + j).clone());
        }
    }
    Ok(out)
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{} ", self.ring, self.rows, self.cols)?;
        f.debug_list().entries(self.data.chunks(self.cols.max(1)).take(self.rows)).finish()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Rational, Zmod};

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64(RingSpec::integers(), rows)
    }
    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_i64(RingSpec::rationals(), rows)
    }

    #[test]
    fn products() {
        let a = z(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(Matrix::identity(RingSpec::integers(), 3).mat_mul(&a).unwrap(), a);
        let swap = z(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            z(&[&[1, 2], &[3, 4]]).mat_mul(&swap).unwrap(),
            z(&[&[2, 1], &[4, 3]])
        );
        let a = Matrix::<BigInt>::zeros(RingSpec::integers(), 2, 0);
        let b = Matrix::<BigInt>::zeros(RingSpec::integers(), 0, 3);
        let p = a.mat_mul(&b).unwrap();
        assert_eq!((p.rows(), p.cols()), (2, 3));
        assert!(p.is_zero());
        assert!(matches!(swap.mat_mul(&b), Err(LinalgError::Dimension(_))));
        assert!(matches!(
            swap.map_ring(RingSpec::rationals(), |x| Rational::from_integer(x.clone()))
                .mat_mul(&q(&[&[1]])),
            Err(LinalgError::Dimension(_))
        ));
    }

    #[test]
    fn ring_mismatch() {
        let f5 = RingSpec::modular(5).unwrap();
        let f7 = RingSpec::modular(7).unwrap();
        let a = Matrix::<Zmod>::identity(f5, 2);
        let b = Matrix::<Zmod>::identity(f7, 2);
        assert!(matches!(a.mat_mul(&b), Err(LinalgError::RingMismatch(..))));
        assert!(matches!(a.kronecker(&b), Err(LinalgError::RingMismatch(..))));
    }

    #[test]
    fn kronecker_examples() {
        let b = z(&[&[1, 2], &[3, 4]]);
        let k = Matrix::identity(RingSpec::integers(), 2).kronecker(&b).unwrap();
        assert_eq!(
            k,
            z(&[&[1, 2, 0, 0], &[3, 4, 0, 0], &[0, 0, 1, 2], &[0, 0, 3, 4]])
        );
        assert_eq!(z(&[&[2]]).kronecker(&z(&[&[3]])).unwrap(), z(&[&[6]]));
        let row = z(&[&[1, 2]]).kronecker(&z(&[&[1], &[10]])).unwrap();
        assert_eq!(row, z(&[&[1, 2], &[10, 20]]));
    }

    #[test]
    fn kernels_over_fields() {
        let k = q(&[&[1, 1]]).kernel_basis().unwrap();
        assert_eq!(k, q(&[&[-1], &[1]]));
        let k = Matrix::<Rational>::identity(RingSpec::rationals(), 4).kernel_basis().unwrap();
        assert_eq!((k.rows(), k.cols()), (4, 0));
        let f3 = RingSpec::modular(3).unwrap();
        let a = Matrix::<Zmod>::from_i64(f3, &[&[1, 2, 0], &[2, 1, 0]]);
        let k = a.kernel_basis().unwrap();
        assert_eq!(k.cols(), 2);
        assert!(a.mat_mul(&k).unwrap().is_zero());
    }

    #[test]
    fn composite_modulus_rejected() {
        let r = RingSpec::modular(6).unwrap();
        let a = Matrix::<Zmod>::identity(r, 2);
        assert!(matches!(a.kernel_basis(), Err(LinalgError::UnsupportedRing { .. })));
        assert!(matches!(a.rank(), Err(LinalgError::UnsupportedRing { .. })));
        // plain arithmetic is still fine
        assert!(a.mat_mul(&a).unwrap().is_identity());
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::<BigInt>::identity(RingSpec::integers(), 5).rank().unwrap(), 5);
        assert_eq!(z(&[&[1, 2], &[2, 4]]).rank().unwrap(), 1);
        assert_eq!(q(&[&[0, 0], &[0, 0]]).rank().unwrap(), 0);
        assert_eq!(z(&[&[2, 4, 6], &[1, 1, 1], &[3, 5, 7]]).rank().unwrap(), 2);
    }

    #[test]
    fn sparse_rank_matches_bareiss() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let (r, c) = (rng.gen_range(1..8), rng.gen_range(1..8));
            // mostly zeros, like the differentials
            let data: Vec<BigInt> = (0..r * c)
                .map(|_| if rng.gen_bool(0.6) { BigInt::from(0) } else { BigInt::from(rng.gen_range(-3..=3)) })
                .collect();
            let a = Matrix::from_vec(RingSpec::integers(), r, c, data).unwrap();
            let qa = a.map_ring(RingSpec::rationals(), |x| Rational::from_integer(x.clone()));
            let dense = bareiss(a.clone()).0;
            assert_eq!(a.rank().unwrap(), dense);
            assert_eq!(field_rank(qa.clone()), dense);
            assert_eq!(bareiss(qa.clone()).0, dense);
            let (rref, pivots) = qa.rref().unwrap();
            assert_eq!(pivots.len(), dense);
            assert_eq!(rref.rank().unwrap(), dense);
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(z(&[&[2, 4], &[6, 8]]).determinant().unwrap(), BigInt::from(-8));
        assert_eq!(z(&[&[0, 1], &[1, 0]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(
            z(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).determinant().unwrap(),
            BigInt::from(6)
        );
        assert_eq!(z(&[&[1, 2], &[2, 4]]).determinant().unwrap(), BigInt::from(0));
    }

    #[test]
    fn solving() {
        let k = z(&[&[2, 0], &[0, 1], &[1, 1]]);
        let x = z(&[&[3], &[-2]]);
        let y = k.mat_mul(&x).unwrap();
        assert_eq!(k.solve_full_column_rank(&y).unwrap(), x);
        assert!(matches!(
            k.solve_full_column_rank(&z(&[&[1], &[0], &[0]])),
            Err(LinalgError::NoSolution(_))
        ));
    }
}
