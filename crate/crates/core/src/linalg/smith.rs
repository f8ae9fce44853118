use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{LinalgError, Matrix};
use crate::ring::RingSpec;

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal in Smith form.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub d: Matrix<BigInt>,
    pub u: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
}

impl SnfResult {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Violated properties for `a`, empty when this is a Smith form of `a`.
    pub fn verify(&self, a: &Matrix<BigInt>) -> Vec<String> {
        let mut bad = Vec::new();
        match self.u.mat_mul(a).and_then(|ua| ua.mat_mul(&self.v)) {
            Ok(uav) if uav == self.d => {}
            Ok(_) => bad.push("U·A·V differs from D".to_string()),
            Err(e) => bad.push(format!("U·A·V: {e}")),
        }
        for (name, m) in [("U", &self.u), ("V", &self.v)] {
            match m.determinant() {
                Ok(det) if det.abs().is_one() => {}
                Ok(det) => bad.push(format!("det {name} = {det}")),
                Err(e) => bad.push(format!("det {name}: {e}")),
            }
        }
        let d = &self.d;
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j && !d.get(i, j).is_zero() {
                    bad.push(format!("D has off-diagonal entry at ({i}, {j})"));
                }
            }
        }
        let diag: Vec<&BigInt> = (0..d.rows().min(d.cols())).map(|i| d.get(i, i)).collect();
        for w in diag.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (w[1] % w[0]).is_zero() };
            if !divides {
                bad.push(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        if diag.iter().any(|x| x.is_negative()) {
            bad.push("negative invariant factor".to_string());
        }
        let q = RingSpec::rationals();
        match a.map_ring(q, |x| BigRational::from_integer(x.clone())).rank() {
            Ok(r) if r == self.rank() => {}
            Ok(r) => bad.push(format!("rank over Q is {r}, D has {}", self.rank())),
            Err(e) => bad.push(format!("rank: {e}")),
        }
        bad
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.v {
            row.swap(i, j);
        }
    }

    /// row dst -= q * row src
    fn row_axpy(&mut self, dst: usize, q: &BigInt, src: usize) {
        for store in [&mut self.a, &mut self.u] {
            let s = store[src].clone();
            for (x, y) in store[dst].iter_mut().zip(&s) {
                if !y.is_zero() {
                    *x -= q * y;
                }
            }
        }
    }

    /// col dst -= q * col src
    fn col_axpy(&mut self, dst: usize, q: &BigInt, src: usize) {
        for store in [&mut self.a, &mut self.v] {
            for row in store.iter_mut() {
                if !row[src].is_zero() {
                    let t = q * &row[src];
                    row[dst] -= t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if self.a[i][j].is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.a[bi][bj].abs() <= self.a[i][j].abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

/// Smith normal form by gcd-driven row and column reduction, pivoting on the
/// entry of least magnitude. The identity `U·A·V = D` and the unimodularity
/// of `U`, `V` are verified exactly before returning.
pub fn smith_normal_form<T: crate::ring::Scalar>(a: &Matrix<T>) -> Result<SnfResult, LinalgError> {
    let int = match super::to_integer_matrix(a) {
        Ok(m) => m,
        Err(_) => {
            return Err(LinalgError::UnsupportedRing {
                op: "Smith normal form",
                ring: a.ring(),
            })
        }
    };
    let (rows, cols) = (int.rows(), int.cols());
    let ident = |n: usize| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect()
    };
    let mut w = Work {
        a: (0..rows).map(|i| int.row(i).to_vec()).collect(),
        u: ident(rows),
        v: ident(cols),
        rows,
        cols,
    };

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = w.min_entry(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.row_axpy(i, &q, t);
                if !w.a[i][t].is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.col_axpy(j, &q, t);
                if !w.a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot: move it into place
                let mut best = (t, t);
                for i in t..rows {
                    if !w.a[i][t].is_zero() && w.a[i][t].abs() < w.a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if !w.a[t][j].is_zero() && w.a[t][j].abs() < w.a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            // divisibility: fold an offending row into row t and repeat
            let offending = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&w.a[i][j] % &w.a[t][t]).is_zero())
            });
            match offending {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    w.row_axpy(t, &minus_one, i);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }

    let z = RingSpec::integers();
    let flat = |m: Vec<Vec<BigInt>>, r: usize, c: usize| {
        Matrix::from_vec(z, r, c, m.into_iter().flatten().collect()).expect("shape")
    };
    let res = SnfResult {
        d: flat(w.a, rows, cols),
        u: flat(w.u, rows, rows),
        v: flat(w.v, cols, cols),
    };
    verify(&int, &res)?;
    Ok(res)
}

fn verify(a: &Matrix<BigInt>, res: &SnfResult) -> Result<(), LinalgError> {
    let prod = res.u.mat_mul(a)?.mat_mul(&res.v)?;
    if prod != res.d {
        return Err(LinalgError::Invariant("U·A·V != D".into()));
    }
    for i in 0..res.d.rows() {
        for j in 0..res.d.cols() {
            if i != j && !res.d.get(i, j).is_zero() {
                return Err(LinalgError::Invariant(format!("off-diagonal entry at ({i},{j})")));
            }
        }
    }
    let diag: Vec<&BigInt> = (0..res.d.rows().min(res.d.cols())).map(|i| res.d.get(i, i)).collect();
    for w in diag.windows(2) {
        if w[0].is_negative() || w[1].is_negative() {
            return Err(LinalgError::Invariant("negative invariant factor".into()));
        }
        let ok = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (w[1] % w[0]).is_zero()
        };
        if !ok {
            return Err(LinalgError::Invariant(format!("{} does not divide {}", w[0], w[1])));
        }
    }
    for m in [&res.u, &res.v] {
        if !m.determinant()?.abs().is_one() {
            return Err(LinalgError::Invariant("transform is not unimodular".into()));
        }
    }
    Ok(())
}
