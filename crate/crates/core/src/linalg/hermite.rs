use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Matrix;
use crate::ring::RingSpec;

/// Column-style Hermite normal form `A · V = H` with `V` unimodular.
///
/// `H` is lower echelon: its first `rank` columns carry strictly increasing
/// pivot rows with positive pivots, entries left of a pivot are reduced into
/// `[0, pivot)`, and the remaining columns are zero.
#[derive(Debug, Clone)]
pub struct HermiteForm {
    pub h: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
    pub pivot_rows: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

struct Cols {
    h: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Cols {
    fn swap(&mut self, a: usize, b: usize) {
        self.h.swap(a, b);
        self.v.swap(a, b);
    }

    /// column `dst` -= q * column `src`
    fn axpy(&mut self, dst: usize, q: &BigInt, src: usize) {
        if q.is_zero() {
            return;
        }
        for store in [&mut self.h, &mut self.v] {
            let (s, d) = if src < dst {
                let (lo, hi) = store.split_at_mut(dst);
                (&lo[src], &mut hi[0])
            } else {
                let (lo, hi) = store.split_at_mut(src);
                (&hi[0], &mut lo[dst])
            };
            for (x, y) in d.iter_mut().zip(s) {
                if !y.is_zero() {
                    *x -= q * y;
                }
            }
        }
    }

    fn negate(&mut self, c: usize) {
        for x in self.h[c].iter_mut().chain(self.v[c].iter_mut()) {
            *x = -&*x;
        }
    }
}

pub fn column_hermite_form(a: &Matrix<BigInt>) -> HermiteForm {
    let (m, n) = (a.rows(), a.cols());
    let mut cols = Cols {
        h: (0..n).map(|j| a.column(j)).collect(),
        v: (0..n)
            .map(|j| {
                let mut e = vec![BigInt::zero(); n];
                e[j] = BigInt::from(1);
                e
            })
            .collect(),
    };
    let mut pivot_rows = Vec::new();
    let mut c = 0;
    for r in 0..m {
        if c == n {
            break;
        }
        // Euclid across columns c.. on row r, pivoting on the smallest magnitude.
        loop {
            let best = (c..n)
                .filter(|&j| !cols.h[j][r].is_zero())
                .min_by(|&x, &y| cols.h[x][r].abs().cmp(&cols.h[y][r].abs()));
            let Some(best) = best else { break };
            cols.swap(c, best);
            let mut done = true;
            for j in c + 1..n {
                if cols.h[j][r].is_zero() {
                    continue;
                }
                let q = cols.h[j][r].div_floor(&cols.h[c][r]);
                cols.axpy(j, &q, c);
                if !cols.h[j][r].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if cols.h[c][r].is_zero() {
            continue;
        }
        if cols.h[c][r].is_negative() {
            cols.negate(c);
        }
        for j in 0..c {
            let q = cols.h[j][r].div_floor(&cols.h[c][r]);
            cols.axpy(j, &q, c);
        }
        pivot_rows.push(r);
        c += 1;
    }
    let z = RingSpec::integers();
    HermiteForm {
        h: Matrix::from_columns(z, m, &cols.h),
        v: Matrix::from_columns(z, n, &cols.v),
        pivot_rows,
    }
}

/// Saturated basis of the integer kernel: the trailing columns of `V`.
pub fn integer_kernel(a: &Matrix<BigInt>) -> Matrix<BigInt> {
    let hf = column_hermite_form(a);
    let keep: Vec<usize> = (hf.rank()..a.cols()).collect();
    hf.v.select_columns(&keep)
}
