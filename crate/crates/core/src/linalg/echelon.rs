//! Reduced row echelon form.
//!
//! Two elimination kernels: a table-driven one for any field and a
//! word-packed one for GF(2) where a row operation is a run of XORs. On
//! binary input both produce the same matrix, since the RREF of a matrix is
//! unique.

use crate::gf::Elem;

use super::{LinalgError, Matrix};

/// Result of row reduction. `matrix` keeps the input shape; rows past
/// `rank` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// RREF, dispatching to the packed kernel over GF(2).
pub fn rref(m: &Matrix) -> Rref {
    if m.field().is_binary() {
        rref_packed(m).expect("binary field")
    } else {
        rref_generic(m)
    }
}

/// Gauss-Jordan elimination with field tables.
pub fn rref_generic(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let f = m.field().clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if pr != r {
            for j in c..cols {
                let (x, y) = (a.get(r, j), a.get(pr, j));
                a.set(r, j, y);
                a.set(pr, j, x);
            }
        }
        let inv = f.inv(a.get(r, c)).expect("pivot is nonzero");
        if inv != Elem::ONE {
            for j in c..cols {
                let v = f.mul(a.get(r, j), inv);
                a.set(r, j, v);
            }
        }
        let pivot_row: Vec<Elem> = a.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c);
            if factor.is_zero() {
                continue;
            }
            let row = &mut a.row_mut(i)[c..];
            for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *x = f.sub(*x, f.mul(factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        rank: r,
        pivots,
    }
}

/// Row-packed binary matrix: bit `c % 64` of word `c / 64` holds column c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRows {
    cols: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitRows {
    pub fn from_matrix(m: &Matrix) -> Result<BitRows, LinalgError> {
        if !m.field().is_binary() {
            return Err(LinalgError::NotBinary);
        }
        let words = m.cols().div_ceil(64).max(1);
        let rows = m
            .row_iter()
            .map(|r| {
                let mut w = vec![0u64; words];
                for (c, e) in r.iter().enumerate() {
                    if !e.is_zero() {
                        w[c / 64] |= 1 << (c % 64);
                    }
                }
                w
            })
            .collect();
        Ok(BitRows {
            cols: m.cols(),
            words,
            rows,
        })
    }

    #[inline]
    fn bit(&self, r: usize, c: usize) -> bool {
        self.rows[r][c / 64] >> (c % 64) & 1 == 1
    }

    /// In-place reduction; returns pivot columns.
    pub fn reduce(&mut self) -> Vec<usize> {
        let nrows = self.rows.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == nrows {
                break;
            }
            let Some(pr) = (r..nrows).find(|&i| self.bit(i, c)) else {
                continue;
            };
            self.rows.swap(r, pr);
            let pivot = self.rows[r].clone();
            for i in 0..nrows {
                if i != r && self.bit(i, c) {
                    for (x, p) in self.rows[i].iter_mut().zip(&pivot) {
                        *x ^= p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn to_matrix(&self, like: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(like.field(), self.rows.len(), self.cols);
        for r in 0..self.rows.len() {
            for c in 0..self.cols {
                if self.bit(r, c) {
                    m.set(r, c, Elem::ONE);
                }
            }
        }
        m
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }
}

/// Word-packed elimination; GF(2) only.
pub fn rref_packed(m: &Matrix) -> Result<Rref, LinalgError> {
    let mut bits = BitRows::from_matrix(m)?;
    let pivots = bits.reduce();
    Ok(Rref {
        matrix: bits.to_matrix(m),
        rank: pivots.len(),
        pivots,
    })
}
