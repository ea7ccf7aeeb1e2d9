use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::gf::{Elem, Gf};

use super::LinalgError;

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
    field: Gf,
}

impl Matrix {
    pub fn zeros(field: &Gf, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Gf, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from a row-major buffer, checking every encoding.
    pub fn new(field: &Gf, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| e.value() >= field.q()) {
            return Err(LinalgError::Field(crate::gf::GfError::OutOfRange {
                value: bad.value(),
                q: field.q(),
            }));
        }
        Ok(Matrix {
            rows,
            cols,
            data,
            field: field.clone(),
        })
    }

    /// Builds a matrix from rows of raw encodings.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Gf, cols: usize, rows: &[R]) -> Result<Matrix, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinalgError::Shape(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            for &v in r {
                data.push(field.element(v)?);
            }
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    /// Builds a matrix from rows that are already field elements.
    pub fn from_elem_rows(field: &Gf, cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix, LinalgError> {
        let data: Vec<Elem> = rows
            .iter()
            .map(|r| {
                if r.len() == cols {
                    Ok(r.as_slice())
                } else {
                    Err(LinalgError::Shape(format!(
                        "row of length {} in a matrix with {cols} columns",
                        r.len()
                    )))
                }
            })
            .collect::<Result<Vec<_>, _>>()?
            .concat();
        Matrix::new(field, rows.len(), cols, data)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> &Gf {
        &self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub(crate) fn same_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if *self.field == *other.field {
            Ok(())
        } else {
            Err(LinalgError::FieldMismatch)
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(LinalgError::AmbientMismatch(self.cols, other.cols));
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        data.extend_from_slice(&self.data);
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
            field: self.field.clone(),
        })
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(LinalgError::Shape(format!(
                "cannot place {} rows beside {} rows",
                other.rows, self.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix {
            rows: self.rows,
            cols,
            data,
            field: self.field.clone(),
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
            field: self.field.clone(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(r, t);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(t, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: Elem) -> Matrix {
        let mut out = self.clone();
        for e in &mut out.data {
            *e = self.field.mul(*e, s);
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Shape("addition of differently shaped matrices".into()));
        }
        let mut out = self.clone();
        for (e, &o) in out.data.iter_mut().zip(&other.data) {
            *e = self.field.add(*e, o);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        super::rref(self).rank
    }

    pub(crate) fn truncate_rows(&mut self, rows: usize) {
        self.rows = rows;
        self.data.truncate(rows * self.cols);
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && *self.field == *other.field && self.data == other.data
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by shape, then lexicographically on row-major encodings.
impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.q(), self.rows, self.cols)
            .cmp(&(other.field.q(), other.rows, other.cols))
            .then_with(|| self.data.cmp(&other.data))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({}):", self.rows, self.cols, self.field.q())?;
        for r in self.row_iter() {
            let line: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", line.join(" "))?;
        }
        Ok(())
    }
}
