use std::fmt;

use crate::gf::{Elem, Gf};

use super::enumerate::{for_each_subspace, monic_vectors};
use super::{rref, LinalgError, Matrix};

/// A subspace of F_q^n held by its reduced row echelon basis.
///
/// The basis is the unique RREF of the row space, so structural equality and
/// hashing coincide with equality of subspaces. The zero subspace has an
/// empty basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Row space of `generators`.
    pub fn span(generators: &Matrix) -> Subspace {
        let r = rref(generators);
        let mut basis = r.matrix;
        basis.truncate_rows(r.rank);
        Subspace {
            basis,
            pivots: r.pivots,
        }
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: &Gf, n: usize, rows: &[R]) -> Result<Subspace, LinalgError> {
        Ok(Subspace::span(&Matrix::from_rows(field, n, rows)?))
    }

    pub fn from_vectors(field: &Gf, n: usize, vectors: &[Vec<Elem>]) -> Result<Subspace, LinalgError> {
        Ok(Subspace::span(&Matrix::from_elem_rows(field, n, vectors)?))
    }

    /// Trusts that `basis` is already in RREF with the given pivots.
    pub(crate) fn from_canonical(basis: Matrix, pivots: Vec<usize>) -> Subspace {
        debug_assert_eq!(rref(&basis).matrix, basis);
        Subspace { basis, pivots }
    }

    pub fn zero(field: &Gf, n: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Gf, n: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    #[inline]
    pub fn field(&self) -> &Gf {
        self.basis.field()
    }

    /// Canonical (RREF) basis.
    #[inline]
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    #[inline]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        self.basis.same_field(&other.basis)?;
        if self.ambient_dim() != other.ambient_dim() {
            return Err(LinalgError::AmbientMismatch(self.ambient_dim(), other.ambient_dim()));
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &mut [Elem]) {
        let f = self.field();
        for (i, &c) in self.pivots.iter().enumerate() {
            let coef = v[c];
            if coef.is_zero() {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x = f.sub(*x, f.mul(coef, b));
                }
            }
        }
    }

    pub fn contains_vector(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| e.is_zero())
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.compatible(other)?;
        Ok(self.dim() <= other.dim() && self.basis.row_iter().all(|r| other.contains_vector(r)))
    }

    pub fn intersect_dim(&self, other: &Subspace) -> Result<usize, LinalgError> {
        self.compatible(other)?;
        let stacked = self.basis.stack(&other.basis)?;
        Ok(self.dim() + other.dim() - stacked.rank())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.compatible(other)?;
        Ok(Subspace::span(&self.basis.stack(&other.basis)?))
    }

    /// `self ∩ other` by Zassenhaus: reduce `[[X, X], [Y, 0]]`; rows whose
    /// left half vanishes carry a basis of the intersection on the right.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.compatible(other)?;
        let n = self.ambient_dim();
        let f = self.field();
        let top = self.basis.hstack(&self.basis)?;
        let bottom = other.basis.hstack(&Matrix::zeros(f, other.dim(), n))?;
        let r = rref(&top.stack(&bottom)?);
        let rows: Vec<Vec<Elem>> = (0..r.rank)
            .map(|i| r.matrix.row(i))
            .filter(|row| row[..n].iter().all(|e| e.is_zero()))
            .map(|row| row[n..].to_vec())
            .collect();
        Subspace::from_vectors(f, n, &rows)
    }

    /// `Σ coeffs[i] · basis[i]`.
    pub fn combination(&self, coeffs: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut v = vec![Elem::ZERO; self.ambient_dim()];
        for (c, row) in coeffs.iter().zip(self.basis.row_iter()) {
            if c.is_zero() {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(*c, b));
            }
        }
        v
    }

    /// Visits every vector of the subspace (including zero), in the order
    /// of coefficient tuples with the last coefficient varying fastest.
    pub fn for_each_vector(&self, mut visit: impl FnMut(&[Elem])) {
        let n = self.ambient_dim();
        let k = self.dim();
        let mut partial = vec![vec![Elem::ZERO; n]; k + 1];
        self.walk(0, &mut partial, &mut visit);
        debug_assert_eq!(partial.len(), k + 1);
    }

    fn walk(&self, level: usize, partial: &mut Vec<Vec<Elem>>, visit: &mut impl FnMut(&[Elem])) {
        if level == self.dim() {
            visit(&partial[level]);
            return;
        }
        let f = self.field().clone();
        for c in f.elements() {
            let (lo, hi) = partial.split_at_mut(level + 1);
            let src = &lo[level];
            let dst = &mut hi[0];
            for ((d, &s), &b) in dst.iter_mut().zip(src).zip(self.basis.row(level)) {
                *d = f.add(s, f.mul(c, b));
            }
            self.walk(level + 1, partial, visit);
        }
    }

    /// All hyperplanes of this subspace, sorted. A hyperplane is the kernel
    /// of a nonzero functional on the coordinate space, one per monic
    /// functional, so there are exactly `[dim]_q` of them.
    pub fn hyperplanes(&self) -> Result<Vec<Subspace>, LinalgError> {
        let k = self.dim();
        if k == 0 {
            return Err(LinalgError::ZeroSubspace);
        }
        let f = self.field();
        let mut out: Vec<Subspace> = monic_vectors(f, k)
            .into_iter()
            .map(|func| {
                let lead = func.iter().position(|e| !e.is_zero()).expect("monic");
                let gens: Vec<Vec<Elem>> = (0..k)
                    .filter(|&i| i != lead)
                    .map(|i| {
                        let mut coeffs = vec![Elem::ZERO; k];
                        coeffs[i] = Elem::ONE;
                        coeffs[lead] = f.neg(func[i]);
                        self.combination(&coeffs)
                    })
                    .collect();
                Subspace::from_vectors(f, self.ambient_dim(), &gens).expect("shape")
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Vectors of `outer`'s basis that extend a basis of `self` to one of
    /// `outer`. Requires `self ⊆ outer`.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Vec<Vec<Elem>>, LinalgError> {
        if !self.is_subspace_of(outer)? {
            return Err(LinalgError::NotContained);
        }
        let mut current = self.clone();
        let mut extra = Vec::new();
        for row in outer.basis.row_iter() {
            if current.dim() == outer.dim() {
                break;
            }
            if !current.contains_vector(row) {
                extra.push(row.to_vec());
                let mut gens: Vec<Vec<Elem>> = current.basis.row_iter().map(<[Elem]>::to_vec).collect();
                gens.push(row.to_vec());
                current = Subspace::from_vectors(self.field(), self.ambient_dim(), &gens)?;
            }
        }
        Ok(extra)
    }

    /// All `d`-dimensional W with `self ⊆ W ⊆ outer`, sorted.
    pub fn superspaces_in(&self, outer: &Subspace, d: usize) -> Result<Vec<Subspace>, LinalgError> {
        let comp = self.complement_in(outer)?;
        if d < self.dim() || d > outer.dim() {
            return Err(LinalgError::DimensionOutOfRange {
                d,
                lo: self.dim(),
                hi: outer.dim(),
            });
        }
        let f = self.field().clone();
        let n = self.ambient_dim();
        let own: Vec<Vec<Elem>> = self.basis.row_iter().map(<[Elem]>::to_vec).collect();
        let mut out = Vec::new();
        for_each_subspace(&f, comp.len(), d - self.dim(), |s| {
            let mut gens = own.clone();
            for coeffs in s.basis().row_iter() {
                let mut v = vec![Elem::ZERO; n];
                for (c, w) in coeffs.iter().zip(&comp) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(w) {
                        *x = f.add(*x, f.mul(*c, y));
                    }
                }
                gens.push(v);
            }
            out.push(Subspace::from_vectors(&f, n, &gens).expect("shape"));
        });
        out.sort();
        Ok(out)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in F_{}^{}) {:?}",
            self.dim(),
            self.field().q(),
            self.ambient_dim(),
            self.basis
                .row_iter()
                .map(|r| r.iter().map(|e| e.0).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        )
    }
}
