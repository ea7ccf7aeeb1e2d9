//! Direct enumeration of canonical forms.
//!
//! k-dimensional subspaces of F_q^n are produced as RREF matrices: choose the
//! pivot columns, then fill every free entry (right of its row's pivot, not
//! in a pivot column) with every field element. Each subspace appears once.

use crate::gf::{Elem, Gf};

use super::{Matrix, Subspace};

/// Nonzero vectors of F_q^k whose first nonzero entry is 1, in
/// lexicographic order of encodings.
pub fn monic_vectors(field: &Gf, k: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    for lead in (0..k).rev() {
        let tail = k - lead - 1;
        let mut v = vec![Elem::ZERO; k];
        v[lead] = Elem::ONE;
        odometer(field, tail, |digits| {
            v[lead + 1..].copy_from_slice(digits);
            out.push(v.clone());
        });
    }
    out
}

/// Visits every tuple in F_q^len, last position fastest.
pub fn odometer(field: &Gf, len: usize, mut visit: impl FnMut(&[Elem])) {
    let q = field.q() as u16;
    let mut digits = vec![Elem::ZERO; len];
    loop {
        visit(&digits);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if digits[i].0 + 1 < q {
                digits[i].0 += 1;
                break;
            }
            digits[i] = Elem::ZERO;
        }
    }
}

/// Visits every k-dimensional subspace of F_q^n once.
pub fn for_each_subspace(field: &Gf, n: usize, k: usize, mut visit: impl FnMut(Subspace)) {
    if k > n {
        return;
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pv = &pivots;
                (pivots[r] + 1..n).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let mut base = Matrix::zeros(field, k, n);
        for (r, &c) in pivots.iter().enumerate() {
            base.set(r, c, Elem::ONE);
        }
        odometer(field, free.len(), |vals| {
            let mut m = base.clone();
            for (&(r, c), &v) in free.iter().zip(vals) {
                m.set(r, c, v);
            }
            visit(Subspace::from_canonical(m, pivots.clone()));
        });
        // next k-combination of 0..n
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All k-dimensional subspaces of F_q^n, sorted by canonical basis.
pub fn subspaces(field: &Gf, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for_each_subspace(field, n, k, |s| out.push(s));
    out.sort();
    out
}
