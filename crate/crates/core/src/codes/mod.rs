//! Code-theoretic predicates on subspaces.
//!
//! A linear [n,k]_q code is a k-dimensional [`Subspace`] of F_q^n. Column j
//! of its canonical generator matrix encodes the restriction of the j-th
//! coordinate functional to the code, so non-degeneracy and projectivity are
//! statements about those columns.

mod equivalence;
mod simplex;

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::bracket;
use crate::gf::{Elem, Gf};
use crate::linalg::{LinalgError, Matrix, Subspace};

pub use equivalence::{monomial_equivalent, MonomialMap, MAX_EQUIVALENCE_LENGTH, MAX_EQUIVALENCE_ORDER};
pub use simplex::{
    elementary_symmetric, is_simplex_vector, lucas_binom_mod_p, simplex_equation_degrees, simplex_equations_literal,
    simplex_equations_satisfied,
};

/// Upper bound on q^k for anything that walks every codeword.
pub const MAX_CODEWORDS: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("code must have dimension at least {0}")]
    DimensionTooSmall(usize),
    #[error("code is degenerate (column {0} is zero)")]
    Degenerate(usize),
    #[error("{what} = {value} exceeds the limit {limit}")]
    GuardExceeded { what: &'static str, value: u64, limit: u64 },
    #[error("vector has length {found}, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("codes have different parameters")]
    ParameterMismatch,
}

pub fn hamming_weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

pub fn hamming_distance(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Scales `v` so its first nonzero entry is 1. `None` for the zero vector.
pub fn normalize_monic(field: &Gf, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|e| !e.is_zero())?;
    let inv = field.inv(lead).expect("nonzero");
    Some(v.iter().map(|&x| field.mul(x, inv)).collect())
}

fn require_dim(c: &Subspace, min: usize) -> Result<(), CodeError> {
    if c.dim() < min {
        Err(CodeError::DimensionTooSmall(min))
    } else {
        Ok(())
    }
}

fn first_zero_column(c: &Subspace) -> Option<usize> {
    let g = c.basis();
    (0..g.cols()).find(|&j| (0..g.rows()).all(|r| g.get(r, j).is_zero()))
}

pub fn is_nondegenerate(c: &Subspace) -> Result<bool, CodeError> {
    require_dim(c, 1)?;
    Ok(first_zero_column(c).is_none())
}

/// Non-degenerate with pairwise non-proportional generator columns.
pub fn is_projective(c: &Subspace) -> Result<bool, CodeError> {
    require_dim(c, 1)?;
    let f = c.field();
    let g = c.basis();
    let mut seen = HashSet::with_capacity(g.cols());
    for j in 0..g.cols() {
        match normalize_monic(f, &g.column(j)) {
            None => return Ok(false),
            Some(p) => {
                if !seen.insert(p) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Kernel of the coordinate functionals i and j.
pub fn coordinate_pair_kernel(field: &Gf, n: usize, i: usize, j: usize) -> Subspace {
    let rows: Vec<Vec<Elem>> = (0..n)
        .filter(|&l| l != i && l != j)
        .map(|l| {
            let mut e = vec![Elem::ZERO; n];
            e[l] = Elem::ONE;
            e
        })
        .collect();
    Subspace::from_vectors(field, n, &rows).expect("shape")
}

/// Projectivity through intersections: `C` is projective iff
/// `dim(C ∩ C_ij) = k − 2` for every pair of coordinates, where `C_ij` is
/// the common kernel of the i-th and j-th coordinate functionals.
pub fn is_projective_via_cij(c: &Subspace) -> Result<bool, CodeError> {
    require_dim(c, 2)?;
    let n = c.ambient_dim();
    let k = c.dim();
    for i in 0..n {
        for j in i + 1..n {
            let cij = coordinate_pair_kernel(c.field(), n, i, j);
            if c.intersect_dim(&cij)? != k - 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One projective point per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveSystem {
    /// Point i is the 1-dimensional subspace of F_q^k spanned by column i.
    pub points: Vec<Subspace>,
    pub distinct_count: usize,
}

impl ProjectiveSystem {
    pub fn is_projective(&self) -> bool {
        self.distinct_count == self.points.len()
    }
}

pub fn projective_system(c: &Subspace) -> Result<ProjectiveSystem, CodeError> {
    require_dim(c, 1)?;
    if let Some(j) = first_zero_column(c) {
        return Err(CodeError::Degenerate(j));
    }
    let f = c.field();
    let g = c.basis();
    let k = c.dim();
    let points: Vec<Subspace> = (0..g.cols())
        .map(|j| {
            let col = normalize_monic(f, &g.column(j)).expect("nondegenerate");
            Subspace::span(&Matrix::from_elem_rows(f, k, &[col]).expect("shape"))
        })
        .collect();
    let distinct_count = points.iter().collect::<HashSet<_>>().len();
    Ok(ProjectiveSystem { points, distinct_count })
}

pub(crate) fn codeword_count(c: &Subspace) -> Result<u64, CodeError> {
    let q = c.field().q() as u64;
    let count = q.checked_pow(c.dim() as u32).unwrap_or(u64::MAX);
    if count > MAX_CODEWORDS {
        return Err(CodeError::GuardExceeded {
            what: "q^k",
            value: count,
            limit: MAX_CODEWORDS,
        });
    }
    Ok(count)
}

/// Weight counts over the nonzero codewords.
pub fn weight_distribution(c: &Subspace) -> Result<BTreeMap<usize, u64>, CodeError> {
    codeword_count(c)?;
    let mut dist = BTreeMap::new();
    c.for_each_vector(|v| {
        let w = hamming_weight(v);
        if w > 0 {
            *dist.entry(w).or_insert(0) += 1;
        }
    });
    Ok(dist)
}

/// True iff the ambient length is `[k]_q` and every nonzero codeword has
/// weight `q^(k-1)`.
pub fn is_simplex_code(c: &Subspace) -> Result<bool, CodeError> {
    require_dim(c, 1)?;
    codeword_count(c)?;
    let q = c.field().q() as u64;
    let k = c.dim() as u32;
    if bracket(k, q) != c.ambient_dim() as u128 {
        return Ok(false);
    }
    let target = q.pow(k - 1) as usize;
    let mut ok = true;
    c.for_each_vector(|v| {
        let w = hamming_weight(v);
        if w != 0 && w != target {
            ok = false;
        }
    });
    Ok(ok)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeProfile {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub nondegenerate: bool,
    pub projective: bool,
    pub simplex: bool,
    pub weight_distribution: BTreeMap<usize, u64>,
}

impl CodeProfile {
    pub fn of(c: &Subspace) -> Result<CodeProfile, CodeError> {
        Ok(CodeProfile {
            n: c.ambient_dim(),
            k: c.dim(),
            q: c.field().q(),
            nondegenerate: is_nondegenerate(c)?,
            projective: is_projective(c)?,
            simplex: is_simplex_code(c)?,
            weight_distribution: weight_distribution(c)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::simplex_code;
    use crate::gf::Field;

    fn gf(q: u64) -> Gf {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(hamming_weight(&[Elem(0); 5]), 0);
        let u1: Vec<Elem> = [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1].map(Elem).to_vec();
        assert_eq!(hamming_weight(&u1), 8);
        let w: Vec<Elem> = [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1].map(Elem).to_vec();
        assert_eq!(hamming_weight(&w), 9);
    }

    #[test]
    fn degenerate_code() {
        let f = gf(3);
        let c = Subspace::from_rows(&f, 3, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert!(!is_nondegenerate(&c).unwrap());
        assert!(!is_projective(&c).unwrap());
        assert!(!is_projective_via_cij(&c).unwrap());
        assert_eq!(projective_system(&c).unwrap_err(), CodeError::Degenerate(2));
    }

    #[test]
    fn repeated_column() {
        let f = gf(3);
        let c = Subspace::from_rows(&f, 3, &[[1, 2, 0], [0, 0, 1]]).unwrap();
        assert!(is_nondegenerate(&c).unwrap());
        assert!(!is_projective(&c).unwrap());
        assert!(!is_projective_via_cij(&c).unwrap());
        let ps = projective_system(&c).unwrap();
        assert_eq!(ps.points.len(), 3);
        assert_eq!(ps.distinct_count, 2);
        assert!(!ps.is_projective());
    }

    #[test]
    fn simplex_profiles() {
        let s = simplex_code(&gf(2), 3).unwrap();
        assert!(is_nondegenerate(&s).unwrap());
        assert!(is_projective(&s).unwrap());
        assert_eq!(projective_system(&s).unwrap().distinct_count, 7);
        let s3 = simplex_code(&gf(3), 3).unwrap();
        assert!(is_projective_via_cij(&s3).unwrap());
        assert_eq!(weight_distribution(&s3).unwrap(), BTreeMap::from([(9, 26)]));
        let s4 = simplex_code(&gf(2), 4).unwrap();
        assert_eq!(weight_distribution(&s4).unwrap(), BTreeMap::from([(8, 15)]));
        let p = CodeProfile::of(&s4).unwrap();
        assert!(p.simplex && p.projective && p.nondegenerate);
    }

    #[test]
    fn full_space_distribution() {
        let c = Subspace::full(&gf(2), 2);
        assert_eq!(weight_distribution(&c).unwrap(), BTreeMap::from([(1, 2), (2, 1)]));
        assert!(!is_simplex_code(&c).unwrap());
    }

    #[test]
    fn guards_and_preconditions() {
        let f = gf(2);
        let big = Subspace::full(&f, 25);
        assert!(matches!(
            weight_distribution(&big),
            Err(CodeError::GuardExceeded { .. })
        ));
        let line = Subspace::from_rows(&f, 3, &[[1, 1, 1]]).unwrap();
        assert_eq!(is_projective_via_cij(&line), Err(CodeError::DimensionTooSmall(2)));
        assert_eq!(
            is_projective(&Subspace::zero(&f, 3)),
            Err(CodeError::DimensionTooSmall(1))
        );
    }

    #[test]
    fn cij_agrees_on_all_planes_of_f2_4() {
        for s in crate::linalg::subspaces(&gf(2), 4, 2) {
            assert_eq!(is_projective(&s).unwrap(), is_projective_via_cij(&s).unwrap(), "{s:?}");
        }
    }
}
