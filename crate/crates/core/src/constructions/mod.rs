//! Counting functions, simplex generators and explicit code pairs.

mod fixtures;
mod pairs;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{is_projective, CodeError, MAX_CODEWORDS};
use crate::gf::{Elem, Gf, GfError};
use crate::linalg::{monic_vectors, LinalgError, Matrix, Subspace};

pub use fixtures::{
    binary_fixture, fixture_binary_15_4, fixture_ternary_13_3, BinaryFixture, TernaryFixture, BINARY_15_4_TEXT,
    TERNARY_13_3_TEXT,
};
pub use pairs::{lemma14_pair, pair_for, remark1_pair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no construction covers (n, k, q) = ({n}, {k}, {q})")]
    NotCovered { n: usize, k: usize, q: u32 },
    #[error("construction failed: {0}")]
    Failure(String),
}

/// `[m]_q = (q^m - 1)/(q - 1)`, the number of points of an m-dimensional
/// space. Saturates at `u128::MAX`.
pub fn bracket(m: u32, q: u64) -> u128 {
    let q = q as u128;
    let mut acc: u128 = 0;
    for _ in 0..m {
        acc = match acc.checked_mul(q).and_then(|a| a.checked_add(1)) {
            Some(a) => a,
            None => return u128::MAX,
        };
    }
    acc
}

/// Exact `[m]_q`.
pub fn bracket_big(m: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let mut acc = BigUint::default();
    for _ in 0..m {
        acc = acc * &q + 1u32;
    }
    acc
}

/// Number of k-dimensional subspaces of F_q^n.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow(n - i) - 1u32;
        den *= q.pow(i + 1) - 1u32;
    }
    num / den
}

/// Generator of the q-ary simplex code of dimension k: one column per point
/// of PG(k-1, q), monic representatives in lexicographic order.
pub fn simplex_generator(field: &Gf, k: usize) -> Result<Matrix, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::Precondition("k must be at least 1".into()));
    }
    let q = field.q() as u64;
    let words = q.checked_pow(k as u32).unwrap_or(u64::MAX);
    if words > MAX_CODEWORDS {
        return Err(CodeError::GuardExceeded {
            what: "q^k",
            value: words,
            limit: MAX_CODEWORDS,
        }
        .into());
    }
    let cols = monic_vectors(field, k);
    Ok(Matrix::from_elem_rows(field, k, &cols)?.transpose())
}

pub fn simplex_code(field: &Gf, k: usize) -> Result<Subspace, ConstructionError> {
    Ok(Subspace::span(&simplex_generator(field, k)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Lemma14,
    Remark1,
    FixtureBinary,
    FixtureTernary,
}

/// Two projective [n,k]_q codes with a prescribed intersection dimension,
/// together with the generator matrices they were built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPair {
    pub x: Subspace,
    pub y: Subspace,
    pub gen_x: Matrix,
    pub gen_y: Matrix,
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub expected_meet: usize,
    pub provenance: Provenance,
}

impl ConstructionPair {
    pub fn meet(&self) -> usize {
        self.x.intersect_dim(&self.y).expect("same ambient space")
    }

    /// Dimensions, projectivity of both codes and the intersection size.
    pub fn is_valid(&self) -> bool {
        self.x.dim() == self.k
            && self.y.dim() == self.k
            && self.x.ambient_dim() == self.n
            && is_projective(&self.x).unwrap_or(false)
            && is_projective(&self.y).unwrap_or(false)
            && self.meet() == self.expected_meet
    }
}

/// The first `count` points of PG(k-1, q), in encoding order, that are not
/// proportional to any column of `existing`.
pub(crate) fn fresh_columns(existing: &Matrix, count: usize) -> Result<Vec<Vec<Elem>>, ConstructionError> {
    let f = existing.field();
    let taken: std::collections::HashSet<Vec<Elem>> = (0..existing.cols())
        .filter_map(|j| crate::codes::normalize_monic(f, &existing.column(j)))
        .collect();
    let out: Vec<Vec<Elem>> = monic_vectors(f, existing.rows())
        .into_iter()
        .filter(|v| !taken.contains(v))
        .take(count)
        .collect();
    if out.len() < count {
        return Err(ConstructionError::Failure(format!(
            "only {} unused points, {count} needed",
            out.len()
        )));
    }
    Ok(out)
}
