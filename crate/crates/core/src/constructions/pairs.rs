//! Projective code pairs X, Y with dim(X ∩ Y) = max(0, 2k − n).
//!
//! For 2k ≤ n both constructions write down generator matrices M and N
//! whose stacked 2k × n matrix has full rank, so X ∩ Y = 0. For n < 2k the
//! (n, n−k) pair is built first and both members are extended by a common
//! complement of their sum.

use crate::gf::{Elem, Field, Gf};
use crate::linalg::{Matrix, Subspace};

use super::{bracket, fresh_columns, ConstructionError, ConstructionPair, Provenance};

fn admissible(n: usize, k: usize, q: u32) -> Result<(), ConstructionError> {
    let need = n as u128;
    if bracket(k as u32, q as u64) < need || bracket((n - k) as u32, q as u64) < need {
        return Err(ConstructionError::Precondition(format!(
            "min([{k}]_{q}, [{}]_{q}) < {n}",
            n - k
        )));
    }
    Ok(())
}

fn columns_to_matrix(field: &Gf, k: usize, cols: &[Vec<Elem>]) -> Matrix {
    if cols.is_empty() {
        return Matrix::zeros(field, k, 0);
    }
    Matrix::from_elem_rows(field, k, cols).expect("shape").transpose()
}

/// Appends greedily chosen columns until the matrix has `n` columns.
fn pad_columns(m: &Matrix, n: usize) -> Result<Matrix, ConstructionError> {
    let extra = fresh_columns(m, n - m.cols())?;
    Ok(m.hstack(&columns_to_matrix(m.field(), m.rows(), &extra))?)
}

/// Bidiagonal A with ones on the diagonal and subdiagonal and `a` in
/// position (k−2, k−1).
fn banded(field: &Gf, k: usize, a: Elem) -> Matrix {
    let mut m = Matrix::zeros(field, k, k);
    for i in 0..k {
        m.set(i, i, Elem::ONE);
        if i + 1 < k {
            m.set(i + 1, i, Elem::ONE);
        }
    }
    m.set(k - 2, k - 1, a);
    m
}

/// `a` is a non-square for odd q, otherwise anything outside {0, 1}.
fn band_parameter(field: &Gf) -> Elem {
    if field.p() == 2 {
        Elem(2)
    } else {
        field
            .nonzero_elements()
            .find(|&e| !field.is_square(e))
            .expect("odd q has non-squares")
    }
}

/// The 2k ≤ n case with M = [I, A, B] and N = [λA, I, B].
fn lemma14_direct(field: &Gf, n: usize, k: usize) -> Result<(Matrix, Matrix), ConstructionError> {
    let a = banded(field, k, band_parameter(field));
    let id = Matrix::identity(field, k);
    let ia = id.hstack(&a)?;
    let b = columns_to_matrix(field, k, &fresh_columns(&ia, n - 2 * k)?);
    let m = ia.hstack(&b)?;
    // The stacked matrix loses rank exactly when 1/λ is an eigenvalue of A²;
    // A² has at most two eigenvalues, so some nonzero λ works once q > 2.
    for lambda in field.nonzero_elements() {
        let nm = a.scale(lambda).hstack(&id)?.hstack(&b)?;
        if m.stack(&nm)?.rank() == 2 * k {
            return Ok((m, nm));
        }
    }
    Err(ConstructionError::Failure(format!(
        "no λ gives rank {} for ({n}, {k}, {})",
        2 * k,
        field.q()
    )))
}

/// The 2k ≤ n case with M = [I, U−A, B] and N = [−I, I−U, B′], A the
/// superdiagonal shift and U all ones.
fn remark1_direct(field: &Gf, n: usize, k: usize) -> Result<(Matrix, Matrix), ConstructionError> {
    let one = Elem::ONE;
    let minus_one = field.neg(one);
    let mut left_m = Matrix::zeros(field, k, 2 * k);
    let mut left_n = Matrix::zeros(field, k, 2 * k);
    for i in 0..k {
        left_m.set(i, i, one);
        left_n.set(i, i, minus_one);
        for j in 0..k {
            let shift = j == i + 1;
            left_m.set(i, k + j, if shift { Elem::ZERO } else { one });
            left_n.set(i, k + j, if i == j { Elem::ZERO } else { minus_one });
        }
    }
    let m = pad_columns(&left_m, n)?;
    let nm = pad_columns(&left_n, n)?;
    Ok((m, nm))
}

fn finish(
    field: &Gf,
    n: usize,
    k: usize,
    gens: (Matrix, Matrix),
    provenance: Provenance,
) -> Result<ConstructionPair, ConstructionError> {
    let pair = ConstructionPair {
        x: Subspace::span(&gens.0),
        y: Subspace::span(&gens.1),
        gen_x: gens.0,
        gen_y: gens.1,
        n,
        k,
        q: field.q(),
        expected_meet: (2 * k).saturating_sub(n),
        provenance,
    };
    if !pair.is_valid() {
        return Err(ConstructionError::Failure(format!(
            "({n}, {k}, {}) gave dim(X ∩ Y) = {} or a non-projective code",
            field.q(),
            pair.meet()
        )));
    }
    Ok(pair)
}

type Direct = fn(&Gf, usize, usize) -> Result<(Matrix, Matrix), ConstructionError>;

fn build(
    field: &Gf,
    n: usize,
    k: usize,
    direct: Direct,
    provenance: Provenance,
) -> Result<ConstructionPair, ConstructionError> {
    if 2 * k <= n {
        let gens = direct(field, n, k)?;
        return finish(field, n, k, gens, provenance);
    }
    let (m, nm) = direct(field, n, n - k)?;
    let sum = Subspace::span(&m.stack(&nm)?);
    let z = sum.complement_in(&Subspace::full(field, n))?;
    let z = Matrix::from_elem_rows(field, n, &z)?;
    finish(field, n, k, (m.stack(&z)?, nm.stack(&z)?), provenance)
}

/// Projective pair for q > 2, 1 < k < n−1 and min([k]_q, [n−k]_q) ≥ n.
pub fn lemma14_pair(n: usize, k: usize, q: u64) -> Result<ConstructionPair, ConstructionError> {
    let field = Field::with_order(q)?;
    if q <= 2 {
        return Err(ConstructionError::Precondition("q must exceed 2".into()));
    }
    if !(k > 1 && k + 1 < n) {
        return Err(ConstructionError::Precondition(format!(
            "need 1 < k < n − 1, got n = {n}, k = {k}"
        )));
    }
    admissible(n, k, field.q())?;
    build(&field, n, k, lemma14_direct, Provenance::Lemma14)
}

/// Projective pair for any q with 3 ≤ k ≤ n−3 and min([k]_q, [n−k]_q) ≥ n.
pub fn remark1_pair(n: usize, k: usize, q: u64) -> Result<ConstructionPair, ConstructionError> {
    let field = Field::with_order(q)?;
    if !(k >= 3 && k + 3 <= n) {
        return Err(ConstructionError::Precondition(format!(
            "need 3 ≤ k ≤ n − 3, got n = {n}, k = {k}"
        )));
    }
    admissible(n, k, field.q())?;
    build(&field, n, k, remark1_direct, Provenance::Remark1)
}

/// Whichever construction covers (n, k, q): the banded one for q > 2, the
/// shift one for q = 2.
pub fn pair_for(n: usize, k: usize, q: u64) -> Result<ConstructionPair, ConstructionError> {
    if q > 2 {
        lemma14_pair(n, k, q)
    } else if k >= 3 && k + 3 <= n {
        remark1_pair(n, k, q)
    } else {
        Err(ConstructionError::NotCovered { n, k, q: q as u32 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::is_projective_via_cij;

    #[test]
    fn small_lemma14_instances() {
        let p = lemma14_pair(6, 3, 3).unwrap();
        assert_eq!(p.expected_meet, 0);
        // a = 2 is the only non-square of F_3.
        assert_eq!(p.gen_x.get(1, 5), Elem(2));
        assert_eq!(p.gen_x.stack(&p.gen_y).unwrap().rank(), 6);
        let p = lemma14_pair(7, 3, 5).unwrap();
        assert_eq!(p.meet(), 0);
        assert!(is_projective_via_cij(&p.x).unwrap() && is_projective_via_cij(&p.y).unwrap());
        let p = lemma14_pair(6, 4, 7).unwrap();
        assert_eq!(p.meet(), 2);
        assert!(p.is_valid());
    }

    #[test]
    fn small_remark1_instances() {
        let p = remark1_pair(6, 3, 2).unwrap();
        assert_eq!(p.meet(), 0);
        assert_eq!(p.gen_x.stack(&p.gen_y).unwrap().rank(), 6);
        let p = remark1_pair(7, 4, 2).unwrap();
        assert_eq!(p.meet(), 1);
        assert!(p.is_valid());
        let p = remark1_pair(8, 4, 2).unwrap();
        assert_eq!(p.meet(), 0);
    }

    #[test]
    fn deterministic() {
        assert_eq!(lemma14_pair(8, 3, 4).unwrap(), lemma14_pair(8, 3, 4).unwrap());
        assert_eq!(remark1_pair(9, 4, 2).unwrap(), remark1_pair(9, 4, 2).unwrap());
    }

    #[test]
    fn preconditions() {
        // [3]_2 = 7 < 8 points, so no projective [8,3]_2 code exists at all.
        assert!(matches!(remark1_pair(8, 3, 2), Err(ConstructionError::Precondition(_))));
        assert!(matches!(lemma14_pair(6, 2, 2), Err(ConstructionError::Precondition(_))));
        assert!(matches!(lemma14_pair(5, 1, 3), Err(ConstructionError::Precondition(_))));
        assert!(matches!(
            lemma14_pair(10, 2, 3),
            Err(ConstructionError::Precondition(_))
        ));
        assert_eq!(
            pair_for(6, 2, 2),
            Err(ConstructionError::NotCovered { n: 6, k: 2, q: 2 })
        );
        assert!(lemma14_pair(6, 3, 6).is_err());
    }

    #[test]
    fn remark1_for_odd_q() {
        let p = remark1_pair(7, 3, 3).unwrap();
        assert!(p.is_valid());
    }
}
