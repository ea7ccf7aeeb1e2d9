//! Simplex vectors and their polynomial characterisation.
//!
//! For q = p^m and n = [k]_q, a vector x of F_q^n is tested against the
//! system
//!
//! ```text
//! e_{p^j}(x_1^{q-1}, ..., x_n^{q-1}) = 0,   j = 0, ..., m(k-1) - 1
//! ```
//!
//! where `e_d` is the elementary symmetric polynomial of degree d. Because
//! `x^{q-1}` is 1 on nonzero entries and 0 otherwise, `e_d` evaluates to
//! `C(w, d) mod p` with w the Hamming weight, which Lucas's theorem computes
//! digit by digit. Both evaluations are exposed so they can be compared.

use crate::constructions::bracket;
use crate::gf::{is_prime, Elem, Gf};

use super::{hamming_weight, CodeError};

/// `C(a, b) mod p` as the product of base-p digit binomials.
pub fn lucas_binom_mod_p(mut a: u64, mut b: u64, p: u64) -> Result<u64, CodeError> {
    if !is_prime(p) {
        return Err(CodeError::NotPrime(p));
    }
    let mut acc = 1u64;
    while b > 0 || a > 0 {
        let (ad, bd) = (a % p, b % p);
        if bd > ad {
            return Ok(0);
        }
        acc = acc * small_binom_mod_p(ad, bd, p) % p;
        a /= p;
        b /= p;
    }
    Ok(acc % p)
}

/// `C(a, b) mod p` for `b <= a < p`.
fn small_binom_mod_p(a: u64, b: u64, p: u64) -> u64 {
    let b = b.min(a - b);
    let (mut num, mut den) = (1u64, 1u64);
    for t in 0..b {
        num = num * ((a - t) % p) % p;
        den = den * ((t + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// The degrees `p^j`, `j = 0, ..., m(k-1) - 1`, of the equations for
/// dimension k. Empty when k = 1.
pub fn simplex_equation_degrees(field: &Gf, k: usize) -> Vec<u64> {
    let p = field.p() as u64;
    let count = field.m() as usize * k.saturating_sub(1);
    (0..count as u32).map(|j| p.pow(j)).collect()
}

fn check_length(field: &Gf, v: &[Elem], k: usize) -> Result<(), CodeError> {
    let n = bracket(k as u32, field.q() as u64);
    if n != v.len() as u128 {
        return Err(CodeError::WrongLength {
            expected: n.min(usize::MAX as u128) as usize,
            found: v.len(),
        });
    }
    Ok(())
}

/// Weight shortcut: every equation holds iff `C(w, p^j) ≡ 0 (mod p)`.
pub fn simplex_equations_satisfied(v: &[Elem], field: &Gf, k: usize) -> Result<bool, CodeError> {
    check_length(field, v, k)?;
    let w = hamming_weight(v) as u64;
    let p = field.p() as u64;
    for d in simplex_equation_degrees(field, k) {
        if lucas_binom_mod_p(w, d, p)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `e_0, ..., e_max_degree` of `values`, evaluated in the field.
pub fn elementary_symmetric(field: &Gf, values: &[Elem], max_degree: usize) -> Vec<Elem> {
    let mut e = vec![Elem::ZERO; max_degree + 1];
    e[0] = Elem::ONE;
    for &y in values {
        for d in (1..=max_degree).rev() {
            e[d] = field.add(e[d], field.mul(e[d - 1], y));
        }
    }
    e
}

/// Literal evaluation of the equations: raise every coordinate to q-1 and
/// evaluate the elementary symmetric polynomials in F_q.
pub fn simplex_equations_literal(v: &[Elem], field: &Gf, k: usize) -> Result<bool, CodeError> {
    check_length(field, v, k)?;
    let degrees = simplex_equation_degrees(field, k);
    let Some(&top) = degrees.last() else {
        return Ok(true);
    };
    let q1 = field.q() as u64 - 1;
    let powered: Vec<Elem> = v.iter().map(|&x| field.pow(x, q1)).collect();
    let e = elementary_symmetric(field, &powered, top as usize);
    Ok(degrees.iter().all(|&d| e[d as usize].is_zero()))
}

/// Hamming weight exactly `q^(k-1)`.
pub fn is_simplex_vector(v: &[Elem], field: &Gf, k: usize) -> Result<bool, CodeError> {
    check_length(field, v, k)?;
    let target = (field.q() as u64).pow(k as u32 - 1);
    Ok(hamming_weight(v) as u64 == target)
}
