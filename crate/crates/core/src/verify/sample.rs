//! Seeded random subspaces and code pairs.
//!
//! A random k-subspace is the span of a uniformly random k × n matrix,
//! redrawn until it has full rank; each subspace is then equally likely.
//! Pairs with a prescribed meet are built from a random subspace of X plus
//! random vectors, then checked, and redrawn on failure.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::codes::is_projective;
use crate::gf::{Elem, Gf};
use crate::linalg::{Matrix, Subspace};

/// Attempts allowed per sample before giving up.
pub const RETRY_CAP: u64 = 100_000;

pub(crate) struct Sampler {
    pub rng: ChaCha8Rng,
    pub field: Gf,
    pub n: usize,
    pub rejected: u64,
}

impl Sampler {
    pub fn new(field: Gf, n: usize, seed: u64) -> Sampler {
        use rand::SeedableRng;
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field,
            n,
            rejected: 0,
        }
    }

    fn vector(&mut self, len: usize) -> Vec<Elem> {
        let q = self.field.q() as u16;
        (0..len).map(|_| Elem(self.rng.gen_range(0..q))).collect()
    }

    /// Uniform k-subspace of F_q^n.
    pub fn subspace(&mut self, k: usize) -> Subspace {
        loop {
            let rows: Vec<Vec<Elem>> = (0..k).map(|_| self.vector(self.n)).collect();
            let m = Matrix::from_elem_rows(&self.field, self.n, &rows).expect("shape");
            let s = Subspace::span(&m);
            if s.dim() == k {
                return s;
            }
        }
    }

    /// Uniform d-subspace of `x`.
    pub fn subspace_of(&mut self, x: &Subspace, d: usize) -> Subspace {
        loop {
            let rows: Vec<Vec<Elem>> = (0..d)
                .map(|_| {
                    let c = self.vector(x.dim());
                    x.combination(&c)
                })
                .collect();
            let s = Subspace::from_vectors(&self.field, self.n, &rows).expect("shape");
            if s.dim() == d {
                return s;
            }
        }
    }

    pub fn projective(&mut self, k: usize) -> Option<Subspace> {
        for _ in 0..RETRY_CAP {
            let s = self.subspace(k);
            if is_projective(&s).expect("k ≥ 1") {
                return Some(s);
            }
            self.rejected += 1;
        }
        None
    }

    /// Projective X, Y of dimension k with dim(X ∩ Y) = meet.
    pub fn projective_pair(&mut self, k: usize, meet: usize) -> Option<(Subspace, Subspace)> {
        for _ in 0..RETRY_CAP {
            let x = self.projective(k)?;
            let common = self.subspace_of(&x, meet);
            let mut rows: Vec<Vec<Elem>> = common.basis().row_iter().map(<[Elem]>::to_vec).collect();
            for _ in meet..k {
                rows.push(self.vector(self.n));
            }
            let y = Subspace::from_vectors(&self.field, self.n, &rows).expect("shape");
            if y.dim() == k && is_projective(&y).expect("k ≥ 1") && x.intersect_dim(&y).expect("same space") == meet {
                return Some((x, y));
            }
            self.rejected += 1;
        }
        None
    }
}
