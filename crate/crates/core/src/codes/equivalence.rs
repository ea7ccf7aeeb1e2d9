//! Monomial equivalence by backtracking.
//!
//! Target coordinates of C2 are matched one at a time with source
//! coordinates of C1 (and a nonzero scalar). A partial assignment survives
//! only while the punctured codes agree: the row space of the chosen, scaled
//! C1 columns must equal the row space of the matched C2 columns. C2's pivot
//! columns are matched first, so after k steps the rest is nearly forced.

use std::collections::HashMap;

use crate::gf::{Elem, Gf};
use crate::linalg::{Matrix, Subspace};

use super::{normalize_monic, weight_distribution, CodeError};

pub const MAX_EQUIVALENCE_LENGTH: usize = 16;
pub const MAX_EQUIVALENCE_ORDER: u32 = 4;

/// Coordinate j of the image is `scalars[j] · x[perm[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    pub perm: Vec<usize>,
    pub scalars: Vec<Elem>,
}

impl MonomialMap {
    pub fn identity(n: usize) -> MonomialMap {
        MonomialMap {
            perm: (0..n).collect(),
            scalars: vec![Elem::ONE; n],
        }
    }

    pub fn apply_vector(&self, field: &Gf, x: &[Elem]) -> Vec<Elem> {
        self.perm
            .iter()
            .zip(&self.scalars)
            .map(|(&src, &s)| field.mul(s, x[src]))
            .collect()
    }

    pub fn apply(&self, c: &Subspace) -> Subspace {
        let f = c.field();
        let rows: Vec<Vec<Elem>> = c.basis().row_iter().map(|r| self.apply_vector(f, r)).collect();
        Subspace::from_vectors(f, c.ambient_dim(), &rows).expect("shape")
    }
}

/// Per-coordinate invariant: how many coordinates share this column's
/// projective point (0 for a zero column).
fn column_classes(c: &Subspace) -> Vec<usize> {
    let f = c.field();
    let g = c.basis();
    let keys: Vec<Option<Vec<Elem>>> = (0..g.cols()).map(|j| normalize_monic(f, &g.column(j))).collect();
    let mut mult: HashMap<&Vec<Elem>, usize> = HashMap::new();
    for k in keys.iter().flatten() {
        *mult.entry(k).or_default() += 1;
    }
    keys.iter().map(|k| k.as_ref().map_or(0, |k| mult[k])).collect()
}

struct Search<'a> {
    field: &'a Gf,
    g1: &'a Matrix,
    g2: &'a Matrix,
    order: Vec<usize>,
    class1: Vec<usize>,
    class2: Vec<usize>,
    used: Vec<bool>,
    chosen: Vec<(usize, Elem)>,
}

impl Search<'_> {
    fn prefix_consistent(&self) -> bool {
        let t = self.chosen.len();
        let k = self.g1.rows();
        let mut left = Matrix::zeros(self.field, k, t);
        let mut right = Matrix::zeros(self.field, k, t);
        for (pos, (&(src, s), &dst)) in self.chosen.iter().zip(&self.order).enumerate() {
            for r in 0..k {
                left.set(r, pos, self.field.mul(s, self.g1.get(r, src)));
                right.set(r, pos, self.g2.get(r, dst));
            }
        }
        Subspace::span(&left) == Subspace::span(&right)
    }

    fn run(&mut self) -> bool {
        let step = self.chosen.len();
        if step == self.order.len() {
            return true;
        }
        let dst = self.order[step];
        let dst_zero = self.class2[dst] == 0;
        for src in 0..self.g1.cols() {
            if self.used[src] || self.class1[src] != self.class2[dst] {
                continue;
            }
            let scalars: Vec<Elem> = if dst_zero {
                vec![Elem::ONE]
            } else {
                self.field.nonzero_elements().collect()
            };
            for s in scalars {
                self.used[src] = true;
                self.chosen.push((src, s));
                if self.prefix_consistent() && self.run() {
                    return true;
                }
                self.chosen.pop();
                self.used[src] = false;
            }
        }
        false
    }
}

/// Finds a monomial map taking `c1` onto `c2`, if one exists.
pub fn monomial_equivalent(c1: &Subspace, c2: &Subspace) -> Result<Option<MonomialMap>, CodeError> {
    if c1.field() != c2.field() || c1.ambient_dim() != c2.ambient_dim() || c1.dim() != c2.dim() {
        return Err(CodeError::ParameterMismatch);
    }
    let n = c1.ambient_dim();
    let q = c1.field().q();
    if n > MAX_EQUIVALENCE_LENGTH {
        return Err(CodeError::GuardExceeded {
            what: "n",
            value: n as u64,
            limit: MAX_EQUIVALENCE_LENGTH as u64,
        });
    }
    if q > MAX_EQUIVALENCE_ORDER {
        return Err(CodeError::GuardExceeded {
            what: "q",
            value: q as u64,
            limit: MAX_EQUIVALENCE_ORDER as u64,
        });
    }
    if c1 == c2 {
        return Ok(Some(MonomialMap::identity(n)));
    }
    if weight_distribution(c1)? != weight_distribution(c2)? {
        return Ok(None);
    }
    let class1 = column_classes(c1);
    let class2 = column_classes(c2);
    let mut s1 = class1.clone();
    let mut s2 = class2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(None);
    }
    let mut order: Vec<usize> = c2.pivots().to_vec();
    order.extend((0..n).filter(|j| !c2.pivots().contains(j)));
    let mut search = Search {
        field: c1.field(),
        g1: c1.basis(),
        g2: c2.basis(),
        order,
        class1,
        class2,
        used: vec![false; n],
        chosen: Vec::with_capacity(n),
    };
    if !search.run() {
        return Ok(None);
    }
    let mut map = MonomialMap {
        perm: vec![0; n],
        scalars: vec![Elem::ONE; n],
    };
    for (&(src, s), &dst) in search.chosen.iter().zip(&search.order) {
        map.perm[dst] = src;
        map.scalars[dst] = s;
    }
    debug_assert_eq!(map.apply(c1), *c2);
    Ok(Some(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::simplex_code;
    use crate::gf::Field;

    #[test]
    fn identity_witness() {
        let c = simplex_code(&Field::new(2, 1).unwrap(), 3).unwrap();
        assert_eq!(monomial_equivalent(&c, &c).unwrap(), Some(MonomialMap::identity(7)));
    }

    #[test]
    fn scaled_and_permuted_ternary_code() {
        let f = Field::new(3, 1).unwrap();
        let c1 = Subspace::from_rows(&f, 4, &[[1, 0, 1, 2], [0, 1, 1, 1]]).unwrap();
        let map = MonomialMap {
            perm: vec![2, 0, 3, 1],
            scalars: vec![Elem(2), Elem(1), Elem(2), Elem(2)],
        };
        let c2 = map.apply(&c1);
        assert_ne!(c1, c2);
        let found = monomial_equivalent(&c1, &c2).unwrap().expect("equivalent");
        assert_eq!(found.apply(&c1), c2);
    }

    #[test]
    fn different_weights_are_not_equivalent() {
        let f = Field::new(2, 1).unwrap();
        let a = Subspace::from_rows(&f, 3, &[[1, 1, 0]]).unwrap();
        let b = Subspace::from_rows(&f, 3, &[[1, 1, 1]]).unwrap();
        assert_eq!(monomial_equivalent(&a, &b).unwrap(), None);
    }

    #[test]
    fn same_weights_but_inequivalent() {
        // Both have weights {2: 3, 4: 3, 6: 1}; only `a` repeats a column three times.
        let f = Field::new(2, 1).unwrap();
        let a = Subspace::from_rows(&f, 6, &[[0, 0, 0, 0, 1, 1], [0, 0, 0, 1, 0, 1], [1, 1, 1, 0, 0, 1]]).unwrap();
        let b = Subspace::from_rows(&f, 6, &[[0, 0, 0, 0, 1, 1], [0, 0, 1, 1, 0, 0], [1, 1, 0, 0, 0, 0]]).unwrap();
        assert_eq!(weight_distribution(&a).unwrap(), weight_distribution(&b).unwrap());
        assert_eq!(monomial_equivalent(&a, &b).unwrap(), None);
    }

    #[test]
    fn guards() {
        let f5 = Field::new(5, 1).unwrap();
        let c = Subspace::full(&f5, 2);
        assert!(matches!(
            monomial_equivalent(&c, &c),
            Err(CodeError::GuardExceeded { .. })
        ));
        let f2 = Field::new(2, 1).unwrap();
        let a = Subspace::full(&f2, 2);
        let b = Subspace::full(&f2, 3);
        assert_eq!(monomial_equivalent(&a, &b), Err(CodeError::ParameterMismatch));
    }
}
