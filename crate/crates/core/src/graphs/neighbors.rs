//! Vertices adjacent to two given k-subspaces X ≠ Y.
//!
//! With d = dim(X ∩ Y):
//!
//! - d = k−2: every common neighbour is H + H′ with H, H′ hyperplanes of X
//!   and Y through X ∩ Y, giving exactly `[2]_q²` of them;
//! - d = k−1: the hyperplanes of X + Y and the k-spaces through X ∩ Y,
//!   other than X and Y;
//! - d < k−2: none.

use std::collections::BTreeSet;

use crate::codes::is_projective;
use crate::linalg::Subspace;

use super::GraphError;

/// All k-subspaces Z with dim(Z ∩ X) = dim(Z ∩ Y) = k−1, sorted.
pub fn common_neighbors(x: &Subspace, y: &Subspace) -> Result<Vec<Subspace>, GraphError> {
    let k = x.dim();
    if y.dim() != k {
        return Err(GraphError::Precondition(format!(
            "dimensions differ ({k} vs {})",
            y.dim()
        )));
    }
    let meet = x.intersection(y)?;
    let d = meet.dim();
    if d == k {
        return Err(GraphError::Precondition("X and Y coincide".into()));
    }
    let mut out = BTreeSet::new();
    if d + 2 == k {
        let hx = meet.superspaces_in(x, k - 1)?;
        let hy = meet.superspaces_in(y, k - 1)?;
        for h in &hx {
            for h2 in &hy {
                out.insert(h.sum(h2)?);
            }
        }
    } else if d + 1 == k {
        let join = x.sum(y)?;
        let full = Subspace::full(x.field(), x.ambient_dim());
        out.extend(join.hyperplanes()?);
        out.extend(meet.superspaces_in(&full, k)?);
        out.remove(x);
        out.remove(y);
    }
    Ok(out.into_iter().collect())
}

/// The projective members of [`common_neighbors`]. Both inputs must be
/// projective.
pub fn common_projective_neighbors(x: &Subspace, y: &Subspace) -> Result<Vec<Subspace>, GraphError> {
    if !is_projective(x)? || !is_projective(y)? {
        return Err(GraphError::Precondition("inputs must be projective codes".into()));
    }
    let mut out = Vec::new();
    for z in common_neighbors(x, y)? {
        if is_projective(&z)? {
            out.push(z);
        }
    }
    Ok(out)
}
