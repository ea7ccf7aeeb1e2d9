//! Projective linear codes as vertices of Grassmann graphs.
//!
//! The crate is layered bottom-up:
//!
//! - [`gf`]: exact arithmetic in GF(p^m).
//! - [`linalg`]: matrices, RREF and canonical subspaces of F_q^n.
//! - [`codes`]: code predicates (non-degenerate, projective, simplex),
//!   weight distributions, the simplex-vector equations and Lucas's theorem.
//! - [`constructions`]: q-analog counts, simplex generators, the explicit
//!   projective code pairs and the two fixed counterexample pairs.
//! - [`graphs`]: Grassmann distance, graphs of codes, BFS, geodesic
//!   counting, common neighbours and small-graph isomorphism.
//! - [`verify`]: named, parameterised checks that produce JSON reports.

pub mod codes;
pub mod constructions;
pub mod gf;
pub mod graphs;
pub mod linalg;
pub mod verify;

pub use gf::{Elem, Field, Gf};
pub use linalg::{Matrix, Subspace};
