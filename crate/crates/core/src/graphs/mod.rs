//! Grassmann graphs and their restrictions to classes of codes.
//!
//! Vertices are canonical subspaces; two k-dimensional vertices are
//! adjacent when they meet in dimension k−1. The Grassmann distance between
//! X and Y is `k − dim(X ∩ Y)`.

mod iso;
mod neighbors;
mod paths;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::codes::{is_projective, CodeError};
use crate::constructions::{bracket, bracket_big, gaussian_binomial};
use crate::gf::{Field, GfError};
use crate::linalg::{for_each_subspace, LinalgError, Subspace};

pub use iso::{incidence_graph, incidence_graph_1_3, isomorphic, verify_isomorphism, MAX_ISOMORPHISM_VERTICES};
pub use neighbors::{common_neighbors, common_projective_neighbors};
pub use paths::{bfs, count_geodesics, shortest_paths, DistanceReport, ShortestPaths};

/// Default cap on the number of k-subspaces a graph build may enumerate.
pub const MAX_VERTICES: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("{what} = {value} exceeds the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        value: String,
        limit: u64,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no vertex with id {0}")]
    InvalidVertex(usize),
    #[error("vertices {0} and {1} are not connected")]
    Disconnected(usize, usize),
}

/// `k − dim(X ∩ Y)` for two k-dimensional subspaces.
pub fn grassmann_distance(x: &Subspace, y: &Subspace) -> Result<usize, GraphError> {
    if x.dim() != y.dim() {
        return Err(GraphError::Precondition(format!(
            "dimensions differ ({} vs {})",
            x.dim(),
            y.dim()
        )));
    }
    Ok(x.dim() - x.intersect_dim(y)?)
}

/// Number of geodesics between two vertices at distance m in a Grassmann
/// graph: `[m]_q² [m−1]_q² ⋯ [2]_q²`.
pub fn grassmann_geodesic_count(m: u32, q: u64) -> BigUint {
    (2..=m).fold(BigUint::one(), |acc, i| {
        let b = bracket_big(i, q);
        acc * &b * &b
    })
}

/// `[m]_q [m−1]_q ⋯ [2]_q`, the guaranteed number of geodesics between
/// projective codes at distance m when q is large.
pub fn geodesic_lower_bound(m: u32, q: u64) -> BigUint {
    (2..=m).fold(BigUint::one(), |acc, i| acc * bracket_big(i, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    All,
    Projective,
    Simplex,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::All => "all",
            Predicate::Projective => "projective",
            Predicate::Simplex => "simplex",
        }
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Predicate::All),
            "projective" => Ok(Predicate::Projective),
            "simplex" => Ok(Predicate::Simplex),
            _ => Err(format!("unknown predicate {s:?} (expected all, projective or simplex)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphKind {
    /// k-subspaces of F_q^n passing a predicate, adjacent at distance 1.
    Grassmann {
        n: usize,
        k: usize,
        q: u32,
        predicate: Predicate,
    },
    /// a-subspaces and b-subspaces of F_q^n, adjacent when incident.
    Incidence { n: usize, a: usize, b: usize, q: u32 },
}

/// How edges are found when building a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeStrategy {
    /// Pick whichever of the two below does less work.
    #[default]
    Auto,
    /// Test every pair of vertices.
    Pairwise,
    /// For each vertex X, look up H + ⟨v⟩ for every hyperplane H of X.
    Generate,
}

#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub max_vertices: u64,
    pub strategy: EdgeStrategy,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_vertices: MAX_VERTICES,
            strategy: EdgeStrategy::Auto,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CodeGraph {
    pub kind: GraphKind,
    vertices: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for CodeGraph {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.vertices == other.vertices && self.adjacency == other.adjacency
    }
}

impl CodeGraph {
    /// Builds a graph from vertices and an undirected edge list; lists are
    /// symmetrised, sorted and deduplicated.
    pub fn from_edges(
        kind: GraphKind,
        vertices: Vec<Subspace>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<CodeGraph, GraphError> {
        let n = vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::InvalidVertex(a.max(b)));
            }
            if a == b {
                return Err(GraphError::Precondition(format!("loop at vertex {a}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(CodeGraph {
            kind,
            vertices,
            index,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Subspace] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> Result<&Subspace, GraphError> {
        self.vertices.get(id).ok_or(GraphError::InvalidVertex(id))
    }

    pub fn id_of(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&first) if d.iter().all(|&x| x == first) => Some(first),
            _ => None,
        }
    }

    /// A 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = colour[v].expect("coloured");
                for &w in &self.adjacency[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.expect("all coloured")).collect())
    }

    /// A copy with the edge {a, b} removed.
    pub fn without_edge(&self, a: usize, b: usize) -> CodeGraph {
        let mut g = self.clone();
        g.adjacency[a].retain(|&x| x != b);
        g.adjacency[b].retain(|&x| x != a);
        g
    }

    /// The same graph with vertex `i` renamed to `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Result<CodeGraph, GraphError> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(GraphError::Precondition("relabelling is not a permutation".into()));
        }
        let mut vertices = self.vertices.clone();
        for (i, v) in self.vertices.iter().enumerate() {
            vertices[order[i]] = v.clone();
        }
        let edges: Vec<(usize, usize)> = self.edges().map(|(a, b)| (order[a], order[b])).collect();
        CodeGraph::from_edges(self.kind.clone(), vertices, edges)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<String> = self.vertices.iter().map(Subspace::to_text).collect();
        let edges: Vec<[usize; 2]> = self.edges().map(|(a, b)| [a, b]).collect();
        json!({ "params": self.kind, "vertices": vertices, "edges": edges })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let rows: Vec<String> = v
                .basis()
                .row_iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = writeln!(s, "  {i} [label=\"{}\"];", rows.join("\\n"));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(s, "  {a} -- {b};");
        }
        s.push_str("}\n");
        s
    }
}

fn accepts(predicate: Predicate, s: &Subspace) -> Result<bool, GraphError> {
    Ok(match predicate {
        Predicate::All => true,
        // Once n = [k]_q, a projective code uses every point exactly once.
        Predicate::Projective | Predicate::Simplex => is_projective(s)?,
    })
}

/// Builds the graph on all k-subspaces of F_q^n passing `predicate`.
pub fn build_graph(n: usize, k: usize, q: u64, predicate: Predicate) -> Result<CodeGraph, GraphError> {
    build_graph_with(n, k, q, predicate, &BuildOptions::default())
}

pub fn build_graph_with(
    n: usize,
    k: usize,
    q: u64,
    predicate: Predicate,
    opts: &BuildOptions,
) -> Result<CodeGraph, GraphError> {
    let field = Field::with_order(q)?;
    if k == 0 || k > n {
        return Err(GraphError::Precondition(format!(
            "need 1 ≤ k ≤ n, got n = {n}, k = {k}"
        )));
    }
    if predicate == Predicate::Simplex && bracket(k as u32, q) != n as u128 {
        return Err(GraphError::Precondition(format!("simplex codes need n = [{k}]_{q}")));
    }
    let total = gaussian_binomial(n as u32, k as u32, q);
    if total > BigUint::from(opts.max_vertices) {
        return Err(GraphError::GuardExceeded {
            what: "number of subspaces",
            value: total.to_string(),
            limit: opts.max_vertices,
        });
    }
    let mut vertices = Vec::new();
    let mut failure = None;
    for_each_subspace(&field, n, k, |s| {
        if failure.is_some() {
            return;
        }
        match accepts(predicate, &s) {
            Ok(true) => vertices.push(s),
            Ok(false) => {}
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    vertices.sort();
    let kind = GraphKind::Grassmann {
        n,
        k,
        q: field.q(),
        predicate,
    };
    let v = vertices.len() as f64;
    let per_vertex = (bracket(k as u32, q) as f64) * (bracket((n - k + 1) as u32, q) as f64);
    let strategy = match opts.strategy {
        EdgeStrategy::Auto if v / 2.0 <= per_vertex => EdgeStrategy::Pairwise,
        EdgeStrategy::Auto => EdgeStrategy::Generate,
        s => s,
    };
    let edges = match strategy {
        EdgeStrategy::Pairwise => pairwise_edges(&vertices)?,
        _ => generated_edges(&field, n, k, &vertices)?,
    };
    CodeGraph::from_edges(kind, vertices, edges)
}

fn pairwise_edges(vertices: &[Subspace]) -> Result<Vec<(usize, usize)>, GraphError> {
    let mut edges = Vec::new();
    for (a, x) in vertices.iter().enumerate() {
        let k = x.dim();
        for (b, y) in vertices.iter().enumerate().skip(a + 1) {
            if x.intersect_dim(y)? + 1 == k {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}

fn generated_edges(
    field: &crate::gf::Gf,
    n: usize,
    k: usize,
    vertices: &[Subspace],
) -> Result<Vec<(usize, usize)>, GraphError> {
    let index: HashMap<&Subspace, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let full = Subspace::full(field, n);
    let mut edges = Vec::new();
    for (a, x) in vertices.iter().enumerate() {
        for h in x.hyperplanes()? {
            for z in h.superspaces_in(&full, k)? {
                if let Some(&b) = index.get(&z) {
                    if a < b {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    Ok(edges)
}

/// Diameter of a connected graph, `None` if disconnected or empty.
pub fn diameter(g: &CodeGraph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.vertex_count() {
        best = best.max(bfs(g, s).ok()?.eccentricity?);
    }
    (g.vertex_count() > 0).then_some(best)
}
