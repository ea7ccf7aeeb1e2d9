//! Incidence graphs of subspaces and isomorphism search for small graphs.
//!
//! Vertices are refined by (degree, sorted neighbour degrees, distance
//! profile) and matched by backtracking, keeping adjacency to every already
//! matched vertex consistent. Graphs are limited to 64 vertices so that a
//! neighbourhood fits in one `u64`.

use std::collections::HashMap;

use crate::gf::Field;
use crate::linalg::subspaces;

use super::{bfs, CodeGraph, GraphError, GraphKind};

pub const MAX_ISOMORPHISM_VERTICES: usize = 64;

/// Bipartite graph of a-subspaces and b-subspaces of F_q^n (a < b), with the
/// a-subspaces first; edges join incident pairs.
pub fn incidence_graph(n: usize, a: usize, b: usize, q: u64) -> Result<CodeGraph, GraphError> {
    if !(a < b && b <= n) {
        return Err(GraphError::Precondition(format!("need a < b ≤ n, got {a}, {b}, {n}")));
    }
    let field = Field::with_order(q)?;
    let lower = subspaces(&field, n, a);
    let upper = subspaces(&field, n, b);
    let offset = lower.len();
    let mut edges = Vec::new();
    for (i, s) in lower.iter().enumerate() {
        for (j, t) in upper.iter().enumerate() {
            if s.is_subspace_of(t)? {
                edges.push((i, offset + j));
            }
        }
    }
    let mut vertices = lower;
    vertices.extend(upper);
    CodeGraph::from_edges(GraphKind::Incidence { n, a, b, q: field.q() }, vertices, edges)
}

/// Points versus planes of PG(3, 2).
pub fn incidence_graph_1_3() -> CodeGraph {
    incidence_graph(4, 1, 3, 2).expect("fixed parameters")
}

type Signature = (usize, Vec<usize>, Vec<usize>);

fn signatures(g: &CodeGraph) -> Vec<Signature> {
    let deg = g.degrees();
    (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| deg[w]).collect();
            nd.sort_unstable();
            let dist = bfs(g, v).expect("valid id").distances;
            let mut profile = vec![0usize; g.vertex_count() + 1];
            for d in dist {
                // Unreachable vertices are counted in the last slot.
                profile[d.unwrap_or(g.vertex_count())] += 1;
            }
            (deg[v], nd, profile)
        })
        .collect()
}

fn masks(g: &CodeGraph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Matching order: rarest signature first, then always the vertex with the
/// most already-ordered neighbours.
fn search_order(g: &CodeGraph, class_size: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], std::cmp::Reverse(class_size[v]), std::cmp::Reverse(v)))
            .expect("vertices left");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

struct Matcher<'a> {
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    adj1: &'a [u64],
    adj2: &'a [u64],
    map: Vec<usize>,
    used: u64,
}

impl Matcher<'_> {
    fn consistent(&self, step: usize, v: usize, c: usize) -> bool {
        self.order[..step]
            .iter()
            .all(|&u| (self.adj1[v] >> u & 1) == (self.adj2[c] >> self.map[u] & 1))
    }

    fn run(&mut self, step: usize) -> bool {
        if step == self.order.len() {
            return true;
        }
        let v = self.order[step];
        for i in 0..self.candidates[v].len() {
            let c = self.candidates[v][i];
            if self.used >> c & 1 == 1 || !self.consistent(step, v, c) {
                continue;
            }
            self.map[v] = c;
            self.used |= 1 << c;
            if self.run(step + 1) {
                return true;
            }
            self.used &= !(1 << c);
        }
        false
    }
}

/// An adjacency-preserving bijection `map` (vertex v of `g1` goes to
/// `map[v]` of `g2`), replay-verified before it is returned.
pub fn isomorphic(g1: &CodeGraph, g2: &CodeGraph) -> Result<Option<Vec<usize>>, GraphError> {
    for g in [g1, g2] {
        if g.vertex_count() > MAX_ISOMORPHISM_VERTICES {
            return Err(GraphError::GuardExceeded {
                what: "vertex count",
                value: g.vertex_count().to_string(),
                limit: MAX_ISOMORPHISM_VERTICES as u64,
            });
        }
    }
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let s1 = signatures(g1);
    let s2 = signatures(g2);
    let mut by_sig: HashMap<&Signature, Vec<usize>> = HashMap::new();
    for (v, s) in s2.iter().enumerate() {
        by_sig.entry(s).or_default().push(v);
    }
    let mut candidates = Vec::with_capacity(n);
    for s in &s1 {
        match by_sig.get(s) {
            Some(c) => candidates.push(c.clone()),
            None => return Ok(None),
        }
    }
    let class_size: Vec<usize> = candidates.iter().map(Vec::len).collect();
    let adj1 = masks(g1);
    let adj2 = masks(g2);
    let mut m = Matcher {
        order: search_order(g1, &class_size),
        candidates,
        adj1: &adj1,
        adj2: &adj2,
        map: vec![usize::MAX; n],
        used: 0,
    };
    if !m.run(0) {
        return Ok(None);
    }
    if !verify_isomorphism(g1, g2, &m.map) {
        return Err(GraphError::Precondition("isomorphism failed replay".into()));
    }
    Ok(Some(m.map))
}

/// Edge-by-edge check that `map` is an isomorphism from `g1` onto `g2`.
pub fn verify_isomorphism(g1: &CodeGraph, g2: &CodeGraph, map: &[usize]) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &t in map {
        if t >= n || std::mem::replace(&mut seen[t], true) {
            return false;
        }
    }
    (0..n).all(|a| (a + 1..n).all(|b| g1.adjacent(a, b) == g2.adjacent(map[a], map[b])))
}
