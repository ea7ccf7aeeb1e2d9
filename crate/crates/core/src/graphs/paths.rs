//! Breadth-first search and shortest-path counting.

use std::collections::VecDeque;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{CodeGraph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub source: usize,
    /// Hop count to every vertex; `None` when unreachable.
    pub distances: Vec<Option<usize>>,
    /// Largest distance, `None` if some vertex is unreachable.
    pub eccentricity: Option<usize>,
}

pub fn bfs(g: &CodeGraph, source: usize) -> Result<DistanceReport, GraphError> {
    g.vertex(source)?;
    let (distances, order) = layers(g, source);
    let eccentricity = if order.len() == g.vertex_count() {
        order.last().and_then(|&v| distances[v])
    } else {
        None
    };
    Ok(DistanceReport {
        source,
        distances,
        eccentricity,
    })
}

/// Distances from `source` and the vertices in the order they were reached.
fn layers(g: &CodeGraph, source: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let mut dist = vec![None; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut queue = VecDeque::from([source]);
    dist[source] = Some(0);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let d = dist[v].expect("queued vertices have a distance");
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    (dist, order)
}

/// Distances and numbers of shortest paths from one source to every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestPaths {
    pub source: usize,
    pub distances: Vec<Option<usize>>,
    counts: Counts,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Counts {
    Small(Vec<u128>),
    Big(Vec<BigUint>),
}

impl ShortestPaths {
    /// Number of shortest paths to `v` (0 if unreachable).
    pub fn count(&self, v: usize) -> BigUint {
        match &self.counts {
            Counts::Small(c) => BigUint::from(c[v]),
            Counts::Big(c) => c[v].clone(),
        }
    }

    /// `count(v) >= bound`, without allocating in the common case.
    pub fn count_at_least(&self, v: usize, bound: &BigUint) -> bool {
        match &self.counts {
            Counts::Small(c) => BigUint::from(c[v]) >= *bound,
            Counts::Big(c) => c[v] >= *bound,
        }
    }

    /// Count as a u128 if it fits.
    pub fn count_u128(&self, v: usize) -> Option<u128> {
        match &self.counts {
            Counts::Small(c) => Some(c[v]),
            Counts::Big(c) => u128::try_from(&c[v]).ok(),
        }
    }
}

/// Layered dynamic programming over the BFS order: the number of shortest
/// paths to w is the sum over neighbours one layer closer.
pub fn shortest_paths(g: &CodeGraph, source: usize) -> Result<ShortestPaths, GraphError> {
    g.vertex(source)?;
    let (distances, order) = layers(g, source);
    let counts = match small_counts(g, source, &distances, &order) {
        Some(c) => Counts::Small(c),
        None => Counts::Big(big_counts(g, source, &distances, &order)),
    };
    Ok(ShortestPaths {
        source,
        distances,
        counts,
    })
}

fn small_counts(g: &CodeGraph, source: usize, dist: &[Option<usize>], order: &[usize]) -> Option<Vec<u128>> {
    let mut c = vec![0u128; g.vertex_count()];
    c[source] = 1;
    for &v in &order[1..] {
        let d = dist[v]?;
        let mut acc = 0u128;
        for &u in g.neighbors(v) {
            if dist[u] == Some(d - 1) {
                acc = acc.checked_add(c[u])?;
            }
        }
        c[v] = acc;
    }
    Some(c)
}

fn big_counts(g: &CodeGraph, source: usize, dist: &[Option<usize>], order: &[usize]) -> Vec<BigUint> {
    let mut c = vec![BigUint::default(); g.vertex_count()];
    c[source] = BigUint::from(1u32);
    for &v in &order[1..] {
        let d = dist[v].expect("reached");
        let mut acc = BigUint::default();
        for &u in g.neighbors(v) {
            if dist[u] == Some(d - 1) {
                acc += &c[u];
            }
        }
        c[v] = acc;
    }
    c
}

/// Exact number of geodesics between `x` and `y`.
pub fn count_geodesics(g: &CodeGraph, x: usize, y: usize) -> Result<BigUint, GraphError> {
    g.vertex(y)?;
    let sp = shortest_paths(g, x)?;
    if sp.distances[y].is_none() {
        return Err(GraphError::Disconnected(x, y));
    }
    Ok(sp.count(y))
}
