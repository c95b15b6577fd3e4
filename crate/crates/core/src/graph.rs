//! The graph value type and the elementary metrics built on it.
//!
//! Vertices are dense indices `0..n` and adjacency is stored as one `u64`
//! bit mask per vertex, which caps graphs at [`MAX_VERTICES`] vertices.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("vertex list is not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse
    /// to a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from per-vertex neighbor masks, validating the result.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        for (v, &row) in adj.iter().enumerate() {
            if row & !low_mask(n) != 0 {
                let vertex = (row & !low_mask(n)).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::Loop(v));
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbor set of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edge `{u, v}` is present exactly when it is absent from `self`.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `vs`, relabeled `0..|vs|` by ascending original index.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph, GraphError> {
        let mut mask = 0u64;
        for &v in vs {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            mask |= bit(v);
        }
        Ok(self.induced_by_mask(mask))
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let kept: Vec<usize> = Bits(mask).collect();
        let adj = kept
            .iter()
            .map(|&v| {
                let row = self.adj[v] & mask;
                // Compress the row onto the kept positions.
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &u)| row & bit(u) != 0)
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Graph { n: kept.len(), adj }
    }

    /// Graph with vertex `v` removed; later vertices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_by_mask(self.vertex_mask() & !bit(v))
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if !is_permutation(perm, self.n) {
            return Err(GraphError::NotAPermutation(self.n));
        }
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = Bits(row).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Adds a new vertex `n` adjacent to the vertices in `neighbors`.
    pub(crate) fn with_new_vertex(&self, neighbors: u64) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        let v = self.n;
        let mut adj = self.adj.clone();
        for u in Bits(neighbors) {
            adj[u] |= bit(v);
        }
        adj.push(neighbors);
        Graph { n: v + 1, adj }
    }

    /// Vertices reachable from `start` within the vertex set `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Breadth-first layers from `source`: `layers[d]` holds the vertices at
    /// distance exactly `d`.
    pub fn distance_layers(&self, source: usize) -> Vec<u64> {
        let mut layers = vec![bit(source)];
        let mut seen = bit(source);
        loop {
            let mut next = 0;
            for v in Bits(*layers.last().unwrap()) {
                next |= self.adj[v];
            }
            next &= !seen;
            if next == 0 {
                return layers;
            }
            seen |= next;
            layers.push(next);
        }
    }

    /// All-pairs shortest-path distances, `None` between components.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<u32>>> {
        (0..self.n)
            .map(|s| {
                let mut row = vec![None; self.n];
                for (d, layer) in self.distance_layers(s).into_iter().enumerate() {
                    for v in Bits(layer) {
                        row[v] = Some(d as u32);
                    }
                }
                row
            })
            .collect()
    }

    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|(u, v)| (self.adj[u] & self.adj[v] & !low_mask(v + 1)).count_ones() as usize)
            .sum()
    }

    /// Number of common neighbors of `u` and `v`.
    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v]).count_ones() as usize
    }

    /// Cut vertices, found by the low-link depth-first search.
    pub fn cut_vertices(&self) -> u64 {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = 0u64;
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Explicit stack of (vertex, parent, remaining neighbors).
            let mut stack = vec![(root, usize::MAX, self.adj[root])];
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            while let Some(top) = stack.last_mut() {
                let (v, parent, rest) = *top;
                if rest == 0 {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            cut |= bit(p);
                        }
                    }
                    continue;
                }
                let w = rest.trailing_zeros() as usize;
                top.2 &= rest - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, self.adj[w]));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            }
            if root_children >= 2 {
                cut |= bit(root);
            }
        }
        cut
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.cut_vertices() == 0
    }

    pub fn diameter(&self) -> ExtNat {
        if !self.is_connected() {
            return ExtNat::Infinite;
        }
        let ecc = (0..self.n)
            .map(|s| self.distance_layers(s).len() - 1)
            .max()
            .unwrap_or(0);
        ExtNat::Finite(ecc as u64)
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> ExtNat {
        let mut best = usize::MAX;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] >= best {
                    break;
                }
                for w in Bits(self.adj[v]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            ExtNat::Infinite
        } else {
            ExtNat::Finite(best as u64)
        }
    }

    pub fn metrics(&self) -> MetricsReport {
        let mut degree_histogram = BTreeMap::new();
        for v in 0..self.n {
            *degree_histogram.entry(self.degree(v)).or_insert(0) += 1;
        }
        MetricsReport {
            diameter: self.diameter(),
            girth: self.girth(),
            triangle_count: self.triangle_count(),
            max_degree: self.max_degree(),
            degree_histogram,
            component_count: self.components().len(),
            two_connected: self.is_two_connected(),
        }
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = 0u64;
    perm.iter().all(|&p| {
        let fresh = p < n && seen & bit(p) == 0;
        if p < n {
            seen |= bit(p);
        }
        fresh
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A natural number or infinity, for distances in disconnected graphs and the
/// girth of forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinite => None,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinite => write!(f, "infinity"),
        }
    }
}

// Serialized as a JSON number, or the string "infinity".
impl Serialize for ExtNat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Finite(v) => s.serialize_u64(*v),
            ExtNat::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(ExtNat::Finite(v)),
            Repr::Text(t) if t == "infinity" => Ok(ExtNat::Infinite),
            Repr::Text(t) => Err(serde::de::Error::custom(format!("expected number or \"infinity\", got {t:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub diameter: ExtNat,
    pub girth: ExtNat,
    pub triangle_count: usize,
    pub max_degree: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub component_count: usize,
    pub two_connected: bool,
}
