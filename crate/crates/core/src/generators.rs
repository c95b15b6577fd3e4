//! Reproducible builders for every concrete graph the library works with.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("{0} needs at least one vertex")]
    EmptyFamily(&'static str),
    #[error("({0}, {1}) is not an edge of the {2} graph")]
    NotAnEdge(usize, usize, &'static str),
    #[error("{0} is not a prime congruent to 1 mod 4")]
    BadPaleyOrder(u64),
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Cycle,
    Path,
    Complete,
}

pub fn basic_family(kind: FamilyKind, n: usize) -> Result<Graph, GeneratorError> {
    match kind {
        FamilyKind::Cycle => cycle(n),
        FamilyKind::Path => path(n),
        FamilyKind::Complete => complete(n),
    }
}

/// `C_n` with edges `{i, i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::CycleTooShort(n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

/// `P_n` on `n` vertices with edges `{i-1, i}`.
pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::EmptyFamily("path"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::EmptyFamily("complete graph"));
    }
    Ok(Graph::empty(n)?.complement())
}

/// Glues `h` onto `g` by identifying the edge `h_edge` of `h` with the edge
/// `g_edge` of `g`, first endpoint onto first endpoint.
///
/// Vertices of `g` keep their indices; the remaining vertices of `h` follow in
/// ascending order of their index in `h`.
pub fn edged_product(
    g: &Graph,
    g_edge: (usize, usize),
    h: &Graph,
    h_edge: (usize, usize),
) -> Result<Graph, GeneratorError> {
    let is_edge = |x: &Graph, (a, b): (usize, usize)| a < x.order() && b < x.order() && x.has_edge(a, b);
    if !is_edge(g, g_edge) {
        return Err(GeneratorError::NotAnEdge(g_edge.0, g_edge.1, "first"));
    }
    if !is_edge(h, h_edge) {
        return Err(GeneratorError::NotAnEdge(h_edge.0, h_edge.1, "second"));
    }
    let mut index = vec![0; h.order()];
    let mut next = g.order();
    for (v, slot) in index.iter_mut().enumerate() {
        *slot = if v == h_edge.0 {
            g_edge.0
        } else if v == h_edge.1 {
            g_edge.1
        } else {
            next += 1;
            next - 1
        };
    }
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (index[u], index[v])));
    Ok(Graph::new(next, &edges)?)
}

/// The fixed graphs referred to by name across the library and CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedGraph {
    /// 5-cycle and triangle sharing one edge.
    C5C3,
    /// Two triangles sharing one edge (`K_4` minus an edge).
    Diamond,
    /// Eight-vertex diamond-free self 2-distance graph.
    Fig511,
    /// Nine-vertex diamond-free self 2-distance graph.
    Fig512,
    Petersen,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 5] =
        [NamedGraph::C5C3, NamedGraph::Diamond, NamedGraph::Fig511, NamedGraph::Fig512, NamedGraph::Petersen];

    pub fn id(self) -> &'static str {
        match self {
            NamedGraph::C5C3 => "c5c3",
            NamedGraph::Diamond => "diamond",
            NamedGraph::Fig511 => "fig_5_1_1",
            NamedGraph::Fig512 => "fig_5_1_2",
            NamedGraph::Petersen => "petersen",
        }
    }

    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            // 5-cycle 0-1-2-3-4 plus apex 5 on the edge 0-1.
            NamedGraph::C5C3 => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 5)],
            // Degree-3 vertices 0 and 1.
            NamedGraph::Diamond => &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)],
            // Outer square A..D = 0..3, inner vertices E..H = 4..7. Each inner
            // vertex sits on one side of the square, joined to both corners of
            // that side, and the opposite inner vertices are joined (E-G, F-H).
            NamedGraph::Fig511 => FIG_511,
            // The same graph plus a center vertex 8 joined to E, F, G, H.
            NamedGraph::Fig512 => FIG_512,
            NamedGraph::Petersen => PETERSEN,
        }
    }

    pub fn order(self) -> usize {
        match self {
            NamedGraph::C5C3 => 6,
            NamedGraph::Diamond => 4,
            NamedGraph::Fig511 => 8,
            NamedGraph::Fig512 => 9,
            NamedGraph::Petersen => 10,
        }
    }
}

const FIG_511: &[(usize, usize)] = &[
    (0, 1), (1, 2), (2, 3), (3, 0),
    (0, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 3), (3, 7), (7, 0),
    (4, 6), (5, 7),
];

const FIG_512: &[(usize, usize)] = &[
    (0, 1), (1, 2), (2, 3), (3, 0),
    (0, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 3), (3, 7), (7, 0),
    (4, 6), (5, 7),
    (8, 4), (8, 5), (8, 6), (8, 7),
];

// Kneser graph K(5,2): vertex i is the i-th 2-subset of {0..4} in
// lexicographic order; disjoint subsets are adjacent.
const PETERSEN: &[(usize, usize)] = &[
    (0, 7), (0, 8), (0, 9), (1, 5), (1, 6), (1, 9), (2, 4), (2, 6), (2, 8), (3, 4),
    (3, 5), (3, 7), (4, 9), (5, 8), (6, 7),
];

pub fn named_graph(id: NamedGraph) -> Graph {
    Graph::new(id.order(), id.edges()).expect("named graph tables are valid")
}

/// Embeds `g` as an induced subgraph of a larger graph on `4n + 1` vertices.
///
/// Layout: block 1 = vertices `0..n` (copy of `g`), block 2 = `n..2n` (copy
/// of `g`), block 3 = `2n..3n` (complement of `g`), block 4 = `3n..4n`
/// (complement of `g`), apex = `4n`. The apex is joined to all of blocks 1 and
/// 2, and blocks 1-3, 2-4 and 3-4 are completely joined.
pub fn prop23_construction(g: &Graph) -> Result<Graph, GeneratorError> {
    let n = g.order();
    let total = 4 * n + 1;
    let gc = g.complement();
    let apex = 4 * n;
    let mut edges = Vec::new();
    for (block, part) in [g, g, &gc, &gc].into_iter().enumerate() {
        edges.extend(part.edges().map(|(u, v)| (block * n + u, block * n + v)));
    }
    for v in 0..n {
        edges.push((apex, v));
        edges.push((apex, n + v));
    }
    for (a, b) in [(0, 2), (1, 3), (2, 3)] {
        for u in 0..n {
            for v in 0..n {
                edges.push((a * n + u, b * n + v));
            }
        }
    }
    Ok(Graph::new(total, &edges)?)
}

pub(crate) fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Paley graph on the integers mod a prime `q ≡ 1 (mod 4)`.
pub fn paley(q: u64) -> Result<Graph, GeneratorError> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(GeneratorError::BadPaleyOrder(q));
    }
    let n = q as usize;
    let mut residue = vec![false; n];
    for x in 1..q {
        residue[((x * x) % q) as usize] = true;
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| residue[b - a])
        .collect();
    Ok(Graph::new(n, &edges)?)
}

/// Erdős–Rényi graph `G(n, p)` determined by `(n, p, seed)`.
///
/// The stream is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`. Pairs
/// are visited in graph6 order (`(0,1), (0,2), (1,2), (0,3), ...`); each pair
/// draws one `u64` `x` and becomes an edge when `(x >> 11) * 2^-53 < p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if x < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}
