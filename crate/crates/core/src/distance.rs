//! The k-distance operator, the self 2-distance predicate, and the
//! line-graph edge-count identity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::are_isomorphic;
use crate::graph::{bit, Bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("distance must be at least 1")]
    ZeroDistance,
}

/// Graph on the same vertices joining pairs at shortest-path distance exactly
/// `k` in `g`. Pairs in different components are never joined.
pub fn distance_graph(g: &Graph, k: usize) -> Result<Graph, DistanceError> {
    if k == 0 {
        return Err(DistanceError::ZeroDistance);
    }
    if k == 1 {
        return Ok(g.clone());
    }
    let adj = (0..g.order())
        .map(|v| g.distance_layers(v).get(k).copied().unwrap_or(0))
        .collect();
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// The 2-distance graph, computed directly from neighborhoods.
pub fn two_distance_graph(g: &Graph) -> Graph {
    let adj = (0..g.order())
        .map(|v| {
            let reach = Bits(g.neighbors(v)).fold(0u64, |acc, u| acc | g.neighbors(u));
            reach & !g.neighbors(v) & !bit(v)
        })
        .collect();
    Graph::from_adjacency_unchecked(adj)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfDistanceResult {
    pub holds: bool,
    /// Isomorphism from the graph onto its 2-distance graph, `witness[v]`
    /// being the image of `v`.
    pub witness: Option<Vec<usize>>,
}

/// Whether `g` is isomorphic to its own 2-distance graph.
///
/// The predicate is literal: edgeless graphs are fixed points.
pub fn is_self_two_distance(g: &Graph) -> SelfDistanceResult {
    let g2 = two_distance_graph(g);
    let witness = are_isomorphic(g, &g2);
    SelfDistanceResult { holds: witness.is_some(), witness }
}

/// Cheap yes/no form used by the search drivers.
pub(crate) fn self_two_distance_quick(g: &Graph) -> bool {
    let g2 = two_distance_graph(g);
    if g2.size() != g.size() {
        return false;
    }
    are_isomorphic(g, &g2).is_some()
}

/// Terms of the identity relating the line graph, the 2-distance graph and
/// codegrees.
///
/// Counting pairs of edges that share an endpoint gives
/// `e_line = 3·triangles + Σ_{u≁v} |N(u) ∩ N(v)|`, and splitting all vertex
/// pairs by distance gives `pairs_total = e + e_gamma2 + far_pairs`. The
/// uncorrected form drops `far_pairs` and so only holds at diameter ≤ 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeIdentityReport {
    pub e_line: u64,
    pub e_gamma2: u64,
    pub e: u64,
    pub triangles: u64,
    pub pairs_total: u64,
    pub codegree_nonadjacent_sum: u64,
    /// Unordered pairs at distance at least 3, including disconnected pairs.
    pub far_pairs: u64,
    pub c4_free: bool,
}

impl EdgeIdentityReport {
    /// `e_gamma2 + e + 3·triangles − pairs_total + codegree_nonadjacent_sum`.
    pub fn uncorrected_rhs(&self) -> i64 {
        self.e_gamma2 as i64 + self.e as i64 + 3 * self.triangles as i64 - self.pairs_total as i64
            + self.codegree_nonadjacent_sum as i64
    }

    pub fn corrected_rhs(&self) -> i64 {
        self.uncorrected_rhs() + self.far_pairs as i64
    }

    pub fn uncorrected_holds(&self) -> bool {
        self.e_line as i64 == self.uncorrected_rhs()
    }

    pub fn corrected_holds(&self) -> bool {
        self.e_line as i64 == self.corrected_rhs()
    }

    /// `e_line = e_gamma2 + 3·triangles`, expected whenever `c4_free`.
    pub fn c4_free_form_holds(&self) -> bool {
        self.e_line == self.e_gamma2 + 3 * self.triangles
    }
}

pub fn edge_identity_report(g: &Graph) -> EdgeIdentityReport {
    let n = g.order() as u64;
    let e_line = (0..g.order()).map(|v| {
        let d = g.degree(v) as u64;
        d * d.saturating_sub(1) / 2
    });
    let mut codegree_nonadjacent_sum = 0;
    let mut far_pairs = 0;
    let g2 = two_distance_graph(g);
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.has_edge(u, v) {
                continue;
            }
            let c = g.codegree(u, v) as u64;
            codegree_nonadjacent_sum += c;
            if c == 0 {
                far_pairs += 1;
            }
        }
    }
    EdgeIdentityReport {
        e_line: e_line.sum(),
        e_gamma2: g2.size() as u64,
        e: g.size() as u64,
        triangles: g.triangle_count() as u64,
        pairs_total: n * n.saturating_sub(1) / 2,
        codegree_nonadjacent_sum,
        far_pairs,
        c4_free: !crate::patterns::has_c4_subgraph(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, named_graph, path, NamedGraph};

    #[test]
    fn two_distance_of_c5_is_c5() {
        let c5 = cycle(5).unwrap();
        let g2 = distance_graph(&c5, 2).unwrap();
        assert!(are_isomorphic(&g2, &c5).is_some());
        assert_eq!(g2, two_distance_graph(&c5));
    }

    #[test]
    fn two_distance_of_c4_is_diagonals() {
        let g2 = distance_graph(&cycle(4).unwrap(), 2).unwrap();
        assert_eq!(g2, Graph::new(4, &[(0, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn two_distance_of_complete_is_edgeless() {
        assert_eq!(distance_graph(&complete(4).unwrap(), 2).unwrap(), Graph::empty(4).unwrap());
    }

    #[test]
    fn two_distance_of_c6_is_two_triangles() {
        let g2 = distance_graph(&cycle(6).unwrap(), 2).unwrap();
        assert_eq!(g2, Graph::new(6, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (5, 1)]).unwrap());
    }

    #[test]
    fn higher_distances_and_zero() {
        assert_eq!(distance_graph(&path(4).unwrap(), 3).unwrap(), Graph::new(4, &[(0, 3)]).unwrap());
        assert_eq!(distance_graph(&path(4).unwrap(), 4).unwrap().size(), 0);
        assert_eq!(distance_graph(&path(4).unwrap(), 0), Err(DistanceError::ZeroDistance));
    }

    #[test]
    fn self_two_distance_examples() {
        for g in [cycle(7).unwrap(), named_graph(NamedGraph::C5C3), Graph::empty(4).unwrap()] {
            let r = is_self_two_distance(&g);
            assert!(r.holds, "{g:?}");
            let w = r.witness.unwrap();
            assert!(crate::canon::is_isomorphism(&g, &two_distance_graph(&g), &w));
        }
        assert!(!is_self_two_distance(&cycle(4).unwrap()).holds);
    }

    #[test]
    fn identity_on_triangle() {
        let r = edge_identity_report(&cycle(3).unwrap());
        assert_eq!((r.e_line, r.e_gamma2, r.triangles, r.far_pairs), (3, 0, 1, 0));
        assert_eq!(r.corrected_rhs(), 3);
        assert!(r.uncorrected_holds() && r.corrected_holds());
    }

    #[test]
    fn identity_on_p4_needs_correction() {
        let r = edge_identity_report(&path(4).unwrap());
        assert_eq!((r.e_line, r.e_gamma2, r.far_pairs), (2, 2, 1));
        assert_eq!(r.uncorrected_rhs(), 1);
        assert!(!r.uncorrected_holds());
        assert!(r.corrected_holds());
    }

    #[test]
    fn identity_on_c4() {
        let r = edge_identity_report(&cycle(4).unwrap());
        assert_eq!((r.e_line, r.e_gamma2, r.codegree_nonadjacent_sum, r.far_pairs), (4, 2, 4, 0));
        assert!(!r.c4_free);
        assert!(r.corrected_holds() && r.uncorrected_holds());
    }
}
