//! Forbidden and characteristic substructures, each with a witness.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::find_subgraph;
use crate::distance::two_distance_graph;
use crate::generators::{named_graph, NamedGraph};
use crate::graph::{bit, low_mask, Bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("graph contains a 4-cycle {0:?}")]
    ContainsC4(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternReport {
    pub has_c4_subgraph: bool,
    pub has_diamond: bool,
    pub triangles_pairwise_disjoint: bool,
    pub has_induced_claw: bool,
    pub has_c5c3_subgraph: bool,
    /// Witness vertex lists, keyed by pattern name, for the patterns found.
    pub witnesses: BTreeMap<String, Vec<usize>>,
}

/// A 4-cycle subgraph `a-x-b-y-a` (chords allowed), if any.
pub fn c4_witness(g: &Graph) -> Option<Vec<usize>> {
    for a in 0..g.order() {
        for b in a + 1..g.order() {
            let common = g.neighbors(a) & g.neighbors(b);
            if common.count_ones() >= 2 {
                let mut it = Bits(common);
                let (x, y) = (it.next().unwrap(), it.next().unwrap());
                return Some(vec![a, x, b, y]);
            }
        }
    }
    None
}

pub fn has_c4_subgraph(g: &Graph) -> bool {
    c4_witness(g).is_some()
}

/// A diamond `[u, v, x, y]`: edge `u-v` lying in triangles with `x` and `y`.
pub fn diamond_witness(g: &Graph) -> Option<Vec<usize>> {
    g.edges().find_map(|(u, v)| {
        let common = g.neighbors(u) & g.neighbors(v);
        (common.count_ones() >= 2).then(|| {
            let mut it = Bits(common);
            vec![u, v, it.next().unwrap(), it.next().unwrap()]
        })
    })
}

/// Two distinct triangles sharing a vertex, listed as six vertices.
pub fn shared_triangle_witness(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.order() {
        let nb = g.neighbors(v);
        let inner: Vec<(usize, usize)> = Bits(nb)
            .flat_map(|a| Bits(g.neighbors(a) & nb & !low_mask(a + 1)).map(move |b| (a, b)))
            .take(2)
            .collect();
        if let [(a, b), (c, d)] = inner[..] {
            return Some(vec![v, a, b, v, c, d]);
        }
    }
    None
}

pub fn triangles_pairwise_disjoint(g: &Graph) -> bool {
    shared_triangle_witness(g).is_none()
}

fn claw() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).expect("claw")
}

pub fn pattern_report(g: &Graph) -> PatternReport {
    let mut witnesses = BTreeMap::new();
    let mut flag = |name: &str, w: Option<Vec<usize>>| match w {
        Some(w) => {
            witnesses.insert(name.to_string(), w);
            true
        }
        None => false,
    };
    let has_c4_subgraph = flag("c4", c4_witness(g));
    let has_diamond = flag("diamond", diamond_witness(g));
    let triangles_pairwise_disjoint = !flag("shared_triangles", shared_triangle_witness(g));
    let has_induced_claw = flag("induced_claw", find_subgraph(&claw(), g, true));
    let has_c5c3_subgraph = flag("c5c3", find_subgraph(&named_graph(NamedGraph::C5C3), g, false));
    PatternReport {
        has_c4_subgraph,
        has_diamond,
        triangles_pairwise_disjoint,
        has_induced_claw,
        has_c5c3_subgraph,
        witnesses,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// The triangle is the leaf set of an induced claw.
    Claw,
    /// The triangle is every other vertex of an induced 6-cycle.
    C6,
    /// The triangle is every other vertex of a 6-cycle whose only chord joins
    /// two of the other three vertices, which together induce `C5|C3`.
    C5C3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceWitness {
    pub kind: Provenance,
    /// Claw: `[center]`. Six-vertex cases: `[x, m_xy, y, m_yz, z, m_zx]`.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleProvenance {
    pub triangle: [usize; 3],
    /// Empty when no source was found.
    pub sources: Vec<ProvenanceWitness>,
}

/// Explains every triangle of the 2-distance graph of a 4-cycle-free graph
/// by a structure in `g`.
///
/// Triangles with an empty `sources` list are counterexamples to the claim
/// that claws, induced 6-cycles and induced `C5|C3`s account for all of them.
pub fn triangle_provenance(g: &Graph) -> Result<Vec<TriangleProvenance>, PatternError> {
    if let Some(w) = c4_witness(g) {
        return Err(PatternError::ContainsC4(w));
    }
    let g2 = two_distance_graph(g);
    let mut out = Vec::new();
    for x in 0..g.order() {
        for y in Bits(g2.neighbors(x) & !low_mask(x + 1)) {
            for z in Bits(g2.neighbors(x) & g2.neighbors(y) & !low_mask(y + 1)) {
                out.push(TriangleProvenance { triangle: [x, y, z], sources: sources(g, x, y, z) });
            }
        }
    }
    Ok(out)
}

fn sources(g: &Graph, x: usize, y: usize, z: usize) -> Vec<ProvenanceWitness> {
    let mut found = Vec::new();
    let (nx, ny, nz) = (g.neighbors(x), g.neighbors(y), g.neighbors(z));
    for c in Bits(nx & ny & nz) {
        found.push(ProvenanceWitness { kind: Provenance::Claw, vertices: vec![c] });
    }
    let triple = bit(x) | bit(y) | bit(z);
    for a in Bits(nx & ny & !nz) {
        for b in Bits(ny & nz & !nx) {
            for c in Bits(nz & nx & !ny) {
                let mids = bit(a) | bit(b) | bit(c);
                if mids.count_ones() != 3 || mids & triple != 0 {
                    continue;
                }
                // The triple is independent, each midpoint sees exactly its
                // two triple vertices, so only midpoint chords remain.
                let chords = [(a, b), (b, c), (c, a)].iter().filter(|&&(p, q)| g.has_edge(p, q)).count();
                let kind = match chords {
                    0 => Provenance::C6,
                    1 => Provenance::C5C3,
                    _ => continue,
                };
                found.push(ProvenanceWitness { kind, vertices: vec![x, a, y, b, z, c] });
            }
        }
    }
    found
}
