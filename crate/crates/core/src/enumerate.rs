//! Isomorph-free generation of small graphs by canonical augmentation, and
//! the sharded search for self 2-distance graphs built on it.
//!
//! Every graph on `k + 1` vertices has one designated vertex `m(C)`: among the
//! eligible vertices (non-cut vertices when only connected graphs are wanted,
//! all vertices otherwise) of minimum degree, the one with the largest
//! canonical index. Its canonical parent is `C - m(C)`. A child built from a
//! parent representative by adding a vertex is kept only when its canonical
//! parent is that representative's class, so each class has exactly one
//! parent class; duplicates inside one parent are removed by canonical key.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_key, canonize, CanonKey};
use crate::distance::self_two_distance_quick;
use crate::graph::{bit, low_mask, Bits, Graph, MAX_VERTICES};
use crate::graph6;
use crate::patterns::{diamond_witness, has_c4_subgraph, triangles_pairwise_disjoint};

pub const DEFAULT_CEILING: usize = 10;
/// Ceiling for searches restricted to one regular degree, where degree
/// pruning keeps the tree small.
pub const DEFAULT_REGULAR_CEILING: usize = 16;
pub const CERTIFICATE_SCHEMA: &str = "dg.search_certificate.v1";
pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n = {n} is above the enumeration ceiling {ceiling}")]
    AboveCeiling { n: usize, ceiling: usize },
    #[error("shard count must be at least 1")]
    NoShards,
    #[error("could not start the worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchFilter {
    pub connected_only: bool,
    /// Orders below this produce no classes.
    pub min_n: usize,
    pub regular_degree: Option<usize>,
    pub require_c4_free: bool,
    pub require_diamond_free: bool,
    pub require_disjoint_triangles: bool,
}

impl SearchFilter {
    pub fn connected() -> SearchFilter {
        SearchFilter { connected_only: true, ..SearchFilter::default() }
    }

    /// Number of classification flags set (`c4`, diamond, disjoint triangles).
    pub fn classification_flags(&self) -> usize {
        [self.require_c4_free, self.require_diamond_free, self.require_disjoint_triangles]
            .iter()
            .filter(|&&f| f)
            .count()
    }

    /// Full predicate on a finished graph.
    pub fn accepts(&self, g: &Graph) -> bool {
        g.order() >= self.min_n
            && (!self.connected_only || g.is_connected())
            && self.regular_degree.is_none_or(|d| g.is_regular() == Some(d))
            && (!self.require_c4_free || !has_c4_subgraph(g))
            && (!self.require_diamond_free || diamond_witness(g).is_none())
            && (!self.require_disjoint_triangles || triangles_pairwise_disjoint(g))
    }

    /// Whether adding a vertex joined to `s` to a graph `g` that satisfies
    /// the hereditary filters can still satisfy them.
    fn extension_ok(&self, g: &Graph, s: u64) -> bool {
        if self.require_c4_free && (0..g.order()).any(|u| (g.neighbors(u) & s).count_ones() > 1) {
            return false;
        }
        if self.require_diamond_free {
            for a in Bits(s) {
                let inside = g.neighbors(a) & s;
                if inside.count_ones() > 1 {
                    return false;
                }
                if Bits(inside).any(|b| g.neighbors(a) & g.neighbors(b) != 0) {
                    return false;
                }
            }
        }
        if let Some(d) = self.regular_degree {
            if s.count_ones() as usize > d || Bits(s).any(|u| g.degree(u) >= d) {
                return false;
            }
        }
        true
    }

    /// Checks on a child on `k` vertices that must hold for it to have a
    /// descendant on `target` vertices passing the filter.
    fn intermediate_ok(&self, c: &Graph, target: usize) -> bool {
        if self.require_disjoint_triangles && !triangles_pairwise_disjoint(c) {
            return false;
        }
        if let Some(d) = self.regular_degree {
            let deficit: usize = c.degrees().iter().map(|&x| d - x).sum();
            if deficit > d * (target - c.order()) {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub ceiling: usize,
    pub regular_ceiling: usize,
    pub shards: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { ceiling: DEFAULT_CEILING, regular_ceiling: DEFAULT_REGULAR_CEILING, shards: 1 }
    }
}

impl EnumerationConfig {
    pub fn with_shards(shards: usize) -> EnumerationConfig {
        EnumerationConfig { shards, ..EnumerationConfig::default() }
    }

    pub fn ceiling_for(&self, filter: &SearchFilter) -> usize {
        match filter.regular_degree {
            Some(_) => self.ceiling.max(self.regular_ceiling),
            None => self.ceiling,
        }
        .min(MAX_VERTICES)
    }

    fn check(&self, n: usize, filter: &SearchFilter) -> Result<(), EnumerateError> {
        let ceiling = self.ceiling_for(filter);
        if n > ceiling {
            return Err(EnumerateError::AboveCeiling { n, ceiling });
        }
        if self.shards == 0 {
            return Err(EnumerateError::NoShards);
        }
        Ok(())
    }
}

struct Node {
    graph: Graph,
    key: CanonKey,
}

struct Generator<'a> {
    filter: &'a SearchFilter,
    target: usize,
}

impl Generator<'_> {
    fn root(&self) -> Node {
        let graph = Graph::empty(0).expect("null graph");
        Node { key: canonical_key(&graph), graph }
    }

    fn children(&self, parent: &Node) -> Vec<Node> {
        let g = &parent.graph;
        let k = g.order();
        let v = k;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for s in 0..=low_mask(k) {
            if self.filter.connected_only && k > 0 && s == 0 {
                continue;
            }
            if !self.filter.extension_ok(g, s) {
                continue;
            }
            let d = s.count_ones() as usize;
            let c = g.with_new_vertex(s);
            if !self.min_degree_ok(&c, d) || !self.filter.intermediate_ok(&c, self.target) {
                continue;
            }
            let canon = canonize(&c);
            let m = self.designated_vertex(&c, &canon.form.relabeling);
            if m != v && canonical_key(&c.delete_vertex(m)) != parent.key {
                continue;
            }
            if seen.insert(canon.form.key.clone()) {
                out.push(Node { graph: c, key: canon.form.key });
            }
        }
        out
    }

    /// The new vertex (degree `d`) must have minimum degree among eligible
    /// vertices to be the designated one.
    fn min_degree_ok(&self, c: &Graph, d: usize) -> bool {
        let lower = (0..c.order()).filter(|&u| c.degree(u) < d).fold(0u64, |acc, u| acc | bit(u));
        if lower == 0 {
            return true;
        }
        self.filter.connected_only && lower & !c.cut_vertices() == 0
    }

    fn designated_vertex(&self, c: &Graph, relabeling: &[usize]) -> usize {
        let eligible = if self.filter.connected_only { c.vertex_mask() & !c.cut_vertices() } else { c.vertex_mask() };
        let min = Bits(eligible).map(|u| c.degree(u)).min().expect("a graph has a non-cut vertex");
        Bits(eligible)
            .filter(|&u| c.degree(u) == min)
            .max_by_key(|&u| relabeling[u])
            .expect("nonempty")
    }

    fn descend<F: FnMut(&Node)>(&self, node: &Node, visit: &mut F) {
        if node.graph.order() == self.target {
            if self.filter.accepts(&node.graph) {
                visit(node);
            }
            return;
        }
        for child in self.children(node) {
            self.descend(&child, visit);
        }
    }
}

/// Visits one representative of every isomorphism class on `n` vertices that
/// passes `filter`, then returns how many were visited.
///
/// Uses the default ceiling and a single thread; visiting order is
/// deterministic.
pub fn enumerate_graphs<F: FnMut(&Graph, &CanonKey)>(
    n: usize,
    filter: &SearchFilter,
    mut visitor: F,
) -> Result<u64, EnumerateError> {
    let config = EnumerationConfig::default();
    config.check(n, filter)?;
    if n < filter.min_n {
        return Ok(0);
    }
    let gen = Generator { filter, target: n };
    let mut count = 0;
    gen.descend(&gen.root(), &mut |node: &Node| {
        count += 1;
        visitor(&node.graph, &node.key);
    });
    Ok(count)
}

/// Sharded form of [`enumerate_graphs`]. `map` runs on worker threads; the
/// values it returns are collected and sorted by canonical key, so the result
/// does not depend on the shard count.
pub fn enumerate_map<T, F>(
    n: usize,
    filter: &SearchFilter,
    config: &EnumerationConfig,
    map: F,
) -> Result<(u64, Vec<(CanonKey, T)>), EnumerateError>
where
    T: Send,
    F: Fn(&Graph, &CanonKey) -> Option<T> + Sync,
{
    config.check(n, filter)?;
    if n < filter.min_n {
        return Ok((0, Vec::new()));
    }
    let gen = Generator { filter, target: n };
    let run_subtree = |node: &Node| {
        let mut count = 0u64;
        let mut found = Vec::new();
        gen.descend(node, &mut |leaf: &Node| {
            count += 1;
            if let Some(t) = map(&leaf.graph, &leaf.key) {
                found.push((leaf.key.clone(), t));
            }
        });
        (count, found)
    };
    let (count, mut found) = if config.shards == 1 {
        run_subtree(&gen.root())
    } else {
        let frontier = split_frontier(&gen, config.shards);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.shards)
            .build()
            .map_err(|e| EnumerateError::Pool(e.to_string()))?;
        pool.install(|| {
            frontier.par_iter().map(run_subtree).reduce(
                || (0, Vec::new()),
                |(ca, mut fa), (cb, fb)| {
                    fa.extend(fb);
                    (ca + cb, fa)
                },
            )
        })
    };
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((count, found))
}

/// Expands the tree breadth-first until there are enough subtrees to keep
/// every shard busy.
fn split_frontier(gen: &Generator, shards: usize) -> Vec<Node> {
    let mut frontier = vec![gen.root()];
    while frontier.len() < 16 * shards && frontier[0].graph.order() + 1 < gen.target {
        frontier = frontier.iter().flat_map(|node| gen.children(node)).collect();
        if frontier.is_empty() {
            break;
        }
    }
    frontier
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchCertificate {
    pub schema: String,
    pub n: usize,
    pub filter: SearchFilter,
    pub classes_scanned: u64,
    /// Canonically labeled hits in graph6, sorted by canonical key.
    pub hits: Vec<String>,
    /// Edgeless hits, which are fixed points of the 2-distance operator.
    pub degenerate_hits: Vec<String>,
    /// Seconds.
    pub wall_time: f64,
    pub shard_count: usize,
    pub tool_version: String,
}

impl SearchCertificate {
    /// The certificate with its run-dependent fields cleared.
    pub fn without_timing(&self) -> SearchCertificate {
        SearchCertificate { wall_time: 0.0, shard_count: 0, ..self.clone() }
    }
}

pub(crate) fn canonical_graph6(key: &CanonKey) -> String {
    graph6::encode(&key.graph()).expect("enumerated graphs are within graph6 range")
}

/// All classes on `n` vertices passing `filter` that are isomorphic to their
/// own 2-distance graph.
pub fn search_self_two_distance(
    n: usize,
    filter: &SearchFilter,
    config: &EnumerationConfig,
) -> Result<SearchCertificate, EnumerateError> {
    let start = Instant::now();
    let (classes_scanned, found) =
        enumerate_map(n, filter, config, |g, _| self_two_distance_quick(g).then_some(g.size() == 0))?;
    let mut hits = Vec::new();
    let mut degenerate_hits = Vec::new();
    for (key, edgeless) in found {
        if edgeless {
            degenerate_hits.push(canonical_graph6(&key));
        } else {
            hits.push(canonical_graph6(&key));
        }
    }
    Ok(SearchCertificate {
        schema: CERTIFICATE_SCHEMA.to_string(),
        n,
        filter: filter.clone(),
        classes_scanned,
        hits,
        degenerate_hits,
        wall_time: start.elapsed().as_secs_f64(),
        shard_count: config.shards,
        tool_version: TOOL_VERSION.to_string(),
    })
}

/// Class counts per order, for quick cross-checks.
pub fn class_counts(
    orders: impl IntoIterator<Item = usize>,
    filter: &SearchFilter,
    config: &EnumerationConfig,
) -> Result<BTreeMap<usize, u64>, EnumerateError> {
    orders
        .into_iter()
        .map(|n| enumerate_map(n, filter, config, |_, _| None::<()>).map(|(c, _)| (n, c)))
        .collect()
}
