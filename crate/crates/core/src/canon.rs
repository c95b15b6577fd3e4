//! Canonical labeling, isomorphism testing and small-pattern embedding.
//!
//! Canonical labeling runs an individualization-refinement search: the
//! vertex partition is refined to an equitable ordered partition, a vertex of
//! the first smallest non-singleton cell is individualized, and the search
//! recurses until the partition is discrete. Every discrete leaf fixes a
//! vertex order; the canonical form is the leaf whose upper-triangle adjacency
//! bit string is lexicographically smallest. Automorphisms discovered on the
//! way (two leaves with equal bit strings) prune equivalent subtrees.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::graph::{bit, low_mask, Bits, Graph};

/// Isomorphism-class key: vertex count plus the canonical upper-triangle bit
/// string `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed most-significant-bit
/// first. Two graphs are isomorphic exactly when their keys are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    n: usize,
    bits: Vec<u64>,
}

impl CanonKey {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of bits in the upper triangle, `n(n-1)/2`.
    pub fn bit_len(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i / 64] >> (63 - i % 64) & 1 == 1
    }

    /// The canonical bit string as ASCII `0`/`1`.
    pub fn bit_string(&self) -> String {
        (0..self.bit_len()).map(|i| if self.bit(i) { '1' } else { '0' }).collect()
    }

    /// The canonically labeled graph this key describes.
    pub fn graph(&self) -> Graph {
        let mut adj = vec![0u64; self.n];
        let mut i = 0;
        for j in 1..self.n {
            for k in 0..j {
                if self.bit(i) {
                    adj[j] |= bit(k);
                    adj[k] |= bit(j);
                }
                i += 1;
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    fn from_columns(n: usize, cols: &[u64]) -> CanonKey {
        let len = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; len.div_ceil(64)];
        let mut i = 0;
        for (j, &col) in cols.iter().enumerate().skip(1) {
            for k in 0..j {
                if col & bit(k) != 0 {
                    bits[i / 64] |= 1u64 << (63 - i % 64);
                }
                i += 1;
            }
        }
        CanonKey { n, bits }
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({}; {})", self.n, self.bit_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub key: CanonKey,
    /// `relabeling[v]` is the canonical index of original vertex `v`.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn canonical_graph(&self) -> Graph {
        self.key.graph()
    }
}

/// Ordered partition of the vertex set: `lab` lists vertices by position and
/// bit `p` of `starts` marks position `p` as the first of its cell.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    starts: u64,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        Partition { lab: (0..n).collect(), starts: if n == 0 { 0 } else { 1 } }
    }

    fn n(&self) -> usize {
        self.lab.len()
    }

    fn is_discrete(&self) -> bool {
        self.starts == low_mask(self.n())
    }

    fn cell_end(&self, start: usize) -> usize {
        let later = self.starts & !low_mask(start + 1);
        if later == 0 {
            self.n()
        } else {
            later.trailing_zeros() as usize
        }
    }

    fn cell_mask(&self, start: usize, end: usize) -> u64 {
        self.lab[start..end].iter().fold(0, |acc, &v| acc | bit(v))
    }

    /// First non-singleton cell of minimum size.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for s in Bits(self.starts) {
            let e = self.cell_end(s);
            if e - s > 1 && best.is_none_or(|(bs, be)| e - s < be - bs) {
                best = Some((s, e));
            }
        }
        best
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// splitting against every vertex set in `queue`.
    fn refine(&mut self, g: &Graph, mut queue: VecDeque<u64>) {
        let n = self.n();
        let mut counts = [0u32; 64];
        while let Some(splitter) = queue.pop_front() {
            let mut s = 0;
            while s < n {
                let e = self.cell_end(s);
                if e - s > 1 {
                    let mut uniform = true;
                    for p in s..e {
                        counts[self.lab[p]] = (g.neighbors(self.lab[p]) & splitter).count_ones();
                        uniform &= counts[self.lab[p]] == counts[self.lab[s]];
                    }
                    if !uniform {
                        self.lab[s..e].sort_by_key(|&v| counts[v]);
                        let mut frag = s;
                        for p in s + 1..=e {
                            if p == e || counts[self.lab[p]] != counts[self.lab[p - 1]] {
                                queue.push_back(self.cell_mask(frag, p));
                                if p < e {
                                    self.starts |= bit(p);
                                }
                                frag = p;
                            }
                        }
                        if self.is_discrete() {
                            return;
                        }
                    }
                }
                s = e;
            }
        }
    }

    /// Moves `v` (in the cell starting at `start`) to the front of its cell as
    /// a singleton, then refines.
    fn individualize(&self, g: &Graph, start: usize, v: usize) -> Partition {
        let mut child = self.clone();
        let p = child.lab.iter().position(|&x| x == v).expect("vertex in partition");
        child.lab.swap(start, p);
        child.starts |= bit(start + 1);
        child.refine(g, VecDeque::from([bit(v)]));
        child
    }
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

fn compare_certs(a: &[u64], b: &[u64]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        if x != y {
            // Column bits are read lowest index first.
            let low = (x ^ y) & (x ^ y).wrapping_neg();
            return if x & low == 0 { Ordering::Less } else { Ordering::Greater };
        }
    }
    Ordering::Equal
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let mut pos = [0usize; 64];
        for (p, &v) in lab.iter().enumerate() {
            pos[v] = p;
        }
        (0..n)
            .map(|j| {
                Bits(self.g.neighbors(lab[j]))
                    .map(|w| pos[w])
                    .filter(|&p| p < j)
                    .fold(0u64, |acc, p| acc | bit(p))
            })
            .collect()
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut perm = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            perm[a] = b;
        }
        if perm.iter().enumerate().any(|(i, &p)| i != p) {
            self.automorphisms.push(perm);
        }
    }

    /// Returns the tree level to backtrack to, if an automorphism made the
    /// rest of the current subtree redundant.
    fn leaf(&mut self, part: &Partition, path: &[usize]) -> Option<usize> {
        let cert = self.certificate(&part.lab);
        let Some(first) = &self.first else {
            let leaf = Leaf { cert, lab: part.lab.clone(), path: path.to_vec() };
            self.best = Some(Leaf { cert: leaf.cert.clone(), lab: leaf.lab.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let from = first.lab.clone();
            let jump = common_prefix(path, &first.path);
            self.record_automorphism(&from, &part.lab);
            return Some(jump);
        }
        let best = self.best.as_ref().expect("best leaf set with first");
        match compare_certs(&cert, &best.cert) {
            Ordering::Less => {
                self.best = Some(Leaf { cert, lab: part.lab.clone(), path: path.to_vec() });
                None
            }
            Ordering::Equal => {
                let from = best.lab.clone();
                let jump = common_prefix(path, &best.path);
                self.record_automorphism(&from, &part.lab);
                Some(jump)
            }
            Ordering::Greater => None,
        }
    }

    /// Union-find orbit representatives under the stored automorphisms that
    /// fix every vertex of `path`.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for perm in &self.automorphisms {
            if path.iter().any(|&p| perm[p] != p) {
                continue;
            }
            for (v, &w) in perm.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn run(&mut self, part: &Partition, path: &mut Vec<usize>) -> Option<usize> {
        let Some((start, end)) = part.target_cell() else {
            return self.leaf(part, path);
        };
        let level = path.len();
        let mut candidates = part.lab[start..end].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for w in candidates {
            if !explored.is_empty() && !self.automorphisms.is_empty() {
                let orbit = self.orbits(path);
                if explored.iter().any(|&x| orbit[x] == orbit[w]) {
                    continue;
                }
            }
            explored.push(w);
            let child = part.individualize(self.g, start, w);
            path.push(w);
            let jump = self.run(&child, path);
            path.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }
}

/// Result of a full canonical-labeling search.
pub struct Canonization {
    pub form: CanonicalForm,
    /// Automorphisms found while searching, as vertex maps `v -> perm[v]`.
    pub automorphisms: Vec<Vec<usize>>,
}

pub fn canonize(g: &Graph) -> Canonization {
    let n = g.order();
    let mut root = Partition::unit(n);
    if n > 1 {
        root.refine(g, VecDeque::from([g.vertex_mask()]));
    }
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    search.run(&root, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let mut relabeling = vec![0; n];
    for (p, &v) in best.lab.iter().enumerate() {
        relabeling[v] = p;
    }
    Canonization {
        form: CanonicalForm { key: CanonKey::from_columns(n, &best.cert), relabeling },
        automorphisms: search.automorphisms,
    }
}

/// Deterministic canonical form, invariant under relabeling of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g).form
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canonize(g).form.key
}

/// Checks that `map` is a bijection carrying the edges of `g` exactly onto the
/// edges of `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    g.order() == h.order()
        && crate::graph::is_permutation(map, g.order())
        && g.size() == h.size()
        && g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// Returns an isomorphism `g -> h` (as `map[v_g] = v_h`) when one exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let cg = canonical_form(g);
    let ch = canonical_form(h);
    if cg.key != ch.key {
        return None;
    }
    let mut from_canon = vec![0; h.order()];
    for (v, &c) in ch.relabeling.iter().enumerate() {
        from_canon[c] = v;
    }
    let map: Vec<usize> = cg.relabeling.iter().map(|&c| from_canon[c]).collect();
    assert!(is_isomorphism(g, h, &map), "canonical forms agreed but the composed map is not an isomorphism");
    Some(map)
}

/// Finds an injective map from `pattern` into `host` sending edges to edges
/// and, when `induced` is set, non-edges to non-edges.
pub fn find_subgraph(pattern: &Graph, host: &Graph, induced: bool) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    // Place high-degree vertices first, then whichever has most placed neighbors.
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((pattern.neighbors(v) & placed).count_ones(), pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(next);
        placed |= bit(next);
    }
    let mut map = vec![usize::MAX; k];
    if embed(pattern, host, induced, &order, 0, 0, &mut map) {
        Some(map)
    } else {
        None
    }
}

fn embed(
    pattern: &Graph,
    host: &Graph,
    induced: bool,
    order: &[usize],
    depth: usize,
    used: u64,
    map: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = host.vertex_mask() & !used;
    for &q in &order[..depth] {
        if pattern.has_edge(p, q) {
            cand &= host.neighbors(map[q]);
        } else if induced {
            cand &= !host.neighbors(map[q]);
        }
    }
    for h in Bits(cand) {
        if host.degree(h) < pattern.degree(p) {
            continue;
        }
        map[p] = h;
        if embed(pattern, host, induced, order, depth + 1, used | bit(h), map) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}

/// Checks an embedding produced by [`find_subgraph`].
pub fn is_embedding(pattern: &Graph, host: &Graph, induced: bool, map: &[usize]) -> bool {
    let k = pattern.order();
    if map.len() != k || map.iter().any(|&h| h >= host.order()) {
        return false;
    }
    let image = map.iter().fold(0u64, |acc, &h| acc | bit(h));
    if image.count_ones() as usize != k {
        return false;
    }
    (0..k).all(|u| {
        (u + 1..k).all(|v| {
            let (pe, he) = (pattern.has_edge(u, v), host.has_edge(map[u], map[v]));
            if induced {
                pe == he
            } else {
                !pe || he
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, named_graph, path, NamedGraph};

    #[test]
    fn relabeled_c5_has_same_key() {
        let c5 = cycle(5).unwrap();
        let shuffled = c5.permute(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(canonical_key(&c5), canonical_key(&shuffled));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5).unwrap();
        assert_eq!(canonical_key(&c5), canonical_key(&c5.complement()));
    }

    #[test]
    fn c6_differs_from_two_triangles() {
        let two_triangles = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap()).unwrap();
        assert_ne!(canonical_key(&cycle(6).unwrap()), canonical_key(&two_triangles));
    }

    #[test]
    fn p4_isomorphic_to_complement() {
        let p4 = path(4).unwrap();
        let map = are_isomorphic(&p4, &p4.complement()).unwrap();
        assert!(is_isomorphism(&p4, &p4.complement(), &map));
    }

    #[test]
    fn petersen_not_isomorphic_to_complement() {
        let p = named_graph(NamedGraph::Petersen);
        assert!(are_isomorphic(&p, &p.complement()).is_none());
    }

    #[test]
    fn self_isomorphism_is_found() {
        let g = named_graph(NamedGraph::C5C3);
        let map = are_isomorphic(&g, &g).unwrap();
        assert!(is_isomorphism(&g, &g, &map));
    }

    #[test]
    fn key_round_trips_to_graph() {
        let g = named_graph(NamedGraph::Fig511);
        let form = canonical_form(&g);
        assert_eq!(form.canonical_graph(), g.permute(&form.relabeling).unwrap());
        assert_eq!(canonical_key(&form.canonical_graph()), form.key);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        // Large automorphism groups must be pruned, not enumerated.
        for n in [0, 1, 2, 12, 24] {
            let e = crate::graph::Graph::empty(n).unwrap();
            assert_eq!(canonical_key(&e).graph(), e);
            assert_eq!(canonical_key(&complete(n.max(1)).unwrap()).graph(), complete(n.max(1)).unwrap());
        }
    }

    #[test]
    fn c4_in_diamond() {
        let c4 = cycle(4).unwrap();
        let diamond = named_graph(NamedGraph::Diamond);
        let map = find_subgraph(&c4, &diamond, false).unwrap();
        assert!(is_embedding(&c4, &diamond, false, &map));
        assert!(find_subgraph(&c4, &diamond, true).is_none());
    }

    #[test]
    fn triangle_in_c5_c3() {
        let c3 = cycle(3).unwrap();
        let host = named_graph(NamedGraph::C5C3);
        let map = find_subgraph(&c3, &host, false).unwrap();
        assert!(is_embedding(&c3, &host, false, &map));
        let mut image = map.clone();
        image.sort_unstable();
        assert_eq!(host.induced_subgraph(&image).unwrap().size(), 3);
    }
}
