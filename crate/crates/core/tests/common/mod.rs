//! Slow reference implementations used as test oracles. None of them share
//! code with the library beyond the `Graph` container.

#![allow(dead_code)]

use dg_core::Graph;

/// All upper-triangle pairs in graph6 order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Labeled graph whose edge set is given by the low bits of `code`.
pub fn labeled(n: usize, code: u64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, p)| p).collect();
    Graph::new(n, &edges).unwrap()
}

/// Heap's algorithm, calling `f` on every permutation of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn edge_code(g: &Graph, perm: &[usize]) -> u64 {
    pairs(g.order())
        .into_iter()
        .enumerate()
        .filter(|&(_, (i, j))| g.has_edge(perm[i], perm[j]))
        .fold(0, |acc, (k, _)| acc | 1 << k)
}

/// Smallest edge code over all relabelings.
pub fn brute_canonical_code(g: &Graph) -> u64 {
    let mut best = u64::MAX;
    for_each_permutation(g.order(), |p| best = best.min(edge_code(g, p)));
    best
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let target = edge_code(h, &(0..h.order()).collect::<Vec<_>>());
    let mut found = false;
    for_each_permutation(g.order(), |p| found |= edge_code(g, p) == target);
    found
}

/// Floyd–Warshall distances; `None` for unreachable pairs.
pub fn brute_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        for (v, cell) in row.iter_mut().enumerate() {
            if u == v {
                *cell = Some(0);
            } else if g.has_edge(u, v) {
                *cell = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn brute_connected(g: &Graph) -> bool {
    let d = brute_distances(g);
    d.iter().all(|row| row.iter().all(Option::is_some))
}

pub fn brute_two_distance(g: &Graph) -> Graph {
    let d = brute_distances(g);
    let n = g.order();
    let edges: Vec<_> = pairs(n).into_iter().filter(|&(i, j)| d[i][j] == Some(2)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Number of automorphisms, by backtracking over adjacency-consistent
/// partial maps.
pub fn automorphism_count(g: &Graph) -> u64 {
    fn extend(g: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let v = map.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.order() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                total += extend(g, map, used);
                used[w] = false;
                map.pop();
            }
        }
        total
    }
    extend(g, &mut Vec::new(), &mut vec![false; g.order()])
}

/// Labeled `d`-regular graphs on `n` vertices, optionally only connected ones,
/// counted by filling vertex rows in order.
pub fn labeled_regular_count(n: usize, d: usize, connected_only: bool) -> u64 {
    fn fill(adj: &mut Vec<u64>, deg: &mut Vec<usize>, n: usize, d: usize, v: usize, from: usize, connected: bool) -> u64 {
        if v == n {
            if connected {
                let g = Graph::from_adjacency(adj.clone()).unwrap();
                return g.is_connected() as u64;
            }
            return 1;
        }
        if deg[v] == d {
            return fill(adj, deg, n, d, v + 1, v + 2, connected);
        }
        let mut total = 0;
        for w in from..n {
            if deg[w] < d {
                adj[v] |= 1 << w;
                adj[w] |= 1 << v;
                deg[v] += 1;
                deg[w] += 1;
                total += fill(adj, deg, n, d, v, w + 1, connected);
                deg[v] -= 1;
                deg[w] -= 1;
                adj[v] &= !(1 << w);
                adj[w] &= !(1 << v);
            }
        }
        total
    }
    fill(&mut vec![0; n], &mut vec![0; n], n, d, 0, 1, connected_only)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
