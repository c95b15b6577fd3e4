mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use common::*;
use dg_core::canon::is_embedding;
use dg_core::enumerate::class_counts;
use dg_core::patterns::{c4_witness, diamond_witness, shared_triangle_witness};
use dg_core::verify::cubic_filter;
use dg_core::*;
use proptest::prelude::*;

#[test]
fn class_counts_match_labeled_brute_force() {
    let config = EnumerationConfig::default();
    for n in 0..=6usize {
        let mut all = HashSet::new();
        let mut connected = HashSet::new();
        for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            let g = labeled(n, code);
            let c = brute_canonical_code(&g);
            if all.insert(c) && brute_connected(&g) {
                connected.insert(c);
            }
        }
        let ours = class_counts([n], &SearchFilter::default(), &config).unwrap()[&n];
        assert_eq!(ours, all.len() as u64, "n = {n}");
        let ours = class_counts([n], &SearchFilter::connected(), &config).unwrap()[&n];
        assert_eq!(ours, connected.len() as u64, "connected, n = {n}");
    }
}

#[test]
fn filtered_counts_match_brute_force() {
    let config = EnumerationConfig::default();
    let filters = [
        SearchFilter { require_c4_free: true, ..SearchFilter::default() },
        SearchFilter { require_diamond_free: true, ..SearchFilter::connected() },
        SearchFilter { require_disjoint_triangles: true, ..SearchFilter::default() },
        SearchFilter { regular_degree: Some(2), ..SearchFilter::default() },
    ];
    for n in 1..=6 {
        let mut reps = BTreeMap::new();
        for code in 0..1u64 << (n * (n - 1) / 2) {
            let g = labeled(n, code);
            reps.entry(brute_canonical_code(&g)).or_insert(g);
        }
        for f in &filters {
            let expected = reps.values().filter(|g| f.accepts(g)).count() as u64;
            assert_eq!(class_counts([n], f, &config).unwrap()[&n], expected, "{f:?} n = {n}");
        }
    }
}

#[test]
fn enumerated_classes_are_canonical_and_distinct() {
    for n in 0..=7 {
        let mut seen = HashSet::new();
        enumerate_graphs(n, &SearchFilter::default(), |g, k| {
            assert_eq!(&canonical_key(g), k);
            assert!(seen.insert(k.clone()));
            let g6 = graph6::encode(g).unwrap();
            assert_eq!(&graph6::decode(&g6).unwrap(), g);
        })
        .unwrap();
    }
}

#[test]
fn cubic_counts_match_automorphism_weighted_labeled_count() {
    let config = EnumerationConfig::default();
    for n in [4, 6, 8] {
        let (count, found) = enumerate_map(n, &cubic_filter(), &config, |g, _| {
            Some(factorial(g.order()) / automorphism_count(g))
        })
        .unwrap();
        let weighted: u64 = found.iter().map(|(_, w)| w).sum();
        assert!(count > 0);
        assert_eq!(weighted, labeled_regular_count(n, 3, true), "n = {n}");
    }
}

#[test]
fn isomorphism_agrees_with_permutation_search() {
    let mut checked = 0;
    for seed in 0..400u64 {
        let n = 1 + (seed % 7) as usize;
        let g = random_graph(n, 0.5, seed).unwrap();
        let h = random_graph(n, 0.5, seed + 10_000).unwrap();
        let iso = are_isomorphic(&g, &h);
        assert_eq!(iso.is_some(), brute_isomorphic(&g, &h), "{g:?} {h:?}");
        if let Some(map) = iso {
            assert!(canon::is_isomorphism(&g, &h, &map));
        }
        assert_eq!(canonical_key(&g) == canonical_key(&h), brute_canonical_code(&g) == brute_canonical_code(&h));
        checked += 1;
    }
    assert_eq!(checked, 400);
}

#[test]
fn distances_match_floyd_warshall() {
    for seed in 0..200u64 {
        let n = (seed % 12) as usize;
        let g = random_graph(n, 0.25, seed).unwrap();
        let brute = brute_distances(&g);
        let ours = g.distance_matrix();
        for (u, row) in ours.iter().enumerate() {
            for (v, d) in row.iter().enumerate() {
                assert_eq!(d.map(|x| x as usize), brute[u][v]);
            }
        }
        assert_eq!(two_distance_graph(&g), brute_two_distance(&g));
        for k in 1..5 {
            let dk = distance_graph(&g, k).unwrap();
            for (u, v) in pairs(n) {
                assert_eq!(dk.has_edge(u, v), brute[u][v] == Some(k));
            }
        }
        assert_eq!(g.is_connected(), brute_connected(&g));
    }
}

#[test]
fn two_connectivity_matches_vertex_deletion() {
    for seed in 0..300u64 {
        let n = (seed % 10) as usize;
        let g = random_graph(n, 0.35, seed).unwrap();
        let brute = n >= 3 && brute_connected(&g) && (0..n).all(|v| brute_connected(&g.delete_vertex(v)));
        assert_eq!(g.is_two_connected(), brute, "{g:?}");
        let cut: BTreeSet<usize> = (0..n)
            .filter(|&v| {
                let before = g.components().len();
                let after = g.delete_vertex(v).components().len();
                after > before
            })
            .collect();
        let ours: BTreeSet<usize> = (0..n).filter(|&v| g.cut_vertices() >> v & 1 == 1).collect();
        assert_eq!(ours, cut, "{g:?}");
    }
}

fn brute_c4(g: &Graph) -> bool {
    let n = g.order();
    let e = |a, b| g.has_edge(a, b);
    (0..n).any(|a| {
        (0..n).any(|b| {
            (0..n).any(|c| {
                (0..n).any(|d| {
                    BTreeSet::from([a, b, c, d]).len() == 4 && e(a, b) && e(b, c) && e(c, d) && e(d, a)
                })
            })
        })
    })
}

fn brute_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

#[test]
fn patterns_match_brute_force() {
    let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let c5c3 = named_graph(NamedGraph::C5C3);
    for seed in 0..300u64 {
        let n = 1 + (seed % 9) as usize;
        let g = random_graph(n, 0.3, seed).unwrap();
        let report = pattern_report(&g);
        assert_eq!(report.has_c4_subgraph, brute_c4(&g));
        let tris = brute_triangles(&g);
        let diamond = tris.iter().enumerate().any(|(i, s)| {
            tris[i + 1..].iter().any(|t| s.iter().filter(|v| t.contains(v)).count() == 2)
        });
        assert_eq!(report.has_diamond, diamond);
        let disjoint = tris.iter().enumerate().all(|(i, s)| tris[i + 1..].iter().all(|t| s.iter().all(|v| !t.contains(v))));
        assert_eq!(report.triangles_pairwise_disjoint, disjoint);
        let induced_claw = (0..n).any(|c| {
            let nb: Vec<usize> = (0..n).filter(|&v| g.has_edge(c, v)).collect();
            nb.iter().enumerate().any(|(i, &x)| {
                nb[i + 1..].iter().enumerate().any(|(j, &y)| {
                    !g.has_edge(x, y) && nb[i + j + 2..].iter().any(|&z| !g.has_edge(x, z) && !g.has_edge(y, z))
                })
            })
        });
        assert_eq!(report.has_induced_claw, induced_claw);
        if let Some(w) = report.witnesses.get("induced_claw") {
            assert!(is_embedding(&claw, &g, true, w));
        }
        if let Some(w) = report.witnesses.get("c5c3") {
            assert!(is_embedding(&c5c3, &g, false, w));
        }
        if let Some(w) = c4_witness(&g) {
            assert!(g.has_edge(w[0], w[1]) && g.has_edge(w[1], w[2]) && g.has_edge(w[2], w[3]) && g.has_edge(w[3], w[0]));
        }
        if let Some(w) = diamond_witness(&g) {
            assert!(g.has_edge(w[0], w[1]) && [2, 3].iter().all(|&i| g.has_edge(w[0], w[i]) && g.has_edge(w[1], w[i])));
        }
        if let Some(w) = shared_triangle_witness(&g) {
            assert!(tris.iter().any(|t| t.contains(&w[0]) && t.contains(&w[1]) && t.contains(&w[2])));
        }
    }
}

#[test]
fn self_two_distance_hits_match_brute_force_at_small_orders() {
    let config = EnumerationConfig::default();
    for n in 3..=7 {
        let cert = search_self_two_distance(n, &SearchFilter::connected(), &config).unwrap();
        let mut brute = BTreeSet::new();
        for code in 0..1u64 << (n * (n - 1) / 2) {
            let g = labeled(n, code);
            if g.size() > 0 && brute_connected(&g) && brute_isomorphic(&g, &brute_two_distance(&g)) {
                brute.insert(brute_canonical_code(&g));
            }
            if n == 7 && code > 1 << 16 {
                break;
            }
        }
        let ours: BTreeSet<u64> = cert.hits.iter().map(|h| brute_canonical_code(&graph6::decode(h).unwrap())).collect();
        if n < 7 {
            assert_eq!(ours, brute, "n = {n}");
        } else {
            assert!(brute.is_subset(&ours));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn find_subgraph_agrees_with_brute_force(seed in any::<u64>(), n in 3usize..8, k in 2usize..5) {
        let host = random_graph(n, 0.5, seed).unwrap();
        let pattern = random_graph(k, 0.6, seed ^ 0xabcd).unwrap();
        for induced in [false, true] {
            let ours = find_subgraph(&pattern, &host, induced);
            let mut brute = false;
            if k <= n {
                for_each_permutation(n, |p| {
                    let map = &p[..k];
                    brute |= is_embedding(&pattern, &host, induced, map);
                });
            }
            prop_assert_eq!(ours.is_some(), brute);
            if let Some(m) = ours {
                prop_assert!(is_embedding(&pattern, &host, induced, &m));
            }
        }
    }
}
