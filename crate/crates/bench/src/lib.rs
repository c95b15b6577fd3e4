//! Fixed inputs shared by the benchmarks.

use dg_core::{named_graph, paley, random_graph, Graph, NamedGraph};

/// Graphs of assorted shapes and sizes, labeled for reporting.
pub fn sample_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", named_graph(NamedGraph::Petersen)),
        ("fig512", named_graph(NamedGraph::Fig512)),
        ("paley29", paley(29).expect("29 is a Paley order")),
        ("random12", random_graph(12, 0.5, 7).expect("valid probability")),
        ("random30", random_graph(30, 0.3, 11).expect("valid probability")),
        ("random60", random_graph(60, 0.1, 13).expect("valid probability")),
    ]
}
