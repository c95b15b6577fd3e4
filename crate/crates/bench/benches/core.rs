use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dg_bench::sample_graphs;
use dg_core::verify::cubic_filter;
use dg_core::{
    canonical_form, distance_graph, enumerate_graphs, is_self_two_distance, search_self_two_distance,
    two_distance_graph, EnumerationConfig, SearchFilter,
};
use std::hint::black_box;

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, g) in sample_graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| canonical_form(black_box(g))));
    }
    group.finish();
}

fn distance(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance_graph");
    for (name, g) in sample_graphs() {
        group.bench_with_input(BenchmarkId::new("two", name), &g, |b, g| b.iter(|| two_distance_graph(black_box(g))));
        group.bench_with_input(BenchmarkId::new("bfs_k3", name), &g, |b, g| {
            b.iter(|| distance_graph(black_box(g), 3).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("self_test", name), &g, |b, g| {
            b.iter(|| is_self_two_distance(black_box(g)))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for n in [6, 7] {
        group.bench_with_input(BenchmarkId::new("all", n), &n, |b, &n| {
            b.iter(|| enumerate_graphs(n, &SearchFilter::default(), |_, _| {}).unwrap())
        });
    }
    group.bench_function("cubic_12", |b| {
        b.iter(|| enumerate_graphs(12, &cubic_filter(), |_, _| {}).unwrap())
    });
    group.bench_function("search_connected_8", |b| {
        b.iter(|| search_self_two_distance(8, &SearchFilter::connected(), &EnumerationConfig::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, canonical, distance, enumeration);
criterion_main!(benches);
