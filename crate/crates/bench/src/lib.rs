//! Benchmark corpus and the criterion benchmarks over it.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use symprep::autgrp::{formula_automorphisms, SearchLimits};
use symprep::gen::{gen_php, gen_random};
use symprep::graph::{build_model_graph, color_refinement};
use symprep::transforms::{preprocess_pipeline, PipelineConfig};
use symprep::{Formula, PhpSpec};

/// php(n+1, n) for the given hole counts.
pub fn php_family(holes: &[u32]) -> Vec<(String, Formula)> {
    holes
        .iter()
        .map(|&n| (format!("php({},{n})", n + 1), gen_php(PhpSpec::new(n + 1, n))))
        .collect()
}

/// Random 3-CNF near the threshold, ratio 4.2.
pub fn random_family(vars: &[u32], seed: u64) -> Vec<(String, Formula)> {
    vars.iter()
        .map(|&v| {
            let clauses = (v as usize * 42) / 10;
            (format!("random({v})"), gen_random(v, clauses, 3, seed))
        })
        .collect()
}

pub fn detection(c: &mut Criterion) {
    let mut group = c.benchmark_group("detect");
    for (name, f) in php_family(&[4, 6, 8]) {
        group.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| formula_automorphisms(black_box(f), &SearchLimits::default()).unwrap())
        });
    }
    group.finish();
}

pub fn preprocessing(c: &mut Criterion) {
    let mut group = c.benchmark_group("preprocess");
    let cfg = PipelineConfig::default();
    for (name, f) in random_family(&[50, 100, 200], 1).into_iter().chain(php_family(&[6])) {
        group.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| preprocess_pipeline(black_box(f), &cfg))
        });
    }
    group.finish();
}

pub fn refinement(c: &mut Criterion) {
    let mut group = c.benchmark_group("refine");
    for (name, f) in random_family(&[100, 400], 2) {
        let g = build_model_graph(&f);
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| color_refinement(black_box(g)))
        });
    }
    group.finish();
}

pub fn benchmarks(c: &mut Criterion) {
    detection(c);
    preprocessing(c);
    refinement(c);
}
