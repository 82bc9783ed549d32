use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mvis::families::grid_outer_witness;
use mvis::{classify_set, solve, solve_independence, SolveOptions};
use mvis_bench::{graph, SOLVE_CASES};

fn solvers(c: &mut Criterion) {
    let opts = SolveOptions::default();
    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    for &(spec, variant) in SOLVE_CASES {
        let g = graph(spec);
        group.bench_with_input(BenchmarkId::new(variant.as_str(), spec), &g, |b, g| {
            b.iter(|| solve(g, variant, &opts).unwrap().value)
        });
    }
    group.finish();
}

fn classify(c: &mut Criterion) {
    let g = graph("grid:12x9");
    let x = grid_outer_witness(12, 9).unwrap();
    c.bench_function("classify_set grid:12x9", |b| b.iter(|| classify_set(&g, &x)));
}

fn independence(c: &mut Criterion) {
    let g = graph("torus:8x8");
    let opts = SolveOptions::default();
    c.bench_function("independence torus:8x8", |b| {
        b.iter(|| solve_independence(&g, &opts).unwrap().value)
    });
}

criterion_group!(benches, solvers, classify, independence);
criterion_main!(benches);
