//! Stage and end-to-end timings on seeded random graphs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphlet_bench::gnp;
use graphlet_core::graph::DegreeOrientedDag;
use graphlet_core::pipeline::{analyze, PipelineOptions};
use graphlet_core::triads::TriangleStore;
use graphlet_core::PatternCatalog;

fn stages(c: &mut Criterion) {
    let g = gnp(20_000, 0.002, 11);
    let dag = DegreeOrientedDag::build(&g);
    let mut group = c.benchmark_group("stages");
    group.sample_size(20);
    group.bench_function(BenchmarkId::new("orient", g.edge_count()), |b| {
        b.iter(|| DegreeOrientedDag::build(&g))
    });
    group.bench_function(BenchmarkId::new("triangles", g.edge_count()), |b| {
        b.iter(|| TriangleStore::count(&g, &dag))
    });
    group.finish();
}

fn end_to_end(c: &mut Criterion) {
    let catalog = PatternCatalog::build();
    let mut group = c.benchmark_group("count");
    group.sample_size(10);
    for (n, p, label) in [(20_000u64, 0.002, "sparse"), (2_000, 0.02, "dense")] {
        let g = gnp(n, p, 7);
        for size in [3u8, 4, 5] {
            let id = BenchmarkId::new(format!("{label}-size{size}"), g.edge_count());
            group.bench_function(id, |b| {
                b.iter(|| {
                    let options = PipelineOptions { size, ..PipelineOptions::default() };
                    analyze(&g, &catalog, &options).unwrap()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, stages, end_to_end);
criterion_main!(benches);
