//! Randomized properties: the engine agrees with the brute-force oracle on
//! arbitrary small graphs, counts are invariant under vertex relabeling,
//! the degree-ordered DAG obeys its structural invariants, and reports are
//! deterministic.

use graphlet_core::graph::DegreeOrientedDag;
use graphlet_core::oracle::{brute_force_counts, DEFAULT_ORACLE_BUDGET};
use graphlet_core::pipeline::{analyze, PipelineOptions};
use graphlet_core::report::{CountReport, ReportOptions};
use graphlet_core::{Graph, LoadStats, PatternCatalog};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_pairs(n: usize) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for a in 0..n as u64 {
        for b in (a + 1)..n as u64 {
            pairs.push((a, b));
        }
    }
    pairs
}

/// A graph on 4 to 12 vertices with an arbitrary edge subset.
fn arb_graph() -> impl Strategy<Value = (usize, Vec<(u64, u64)>)> {
    (4usize..=12).prop_flat_map(|n| {
        let pairs = all_pairs(n);
        let count = pairs.len();
        proptest::sample::subsequence(pairs, 0..=count).prop_map(move |edges| (n, edges))
    })
}

fn full_vectors(g: &Graph, catalog: &PatternCatalog) -> Vec<(Vec<i128>, Vec<i128>, Vec<i128>)> {
    let analysis = analyze(g, catalog, &PipelineOptions::default()).unwrap();
    analysis
        .sizes
        .iter()
        .map(|row| {
            (
                row.connected_noninduced.iter().map(|v| v.unwrap()).collect(),
                row.connected_induced.clone().unwrap(),
                row.disconnected_induced.clone().unwrap(),
            )
        })
        .collect()
}

proptest! {
    #[test]
    fn engine_matches_oracle((n, edges) in arb_graph()) {
        let catalog = PatternCatalog::build();
        let g = Graph::from_edges(n, &edges).unwrap();
        let rows = full_vectors(&g, &catalog);
        for (index, (noninduced, induced, disconnected)) in rows.iter().enumerate() {
            let size = index as u8 + 3;
            let conn = catalog.connected_count(size);
            let oracle = brute_force_counts(&g, size, DEFAULT_ORACLE_BUDGET, &catalog).unwrap();
            prop_assert_eq!(noninduced, &oracle.noninduced[..conn]);
            prop_assert_eq!(induced, &oracle.induced[..conn]);
            prop_assert_eq!(disconnected, &oracle.induced[conn..]);
        }
    }

    #[test]
    fn counts_are_relabeling_invariant((n, edges) in arb_graph(), seed in any::<u64>()) {
        let catalog = PatternCatalog::build();
        let mut relabel: Vec<u64> = (0..n as u64).collect();
        relabel.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let renamed: Vec<(u64, u64)> = edges
            .iter()
            .map(|&(a, b)| (relabel[a as usize], relabel[b as usize]))
            .collect();
        let original = Graph::from_edges(n, &edges).unwrap();
        let shuffled = Graph::from_edges(n, &renamed).unwrap();
        prop_assert_eq!(full_vectors(&original, &catalog), full_vectors(&shuffled, &catalog));
    }

    #[test]
    fn dag_orientation_invariants((n, edges) in arb_graph()) {
        let g = Graph::from_edges(n, &edges).unwrap();
        let dag = DegreeOrientedDag::build(&g);
        let mut oriented = 0usize;
        for v in 0..n as u32 {
            prop_assert_eq!(dag.outdegree(v) + dag.indegree(v), g.degree(v));
            for &w in dag.outgoing(v) {
                // Edges point from (degree, id)-smaller to larger, so rank
                // strictly increases along every arc: the DAG is acyclic.
                prop_assert!((g.degree(v), v) < (g.degree(w), w));
                prop_assert!(dag.rank(v) < dag.rank(w));
                prop_assert!(g.has_edge(v, w));
                oriented += 1;
            }
        }
        prop_assert_eq!(oriented, g.edge_count());
    }

    #[test]
    fn reports_are_deterministic((n, edges) in arb_graph()) {
        let catalog = PatternCatalog::build();
        let g = Graph::from_edges(n, &edges).unwrap();
        let options = ReportOptions {
            vertex_profiles: true,
            edge_profiles: true,
            trends: true,
            timings: false,
        };
        let render = || {
            let analysis = analyze(&g, &catalog, &PipelineOptions::default()).unwrap();
            let report = CountReport::build(
                "test",
                &g,
                &LoadStats::default(),
                &analysis,
                &catalog,
                &options,
            )
            .unwrap();
            (report.to_json_string(), report.to_csv_string())
        };
        prop_assert_eq!(render(), render());
    }
}
