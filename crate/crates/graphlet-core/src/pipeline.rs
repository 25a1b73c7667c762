//! End-to-end orchestration: orient the graph, count triads, run the 4-
//! and 5-vertex counters, derive disconnected counts, convert to induced
//! counts, enforce the internal consistency identities, and optionally
//! verify everything against the brute-force oracle.

use std::time::Instant;

use crate::catalog::{checked_add, checked_mul, CountInputs, PatternCatalog};
use crate::five::{
    count_edge_cut, count_five_cliques, count_five_cycles, count_triangle_cut, count_vertex_cut,
    count_wedge_cut, five_report,
};
use crate::four::{
    count_four_cliques, count_four_cycles, count_four_simple, four_report, FourAux,
    FourCliqueCounts, FourCycleCounts,
};
use crate::graph::{DegreeOrientedDag, Graph};
use crate::oracle::{brute_force_counts, DEFAULT_ORACLE_BUDGET};
use crate::triads::{count_wedges, TriangleStore, WedgeStats};
use crate::{Error, Result};

/// 0-based catalog indices of the connected 5-patterns whose counters need
/// materialized triangle lists and are therefore unavailable in degraded
/// mode: K_{2,3}, triangle book, triangle strip, capped diamond, wheel,
/// capped 4-clique, 5-clique minus an edge, and the 5-clique.
pub const LIST_DEPENDENT_FIVE: [usize; 8] = [12, 13, 15, 16, 17, 18, 19, 20];

/// Options controlling one pipeline run.
#[derive(Debug, Clone)]
pub struct PipelineOptions {
    /// Largest pattern size to count, 3..=5.
    pub size: u8,
    /// Peak-memory budget in bytes; when the accounting estimate exceeds
    /// it, triangle lists are not materialized and the run degrades.
    pub memory_budget: Option<u64>,
    /// Re-derive every reported vector with the brute-force oracle and
    /// fail on any disagreement.
    pub oracle_check: bool,
    /// Subset budget for the oracle.
    pub oracle_budget: u64,
    /// Worker cap. The current implementation is single-threaded; values
    /// above 1 are accepted and ignored.
    pub threads: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            size: 5,
            memory_budget: None,
            oracle_check: false,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
            threads: 1,
        }
    }
}

/// Whether the run computed everything or the memory guard intervened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// All requested counts computed.
    Full,
    /// Triangle lists were refused; list-dependent 5-patterns are absent.
    Degraded,
}

/// Wall-clock seconds spent in one pipeline stage.
#[derive(Debug, Clone)]
pub struct StageTiming {
    /// Stage name.
    pub stage: &'static str,
    /// Elapsed seconds.
    pub seconds: f64,
}

/// Counts for one pattern size.
#[derive(Debug, Clone)]
pub struct SizeAnalysis {
    /// Pattern size, 3..=5.
    pub size: u8,
    /// Non-induced connected counts in catalog order; `None` marks a
    /// pattern disabled by the memory guard.
    pub connected_noninduced: Vec<Option<i128>>,
    /// Induced connected counts; `None` when the conversion was impossible
    /// (degraded 5-vertex row).
    pub connected_induced: Option<Vec<i128>>,
    /// Induced disconnected counts in catalog order (entries after the
    /// connected block); `None` in the degraded 5-vertex row.
    pub disconnected_induced: Option<Vec<i128>>,
}

/// Everything one pipeline run produces.
#[derive(Debug)]
pub struct Analysis {
    /// Full or degraded.
    pub mode: Mode,
    /// Human-readable explanation when degraded.
    pub degraded_reason: Option<String>,
    /// Per-size count rows, ascending size starting at 3.
    pub sizes: Vec<SizeAnalysis>,
    /// Wedge statistics from the triad stage.
    pub wedges: WedgeStats,
    /// Triangle tallies (feeds vertex/edge profiles).
    pub triangles: TriangleStore,
    /// 4-cycle and 4-clique tallies; `None` for size-3 runs.
    pub four_aux: Option<FourAux>,
    /// Wall-clock per stage, in execution order.
    pub timings: Vec<StageTiming>,
    /// Whether the oracle comparison ran (and passed; failure is an error).
    pub oracle_checked: bool,
}

/// Exact binomial coefficient C(n, k) with overflow detection.
pub fn binomial(n: i128, k: u32) -> Result<i128> {
    if n < k as i128 {
        return Ok(0);
    }
    let mut out = 1i128;
    for i in 1..=k as i128 {
        // The running product of i consecutive integers is divisible by i!.
        out = checked_mul(out, n - k as i128 + i)? / i;
    }
    Ok(out)
}

/// Accounting estimate of peak resident bytes for a full run on a graph
/// with `n` vertices, `m` edges, and `triangles` triangles: graph and DAG
/// storage, triangle tallies and lists, 4-pattern tallies, and scratch
/// arrays, as allocated by this implementation. The memory guard degrades
/// the run when this exceeds the configured budget.
pub fn estimated_peak_bytes(n: usize, m: usize, triangles: u64) -> u64 {
    let n = n as u64;
    let m = m as u64;
    // Graph: offsets, neighbor and edge-id rows (both directions), the
    // canonical edge list, and the original-id map.
    let graph = 8 * (n + 1) + 16 * m + 8 * m + 8 * n;
    // DAG: out/in offsets, neighbor and edge-id rows, rank and order.
    let dag = 16 * (n + 1) + 16 * m + 8 * n;
    // Triangle tallies and the flat completion lists (3T apexes plus 3T
    // triangle ids plus per-edge offsets).
    let triad = 8 * n + 4 * m + TriangleStore::estimated_list_bytes(m as usize, triangles);
    // 4-cycle and 4-clique per-vertex/per-edge tallies plus K4 per
    // triangle.
    let four = 16 * n + 16 * m + 4 * triangles;
    // Scratch arrays with touched lists, two u64 arrays live at once.
    let scratch = 32 * n;
    graph + dag + triad + four + scratch
}

fn timed<T>(timings: &mut Vec<StageTiming>, stage: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.push(StageTiming { stage, seconds: start.elapsed().as_secs_f64() });
    out
}

fn sum_u64(values: &[u64]) -> i128 {
    values.iter().map(|&v| v as i128).sum()
}

fn sum_u32(values: &[u32]) -> i128 {
    values.iter().map(|&v| v as i128).sum()
}

fn check_identity(label: &str, actual: i128, expected: i128) -> Result<()> {
    if actual != expected {
        return Err(Error::Integrity(format!("{label} sum to {actual}, expected {expected}")));
    }
    Ok(())
}

fn check_triad_identities(tri: &TriangleStore) -> Result<()> {
    let three_t = 3 * tri.total() as i128;
    check_identity("per-vertex triangle tallies", sum_u64(tri.per_vertex_slice()), three_t)?;
    check_identity("per-edge triangle tallies", sum_u32(tri.per_edge_slice()), three_t)
}

fn check_four_identities(cycles: &FourCycleCounts, cliques: &FourCliqueCounts) -> Result<()> {
    check_identity("per-vertex 4-cycle tallies", sum_u64(&cycles.per_vertex), 4 * cycles.total)?;
    check_identity("per-edge 4-cycle tallies", sum_u64(&cycles.per_edge), 4 * cycles.total)?;
    check_identity("per-vertex 4-clique tallies", sum_u64(&cliques.per_vertex), 4 * cliques.total)?;
    check_identity("per-edge 4-clique tallies", sum_u64(&cliques.per_edge), 6 * cliques.total)?;
    if let Some(per_triangle) = &cliques.per_triangle {
        check_identity("per-triangle 4-clique tallies", sum_u32(per_triangle), 4 * cliques.total)?;
    }
    Ok(())
}

/// Check Σ induced = C(n, size) and componentwise N ≥ C ≥ 0, then split
/// the full induced vector into its connected and disconnected parts.
fn split_checked(
    size: u8,
    n: usize,
    connected: usize,
    noninduced: &[i128],
    induced: Vec<i128>,
) -> Result<(Vec<i128>, Vec<i128>)> {
    let mut total = 0i128;
    for (&n_i, &c_i) in noninduced.iter().zip(&induced) {
        if n_i < c_i {
            return Err(Error::Integrity(format!(
                "size-{size} induced count {c_i} exceeds non-induced count {n_i}"
            )));
        }
        total = checked_add(total, c_i)?;
    }
    let expected = binomial(n as i128, size as u32)?;
    if total != expected {
        return Err(Error::Integrity(format!(
            "size-{size} induced counts sum to {total}, expected C({n},{size}) = {expected}"
        )));
    }
    let disc = induced[connected..].to_vec();
    let mut conn = induced;
    conn.truncate(connected);
    Ok((conn, disc))
}

fn compare_vectors(
    catalog: &PatternCatalog,
    size: u8,
    kind: &str,
    engine: &[i128],
    oracle: &[i128],
    offset: usize,
) -> Result<()> {
    for (idx, (&a, &b)) in engine.iter().zip(oracle).enumerate() {
        if a != b {
            let pat = &catalog.patterns(size)[offset + idx];
            return Err(Error::Integrity(format!(
                "oracle mismatch for {} ({}, {kind}): engine {a}, oracle {b}",
                pat.id(),
                pat.name
            )));
        }
    }
    Ok(())
}

/// Run the counting pipeline on a prepared graph.
pub fn analyze(g: &Graph, catalog: &PatternCatalog, options: &PipelineOptions) -> Result<Analysis> {
    if !(3..=5).contains(&options.size) {
        return Err(Error::Integrity(format!("unsupported pattern size {}", options.size)));
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut timings = Vec::new();

    let dag = timed(&mut timings, "orient", || DegreeOrientedDag::build(g));
    let wedges = timed(&mut timings, "wedges", || count_wedges(g, &dag));
    let mut tri = timed(&mut timings, "triangles", || TriangleStore::count(g, &dag));
    check_triad_identities(&tri)?;

    let mut mode = Mode::Full;
    let mut degraded_reason = None;
    if options.size >= 4 {
        let projected = estimated_peak_bytes(n, m, tri.total());
        match options.memory_budget {
            Some(budget) if projected > budget => {
                mode = Mode::Degraded;
                degraded_reason = Some(format!(
                    "estimated peak of {projected} bytes exceeds the {budget} byte budget; \
                     triangle lists not materialized and list-dependent 5-patterns disabled"
                ));
            }
            _ => {
                timed(&mut timings, "triangle_lists", || tri.materialize_lists(g, &dag));
            }
        }
    }

    let mut four_counts = None;
    let mut four_aux = None;
    let mut four_simple = None;
    if options.size >= 4 {
        let simple = timed(&mut timings, "four_simple", || count_four_simple(g, &tri));
        let cycles = timed(&mut timings, "four_cycles", || count_four_cycles(g, &dag));
        let cliques = timed(&mut timings, "four_cliques", || count_four_cliques(g, &dag, &tri));
        check_four_identities(&cycles, &cliques)?;
        four_counts = Some(four_report(&simple, &cycles, &cliques, catalog)?);
        four_aux = Some(FourAux {
            four_cycles: cycles,
            four_cliques: cliques,
            diamonds: simple.diamond,
            tailed_triangles: simple.tailed_triangle,
        });
        four_simple = Some(simple);
    }

    // 5-vertex counts: `None` per entry where the memory guard disabled
    // the formula. Graphs with fewer than five vertices short-circuit to
    // all-zero counts.
    let mut five_noninduced: Option<[Option<i128>; 21]> = None;
    if options.size == 5 {
        if n < 5 {
            five_noninduced = Some([Some(0); 21]);
        } else {
            let aux = four_aux.as_ref().expect("4-stage ran");
            let simple = four_simple.as_ref().expect("4-stage ran");
            let vertex =
                timed(&mut timings, "five_vertex_cut", || count_vertex_cut(g, &tri, simple, aux));
            let edge = timed(&mut timings, "five_edge_cut", || count_edge_cut(g, &tri, aux));
            let tcut =
                timed(&mut timings, "five_triangle_cut", || count_triangle_cut(g, &dag, &tri, aux));
            let cycles5 = timed(&mut timings, "five_cycles", || count_five_cycles(g, &dag));
            if mode == Mode::Full {
                let wcut =
                    timed(&mut timings, "five_wedge_cut", || count_wedge_cut(g, &dag, &tri))?;
                let cliques5 =
                    timed(&mut timings, "five_cliques", || count_five_cliques(g, &dag, &tri))?;
                let counts = five_report(&vertex, &edge, &tcut, &wcut, cycles5, cliques5, catalog)?;
                five_noninduced = Some(counts.noninduced.map(Some));
            } else {
                let partial = [
                    Some(vertex.n1),
                    Some(edge.n2),
                    Some(vertex.n3),
                    Some(vertex.n4),
                    Some(edge.n5),
                    Some(edge.n6),
                    Some(vertex.n7),
                    Some(cycles5),
                    Some(vertex.n9),
                    Some(tcut.n10),
                    Some(edge.n11),
                    Some(edge.n12),
                    None,
                    None,
                    Some(vertex.n15),
                    None,
                    None,
                    None,
                    None,
                    None,
                    None,
                ];
                debug_assert!(LIST_DEPENDENT_FIVE.iter().all(|&i| partial[i].is_none()));
                for value in partial.iter().flatten() {
                    if *value < 0 {
                        return Err(Error::Integrity(format!(
                            "non-induced 5-vertex count is negative ({value})"
                        )));
                    }
                }
                five_noninduced = Some(partial);
            }
        }
    }

    // Disconnected non-induced counts via the merge recursion.
    let inputs = CountInputs {
        n: n as i128,
        edges: m as i128,
        wedges: wedges.total,
        triangles: tri.total() as i128,
        four: four_counts.as_ref().map_or([0; 6], |c| c.noninduced),
    };
    let disconnected = timed(&mut timings, "disconnected", || -> Result<_> {
        let disc3 = catalog.disconnected_noninduced(3, &inputs)?;
        let disc4 = if options.size >= 4 {
            Some(catalog.disconnected_noninduced(4, &inputs)?)
        } else {
            None
        };
        let five_complete =
            five_noninduced.as_ref().is_some_and(|row| row.iter().all(Option::is_some));
        let disc5 =
            if five_complete { Some(catalog.disconnected_noninduced(5, &inputs)?) } else { None };
        Ok((disc3, disc4, disc5))
    })?;
    let (disc3, disc4, disc5) = disconnected;

    // Induced conversion over the full per-size vectors, with the
    // completeness and ordering checks.
    let sizes = timed(&mut timings, "convert", || -> Result<Vec<SizeAnalysis>> {
        let mut out = Vec::new();

        let three_noninduced = vec![wedges.total, tri.total() as i128];
        let full3: Vec<i128> =
            three_noninduced.iter().copied().chain(disc3.iter().copied()).collect();
        let induced3 = catalog.induced_full(3, &full3)?;
        let (conn3, dis3) = split_checked(3, n, 2, &full3, induced3)?;
        out.push(SizeAnalysis {
            size: 3,
            connected_noninduced: three_noninduced.into_iter().map(Some).collect(),
            connected_induced: Some(conn3),
            disconnected_induced: Some(dis3),
        });

        if let (Some(counts), Some(disc4)) = (&four_counts, &disc4) {
            let full4: Vec<i128> =
                counts.noninduced.iter().copied().chain(disc4.iter().copied()).collect();
            let induced4 = catalog.induced_full(4, &full4)?;
            let (conn4, dis4) = split_checked(4, n, 6, &full4, induced4)?;
            debug_assert_eq!(conn4, counts.induced.to_vec());
            out.push(SizeAnalysis {
                size: 4,
                connected_noninduced: counts.noninduced.iter().copied().map(Some).collect(),
                connected_induced: Some(conn4),
                disconnected_induced: Some(dis4),
            });
        }

        if let Some(row) = &five_noninduced {
            let (connected_induced, disconnected_induced) = if let Some(disc5) = &disc5 {
                let full5: Vec<i128> = row
                    .iter()
                    .map(|v| v.expect("complete row when disc5 exists"))
                    .chain(disc5.iter().copied())
                    .collect();
                let induced5 = catalog.induced_full(5, &full5)?;
                let (conn5, dis5) = split_checked(5, n, 21, &full5, induced5)?;
                (Some(conn5), Some(dis5))
            } else {
                (None, None)
            };
            out.push(SizeAnalysis {
                size: 5,
                connected_noninduced: row.to_vec(),
                connected_induced,
                disconnected_induced,
            });
        }
        Ok(out)
    })?;

    let mut oracle_checked = false;
    if options.oracle_check {
        timed(&mut timings, "oracle_check", || -> Result<()> {
            for row in &sizes {
                let oracle = brute_force_counts(g, row.size, options.oracle_budget, catalog)?;
                for (idx, value) in row.connected_noninduced.iter().enumerate() {
                    if let Some(v) = value {
                        if *v != oracle.noninduced[idx] {
                            let pat = &catalog.patterns(row.size)[idx];
                            return Err(Error::Integrity(format!(
                                "oracle mismatch for {} ({}, non-induced): engine {v}, oracle {}",
                                pat.id(),
                                pat.name,
                                oracle.noninduced[idx]
                            )));
                        }
                    }
                }
                let connected = catalog.connected_count(row.size);
                if let Some(conn) = &row.connected_induced {
                    compare_vectors(
                        catalog,
                        row.size,
                        "induced",
                        conn,
                        &oracle.induced[..connected],
                        0,
                    )?;
                }
                if let Some(disc) = &row.disconnected_induced {
                    compare_vectors(
                        catalog,
                        row.size,
                        "induced",
                        disc,
                        &oracle.induced[connected..],
                        connected,
                    )?;
                }
            }
            Ok(())
        })?;
        oracle_checked = true;
    }

    Ok(Analysis {
        mode,
        degraded_reason,
        sizes,
        wedges,
        triangles: tri,
        four_aux,
        timings,
        oracle_checked,
    })
}
