//! Non-induced counts N1..N21 of the connected 5-vertex patterns and their
//! conversion to induced counts.
//!
//! Every pattern except the 5-cycle and 5-clique is counted by a cut
//! formula: pick a separating vertex, edge, triangle, or wedge, multiply
//! the ways of attaching the remaining fragments, and subtract the
//! degenerate attachments that collapse onto fewer vertices. The
//! subtraction constants were pinned by exhaustive cross-checking against
//! the brute-force reference on randomized graph suites; they are not
//! guesses. The 5-cycle uses directed 3-path times mixed-wedge products
//! with a collision correction, and the 5-clique pairs the high-rank
//! apexes over each triangle.
//!
//! Per-pair accumulators (common neighbors, directed paths, diamond
//! endpoints) use the scratch-array idiom: one array indexed by the far
//! vertex plus a touched list, reset after each source, so updates stay
//! O(1) without hashing.

use crate::catalog::PatternCatalog;
use crate::four::{choose2, choose3, choose4, FourAux, FourSimple};
use crate::graph::{DegreeOrientedDag, Graph};
use crate::triads::{for_each_triangle, TriangleStore};
use crate::{Error, Result};
use std::collections::HashMap;

/// Connected 5-pattern counts in catalog order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiveCounts {
    /// Non-induced vector N1..N21.
    pub noninduced: [i128; 21],
    /// Induced vector C1..C21.
    pub induced: [i128; 21],
}

/// Patterns whose cut set is a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexCutCounts {
    /// Four-stars (N1).
    pub n1: i128,
    /// Five-paths (N3).
    pub n3: i128,
    /// Crickets (N4).
    pub n4: i128,
    /// Tailed four-cycles (N7).
    pub n7: i128,
    /// Bowties (N9).
    pub n9: i128,
    /// Tailed four-cliques (N15).
    pub n15: i128,
}

/// Patterns whose cut set is an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCutCounts {
    /// Tailed three-stars (N2).
    pub n2: i128,
    /// Long-tailed triangles (N5).
    pub n5: i128,
    /// Bulls (N6).
    pub n6: i128,
    /// Hub-tailed diamonds (N11).
    pub n11: i128,
    /// Houses (N12).
    pub n12: i128,
    /// Triangle books (N14).
    pub n14: i128,
    /// Capped four-cliques (N19).
    pub n19: i128,
}

/// Patterns whose cut set is a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleCutCounts {
    /// Rim-tailed diamonds (N10).
    pub n10: i128,
    /// Triangle strips (N16).
    pub n16: i128,
    /// Five-cliques minus an edge (N20); needs per-triangle 4-clique
    /// tallies, so absent when triangle lists are unmaterialized.
    pub n20: Option<i128>,
}

/// Patterns whose cut set is a vertex pair or wedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WedgeCutCounts {
    /// Complete bipartite K_{2,3} (N13).
    pub n13: i128,
    /// Capped diamonds (N17).
    pub n17: i128,
    /// Wheels (N18).
    pub n18: i128,
}

/// Number of 2-paths ending at each vertex: P2(v) = Σ_{u∈N(v)} (d(u)−1).
fn two_path_ends(g: &Graph) -> Vec<i128> {
    let mut p2 = vec![0i128; g.vertex_count()];
    for v in 0..g.vertex_count() as u32 {
        let mut acc = 0i128;
        for &u in g.neighbors(v) {
            acc += g.degree(u) as i128 - 1;
        }
        p2[v as usize] = acc;
    }
    p2
}

/// Evaluate the six vertex-cut formulas.
pub fn count_vertex_cut(
    g: &Graph,
    tri: &TriangleStore,
    simple: &FourSimple,
    aux: &FourAux,
) -> VertexCutCounts {
    let p2 = two_path_ends(g);
    let d_total = aux.diamonds;
    let mut n1 = 0i128;
    let mut p2_pairs = 0i128;
    let mut n4 = 0i128;
    let mut n7 = 0i128;
    let mut n9 = 0i128;
    let mut n15 = 0i128;
    for v in 0..g.vertex_count() as u32 {
        let d = g.degree(v) as i128;
        let t = tri.per_vertex(v) as i128;
        n1 += choose4(d);
        p2_pairs += choose2(p2[v as usize]);
        n4 += t * choose2(d - 2);
        n7 += aux.four_cycles.per_vertex[v as usize] as i128 * (d - 2);
        n9 += choose2(t);
        n15 += aux.four_cliques.per_vertex[v as usize] as i128 * (d - 3);
    }
    // Pairs of 2-paths from one endpoint overcount every shape in which
    // the two walks collide: stars, cycles, tailed triangles, triangles.
    let n3 = p2_pairs
        - 3 * simple.three_star
        - 4 * aux.four_cycles.total
        - 2 * aux.tailed_triangles
        - 3 * tri.total() as i128;
    VertexCutCounts { n1, n3, n4, n7: n7 - 2 * d_total, n9: n9 - 2 * d_total, n15 }
}

/// Evaluate the seven edge-cut formulas.
pub fn count_edge_cut(g: &Graph, tri: &TriangleStore, aux: &FourAux) -> EdgeCutCounts {
    let p2 = two_path_ends(g);
    let d_total = aux.diamonds;
    let tt = aux.tailed_triangles;
    let mut n2 = 0i128;
    let mut n5 = 0i128;
    let mut n6 = 0i128;
    let mut n11 = 0i128;
    let mut n12 = 0i128;
    let mut n14 = 0i128;
    let mut n19 = 0i128;
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let da = g.degree(a) as i128;
        let db = g.degree(b) as i128;
        let te = tri.per_edge(e as u32) as i128;
        n2 += (db - 1) * choose2(da - 1) + (da - 1) * choose2(db - 1);
        n6 += te * (da - 2) * (db - 2);
        n11 += choose2(te) * ((da - 3) + (db - 3));
        n12 += aux.four_cycles.per_edge[e] as i128 * te;
        n14 += choose3(te);
        n19 += aux.four_cliques.per_edge[e] as i128 * (te - 2);
    }
    for v in 0..g.vertex_count() as u32 {
        n5 += tri.per_vertex(v) as i128 * p2[v as usize];
    }
    EdgeCutCounts {
        n2: n2 - 2 * tt,
        n5: n5 - 2 * tt - 4 * d_total - 6 * tri.total() as i128,
        n6: n6 - 2 * d_total,
        n11,
        n12: n12 - 4 * d_total,
        n14,
        n19,
    }
}

/// Evaluate the three triangle-cut formulas by one streaming pass over the
/// triangles. N20 needs per-triangle 4-clique tallies and is `None` when
/// those are unavailable.
pub fn count_triangle_cut(
    g: &Graph,
    dag: &DegreeOrientedDag,
    tri: &TriangleStore,
    aux: &FourAux,
) -> TriangleCutCounts {
    let k4 = aux.four_cliques.total;
    let mut n10 = 0i128;
    let mut n16 = 0i128;
    for_each_triangle(g, dag, |u, a, b, e_ua, e_ub, e_ab| {
        let t_ua = tri.per_edge(e_ua) as i128 - 1;
        let t_ub = tri.per_edge(e_ub) as i128 - 1;
        let t_ab = tri.per_edge(e_ab) as i128 - 1;
        let du = g.degree(u) as i128 - 2;
        let da = g.degree(a) as i128 - 2;
        let db = g.degree(b) as i128 - 2;
        // A tail on the vertex opposite each chord edge.
        n10 += t_ua * db + t_ub * da + t_ab * du;
        // Two extra triangles hanging off the two edges at each corner.
        n16 += t_ua * t_ub + t_ua * t_ab + t_ub * t_ab;
    });
    let n20 = aux
        .four_cliques
        .per_triangle
        .as_ref()
        .map(|k4t| k4t.iter().map(|&c| choose2(c as i128)).sum::<i128>());
    TriangleCutCounts { n10: n10 - 12 * k4, n16: n16 - 12 * k4, n20 }
}

/// Evaluate the three wedge-cut formulas (K_{2,3}, capped diamonds,
/// wheels). Requires materialized triangle lists.
pub fn count_wedge_cut(
    g: &Graph,
    dag: &DegreeOrientedDag,
    tri: &TriangleStore,
) -> Result<WedgeCutCounts> {
    if !tri.has_lists() {
        return Err(Error::ListsUnavailable);
    }
    let n = g.vertex_count();
    let mut common = vec![0u64; n];
    let mut common_touched: Vec<u32> = Vec::new();
    let mut dia = vec![0u64; n];
    let mut dia_touched: Vec<u32> = Vec::new();
    let mut n13 = 0i128;
    let mut n17 = 0i128;

    for i in 0..n as u32 {
        let ri = dag.rank(i);
        // W(i, j): common-neighbor counts for every j above i in rank.
        for &x in g.neighbors(i) {
            for &j in g.neighbors(x) {
                if dag.rank(j) > ri {
                    if common[j as usize] == 0 {
                        common_touched.push(j);
                    }
                    common[j as usize] += 1;
                }
            }
        }
        // D(i, j): diamonds whose opposite (non-chord) endpoints are i and
        // j. Walk each triangle (i, k, l) at i once, then the far apexes
        // of its chord (k, l).
        for (&k, &e_ik) in g.neighbors(i).iter().zip(g.row_edge_ids(i)) {
            let rk = dag.rank(k);
            for &l in tri.apexes(e_ik) {
                if dag.rank(l) > rk {
                    let e_kl = g.edge_index(k, l).expect("triangle chord");
                    for &j in tri.apexes(e_kl) {
                        if j != i && dag.rank(j) > ri {
                            if dia[j as usize] == 0 {
                                dia_touched.push(j);
                            }
                            dia[j as usize] += 1;
                        }
                    }
                }
            }
        }
        for &j in &common_touched {
            n13 += choose3(common[j as usize] as i128);
        }
        for &j in &dia_touched {
            n17 += (common[j as usize] as i128 - 2) * dia[j as usize] as i128;
        }
        for &j in &common_touched {
            common[j as usize] = 0;
        }
        common_touched.clear();
        for &j in &dia_touched {
            dia[j as usize] = 0;
        }
        dia_touched.clear();
    }

    // Wheels: for each hub h and rim diagonal {a, b}, count the rim
    // vertices x (adjacent to h, a, b); every unordered pair of them
    // closes a rim 4-cycle around the hub. Each wheel owns two diagonals,
    // so the grand total is exactly twice the wheel count.
    let mut diagonal: HashMap<(u32, u32), u64> = HashMap::new();
    let mut doubled = 0i128;
    for h in 0..n as u32 {
        diagonal.clear();
        for &e_hx in g.row_edge_ids(h) {
            let apexes = tri.apexes(e_hx);
            for s in 0..apexes.len() {
                for t in (s + 1)..apexes.len() {
                    *diagonal.entry((apexes[s], apexes[t])).or_insert(0) += 1;
                }
            }
        }
        for &c in diagonal.values() {
            doubled += choose2(c as i128);
        }
    }
    debug_assert_eq!(doubled % 2, 0);
    Ok(WedgeCutCounts { n13, n17, n18: doubled / 2 })
}

/// Count 5-cycles: directed 3-path counts times mixed-wedge counts per
/// vertex pair, minus the enumerated collisions where the path brushes an
/// extra edge.
pub fn count_five_cycles(g: &Graph, dag: &DegreeOrientedDag) -> i128 {
    let n = g.vertex_count();
    let mut paths = vec![0u64; n];
    let mut paths_touched: Vec<u32> = Vec::new();
    let mut mixed = vec![0u64; n];
    let mut mixed_touched: Vec<u32> = Vec::new();
    let mut products = 0i128;
    let mut collisions = 0i128;

    for i in 0..n as u32 {
        let ri = dag.rank(i);
        // Directed 3-paths i - x - y - j with x below i and j above i in
        // rank, j reached along an out-edge of y.
        for &x in dag.incoming(i) {
            for &y in g.neighbors(x) {
                if y == i {
                    continue;
                }
                for &j in dag.outgoing(y) {
                    if dag.rank(j) > ri {
                        if paths[j as usize] == 0 {
                            paths_touched.push(j);
                        }
                        paths[j as usize] += 1;
                        if g.has_edge(j, x) {
                            collisions += 1;
                        }
                        if g.has_edge(y, i) {
                            collisions += 1;
                        }
                    }
                }
            }
        }
        // Mixed wedges i - c - j with j above i and c below j in rank.
        for &c in g.neighbors(i) {
            let rc = dag.rank(c);
            for &j in g.neighbors(c) {
                if dag.rank(j) > ri && rc < dag.rank(j) {
                    if mixed[j as usize] == 0 {
                        mixed_touched.push(j);
                    }
                    mixed[j as usize] += 1;
                }
            }
        }
        for &j in &paths_touched {
            products += paths[j as usize] as i128 * mixed[j as usize] as i128;
        }
        for &j in &paths_touched {
            paths[j as usize] = 0;
        }
        paths_touched.clear();
        for &j in &mixed_touched {
            mixed[j as usize] = 0;
        }
        mixed_touched.clear();
    }
    products - collisions
}

/// Count 5-cliques by pairing, over each triangle, the apexes of its
/// rank-highest edge that rank above the whole triangle and connect to all
/// three corners. Requires materialized triangle lists.
pub fn count_five_cliques(g: &Graph, dag: &DegreeOrientedDag, tri: &TriangleStore) -> Result<i128> {
    if !tri.has_lists() {
        return Err(Error::ListsUnavailable);
    }
    let mut total = 0i128;
    let mut extensions: Vec<u32> = Vec::new();
    for_each_triangle(g, dag, |u, _a, b, _e_ua, _e_ub, e_ab| {
        let rb = dag.rank(b);
        extensions.clear();
        for &l in tri.apexes(e_ab) {
            if dag.rank(l) > rb && g.has_edge(l, u) {
                extensions.push(l);
            }
        }
        for s in 0..extensions.len() {
            for t in (s + 1)..extensions.len() {
                if g.has_edge(extensions[s], extensions[t]) {
                    total += 1;
                }
            }
        }
    });
    Ok(total)
}

/// Assemble N1..N21 in catalog order and convert to induced counts.
pub fn five_report(
    vertex: &VertexCutCounts,
    edge: &EdgeCutCounts,
    triangle: &TriangleCutCounts,
    wedge: &WedgeCutCounts,
    five_cycles: i128,
    five_cliques: i128,
    catalog: &PatternCatalog,
) -> Result<FiveCounts> {
    let n20 = triangle.n20.ok_or(Error::ListsUnavailable)?;
    let noninduced = [
        vertex.n1,
        edge.n2,
        vertex.n3,
        vertex.n4,
        edge.n5,
        edge.n6,
        vertex.n7,
        five_cycles,
        vertex.n9,
        triangle.n10,
        edge.n11,
        edge.n12,
        wedge.n13,
        edge.n14,
        vertex.n15,
        triangle.n16,
        wedge.n17,
        wedge.n18,
        edge.n19,
        n20,
        five_cliques,
    ];
    for (idx, &v) in noninduced.iter().enumerate() {
        if v < 0 {
            return Err(Error::Integrity(format!(
                "non-induced count for 5-vertex pattern {} is negative ({v})",
                idx + 1
            )));
        }
    }
    let induced = catalog.noninduced_to_induced(&noninduced)?;
    Ok(FiveCounts { noninduced, induced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::FIVE_OCCURRENCE;
    use crate::four::{count_four_cliques, count_four_cycles, count_four_simple};

    fn complete(n: u32) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n as u64 {
            for b in (a + 1)..n as u64 {
                edges.push((a, b));
            }
        }
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn five(g: &Graph) -> FiveCounts {
        let catalog = PatternCatalog::build();
        let dag = DegreeOrientedDag::build(g);
        let mut tri = TriangleStore::count(g, &dag);
        tri.materialize_lists(g, &dag);
        let simple = count_four_simple(g, &tri);
        let aux = FourAux {
            four_cycles: count_four_cycles(g, &dag),
            four_cliques: count_four_cliques(g, &dag, &tri),
            diamonds: simple.diamond,
            tailed_triangles: simple.tailed_triangle,
        };
        five_report(
            &count_vertex_cut(g, &tri, &simple, &aux),
            &count_edge_cut(g, &tri, &aux),
            &count_triangle_cut(g, &dag, &tri, &aux),
            &count_wedge_cut(g, &dag, &tri).unwrap(),
            count_five_cycles(g, &dag),
            count_five_cliques(g, &dag, &tri).unwrap(),
            &catalog,
        )
        .unwrap()
    }

    fn column(j: usize) -> [i128; 21] {
        let mut out = [0i128; 21];
        for i in 0..21 {
            out[i] = FIVE_OCCURRENCE[i][j];
        }
        out
    }

    #[test]
    fn k5_matches_the_clique_column() {
        let counts = five(&complete(5));
        assert_eq!(counts.noninduced, column(20));
        let mut unit = [0i128; 21];
        unit[20] = 1;
        assert_eq!(counts.induced, unit);
    }

    #[test]
    fn five_clique_minus_edge_matches_its_column() {
        // Two 4-cliques sharing a triangle.
        let mut edges = Vec::new();
        for a in 0..5u64 {
            for b in (a + 1)..5 {
                if (a, b) != (3, 4) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(5, &edges).unwrap();
        let counts = five(&g);
        assert_eq!(counts.noninduced, column(19));
        let mut unit = [0i128; 21];
        unit[19] = 1;
        assert_eq!(counts.induced, unit);
    }

    #[test]
    fn five_cycle_graph() {
        let edges: Vec<(u64, u64)> = (0..5u64).map(|v| (v, (v + 1) % 5)).collect();
        let g = Graph::from_edges(5, &edges).unwrap();
        let counts = five(&g);
        let mut expected = [0i128; 21];
        expected[2] = 5; // five-paths
        expected[7] = 1; // the cycle itself
        assert_eq!(counts.noninduced, expected);
        let mut unit = [0i128; 21];
        unit[7] = 1;
        assert_eq!(counts.induced, unit);
    }

    #[test]
    fn star_graph() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let counts = five(&g);
        let mut unit = [0i128; 21];
        unit[0] = 1;
        assert_eq!(counts.noninduced, unit);
        assert_eq!(counts.induced, unit);
    }

    #[test]
    fn complete_bipartite_2_3() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let counts = five(&g);
        assert_eq!(counts.noninduced[12], 1); // K_{2,3}
        assert_eq!(counts.noninduced[16], 0);
        assert_eq!(counts.noninduced[17], 0);
        assert_eq!(counts.noninduced[1], 6);
        assert_eq!(counts.noninduced[2], 6);
        assert_eq!(counts.noninduced[6], 6);
        let mut unit = [0i128; 21];
        unit[12] = 1;
        assert_eq!(counts.induced, unit);
    }

    #[test]
    fn k6_counts() {
        let counts = five(&complete(6));
        assert_eq!(counts.noninduced[20], 6);
        assert_eq!(counts.noninduced[7], 72);
        assert_eq!(counts.induced[20], 6);
        assert_eq!(counts.induced.iter().sum::<i128>(), 6);
    }

    #[test]
    fn petersen_five_cycles() {
        let outer: Vec<(u64, u64)> = (0..5u64).map(|v| (v, (v + 1) % 5)).collect();
        let inner: Vec<(u64, u64)> = (0..5u64).map(|v| (5 + v, 5 + (v + 2) % 5)).collect();
        let spokes: Vec<(u64, u64)> = (0..5u64).map(|v| (v, v + 5)).collect();
        let edges: Vec<(u64, u64)> = outer.into_iter().chain(inner).chain(spokes).collect();
        let g = Graph::from_edges(10, &edges).unwrap();
        let counts = five(&g);
        assert_eq!(counts.noninduced[7], 12);
        assert_eq!(counts.induced[7], 12);
        assert_eq!(counts.noninduced[1], 60);
        assert_eq!(counts.noninduced[2], 120);
        assert_eq!(counts.induced[1], 60);
        assert_eq!(counts.induced[2], 60);
    }
}
