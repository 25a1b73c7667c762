//! Connected 4-vertex pattern counts and the per-object auxiliaries the
//! 5-vertex formulas consume.
//!
//! Three-stars, three-paths, tailed triangles, and diamonds are closed
//! forms over degrees and triangle tallies. Four-cycles are counted from
//! the rank-largest corner: for that corner, the number of rank-smaller
//! common neighbors with each opposite vertex determines the cycles by a
//! choose-2, and each cycle is seen exactly once. Four-cliques are found
//! by pairing the triangles over an edge whose apexes rank above both
//! endpoints and testing the one missing edge, which again visits every
//! clique exactly once.

use crate::catalog::PatternCatalog;
use crate::graph::{DegreeOrientedDag, Graph};
use crate::triads::TriangleStore;
use crate::Result;

/// Non-induced and induced connected 4-pattern counts in catalog order
/// (three_star, three_path, tailed_triangle, four_cycle, diamond,
/// four_clique).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourCounts {
    /// Non-induced vector N.
    pub noninduced: [i128; 6],
    /// Induced vector C.
    pub induced: [i128; 6],
}

/// Closed-form counts that need no dedicated enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourSimple {
    /// Σ_i C(d(i), 3).
    pub three_star: i128,
    /// Σ_{(i,j)∈E} (d(i)−1)(d(j)−1) − 3T.
    pub three_path: i128,
    /// Σ_i T(i)(d(i)−2).
    pub tailed_triangle: i128,
    /// Σ_e C(T(e), 2).
    pub diamond: i128,
}

/// Four-cycle tallies.
#[derive(Debug, Clone)]
pub struct FourCycleCounts {
    /// Total four-cycles.
    pub total: i128,
    /// Four-cycles through each vertex.
    pub per_vertex: Vec<u64>,
    /// Four-cycles through each edge.
    pub per_edge: Vec<u64>,
}

/// Four-clique tallies.
#[derive(Debug, Clone)]
pub struct FourCliqueCounts {
    /// Total four-cliques.
    pub total: i128,
    /// Four-cliques containing each vertex.
    pub per_vertex: Vec<u64>,
    /// Four-cliques containing each edge.
    pub per_edge: Vec<u64>,
    /// Four-cliques containing each triangle (triangle ids from the
    /// store's enumeration order); `None` when triangle lists were not
    /// materialized.
    pub per_triangle: Option<Vec<u32>>,
}

/// Everything the 5-vertex formulas need from the 4-vertex stage.
#[derive(Debug, Clone)]
pub struct FourAux {
    /// Four-cycle tallies.
    pub four_cycles: FourCycleCounts,
    /// Four-clique tallies.
    pub four_cliques: FourCliqueCounts,
    /// Diamond total D(G).
    pub diamonds: i128,
    /// Tailed-triangle total TT(G).
    pub tailed_triangles: i128,
}

pub(crate) fn choose2(x: i128) -> i128 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

pub(crate) fn choose3(x: i128) -> i128 {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

pub(crate) fn choose4(x: i128) -> i128 {
    if x < 4 {
        0
    } else {
        x * (x - 1) * (x - 2) * (x - 3) / 24
    }
}

/// Evaluate the four closed-form counts.
pub fn count_four_simple(g: &Graph, tri: &TriangleStore) -> FourSimple {
    let mut three_star = 0i128;
    let mut tailed_triangle = 0i128;
    for v in 0..g.vertex_count() as u32 {
        let d = g.degree(v) as i128;
        three_star += choose3(d);
        tailed_triangle += tri.per_vertex(v) as i128 * (d - 2).max(0);
    }
    let mut path_pairs = 0i128;
    for &(a, b) in g.edges() {
        path_pairs += (g.degree(a) as i128 - 1) * (g.degree(b) as i128 - 1);
    }
    let three_path = path_pairs - 3 * tri.total() as i128;
    let mut diamond = 0i128;
    for e in 0..g.edge_count() as u32 {
        diamond += choose2(tri.per_edge(e) as i128);
    }
    FourSimple { three_star, three_path, tailed_triangle, diamond }
}

/// Count four-cycles with per-vertex and per-edge tallies.
pub fn count_four_cycles(g: &Graph, dag: &DegreeOrientedDag) -> FourCycleCounts {
    let n = g.vertex_count();
    let mut total = 0i128;
    let mut per_edge = vec![0u64; g.edge_count()];
    let mut common = vec![0u64; n];
    let mut touched: Vec<u32> = Vec::new();

    for hi in 0..n as u32 {
        let hi_rank = dag.rank(hi);
        // Wedges hi - w - j with both w and j below hi in rank; common[j]
        // accumulates over the middle vertices w.
        for &w in dag.incoming(hi) {
            for &j in g.neighbors(w) {
                if j != hi && dag.rank(j) < hi_rank {
                    if common[j as usize] == 0 {
                        touched.push(j);
                    }
                    common[j as usize] += 1;
                }
            }
        }
        for &j in &touched {
            total += choose2(common[j as usize] as i128);
        }
        // Each wedge participates in common[j] − 1 cycles (choosing the
        // other wedge), charged to both of its edges.
        let in_edges = dag.incoming_edge_ids(hi);
        for (&w, &e_hw) in dag.incoming(hi).iter().zip(in_edges) {
            for (&j, &e_wj) in g.neighbors(w).iter().zip(g.row_edge_ids(w)) {
                if j != hi && dag.rank(j) < hi_rank {
                    let cycles = common[j as usize] - 1;
                    per_edge[e_hw as usize] += cycles;
                    per_edge[e_wj as usize] += cycles;
                }
            }
        }
        for &j in &touched {
            common[j as usize] = 0;
        }
        touched.clear();
    }

    // Every cycle meets a vertex on exactly two of its edges.
    let mut per_vertex = vec![0u64; n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        per_vertex[a as usize] += per_edge[e];
        per_vertex[b as usize] += per_edge[e];
    }
    for c in per_vertex.iter_mut() {
        debug_assert_eq!(*c % 2, 0);
        *c /= 2;
    }
    FourCycleCounts { total, per_vertex, per_edge }
}

/// Count four-cliques with per-vertex, per-edge, and (when triangle lists
/// are materialized) per-triangle tallies.
pub fn count_four_cliques(
    g: &Graph,
    dag: &DegreeOrientedDag,
    tri: &TriangleStore,
) -> FourCliqueCounts {
    let mut total = 0i128;
    let mut per_vertex = vec![0u64; g.vertex_count()];
    let mut per_edge = vec![0u64; g.edge_count()];
    let mut per_triangle = tri.has_lists().then(|| vec![0u32; tri.total() as usize]);
    let mut above: Vec<u32> = Vec::new();

    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let e = e as u32;
        let (i, j) = if dag.rank(a) < dag.rank(b) { (a, b) } else { (b, a) };
        // Vertices adjacent to both endpoints and rank-above both: the
        // pairings of triangles over (i, j) that can close into a clique.
        above.clear();
        if tri.has_lists() {
            let j_rank = dag.rank(j);
            above.extend(tri.apexes(e).iter().copied().filter(|&u| dag.rank(u) > j_rank));
        } else {
            let (oi, oj) = (dag.outgoing(i), dag.outgoing(j));
            // Both rows are rank-sorted; intersect by merging.
            let mut x = 0;
            let mut y = 0;
            while x < oi.len() && y < oj.len() {
                let (ri, rj) = (dag.rank(oi[x]), dag.rank(oj[y]));
                match ri.cmp(&rj) {
                    std::cmp::Ordering::Less => x += 1,
                    std::cmp::Ordering::Greater => y += 1,
                    std::cmp::Ordering::Equal => {
                        above.push(oi[x]);
                        x += 1;
                        y += 1;
                    }
                }
            }
        }
        for x in 0..above.len() {
            for y in (x + 1)..above.len() {
                let (u, v) = (above[x], above[y]);
                let Some(e_uv) = g.edge_index(u, v) else { continue };
                total += 1;
                for w in [i, j, u, v] {
                    per_vertex[w as usize] += 1;
                }
                let e_iu = g.edge_index(i, u).expect("clique edge");
                let e_iv = g.edge_index(i, v).expect("clique edge");
                let e_ju = g.edge_index(j, u).expect("clique edge");
                let e_jv = g.edge_index(j, v).expect("clique edge");
                for edge in [e, e_iu, e_iv, e_ju, e_jv, e_uv] {
                    per_edge[edge as usize] += 1;
                }
                if let Some(k4t) = per_triangle.as_mut() {
                    for (base, apex) in [(e, u), (e, v), (e_iu, v), (e_ju, v)] {
                        let t = tri.triangle_id(base, apex).expect("clique triangle");
                        k4t[t as usize] += 1;
                    }
                }
            }
        }
    }
    FourCliqueCounts { total, per_vertex, per_edge, per_triangle }
}

/// Assemble the 4-vertex non-induced vector and convert to induced counts.
pub fn four_report(
    simple: &FourSimple,
    cycles: &FourCycleCounts,
    cliques: &FourCliqueCounts,
    catalog: &PatternCatalog,
) -> Result<FourCounts> {
    let noninduced = [
        simple.three_star,
        simple.three_path,
        simple.tailed_triangle,
        cycles.total,
        simple.diamond,
        cliques.total,
    ];
    let induced = catalog.noninduced_to_induced4(&noninduced)?;
    Ok(FourCounts { noninduced, induced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn complete(n: u32) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n as u64 {
            for b in (a + 1)..n as u64 {
                edges.push((a, b));
            }
        }
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn prepared(g: &Graph) -> (DegreeOrientedDag, TriangleStore) {
        let dag = DegreeOrientedDag::build(g);
        let mut tri = TriangleStore::count(g, &dag);
        tri.materialize_lists(g, &dag);
        (dag, tri)
    }

    #[test]
    fn simple_counts_on_k4() {
        let g = complete(4);
        let (dag, tri) = prepared(&g);
        let s = count_four_simple(&g, &tri);
        assert_eq!(s.three_star, 4);
        assert_eq!(s.three_path, 12);
        assert_eq!(s.tailed_triangle, 12);
        assert_eq!(s.diamond, 6);
        let _ = dag;
    }

    #[test]
    fn simple_counts_on_c5() {
        let edges: Vec<(u64, u64)> = (0..5u64).map(|v| (v, (v + 1) % 5)).collect();
        let g = Graph::from_edges(5, &edges).unwrap();
        let (_, tri) = prepared(&g);
        let s = count_four_simple(&g, &tri);
        assert_eq!(s.three_star, 0);
        assert_eq!(s.three_path, 5);
        assert_eq!(s.tailed_triangle, 0);
        assert_eq!(s.diamond, 0);
    }

    #[test]
    fn four_cycles_on_cycle_and_k4() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let dag = DegreeOrientedDag::build(&g);
        let c = count_four_cycles(&g, &dag);
        assert_eq!(c.total, 1);
        assert!(c.per_edge.iter().all(|&x| x == 1));
        assert!(c.per_vertex.iter().all(|&x| x == 1));

        let g = complete(4);
        let dag = DegreeOrientedDag::build(&g);
        let c = count_four_cycles(&g, &dag);
        assert_eq!(c.total, 3);
        assert!(c.per_edge.iter().all(|&x| x == 2));
        let vertex_sum: u64 = c.per_vertex.iter().sum();
        let edge_sum: u64 = c.per_edge.iter().sum();
        assert_eq!(vertex_sum as i128, 4 * c.total);
        assert_eq!(edge_sum as i128, 4 * c.total);
    }

    #[test]
    fn four_cliques_on_k5() {
        let g = complete(5);
        let (dag, tri) = prepared(&g);
        let k = count_four_cliques(&g, &dag, &tri);
        assert_eq!(k.total, 5);
        assert!(k.per_vertex.iter().all(|&x| x == 4));
        assert!(k.per_edge.iter().all(|&x| x == 3));
        let k4t = k.per_triangle.as_ref().unwrap();
        assert!(k4t.iter().all(|&x| x == 2));
        let vertex_sum: u64 = k.per_vertex.iter().sum();
        let edge_sum: u64 = k.per_edge.iter().sum();
        let tri_sum: u64 = k4t.iter().map(|&x| x as u64).sum();
        assert_eq!(vertex_sum as i128, 4 * k.total);
        assert_eq!(edge_sum as i128, 6 * k.total);
        assert_eq!(tri_sum as i128, 4 * k.total);
    }

    #[test]
    fn four_cliques_without_lists_agree() {
        let g = complete(6);
        let dag = DegreeOrientedDag::build(&g);
        let counted = TriangleStore::count(&g, &dag);
        let without = count_four_cliques(&g, &dag, &counted);
        let mut with_lists = counted.clone();
        with_lists.materialize_lists(&g, &dag);
        let with = count_four_cliques(&g, &dag, &with_lists);
        assert_eq!(without.total, with.total);
        assert_eq!(without.per_vertex, with.per_vertex);
        assert_eq!(without.per_edge, with.per_edge);
        assert!(without.per_triangle.is_none());
        assert!(with.per_triangle.is_some());
    }

    #[test]
    fn report_on_k4_is_pure_clique() {
        let g = complete(4);
        let (dag, tri) = prepared(&g);
        let catalog = PatternCatalog::build();
        let counts = four_report(
            &count_four_simple(&g, &tri),
            &count_four_cycles(&g, &dag),
            &count_four_cliques(&g, &dag, &tri),
            &catalog,
        )
        .unwrap();
        assert_eq!(counts.induced, [0, 0, 0, 0, 0, 1]);
        assert_eq!(counts.noninduced, [4, 12, 12, 3, 6, 1]);
    }
}
