//! Wedge statistics and triangle enumeration.
//!
//! Triangles are enumerated once, as out-neighbor pairs in the degree
//! orientation: for each vertex `u`, every pair `(a, b)` of out-neighbors
//! with the edge `{a, b}` present yields the triangle `u < a < b` in rank
//! order, found exactly once. The cost is the out-out wedge count, which
//! the orientation keeps small.
//!
//! [`TriangleStore`] holds the per-vertex and per-edge tallies, and
//! optionally the per-edge completion lists (for every edge, the third
//! vertices of its triangles). The lists occupy 3T entries; callers gate
//! materialization on [`TriangleStore::estimated_list_bytes`] so huge
//! inputs can fall back to count-only operation.

use crate::graph::{DegreeOrientedDag, Graph};

/// Undirected and directed wedge totals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WedgeStats {
    /// All wedges: Σ_v C(d(v), 2).
    pub total: i128,
    /// Wedges whose center has two out-edges.
    pub out_out: i128,
    /// Wedges whose center has one in- and one out-edge.
    pub in_out: i128,
    /// Wedges whose center has two in-edges.
    pub in_in: i128,
}

/// Count every wedge and classify it by the directions at its center.
pub fn count_wedges(g: &Graph, dag: &DegreeOrientedDag) -> WedgeStats {
    let mut stats = WedgeStats { total: 0, out_out: 0, in_out: 0, in_in: 0 };
    for v in 0..g.vertex_count() as u32 {
        let o = dag.outdegree(v) as i128;
        let i = dag.indegree(v) as i128;
        stats.out_out += o * (o - 1) / 2;
        stats.in_out += i * o;
        stats.in_in += i * (i - 1) / 2;
    }
    stats.total = stats.out_out + stats.in_out + stats.in_in;
    stats
}

/// Visit every triangle exactly once as `(u, a, b)` with
/// `rank(u) < rank(a) < rank(b)`, along with the three edge ids
/// `(e_ua, e_ub, e_ab)`. Visit order is deterministic, so the running
/// index of a visit is a stable triangle id.
pub fn for_each_triangle<F: FnMut(u32, u32, u32, u32, u32, u32)>(
    g: &Graph,
    dag: &DegreeOrientedDag,
    mut f: F,
) {
    for u in 0..g.vertex_count() as u32 {
        let outs = dag.outgoing(u);
        let eids = dag.outgoing_edge_ids(u);
        for i in 0..outs.len() {
            for j in (i + 1)..outs.len() {
                let (a, b) = (outs[i], outs[j]);
                if let Some(e_ab) = g.edge_index(a, b) {
                    f(u, a, b, eids[i], eids[j], e_ab);
                }
            }
        }
    }
}

/// Triangle tallies plus optional per-edge completion lists.
#[derive(Debug, Clone)]
pub struct TriangleStore {
    total: u64,
    per_vertex: Vec<u64>,
    per_edge: Vec<u32>,
    lists: Option<TriangleLists>,
}

#[derive(Debug, Clone)]
struct TriangleLists {
    offsets: Vec<usize>,
    /// For edge e, `apex[offsets[e]..offsets[e+1]]` are the third vertices
    /// of e's triangles, sorted by vertex id.
    apex: Vec<u32>,
    /// Triangle ids parallel to `apex` (enumeration order of
    /// [`for_each_triangle`]).
    tri_id: Vec<u32>,
}

impl TriangleStore {
    /// Count triangles per vertex and per edge without materializing the
    /// completion lists.
    pub fn count(g: &Graph, dag: &DegreeOrientedDag) -> TriangleStore {
        let mut total = 0u64;
        let mut per_vertex = vec![0u64; g.vertex_count()];
        let mut per_edge = vec![0u32; g.edge_count()];
        for_each_triangle(g, dag, |u, a, b, e_ua, e_ub, e_ab| {
            total += 1;
            per_vertex[u as usize] += 1;
            per_vertex[a as usize] += 1;
            per_vertex[b as usize] += 1;
            per_edge[e_ua as usize] += 1;
            per_edge[e_ub as usize] += 1;
            per_edge[e_ab as usize] += 1;
        });
        TriangleStore { total, per_vertex, per_edge, lists: None }
    }

    /// Bytes the completion lists would occupy for a graph with `m` edges
    /// and `total` triangles (offsets plus 3·total apex/id entries).
    pub fn estimated_list_bytes(m: usize, total: u64) -> u64 {
        8 * (m as u64 + 1) + 24 * total
    }

    /// Build the per-edge completion lists by a second enumeration pass.
    pub fn materialize_lists(&mut self, g: &Graph, dag: &DegreeOrientedDag) {
        let m = g.edge_count();
        let mut offsets = Vec::with_capacity(m + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for &c in &self.per_edge {
            acc += c as usize;
            offsets.push(acc);
        }
        let entries = 3 * self.total as usize;
        debug_assert_eq!(acc, entries);
        let mut apex = vec![0u32; entries];
        let mut tri_id = vec![0u32; entries];
        let mut cursor: Vec<usize> = offsets[..m].to_vec();
        let mut next_id = 0u32;
        for_each_triangle(g, dag, |u, a, b, e_ua, e_ub, e_ab| {
            for (e, c) in [(e_ua, b), (e_ub, a), (e_ab, u)] {
                apex[cursor[e as usize]] = c;
                tri_id[cursor[e as usize]] = next_id;
                cursor[e as usize] += 1;
            }
            next_id += 1;
        });
        for e in 0..m {
            let (lo, hi) = (offsets[e], offsets[e + 1]);
            let mut zipped: Vec<(u32, u32)> =
                apex[lo..hi].iter().copied().zip(tri_id[lo..hi].iter().copied()).collect();
            zipped.sort_unstable();
            for (k, (c, t)) in zipped.into_iter().enumerate() {
                apex[lo + k] = c;
                tri_id[lo + k] = t;
            }
        }
        self.lists = Some(TriangleLists { offsets, apex, tri_id });
    }

    /// Total triangle count.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Triangles incident to a vertex.
    pub fn per_vertex(&self, v: u32) -> u64 {
        self.per_vertex[v as usize]
    }

    /// Triangles containing an edge.
    pub fn per_edge(&self, e: u32) -> u32 {
        self.per_edge[e as usize]
    }

    /// All per-vertex tallies.
    pub fn per_vertex_slice(&self) -> &[u64] {
        &self.per_vertex
    }

    /// All per-edge tallies.
    pub fn per_edge_slice(&self) -> &[u32] {
        &self.per_edge
    }

    /// Whether completion lists are materialized.
    pub fn has_lists(&self) -> bool {
        self.lists.is_some()
    }

    /// Third vertices of the triangles containing edge `e`, sorted by id.
    ///
    /// Panics if lists were not materialized; callers check
    /// [`Self::has_lists`] once at entry.
    pub fn apexes(&self, e: u32) -> &[u32] {
        let lists = self.lists.as_ref().expect("triangle lists not materialized");
        &lists.apex[lists.offsets[e as usize]..lists.offsets[e as usize + 1]]
    }

    /// Triangle ids parallel to [`Self::apexes`].
    pub fn apex_triangle_ids(&self, e: u32) -> &[u32] {
        let lists = self.lists.as_ref().expect("triangle lists not materialized");
        &lists.tri_id[lists.offsets[e as usize]..lists.offsets[e as usize + 1]]
    }

    /// Id of the triangle formed by edge `e` and vertex `apex`, if any.
    pub fn triangle_id(&self, e: u32, apex: u32) -> Option<u32> {
        let lists = self.lists.as_ref().expect("triangle lists not materialized");
        let (lo, hi) = (lists.offsets[e as usize], lists.offsets[e as usize + 1]);
        lists.apex[lo..hi].binary_search(&apex).ok().map(|k| lists.tri_id[lo + k])
    }
}
