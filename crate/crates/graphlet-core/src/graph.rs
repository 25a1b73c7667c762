//! Graph ingestion and the degree-ordered acyclic orientation.
//!
//! [`Graph`] is an immutable undirected simple graph in compressed sparse
//! row form: no self-loops, no duplicate edges, neighbor rows sorted by
//! vertex id, and an edge id attached to every adjacency entry so per-edge
//! tallies can be array-indexed. Input vertex ids are arbitrary `u64`
//! values; they are compacted to `0..n` in first-appearance order with the
//! reverse map retained for reporting.
//!
//! [`DegreeOrientedDag`] orients every edge from the endpoint that is
//! smaller under the total order "degree, then id" to the larger one. The
//! orientation is acyclic, out-neighborhoods are small on skewed degree
//! distributions, and both directions are stored with rows sorted by rank
//! so enumeration loops can cut off early.

use crate::{Error, Result};
use std::io::BufRead;

/// Placeholder original id for vertices created by padding (never seen in
/// the input); reported as null in profiles.
pub const SYNTHETIC_ID: u64 = u64::MAX;

/// Normalization tallies from [`load_edge_list`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadStats {
    /// Input lines whose two endpoints were equal.
    pub self_loops: u64,
    /// Non-loop input pairs beyond the first occurrence of their edge.
    pub duplicates: u64,
}

/// Immutable undirected simple graph.
#[derive(Debug, Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    row_edge_ids: Vec<u32>,
    edges: Vec<(u32, u32)>,
    original_ids: Vec<u64>,
}

impl Graph {
    /// Build from already compacted edges on vertices `0..n` (ids used as given;
    /// self-loops and duplicates are dropped silently). Intended for tests
    /// and generators; text input goes through [`load_edge_list`].
    pub fn from_edges(n: usize, edges: &[(u64, u64)]) -> Result<Graph> {
        let mut pairs = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n as u64 || b >= n as u64 {
                return Err(Error::Integrity(format!(
                    "edge ({a},{b}) exceeds the declared vertex count {n}"
                )));
            }
            if a == b {
                continue;
            }
            let (a, b) = (a as u32, b as u32);
            pairs.push(if a < b { (a, b) } else { (b, a) });
        }
        pairs.sort_unstable();
        pairs.dedup();
        let original_ids = (0..n as u64).collect();
        Ok(Graph::assemble(n, pairs, original_ids))
    }

    fn assemble(n: usize, edges: Vec<(u32, u32)>, original_ids: Vec<u64>) -> Graph {
        let m = edges.len();
        let mut degrees = vec![0usize; n];
        for &(a, b) in &edges {
            degrees[a as usize] += 1;
            degrees[b as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degrees {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor: Vec<usize> = offsets[..n].to_vec();
        let mut neighbors = vec![0u32; 2 * m];
        let mut row_edge_ids = vec![0u32; 2 * m];
        // Edges are sorted by (a, b), so row a receives its neighbors in
        // ascending order directly; row b needs a sort afterwards.
        for (id, &(a, b)) in edges.iter().enumerate() {
            neighbors[cursor[a as usize]] = b;
            row_edge_ids[cursor[a as usize]] = id as u32;
            cursor[a as usize] += 1;
            neighbors[cursor[b as usize]] = a;
            row_edge_ids[cursor[b as usize]] = id as u32;
            cursor[b as usize] += 1;
        }
        for v in 0..n {
            let (lo, hi) = (offsets[v], offsets[v + 1]);
            let mut zipped: Vec<(u32, u32)> = neighbors[lo..hi]
                .iter()
                .copied()
                .zip(row_edge_ids[lo..hi].iter().copied())
                .collect();
            zipped.sort_unstable();
            for (k, (nb, eid)) in zipped.into_iter().enumerate() {
                neighbors[lo + k] = nb;
                row_edge_ids[lo + k] = eid;
            }
        }
        debug_assert_eq!(offsets[n], 2 * m);
        Graph { offsets, neighbors, row_edge_ids, edges, original_ids }
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.original_ids.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree of a vertex.
    pub fn degree(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Neighbor row, sorted ascending by vertex id.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Edge ids parallel to [`Self::neighbors`].
    pub fn row_edge_ids(&self, v: u32) -> &[u32] {
        &self.row_edge_ids[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Canonical edge list, each pair `(a, b)` with `a < b`, sorted; the
    /// position of an edge in this slice is its edge id.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Endpoints of an edge id.
    pub fn edge_endpoints(&self, e: u32) -> (u32, u32) {
        self.edges[e as usize]
    }

    /// Whether the unordered pair `{u, v}` is an edge.
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edge id of `{u, v}`, if present.
    pub fn edge_index(&self, u: u32, v: u32) -> Option<u32> {
        let row = self.neighbors(u);
        row.binary_search(&v).ok().map(|k| self.row_edge_ids[self.offsets[u as usize] + k])
    }

    /// Original input id of a vertex; `None` for padded isolated vertices
    /// that never appeared in the input.
    pub fn original_id(&self, v: u32) -> Option<u64> {
        let id = self.original_ids[v as usize];
        (id != SYNTHETIC_ID).then_some(id)
    }
}

/// Parse a whitespace-separated edge list.
///
/// Lines starting with `#` or `%` are comments; blank lines are skipped.
/// Every data line holds two integer endpoints, except that a *first* data
/// line with three tokens is treated as a dimension header (as written by
/// common sparse-matrix exports) and contributes `max(rows, cols)` as a
/// lower bound on the vertex count instead of an edge. Orientation of the
/// input pairs is ignored; self-loops and duplicate edges are dropped and
/// tallied. `min_vertices` forces at least that many vertices so isolated
/// vertices survive normalization; empty input yields the empty graph.
pub fn load_edge_list<R: BufRead>(
    reader: R,
    min_vertices: Option<u64>,
) -> Result<(Graph, LoadStats)> {
    let mut stats = LoadStats::default();
    let mut compact: std::collections::HashMap<u64, u32> = std::collections::HashMap::new();
    let mut original_ids: Vec<u64> = Vec::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut hint: u64 = 0;
    let mut seen_data_line = false;

    let intern = |id: u64,
                  original_ids: &mut Vec<u64>,
                  compact: &mut std::collections::HashMap<u64, u32>|
     -> u32 {
        *compact.entry(id).or_insert_with(|| {
            original_ids.push(id);
            (original_ids.len() - 1) as u32
        })
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let parse = |tok: &str| -> Result<u64> {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("non-integer token {tok:?}"),
            })
        };
        if !seen_data_line && tokens.len() == 3 {
            // Dimension header: rows, cols, entry count. Only the shape
            // matters here; the entry count is advisory.
            let rows = parse(tokens[0])?;
            let cols = parse(tokens[1])?;
            parse(tokens[2])?;
            hint = rows.max(cols);
            seen_data_line = true;
            continue;
        }
        seen_data_line = true;
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 2 integer tokens, found {}", tokens.len()),
            });
        }
        let a = parse(tokens[0])?;
        let b = parse(tokens[1])?;
        if a == b {
            stats.self_loops += 1;
            continue;
        }
        let ca = intern(a, &mut original_ids, &mut compact);
        let cb = intern(b, &mut original_ids, &mut compact);
        pairs.push(if ca < cb { (ca, cb) } else { (cb, ca) });
    }

    let before = pairs.len();
    pairs.sort_unstable();
    pairs.dedup();
    stats.duplicates = (before - pairs.len()) as u64;

    let mut n = original_ids.len();
    let target = hint.max(min_vertices.unwrap_or(0)) as usize;
    while n < target {
        original_ids.push(SYNTHETIC_ID);
        n += 1;
    }
    Ok((Graph::assemble(n, pairs, original_ids), stats))
}

/// Acyclic orientation of a [`Graph`] under the (degree, id) order.
#[derive(Debug, Clone)]
pub struct DegreeOrientedDag {
    out_offsets: Vec<usize>,
    out_neighbors: Vec<u32>,
    out_edge_ids: Vec<u32>,
    in_offsets: Vec<usize>,
    in_neighbors: Vec<u32>,
    in_edge_ids: Vec<u32>,
    rank: Vec<u32>,
    order: Vec<u32>,
}

impl DegreeOrientedDag {
    /// Orient every edge of `g` from its (degree, id)-smaller endpoint to
    /// the larger one. Out- and in-rows are sorted by rank.
    pub fn build(g: &Graph) -> DegreeOrientedDag {
        let n = g.vertex_count();
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by_key(|&v| (g.degree(v), v));
        let mut rank = vec![0u32; n];
        for (r, &v) in order.iter().enumerate() {
            rank[v as usize] = r as u32;
        }

        let mut out_deg = vec![0usize; n];
        let mut in_deg = vec![0usize; n];
        for &(a, b) in g.edges() {
            let (src, dst) = if rank[a as usize] < rank[b as usize] { (a, b) } else { (b, a) };
            out_deg[src as usize] += 1;
            in_deg[dst as usize] += 1;
        }
        let prefix = |deg: &[usize]| {
            let mut offs = Vec::with_capacity(n + 1);
            let mut acc = 0usize;
            offs.push(0);
            for d in deg {
                acc += d;
                offs.push(acc);
            }
            offs
        };
        let out_offsets = prefix(&out_deg);
        let in_offsets = prefix(&in_deg);
        let m = g.edge_count();
        let mut out_neighbors = vec![0u32; m];
        let mut out_edge_ids = vec![0u32; m];
        let mut in_neighbors = vec![0u32; m];
        let mut in_edge_ids = vec![0u32; m];
        let mut out_cursor: Vec<usize> = out_offsets[..n].to_vec();
        let mut in_cursor: Vec<usize> = in_offsets[..n].to_vec();
        for (id, &(a, b)) in g.edges().iter().enumerate() {
            let (src, dst) = if rank[a as usize] < rank[b as usize] { (a, b) } else { (b, a) };
            out_neighbors[out_cursor[src as usize]] = dst;
            out_edge_ids[out_cursor[src as usize]] = id as u32;
            out_cursor[src as usize] += 1;
            in_neighbors[in_cursor[dst as usize]] = src;
            in_edge_ids[in_cursor[dst as usize]] = id as u32;
            in_cursor[dst as usize] += 1;
        }
        for v in 0..n {
            let sort_row = |offs: &[usize], nbrs: &mut [u32], eids: &mut [u32]| {
                let (lo, hi) = (offs[v], offs[v + 1]);
                let mut zipped: Vec<(u32, u32)> = nbrs[lo..hi]
                    .iter()
                    .map(|&w| rank[w as usize])
                    .zip(eids[lo..hi].iter().copied())
                    .collect();
                let mut with_vertex: Vec<(u32, u32, u32)> = zipped
                    .drain(..)
                    .zip(nbrs[lo..hi].iter().copied())
                    .map(|((r, e), w)| (r, w, e))
                    .collect();
                with_vertex.sort_unstable();
                for (k, (_, w, e)) in with_vertex.into_iter().enumerate() {
                    nbrs[lo + k] = w;
                    eids[lo + k] = e;
                }
            };
            sort_row(&out_offsets, &mut out_neighbors, &mut out_edge_ids);
            sort_row(&in_offsets, &mut in_neighbors, &mut in_edge_ids);
        }
        DegreeOrientedDag {
            out_offsets,
            out_neighbors,
            out_edge_ids,
            in_offsets,
            in_neighbors,
            in_edge_ids,
            rank,
            order,
        }
    }

    /// Rank of a vertex under the (degree, id) order.
    pub fn rank(&self, v: u32) -> u32 {
        self.rank[v as usize]
    }

    /// The vertex occupying a given rank.
    pub fn vertex_at_rank(&self, r: u32) -> u32 {
        self.order[r as usize]
    }

    /// Out-neighbors (rank-larger endpoints), sorted by rank.
    pub fn outgoing(&self, v: u32) -> &[u32] {
        &self.out_neighbors[self.out_offsets[v as usize]..self.out_offsets[v as usize + 1]]
    }

    /// Edge ids parallel to [`Self::outgoing`].
    pub fn outgoing_edge_ids(&self, v: u32) -> &[u32] {
        &self.out_edge_ids[self.out_offsets[v as usize]..self.out_offsets[v as usize + 1]]
    }

    /// In-neighbors (rank-smaller endpoints), sorted by rank.
    pub fn incoming(&self, v: u32) -> &[u32] {
        &self.in_neighbors[self.in_offsets[v as usize]..self.in_offsets[v as usize + 1]]
    }

    /// Edge ids parallel to [`Self::incoming`].
    pub fn incoming_edge_ids(&self, v: u32) -> &[u32] {
        &self.in_edge_ids[self.in_offsets[v as usize]..self.in_offsets[v as usize + 1]]
    }

    /// Out-degree of a vertex.
    pub fn outdegree(&self, v: u32) -> usize {
        self.out_offsets[v as usize + 1] - self.out_offsets[v as usize]
    }

    /// In-degree of a vertex.
    pub fn indegree(&self, v: u32) -> usize {
        self.in_offsets[v as usize + 1] - self.in_offsets[v as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn load(text: &str) -> (Graph, LoadStats) {
        load_edge_list(Cursor::new(text), None).unwrap()
    }

    #[test]
    fn dedup_and_self_loop_drop() {
        let (g, stats) = load("1 2\n2 1\n1 1\n2 3\n");
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(stats.self_loops, 1);
        assert_eq!(stats.duplicates, 1);
        assert_eq!(g.original_id(0), Some(1));
        assert_eq!(g.original_id(1), Some(2));
        assert_eq!(g.original_id(2), Some(3));
    }

    #[test]
    fn triangle_degrees() {
        let (g, _) = load("0 1\n1 2\n0 2\n");
        assert_eq!(g.vertex_count(), 3);
        for v in 0..3 {
            assert_eq!(g.degree(v), 2);
        }
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn comments_blank_lines_and_empty_input() {
        let (g, _) = load("# comment\n%%Header stuff\n\n0 1\n");
        assert_eq!(g.edge_count(), 1);
        let (empty, stats) = load("");
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(stats, LoadStats::default());
    }

    #[test]
    fn dimension_header_line() {
        let (g, _) = load("%%MatrixMarket matrix coordinate pattern symmetric\n5 5 2\n1 2\n3 4\n");
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.original_id(4), None);
    }

    #[test]
    fn three_tokens_later_is_an_error() {
        let err = load_edge_list(Cursor::new("0 1\n1 2 9\n"), None).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn non_integer_token_is_an_error() {
        let err = load_edge_list(Cursor::new("a b\n"), None).unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 1);
                assert!(message.contains("non-integer"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn min_vertices_pads_isolated() {
        let (g, _) = load_edge_list(Cursor::new("0 1\n"), Some(7)).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.original_id(6), None);
    }

    #[test]
    fn first_appearance_compaction() {
        let (g, _) = load("5 3\n2 5\n");
        assert_eq!(g.original_id(0), Some(5));
        assert_eq!(g.original_id(1), Some(3));
        assert_eq!(g.original_id(2), Some(2));
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let (g, _) = load("0 1\n0 2\n0 3\n1 2\n");
        let total: usize = (0..g.vertex_count() as u32).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn dag_orientation_rule() {
        // Path 0 - 1 - 2: both endpoints have degree 1 and point at the
        // middle vertex.
        let (g, _) = load("0 1\n1 2\n");
        let dag = DegreeOrientedDag::build(&g);
        assert_eq!(dag.outgoing(0), &[1]);
        assert_eq!(dag.outgoing(2), &[1]);
        assert_eq!(dag.outgoing(1), &[] as &[u32]);
        assert_eq!(dag.incoming(1).len(), 2);

        // K4: equal degrees break ties by id, so outdegrees are 3,2,1,0.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let dag = DegreeOrientedDag::build(&g);
        let outs: Vec<usize> = (0..4).map(|v| dag.outdegree(v)).collect();
        assert_eq!(outs, vec![3, 2, 1, 0]);
        for v in 0..4u32 {
            assert_eq!(dag.outdegree(v) + dag.indegree(v), g.degree(v));
        }
    }

    #[test]
    fn dag_round_trip_preserves_edges() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)])
            .unwrap();
        let dag = DegreeOrientedDag::build(&g);
        let mut recovered: Vec<(u32, u32)> = Vec::new();
        for v in 0..g.vertex_count() as u32 {
            for &w in dag.outgoing(v) {
                recovered.push(if v < w { (v, w) } else { (w, v) });
            }
        }
        recovered.sort_unstable();
        assert_eq!(recovered.as_slice(), g.edges());
        for v in 0..g.vertex_count() as u32 {
            for &w in dag.outgoing(v) {
                assert!(dag.rank(v) < dag.rank(w));
            }
        }
    }

    #[test]
    fn edge_ids_are_consistent() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        for (id, &(a, b)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_index(a, b), Some(id as u32));
            assert_eq!(g.edge_index(b, a), Some(id as u32));
            assert_eq!(g.edge_endpoints(id as u32), (a, b));
        }
        assert_eq!(g.edge_index(0, 2), None);
    }
}
