//! Atlas of every pattern on at most five vertices and the linear algebra
//! connecting non-induced to induced counts.
//!
//! The catalog fixes, once and for all, the identity and order of every
//! isomorphism class: 1 pattern on 1 vertex, 2 on 2, 4 on 3, 11 on 4, and
//! 34 on 5 (21 connected + 13 disconnected). Connected patterns come first
//! within each size; the connected 5-vertex order is pinned by the stored
//! occurrence matrix [`FIVE_OCCURRENCE`], which construction re-derives
//! from the edge lists by exhaustive matching and compares entry for entry.
//! A mismatch aborts construction: the matrix, not the edge lists, is the
//! source of truth for the ordering.
//!
//! Two conversion mechanisms live here. For connected patterns the stored
//! inverse matrices turn non-induced vectors into induced ones. For
//! disconnected patterns the inclusion-exclusion recursion
//! `match(H) = prod match(H_i) − sum match(H_S)` over merge partitions is
//! specialized at construction into per-pattern term lists and evaluated
//! from the connected counts plus the vertex count. All of it is exact
//! 128-bit integer arithmetic with overflow reported as an integrity error.

use crate::{Error, Result};
use serde::Serialize;

/// Connected 5-vertex patterns.
pub const FIVE_CONNECTED: usize = 21;
/// All 5-vertex patterns, connected and disconnected.
pub const FIVE_TOTAL: usize = 34;
/// Connected 4-vertex patterns.
pub const FOUR_CONNECTED: usize = 6;
/// All 4-vertex patterns.
pub const FOUR_TOTAL: usize = 11;
/// Connected 3-vertex patterns.
pub const THREE_CONNECTED: usize = 2;
/// All 3-vertex patterns.
pub const THREE_TOTAL: usize = 4;

/// Number of copies of 5-vertex pattern `i` (row) inside 5-vertex pattern
/// `j` (column), both 1-based in catalog order. Upper triangular with unit
/// diagonal; `N = A·C` relates non-induced to induced count vectors.
pub const FIVE_OCCURRENCE: [[i128; 21]; 21] = [
    [1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 1, 1, 0, 1, 2, 3, 5],
    [0, 1, 0, 2, 1, 2, 2, 0, 4, 4, 5, 4, 6, 12, 9, 10, 10, 20, 20, 36, 60],
    [0, 0, 1, 0, 2, 1, 2, 5, 4, 4, 2, 7, 6, 6, 6, 10, 14, 24, 18, 36, 60],
    [0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 2, 0, 0, 6, 3, 3, 0, 4, 8, 15, 30],
    [0, 0, 0, 0, 1, 0, 0, 0, 4, 2, 0, 2, 0, 0, 3, 6, 6, 16, 12, 30, 60],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 2, 1, 0, 6, 6, 5, 4, 12, 14, 30, 60],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 2, 6, 6, 3, 4, 8, 16, 12, 30, 60],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 4, 2, 6, 12],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 6, 15],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 3, 2, 2, 8, 8, 24, 60],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 6, 3, 2, 0, 4, 10, 24, 60],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 4, 12, 6, 24, 60],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 2, 1, 4, 10],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 3, 10],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 6, 20],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 4, 4, 18, 60],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 1, 9, 30],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 15],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 6, 30],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 10],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// Exact integer inverse of [`FIVE_OCCURRENCE`]; `C = A⁻¹·N`.
pub const FIVE_OCCURRENCE_INV: [[i128; 21]; 21] = [
    [1, 0, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, -2, -1, -1, 0, 1, 2, -3, 5],
    [0, 1, 0, -2, -1, -2, -2, 0, 4, 4, 5, 4, 6, -12, -9, -10, -10, 20, 20, -36, 60],
    [0, 0, 1, 0, -2, -1, -2, -5, 4, 4, 2, 7, 6, -6, -6, -10, -14, 24, 18, -36, 60],
    [0, 0, 0, 1, 0, 0, 0, 0, -2, 0, -2, 0, 0, 6, 3, 3, 0, -4, -8, 15, -30],
    [0, 0, 0, 0, 1, 0, 0, 0, -4, -2, 0, -2, 0, 0, 3, 6, 6, -16, -12, 30, -60],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, -2, -2, -1, 0, 6, 6, 5, 4, -12, -14, 30, -60],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -2, -6, 6, 3, 4, 8, -16, -12, 30, -60],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 2, -4, -2, 6, -12],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 2, 2, -6, 15],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -3, -2, -2, 8, 8, -24, 60],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -6, -3, -2, 0, 4, 10, -24, 60],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -2, -4, 12, 6, -24, 60],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 2, 1, -4, 10],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 3, -10],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -2, 6, -20],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -4, -4, 18, -60],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -4, -1, 9, -30],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -3, 15],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -6, 30],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -10],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

type Edge = (u8, u8);

/// Static definition row: name, edge list, connected flag.
struct Def(&'static str, &'static [Edge], bool);

const SIZE1: &[Def] = &[Def("vertex", &[], true)];

const SIZE2: &[Def] = &[Def("edge", &[(0, 1)], true), Def("non_edge", &[], false)];

const SIZE3: &[Def] = &[
    Def("wedge", &[(0, 1), (0, 2)], true),
    Def("triangle", &[(0, 1), (0, 2), (1, 2)], true),
    Def("edge_k1", &[(0, 1)], false),
    Def("empty_three", &[], false),
];

const SIZE4: &[Def] = &[
    Def("three_star", &[(0, 1), (0, 2), (0, 3)], true),
    Def("three_path", &[(0, 1), (1, 2), (2, 3)], true),
    Def("tailed_triangle", &[(0, 1), (0, 2), (1, 2), (2, 3)], true),
    Def("four_cycle", &[(0, 1), (1, 2), (2, 3), (0, 3)], true),
    Def("diamond", &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)], true),
    Def("four_clique", &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], true),
    Def("triangle_k1", &[(0, 1), (0, 2), (1, 2)], false),
    Def("wedge_k1", &[(0, 1), (0, 2)], false),
    Def("two_edges", &[(0, 3), (1, 2)], false),
    Def("edge_2k1", &[(0, 1)], false),
    Def("empty_four", &[], false),
];

const SIZE5: &[Def] = &[
    Def("four_star", &[(0, 1), (0, 2), (0, 3), (0, 4)], true),
    Def("tailed_three_star", &[(0, 1), (0, 3), (0, 4), (1, 2)], true),
    Def("five_path", &[(0, 2), (0, 4), (1, 2), (1, 3)], true),
    Def("cricket", &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)], true),
    Def("long_tailed_triangle", &[(0, 1), (0, 4), (1, 2), (1, 3), (2, 3)], true),
    Def("bull", &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3)], true),
    Def("tailed_four_cycle", &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)], true),
    Def("five_cycle", &[(0, 3), (0, 4), (1, 2), (1, 4), (2, 3)], true),
    Def("bowtie", &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3)], true),
    Def("rim_tailed_diamond", &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3)], true),
    Def("hub_tailed_diamond", &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3)], true),
    Def("house", &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)], true),
    Def("k23", &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], true),
    Def("triangle_book", &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], true),
    Def("tailed_four_clique", &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)], true),
    Def("triangle_strip", &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)], true),
    Def("capped_diamond", &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)], true),
    Def("wheel", &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)], true),
    Def(
        "capped_four_clique",
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)],
        true,
    ),
    Def(
        "five_clique_minus_edge",
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
        true,
    ),
    Def(
        "five_clique",
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        true,
    ),
    Def("four_clique_k1", &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], false),
    Def("diamond_k1", &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], false),
    Def("tailed_triangle_k1", &[(0, 1), (0, 2), (0, 3), (1, 2)], false),
    Def("four_cycle_k1", &[(0, 2), (0, 3), (1, 2), (1, 3)], false),
    Def("triangle_edge", &[(0, 4), (1, 2), (1, 3), (2, 3)], false),
    Def("three_star_k1", &[(0, 1), (0, 2), (0, 3)], false),
    Def("triangle_2k1", &[(0, 1), (0, 2), (1, 2)], false),
    Def("three_path_k1", &[(0, 1), (0, 3), (1, 2)], false),
    Def("wedge_edge", &[(0, 3), (0, 4), (1, 2)], false),
    Def("wedge_2k1", &[(0, 1), (0, 2)], false),
    Def("two_edges_k1", &[(0, 3), (1, 2)], false),
    Def("edge_3k1", &[(0, 1)], false),
    Def("empty_five", &[], false),
];

/// One isomorphism class in the atlas.
#[derive(Debug, Clone)]
pub struct Pattern {
    /// Vertex count, 1..=5.
    pub size: u8,
    /// 1-based position within its size (connected patterns first).
    pub index: u32,
    /// Human-readable identifier used in reports.
    pub name: &'static str,
    /// Representative edge list on vertices 0..size.
    pub edges: &'static [Edge],
    /// Whether the pattern is connected.
    pub connected: bool,
    /// Number of automorphisms |Aut(H)|.
    pub automorphisms: u64,
    /// Canonical adjacency bitmask (minimum over all vertex orderings).
    pub canonical_mask: u16,
}

impl Pattern {
    /// Report identifier, e.g. `"5-8"` for the 5-cycle.
    pub fn id(&self) -> String {
        format!("{}-{}", self.size, self.index)
    }

    /// Number of edges in the pattern.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Inclusion-exclusion recipe for one disconnected pattern: the labeled
/// match count is the product over `components` minus the sum over
/// `merges` (merge partitions listed with multiplicity). Entries are
/// `(size, 0-based catalog index)` class references.
struct DiscRule {
    class: (u8, u16),
    components: Vec<(u8, u16)>,
    merges: Vec<(u8, u16)>,
}

/// Connected counts an evaluation of the disconnected recursion consumes.
///
/// `four` is the non-induced connected 4-pattern vector in catalog order.
/// 5-vertex disconnected patterns only ever reference pieces on at most 4
/// vertices, so no 5-vertex inputs are needed.
#[derive(Debug, Clone, Copy)]
pub struct CountInputs {
    /// Number of vertices in the host graph.
    pub n: i128,
    /// Number of edges.
    pub edges: i128,
    /// Non-induced wedge count (paths on 3 vertices).
    pub wedges: i128,
    /// Triangle count.
    pub triangles: i128,
    /// Non-induced connected 4-pattern counts in catalog order.
    pub four: [i128; 6],
}

/// The atlas plus all conversion machinery. Built once via
/// [`PatternCatalog::build`]; immutable and cheap to share afterwards.
pub struct PatternCatalog {
    sizes: [Vec<Pattern>; 5],
    /// Per size k, a table of length 2^C(k,2) mapping every adjacency
    /// bitmask to its 0-based class index.
    tables: [Vec<u16>; 5],
    four_occurrence: [[i128; 6]; 6],
    four_occurrence_inv: [[i128; 6]; 6],
    three_occurrence: [[i128; 2]; 2],
    three_occurrence_inv: [[i128; 2]; 2],
    /// Full same-size occurrence matrices (catalog order) for sizes 3..=5.
    full: [Vec<Vec<i128>>; 5],
    /// Per size, class indices sorted by ascending edge count; in this
    /// order the full occurrence matrix is unit upper triangular.
    solve_order: [Vec<usize>; 5],
    disc_rules: Vec<DiscRule>,
}

fn pair_count(k: usize) -> usize {
    k * (k - 1) / 2
}

/// Lexicographic index of the pair (a,b), a < b, among the C(k,2) pairs.
fn pair_index(k: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < k);
    a * k - a * (a + 1) / 2 + (b - a - 1)
}

fn mask_from_edges(k: usize, edges: &[Edge]) -> u16 {
    let mut mask = 0u16;
    for &(a, b) in edges {
        let (a, b) = (a as usize, b as usize);
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        mask |= 1 << pair_index(k, a, b);
    }
    mask
}

fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(k: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                rec(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

fn permute_mask(mask: u16, perm: &[u8], k: usize) -> u16 {
    let mut out = 0u16;
    for a in 0..k {
        for b in (a + 1)..k {
            if mask >> pair_index(k, a, b) & 1 == 1 {
                let (x, y) = (perm[a] as usize, perm[b] as usize);
                let (x, y) = if x < y { (x, y) } else { (y, x) };
                out |= 1 << pair_index(k, x, y);
            }
        }
    }
    out
}

fn canonical_mask(mask: u16, k: usize, perms: &[Vec<u8>]) -> u16 {
    perms.iter().map(|p| permute_mask(mask, p, k)).min().expect("at least one permutation")
}

fn automorphism_count(mask: u16, k: usize, perms: &[Vec<u8>]) -> u64 {
    perms.iter().filter(|p| permute_mask(mask, p, k) == mask).count() as u64
}

/// Unlabeled copies of the same-size pattern `inner` inside `outer`:
/// edge-preserving bijections divided by |Aut(inner)|.
fn copies_within(inner: u16, outer: u16, k: usize, perms: &[Vec<u8>], aut_inner: u64) -> i128 {
    let mut hits = 0u64;
    'perm: for p in perms {
        for a in 0..k {
            for b in (a + 1)..k {
                if inner >> pair_index(k, a, b) & 1 == 1 {
                    let (x, y) = (p[a] as usize, p[b] as usize);
                    let (x, y) = if x < y { (x, y) } else { (y, x) };
                    if outer >> pair_index(k, x, y) & 1 == 0 {
                        continue 'perm;
                    }
                }
            }
        }
        hits += 1;
    }
    debug_assert_eq!(hits % aut_inner, 0);
    (hits / aut_inner) as i128
}

fn connected_components(mask: u16, k: usize) -> Vec<Vec<u8>> {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in 0..k {
        for b in (a + 1)..k {
            if mask >> pair_index(k, a, b) & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut comps: Vec<Vec<u8>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; k];
    for v in 0..k {
        let r = find(&mut parent, v);
        match root_of[r] {
            Some(ci) => comps[ci].push(v as u8),
            None => {
                root_of[r] = Some(comps.len());
                comps.push(vec![v as u8]);
            }
        }
    }
    comps
}

/// All set partitions of 0..k whose blocks contain at most one vertex per
/// component; used to enumerate the fragment-collision terms of the
/// disconnected recursion. The all-singletons partition is included.
fn merge_partitions(comps: &[Vec<u8>], k: usize) -> Vec<Vec<Vec<u8>>> {
    let mut comp_of = vec![0usize; k];
    for (ci, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v as usize] = ci;
        }
    }
    let verts: Vec<u8> = comps.iter().flatten().copied().collect();
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<u8>> = Vec::new();
    fn rec(
        i: usize,
        verts: &[u8],
        comp_of: &[usize],
        blocks: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if i == verts.len() {
            out.push(blocks.clone());
            return;
        }
        let v = verts[i];
        for bi in 0..blocks.len() {
            if blocks[bi].iter().all(|&u| comp_of[u as usize] != comp_of[v as usize]) {
                blocks[bi].push(v);
                rec(i + 1, verts, comp_of, blocks, out);
                blocks[bi].pop();
            }
        }
        blocks.push(vec![v]);
        rec(i + 1, verts, comp_of, blocks, out);
        blocks.pop();
    }
    rec(0, &verts, &comp_of, &mut blocks, &mut out);
    out
}

pub(crate) fn checked_add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or_else(|| Error::Integrity("count arithmetic overflowed 128 bits".into()))
}

pub(crate) fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(|| Error::Integrity("count arithmetic overflowed 128 bits".into()))
}

impl PatternCatalog {
    /// Build the catalog, recompute the 5-vertex occurrence matrix from the
    /// edge lists, and verify it against [`FIVE_OCCURRENCE`] together with
    /// `A·A⁻¹ = I`. Panics if any stored constant disagrees with the
    /// recomputation: that indicates a corrupted build, not bad user input.
    // Index loops mirror the matrix notation here and below; iterator
    // forms obscure which axis is which.
    #[allow(clippy::needless_range_loop)]
    pub fn build() -> PatternCatalog {
        let defs: [&[Def]; 5] = [SIZE1, SIZE2, SIZE3, SIZE4, SIZE5];
        let mut sizes: [Vec<Pattern>; 5] = Default::default();
        let mut tables: [Vec<u16>; 5] = Default::default();

        for k in 1..=5usize {
            let perms = permutations(k);
            let mut list = Vec::with_capacity(defs[k - 1].len());
            for (pos, Def(name, edges, connected)) in defs[k - 1].iter().enumerate() {
                let mask = mask_from_edges(k, edges);
                let canon = canonical_mask(mask, k, &perms);
                list.push(Pattern {
                    size: k as u8,
                    index: (pos + 1) as u32,
                    name,
                    edges,
                    connected: *connected,
                    automorphisms: automorphism_count(canon, k, &perms),
                    canonical_mask: canon,
                });
            }
            // Classification table: every adjacency bitmask on k vertices
            // maps to exactly one catalog class.
            let mut table = vec![u16::MAX; 1usize << pair_count(k)];
            for mask in 0..table.len() as u16 {
                let canon = canonical_mask(mask, k, &perms);
                let idx = list
                    .iter()
                    .position(|p| p.canonical_mask == canon)
                    .unwrap_or_else(|| panic!("no catalog class for a {k}-vertex mask"));
                table[mask as usize] = idx as u16;
            }
            assert!(
                {
                    let mut seen: Vec<bool> = vec![false; list.len()];
                    for &idx in table.iter() {
                        seen[idx as usize] = true;
                    }
                    seen.iter().all(|&s| s)
                },
                "catalog classes at size {k} are not exhaustive"
            );
            sizes[k - 1] = list;
            tables[k - 1] = table;
        }

        // Recompute the 5-vertex connected occurrence matrix and insist it
        // matches the stored literal; this pins the pattern order.
        let perms5 = permutations(5);
        for i in 0..FIVE_CONNECTED {
            for j in 0..FIVE_CONNECTED {
                let got = copies_within(
                    sizes[4][i].canonical_mask,
                    sizes[4][j].canonical_mask,
                    5,
                    &perms5,
                    sizes[4][i].automorphisms,
                );
                assert_eq!(
                    got,
                    FIVE_OCCURRENCE[i][j],
                    "recomputed occurrence matrix disagrees with the stored one at ({},{})",
                    i + 1,
                    j + 1
                );
            }
        }
        for i in 0..FIVE_CONNECTED {
            for j in 0..FIVE_CONNECTED {
                let mut s = 0i128;
                for t in 0..FIVE_CONNECTED {
                    s += FIVE_OCCURRENCE[i][t] * FIVE_OCCURRENCE_INV[t][j];
                }
                assert_eq!(
                    s,
                    i128::from(i == j),
                    "stored occurrence matrix times stored inverse is not the identity"
                );
            }
        }

        // Smaller connected conversion matrices are generated, not stored:
        // only the 5-vertex pair is published in matrix form anywhere.
        let perms4 = permutations(4);
        let mut four_occ = [[0i128; 6]; 6];
        for i in 0..FOUR_CONNECTED {
            for j in 0..FOUR_CONNECTED {
                four_occ[i][j] = copies_within(
                    sizes[3][i].canonical_mask,
                    sizes[3][j].canonical_mask,
                    4,
                    &perms4,
                    sizes[3][i].automorphisms,
                );
            }
        }
        let perms3 = permutations(3);
        let mut three_occ = [[0i128; 2]; 2];
        for i in 0..THREE_CONNECTED {
            for j in 0..THREE_CONNECTED {
                three_occ[i][j] = copies_within(
                    sizes[2][i].canonical_mask,
                    sizes[2][j].canonical_mask,
                    3,
                    &perms3,
                    sizes[2][i].automorphisms,
                );
            }
        }

        // Full same-size occurrence matrices over the whole catalog, plus
        // the edge-count order in which they are unit upper triangular.
        let mut full: [Vec<Vec<i128>>; 5] = Default::default();
        let mut solve_order: [Vec<usize>; 5] = Default::default();
        for k in 3..=5usize {
            let perms = permutations(k);
            let classes = &sizes[k - 1];
            let mut m = vec![vec![0i128; classes.len()]; classes.len()];
            for (i, pi) in classes.iter().enumerate() {
                for (j, pj) in classes.iter().enumerate() {
                    m[i][j] = copies_within(
                        pi.canonical_mask,
                        pj.canonical_mask,
                        k,
                        &perms,
                        pi.automorphisms,
                    );
                }
            }
            let mut order: Vec<usize> = (0..classes.len()).collect();
            order.sort_by_key(|&i| (classes[i].edge_count(), i));
            full[k - 1] = m;
            solve_order[k - 1] = order;
        }

        // Specialize the disconnected recursion: one rule per disconnected
        // pattern, terms resolved to catalog class references.
        let mut disc_rules = Vec::new();
        for k in 2..=5usize {
            let perms = permutations(k);
            for (pos, pat) in sizes[k - 1].iter().enumerate() {
                if pat.connected {
                    continue;
                }
                let mask = mask_from_edges(k, pat.edges);
                let comps = connected_components(mask, k);
                let mut components = Vec::new();
                for comp in &comps {
                    let (ck, cidx) = classify_submask(mask, k, comp, &sizes, &tables);
                    components.push((ck, cidx));
                }
                let mut merges = Vec::new();
                for blocks in merge_partitions(&comps, k) {
                    if blocks.len() == k {
                        continue; // the identity partition is the match itself
                    }
                    let (mk, midx) = classify_merge(mask, k, &blocks, &tables);
                    merges.push((mk, midx));
                }
                let _ = perms; // permutations only needed transitively via tables
                disc_rules.push(DiscRule { class: (k as u8, pos as u16), components, merges });
            }
        }

        let catalog = PatternCatalog {
            sizes,
            tables,
            four_occurrence: four_occ,
            four_occurrence_inv: invert_unit_upper(&four_occ),
            three_occurrence: three_occ,
            three_occurrence_inv: invert_unit_upper(&three_occ),
            full,
            solve_order,
            disc_rules,
        };
        catalog.assert_counts();
        catalog
    }

    fn assert_counts(&self) {
        assert_eq!(self.sizes[2].len(), THREE_TOTAL);
        assert_eq!(self.sizes[3].len(), FOUR_TOTAL);
        assert_eq!(self.sizes[4].len(), FIVE_TOTAL);
        assert_eq!(self.connected_count(3), THREE_CONNECTED);
        assert_eq!(self.connected_count(4), FOUR_CONNECTED);
        assert_eq!(self.connected_count(5), FIVE_CONNECTED);
    }

    /// All patterns of the given size (1..=5) in catalog order.
    pub fn patterns(&self, size: u8) -> &[Pattern] {
        &self.sizes[size as usize - 1]
    }

    /// Number of connected patterns at the given size.
    pub fn connected_count(&self, size: u8) -> usize {
        self.patterns(size).iter().filter(|p| p.connected).count()
    }

    /// Classify an adjacency bitmask on `size` vertices (pairs in
    /// lexicographic order) to its 0-based catalog index.
    pub fn classify(&self, size: u8, mask: u16) -> usize {
        self.tables[size as usize - 1][mask as usize] as usize
    }

    /// The generated 6×6 occurrence matrix for connected 4-patterns.
    pub fn four_occurrence(&self) -> &[[i128; 6]; 6] {
        &self.four_occurrence
    }

    /// The generated 2×2 occurrence matrix for connected 3-patterns.
    pub fn three_occurrence(&self) -> &[[i128; 2]; 2] {
        &self.three_occurrence
    }

    /// Full same-size occurrence matrix over all patterns (catalog order).
    pub fn full_occurrence(&self, size: u8) -> &[Vec<i128>] {
        &self.full[size as usize - 1]
    }

    /// Convert non-induced connected 5-pattern counts to induced ones via
    /// the stored inverse matrix. Any negative entry is an integrity error:
    /// a correct engine on a real graph can never produce one.
    pub fn noninduced_to_induced(&self, n: &[i128; 21]) -> Result<[i128; 21]> {
        let mut c = [0i128; 21];
        for i in 0..21 {
            let mut acc = 0i128;
            for j in 0..21 {
                acc = checked_add(acc, checked_mul(FIVE_OCCURRENCE_INV[i][j], n[j])?)?;
            }
            if acc < 0 {
                return Err(Error::Integrity(format!(
                    "induced count for 5-vertex pattern {} is negative ({acc})",
                    i + 1
                )));
            }
            c[i] = acc;
        }
        Ok(c)
    }

    /// 4-vertex analogue of [`Self::noninduced_to_induced`].
    #[allow(clippy::needless_range_loop)]
    pub fn noninduced_to_induced4(&self, n: &[i128; 6]) -> Result<[i128; 6]> {
        let mut c = [0i128; 6];
        for i in 0..6 {
            let mut acc = 0i128;
            for j in 0..6 {
                acc = checked_add(acc, checked_mul(self.four_occurrence_inv[i][j], n[j])?)?;
            }
            if acc < 0 {
                return Err(Error::Integrity(format!(
                    "induced count for 4-vertex pattern {} is negative ({acc})",
                    i + 1
                )));
            }
            c[i] = acc;
        }
        Ok(c)
    }

    /// 3-vertex analogue of [`Self::noninduced_to_induced`].
    pub fn noninduced_to_induced3(&self, n: &[i128; 2]) -> Result<[i128; 2]> {
        let c0 = checked_add(n[0], checked_mul(self.three_occurrence_inv[0][1], n[1])?)?;
        if c0 < 0 {
            return Err(Error::Integrity(format!("induced wedge count is negative ({c0})")));
        }
        Ok([c0, n[1]])
    }

    /// Non-induced counts of every disconnected pattern of the given size,
    /// in catalog order (disconnected entries only), evaluated from the
    /// connected counts via the merge recursion.
    pub fn disconnected_noninduced(&self, size: u8, inputs: &CountInputs) -> Result<Vec<i128>> {
        let mut memo: Vec<Vec<Option<i128>>> =
            (1..=5usize).map(|k| vec![None; self.sizes[k - 1].len()]).collect();
        let mut out = Vec::new();
        for (pos, pat) in self.patterns(size).iter().enumerate() {
            if pat.connected {
                continue;
            }
            let matches = self.labeled_matches(size, pos, inputs, &mut memo)?;
            let aut = pat.automorphisms as i128;
            if matches % aut != 0 {
                return Err(Error::Integrity(format!(
                    "labeled match count for {} is not divisible by |Aut| = {aut}",
                    pat.name
                )));
            }
            out.push(matches / aut);
        }
        Ok(out)
    }

    /// Labeled (injective, edge-preserving) match count for a catalog class.
    fn labeled_matches(
        &self,
        size: u8,
        idx: usize,
        inputs: &CountInputs,
        memo: &mut Vec<Vec<Option<i128>>>,
    ) -> Result<i128> {
        if let Some(v) = memo[size as usize - 1][idx] {
            return Ok(v);
        }
        let pat = &self.patterns(size)[idx];
        let value = if pat.connected {
            let unlabeled = match (size, pat.index) {
                (1, _) => inputs.n,
                (2, _) => inputs.edges,
                (3, 1) => inputs.wedges,
                (3, 2) => inputs.triangles,
                (4, i) => inputs.four[i as usize - 1],
                _ => {
                    return Err(Error::Integrity(
                        "disconnected recursion reached a 5-vertex connected class".into(),
                    ))
                }
            };
            checked_mul(unlabeled, pat.automorphisms as i128)?
        } else {
            let rule = self
                .disc_rules
                .iter()
                .find(|r| r.class == (size, idx as u16))
                .expect("every disconnected class has a rule");
            let mut product = 1i128;
            for &(ck, cidx) in &rule.components {
                let part = self.labeled_matches(ck, cidx as usize, inputs, memo)?;
                product = checked_mul(product, part)?;
            }
            let mut result = product;
            for &(mk, midx) in &rule.merges {
                let merged = self.labeled_matches(mk, midx as usize, inputs, memo)?;
                result = checked_add(result, -merged)?;
            }
            result
        };
        memo[size as usize - 1][idx] = Some(value);
        Ok(value)
    }

    /// Convert a full non-induced vector (all patterns of `size`, catalog
    /// order) to induced counts by back substitution in edge-count order.
    pub fn induced_full(&self, size: u8, noninduced: &[i128]) -> Result<Vec<i128>> {
        let order = &self.solve_order[size as usize - 1];
        let a = &self.full[size as usize - 1];
        let classes = self.patterns(size);
        assert_eq!(noninduced.len(), classes.len());
        let mut c = vec![0i128; classes.len()];
        // In `order`, every nonzero A[i][j] with i != j has j later than i,
        // so solving back-to-front needs only already-computed entries.
        for (pos_i, &i) in order.iter().enumerate().rev() {
            let mut acc = noninduced[i];
            for &j in order.iter().skip(pos_i + 1) {
                acc = checked_add(acc, -checked_mul(a[i][j], c[j])?)?;
            }
            if acc < 0 {
                return Err(Error::Integrity(format!(
                    "induced count for pattern {} ({}) is negative ({acc})",
                    classes[i].id(),
                    classes[i].name
                )));
            }
            c[i] = acc;
        }
        Ok(c)
    }

    /// Machine-readable atlas document (emitted by the CLI).
    pub fn atlas(&self) -> AtlasDoc {
        let mut entries = Vec::new();
        for size in 1..=5u8 {
            for p in self.patterns(size) {
                entries.push(AtlasEntry {
                    id: p.id(),
                    name: p.name.to_string(),
                    size: p.size,
                    connected: p.connected,
                    automorphisms: p.automorphisms,
                    edges: p.edges.to_vec(),
                });
            }
        }
        AtlasDoc { schema: 1, patterns: entries }
    }
}

fn classify_submask(
    mask: u16,
    k: usize,
    comp: &[u8],
    sizes: &[Vec<Pattern>; 5],
    tables: &[Vec<u16>; 5],
) -> (u8, u16) {
    let kk = comp.len();
    let mut sub = 0u16;
    for (ia, &a) in comp.iter().enumerate() {
        for (ib, &b) in comp.iter().enumerate().skip(ia + 1) {
            let (x, y) = if a < b { (a, b) } else { (b, a) };
            if mask >> pair_index(k, x as usize, y as usize) & 1 == 1 {
                sub |= 1 << pair_index(kk, ia, ib);
            }
        }
    }
    let _ = sizes;
    (kk as u8, tables[kk - 1][sub as usize])
}

fn classify_merge(mask: u16, k: usize, blocks: &[Vec<u8>], tables: &[Vec<u16>; 5]) -> (u8, u16) {
    let kk = blocks.len();
    let mut block_of = vec![0usize; k];
    for (bi, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v as usize] = bi;
        }
    }
    let mut merged = 0u16;
    for a in 0..k {
        for b in (a + 1)..k {
            if mask >> pair_index(k, a, b) & 1 == 1 {
                let (x, y) = (block_of[a], block_of[b]);
                // Blocks never merge two vertices of one component, so no
                // edge can collapse onto a single block.
                debug_assert_ne!(x, y);
                let (x, y) = if x < y { (x, y) } else { (y, x) };
                merged |= 1 << pair_index(kk, x, y);
            }
        }
    }
    (kk as u8, tables[kk - 1][merged as usize])
}

/// Exact inverse of a unit upper triangular integer matrix.
#[allow(clippy::needless_range_loop)]
fn invert_unit_upper<const K: usize>(m: &[[i128; K]; K]) -> [[i128; K]; K] {
    let mut inv = [[0i128; K]; K];
    for i in 0..K {
        inv[i][i] = 1;
    }
    for col in 0..K {
        for row in (0..col).rev() {
            let mut s = 0i128;
            for t in (row + 1)..=col {
                s += m[row][t] * inv[t][col];
            }
            inv[row][col] = -s;
        }
    }
    for i in 0..K {
        for j in 0..K {
            let mut s = 0i128;
            for t in 0..K {
                s += m[i][t] * inv[t][j];
            }
            assert_eq!(s, i128::from(i == j), "matrix inversion self-check failed");
        }
    }
    inv
}

/// Serializable pattern atlas.
#[derive(Debug, Serialize)]
pub struct AtlasDoc {
    /// Document schema version.
    pub schema: u32,
    /// Every pattern on 1..=5 vertices in catalog order.
    pub patterns: Vec<AtlasEntry>,
}

impl AtlasDoc {
    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("atlas serializes");
        out.push('\n');
        out
    }
}

/// One atlas row.
#[derive(Debug, Serialize)]
pub struct AtlasEntry {
    /// Catalog identifier, e.g. `"5-8"`.
    pub id: String,
    /// Pattern name.
    pub name: String,
    /// Vertex count.
    pub size: u8,
    /// Connectedness flag.
    pub connected: bool,
    /// |Aut(H)|.
    pub automorphisms: u64,
    /// Representative edge list on vertices 0..size.
    pub edges: Vec<(u8, u8)>,
}
