//! Frozen reference vectors for named graphs. Every vector was produced by
//! an independent exhaustive enumeration (classify all k-subsets against
//! the catalog's edge lists, convert with a separately recomputed
//! occurrence matrix) and pinned here; the engine must reproduce each value
//! with exact integer equality.
//!
//! Vector layout per size: connected patterns in catalog order, then
//! disconnected patterns in catalog order.

use graphlet_core::catalog::CountInputs;
use graphlet_core::pipeline::{analyze, PipelineOptions};
use graphlet_core::{Graph, PatternCatalog};

struct Expected {
    n3: [i128; 4],
    c3: [i128; 4],
    n4: [i128; 11],
    c4: [i128; 11],
    n5: [i128; 34],
    c5: [i128; 34],
}

fn check(name: &str, n: usize, edges: &[(u64, u64)], exp: &Expected) {
    let catalog = PatternCatalog::build();
    let g = Graph::from_edges(n, edges).unwrap();
    let analysis = analyze(&g, &catalog, &PipelineOptions::default()).unwrap();

    let full_n: [(&[i128], &[i128]); 3] = [
        (&exp.n3[..2], &exp.n3[2..]),
        (&exp.n4[..6], &exp.n4[6..]),
        (&exp.n5[..21], &exp.n5[21..]),
    ];
    let full_c: [(&[i128], &[i128]); 3] = [
        (&exp.c3[..2], &exp.c3[2..]),
        (&exp.c4[..6], &exp.c4[6..]),
        (&exp.c5[..21], &exp.c5[21..]),
    ];
    for (idx, row) in analysis.sizes.iter().enumerate() {
        let engine_n: Vec<i128> =
            row.connected_noninduced.iter().map(|v| v.expect("full mode")).collect();
        assert_eq!(engine_n, full_n[idx].0, "{name}: size {} non-induced", row.size);
        assert_eq!(
            row.connected_induced.as_deref().unwrap(),
            full_c[idx].0,
            "{name}: size {} induced",
            row.size
        );
        assert_eq!(
            row.disconnected_induced.as_deref().unwrap(),
            full_c[idx].1,
            "{name}: size {} disconnected induced",
            row.size
        );
    }

    // The disconnected recursion's non-induced outputs, which the report
    // never surfaces, against the same enumeration.
    let inputs = CountInputs {
        n: n as i128,
        edges: g.edge_count() as i128,
        wedges: exp.n3[0],
        triangles: exp.n3[1],
        four: exp.n4[..6].try_into().unwrap(),
    };
    for (size, tail) in [(3u8, &exp.n3[2..]), (4, &exp.n4[6..]), (5, &exp.n5[21..])] {
        assert_eq!(
            catalog.disconnected_noninduced(size, &inputs).unwrap(),
            tail,
            "{name}: size {size} disconnected non-induced"
        );
    }
}

fn complete(n: u64) -> Vec<(u64, u64)> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            edges.push((a, b));
        }
    }
    edges
}

#[test]
fn k5() {
    check(
        "K5",
        5,
        &complete(5),
        &Expected {
            n3: [30, 10, 30, 10],
            c3: [0, 10, 0, 0],
            n4: [20, 60, 60, 15, 30, 5, 20, 60, 15, 30, 5],
            c4: [0, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0],
            n5: [
                5, 60, 60, 30, 60, 60, 60, 12, 15, 60, 60, 60, 10, 10, 20, 60, 30, 15, 30, 10, 1,
                5, 30, 60, 15, 10, 20, 10, 60, 30, 30, 15, 10, 1,
            ],
            c5: [
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0,
            ],
        },
    );
}

#[test]
fn k6() {
    check(
        "K6",
        6,
        &complete(6),
        &Expected {
            n3: [60, 20, 60, 20],
            c3: [0, 20, 0, 0],
            n4: [60, 180, 180, 45, 90, 15, 60, 180, 45, 90, 15],
            c4: [0, 0, 0, 0, 0, 15, 0, 0, 0, 0, 0],
            n5: [
                30, 360, 360, 180, 360, 360, 360, 72, 90, 360, 360, 360, 60, 60, 120, 360, 180, 90,
                180, 60, 6, 30, 180, 360, 90, 60, 120, 60, 360, 180, 180, 90, 60, 6,
            ],
            c5: [
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0,
            ],
        },
    );
}

#[test]
fn five_cycle() {
    let edges: Vec<(u64, u64)> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
    check(
        "C5",
        5,
        &edges,
        &Expected {
            n3: [5, 0, 15, 10],
            c3: [5, 0, 5, 0],
            n4: [0, 5, 0, 0, 0, 0, 0, 10, 5, 15, 5],
            c4: [0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            n5: [
                0, 0, 5, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                5, 5, 5, 5, 5, 1,
            ],
            c5: [
                0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0,
            ],
        },
    );
}

#[test]
fn four_star() {
    check(
        "K_{1,4}",
        5,
        &[(0, 1), (0, 2), (0, 3), (0, 4)],
        &Expected {
            n3: [6, 0, 12, 10],
            c3: [6, 0, 0, 4],
            n4: [4, 0, 0, 0, 0, 0, 0, 12, 0, 12, 5],
            c4: [4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            n5: [
                1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0,
                0, 0, 6, 0, 4, 1,
            ],
            c5: [
                1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0,
            ],
        },
    );
}

#[test]
fn complete_bipartite_2_3() {
    check(
        "K_{2,3}",
        5,
        &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        &Expected {
            n3: [9, 0, 18, 10],
            c3: [9, 0, 0, 1],
            n4: [2, 12, 0, 3, 0, 0, 0, 18, 6, 18, 5],
            c4: [2, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0],
            n5: [
                0, 6, 6, 0, 0, 0, 6, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 2, 0,
                12, 6, 9, 6, 6, 1,
            ],
            c5: [
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0,
            ],
        },
    );
}

#[test]
fn petersen() {
    let outer: Vec<(u64, u64)> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
    let inner: Vec<(u64, u64)> = (0..5).map(|v| (5 + v, 5 + (v + 2) % 5)).collect();
    let spokes: Vec<(u64, u64)> = (0..5).map(|v| (v, v + 5)).collect();
    let edges: Vec<(u64, u64)> = outer.into_iter().chain(inner).chain(spokes).collect();
    check(
        "Petersen",
        10,
        &edges,
        &Expected {
            n3: [30, 0, 120, 120],
            c3: [30, 0, 60, 30],
            n4: [10, 60, 0, 0, 0, 0, 0, 210, 75, 420, 210],
            c4: [10, 60, 0, 0, 0, 0, 0, 60, 15, 60, 5],
            n5: [
                0, 60, 120, 0, 0, 0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                60, 0, 360, 240, 630, 450, 840, 252,
            ],
            c5: [
                0, 60, 60, 0, 0, 0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                0, 60, 0, 30, 30, 0, 0,
            ],
        },
    );
}

#[test]
fn triangle_with_two_isolated_vertices() {
    check(
        "triangle+2K1",
        5,
        &[(0, 1), (0, 2), (1, 2)],
        &Expected {
            n3: [3, 1, 9, 10],
            c3: [0, 1, 6, 3],
            n4: [0, 0, 0, 0, 0, 0, 2, 6, 0, 9, 5],
            c4: [0, 0, 0, 0, 0, 0, 2, 0, 0, 3, 0],
            n5: [
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
                0, 0, 3, 0, 3, 1,
            ],
            c5: [
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
                0, 0, 0, 0, 0, 0,
            ],
        },
    );
}

/// A fixed 18-vertex, 54-edge graph dense enough to hit every 5-pattern
/// except the 5-clique, with nothing zero at sizes 3 and 4.
const ER18: &[(u64, u64)] = &[
    (0, 2),
    (0, 4),
    (0, 5),
    (0, 9),
    (0, 12),
    (0, 16),
    (1, 2),
    (1, 9),
    (2, 4),
    (2, 8),
    (2, 10),
    (2, 13),
    (2, 17),
    (3, 4),
    (3, 9),
    (3, 13),
    (4, 6),
    (4, 7),
    (4, 8),
    (4, 9),
    (4, 10),
    (4, 11),
    (4, 15),
    (4, 17),
    (5, 6),
    (5, 8),
    (5, 11),
    (5, 14),
    (5, 15),
    (6, 10),
    (6, 13),
    (6, 14),
    (7, 11),
    (7, 12),
    (7, 13),
    (7, 14),
    (7, 16),
    (7, 17),
    (8, 10),
    (8, 13),
    (8, 14),
    (8, 15),
    (9, 10),
    (9, 12),
    (9, 16),
    (9, 17),
    (10, 13),
    (10, 16),
    (11, 14),
    (11, 16),
    (12, 16),
    (12, 17),
    (13, 14),
    (15, 16),
];

#[test]
fn fixed_random_graph() {
    check(
        "ER18",
        18,
        ER18,
        &Expected {
            n3: [304, 35, 864, 816],
            c3: [199, 35, 361, 221],
            n4: [536, 1552, 522, 131, 79, 3, 525, 4560, 1127, 6480, 3060],
            c4: [160, 422, 242, 61, 61, 3, 149, 811, 210, 710, 231],
            n5: [
                676, 7448, 7343, 1208, 2410, 2390, 2461, 480, 181, 718, 686, 777, 135, 26, 50, 200,
                114, 14, 17, 1, 0, 42, 1106, 7308, 1834, 1263, 7504, 3675, 21728, 10991, 31920,
                15778, 30240, 8568,
            ],
            c5: [
                78, 546, 582, 203, 332, 341, 313, 47, 37, 164, 182, 167, 36, 12, 22, 94, 50, 11,
                11, 1, 0, 7, 165, 582, 155, 133, 385, 181, 1030, 582, 987, 426, 582, 124,
            ],
        },
    );
}

#[test]
fn four_vertex_occurrence_matrix_literal() {
    let catalog = PatternCatalog::build();
    let expected: [[i128; 6]; 6] = [
        [1, 0, 1, 0, 2, 4],
        [0, 1, 2, 4, 6, 12],
        [0, 0, 1, 0, 4, 12],
        [0, 0, 0, 1, 1, 3],
        [0, 0, 0, 0, 1, 6],
        [0, 0, 0, 0, 0, 1],
    ];
    assert_eq!(catalog.four_occurrence(), &expected);
    assert_eq!(catalog.three_occurrence(), &[[1, 3], [0, 1]]);
}
