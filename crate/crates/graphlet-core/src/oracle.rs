//! Brute-force reference counter.
//!
//! Enumerates every k-vertex subset of the graph, classifies its induced
//! subgraph through the catalog lookup table, and derives non-induced
//! counts from the induced vector via the full occurrence matrix. The cost
//! is C(n,k) classification steps, so a budget caps the subset count; the
//! default admits graphs of a few hundred vertices at k = 5.
//!
//! This module exists to check the real engine, both in tests and behind
//! the CLI's opt-in verification flag. It shares no counting logic with
//! the engine: the only common code is the catalog itself.

use crate::catalog::PatternCatalog;
use crate::graph::Graph;
use crate::{Error, Result};

/// Default subset budget for oracle runs.
pub const DEFAULT_ORACLE_BUDGET: u64 = 5_000_000;

/// Induced and non-induced per-pattern counts produced by enumeration,
/// over all patterns (connected and disconnected) of one size in catalog
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Pattern size counted, 3..=5.
    pub size: u8,
    /// Induced counts in catalog order.
    pub induced: Vec<i128>,
    /// Non-induced counts in catalog order.
    pub noninduced: Vec<i128>,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Count every pattern of `size` vertices by explicit subset enumeration.
///
/// Fails with [`Error::BudgetExceeded`] when C(n, size) subsets would
/// exceed `budget`; the caller decides whether to retry with a larger one.
pub fn brute_force_counts(
    graph: &Graph,
    size: u8,
    budget: u64,
    catalog: &PatternCatalog,
) -> Result<OracleResult> {
    assert!((3..=5).contains(&size), "oracle supports sizes 3 through 5");
    let n = graph.vertex_count();
    let required = binomial(n as u64, size as u64);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }

    let k = size as usize;
    let classes = catalog.patterns(size).len();
    let mut induced = vec![0i128; classes];
    let mut subset: Vec<u32> = (0..k as u32).collect();

    if n >= k {
        loop {
            let mut mask = 0u16;
            let mut bit = 0;
            for a in 0..k {
                for b in (a + 1)..k {
                    if graph.has_edge(subset[a], subset[b]) {
                        mask |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            induced[catalog.classify(size, mask)] += 1;

            // Advance to the next k-subset in colex-compatible order.
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if subset[i] as usize != n - k + i {
                    subset[i] += 1;
                    for j in (i + 1)..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
            }
            if i == usize::MAX {
                break;
            }
        }
    }

    // N = A·C with the full same-size occurrence matrix.
    let a = catalog.full_occurrence(size);
    let mut noninduced = vec![0i128; classes];
    for i in 0..classes {
        let mut acc = 0i128;
        for j in 0..classes {
            acc += a[i][j] * induced[j];
        }
        noninduced[i] = acc;
    }

    Ok(OracleResult { size, induced, noninduced })
}
