//! Exact subgraph counting for every pattern on at most five vertices.
//!
//! The crate computes non-induced (subgraph) and induced counts of all 3-,
//! 4-, and 5-vertex patterns, connected and disconnected, on undirected
//! simple graphs. Counts are obtained from closed-form counting identities
//! over a small set of enumerated structures (triangles, 4-cycles,
//! 4-cliques, directed wedges and paths) rather than by enumerating pattern
//! occurrences, so the cost is governed by wedge and triangle statistics
//! instead of the (often astronomically larger) pattern counts themselves.
//!
//! Pipeline: [`graph`] normalizes an edge list and orients it by degree
//! order, [`triads`] enumerates wedges and triangles, [`four`] produces the
//! 4-vertex counts plus per-vertex/per-edge auxiliaries, [`five`] evaluates
//! the 5-vertex counting formulas, and [`catalog`] converts non-induced
//! counts to induced counts and derives the disconnected patterns.
//! [`oracle`] is an independent brute-force checker used to validate every
//! formula, and [`pipeline`]/[`report`] assemble the user-facing results.
//!
//! All count arithmetic is 128-bit; reports serialize counts as decimal
//! strings so no consumer is exposed to floating-point truncation.

#![forbid(unsafe_code)]
#![deny(missing_docs)]

pub mod catalog;
pub mod five;
pub mod four;
pub mod graph;
pub mod oracle;
pub mod pipeline;
pub mod report;
pub mod triads;

pub use catalog::{CountInputs, Pattern, PatternCatalog};
pub use five::FiveCounts;
pub use four::{FourAux, FourCounts};
pub use graph::{DegreeOrientedDag, Graph, LoadStats};
pub use oracle::OracleResult;
pub use pipeline::{Analysis, Mode, PipelineOptions};
pub use report::CountReport;
pub use triads::{TriangleStore, WedgeStats};

/// Errors surfaced by parsing, counting, and verification.
///
/// The CLI maps these onto process exit codes: parse and I/O problems are
/// input errors (exit 2), integrity violations mean the engine caught an
/// internal inconsistency (exit 3), and budget refusals mean a requested
/// brute-force check was too large to attempt (exit 4).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed input line (bad token count or a non-integer token).
    #[error("parse error at line {line}: {message}")]
    Parse {
        /// 1-based line number in the input stream.
        line: usize,
        /// Description of the offending content.
        message: String,
    },
    /// An internal consistency check failed (negative induced count,
    /// completeness identity violation, or arithmetic overflow).
    #[error("integrity error: {0}")]
    Integrity(String),
    /// A brute-force request exceeded the configured subset budget.
    #[error("oracle budget exceeded: {required} subsets required, budget is {budget}")]
    BudgetExceeded {
        /// Number of subsets the request would enumerate.
        required: u128,
        /// The configured ceiling.
        budget: u64,
    },
    /// An operation that needs materialized triangle lists was invoked
    /// while the memory guard kept them unmaterialized.
    #[error("triangle lists not materialized (memory guard active)")]
    ListsUnavailable,
    /// Underlying I/O failure while reading input.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
