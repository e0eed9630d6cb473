//! Saddlepoint search in the comparison model.
//!
//! A matrix entry `a[i][j]` is a *strict saddlepoint* (SSP) when it is
//! strictly larger than every other entry in its row and strictly smaller
//! than every other entry in its column; at most one such entry exists. A
//! *pseudo-saddlepoint* (PSP) is any entry whose value lies in the interval
//! `[C, R]`, where `C` is the largest column minimum and `R` the smallest row
//! maximum. Every matrix has a PSP, and when an SSP exists every PSP carries
//! its value, which is what makes PSP search a useful stepping stone.
//!
//! The crate provides:
//!
//! * [`matrix`] — instrumented, layerable read-only matrix views that count
//!   every base query and every value comparison;
//! * [`oracle`] — a brute-force reference that computes row maxima, column
//!   minima, the PSP interval, and all saddlepoints by exhaustive scan;
//! * [`staircase`] — linear-query feasibility searches that compare a probe
//!   value against the (unknown) SSP value;
//! * [`heap`] — the two-ended reduction that finds a PSP of an `n x n`
//!   matrix with at most `2n - 1` queries;
//! * [`recursive`] — block-decomposition PSP solvers, the diagonal-overlay
//!   transform preprocessing, and the rectangular reduction;
//! * [`alternating`] — an SSP decision procedure that alternates
//!   median-probe elimination with column-sampling elimination;
//! * [`solver`] — the user-facing front end tying PSP search and
//!   feasibility testing together, plus saddlepoint location helpers;
//! * [`generate`] — deterministic instance families for tests and benches;
//! * [`io`] — the plain-text matrix file format used by the CLI.
//!
//! All coordinates in this crate are 0-based; the CLI converts to 1-based
//! indices at the output boundary.
//!
//! # Example
//!
//! ```
//! use saddle::{generate, Algo, Family, SspOutcome};
//!
//! let inst = generate(Family::PlantedSsp, 512, 512, 7)?;
//! let (outcome, stats) = saddle::find_ssp(&inst.view(), Algo::Auto);
//! match outcome {
//!     SspOutcome::Found(e) => println!("ssp at ({}, {}) = {}", e.row, e.col, e.value.raw()),
//!     SspOutcome::Absent => println!("no strict saddlepoint"),
//! }
//! assert!(stats.queries < 16 * 512);
//! # Ok::<(), saddle::GenerateError>(())
//! ```

pub mod alternating;
pub mod generate;
pub mod heap;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod recursive;
pub mod select;
pub mod solver;
pub mod staircase;
pub mod value;

pub use generate::{generate, Family, GenerateError, Instance, Truth};
pub use io::{matrix_to_string, read_matrix, write_matrix, MatrixFileError};
pub use matrix::{Entry, Interval, MatrixData, MatrixView};
pub use oracle::{oracle_scan, quadratic_sp, verify_psp, OracleReport};
pub use solver::{
    find_psp, find_ssp, locate_sp, sp_value_assuming_exists, Algo, SolveStats, SspOutcome,
};
pub use value::{QueryStats, Value};

#[cfg(test)]
pub(crate) mod testutil;
