//! Combinatorics of splitting loci of vector bundles on the projective line.
//!
//! * [`partitions`]: partitions, Littlewood-Richardson coefficients, Cauchy and Schur-complex terms.
//! * [`splitting`]: splitting types, dominance, Harder-Narasimhan data, subsheaf numerics.
//! * [`bwb`]: Borel-Weil-Bott on Grassmannians for the tautological Schur bundles in use here.
//! * [`quot`]: Stromme embedding numerology and the exhaustive tautological vanishing check.
//! * [`hankel`]: rank-2 splitting loci through Hankel matrices and their maximal minors.

pub mod bwb;
pub mod error;
pub mod hankel;
pub mod partitions;
pub mod quot;
pub mod splitting;

pub use error::{Error, Result};

/// Parses a comma-separated integer list. `""` and `"()"` denote the empty list;
/// surrounding parentheses and whitespace are tolerated.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}
