//! Borel-Weil-Bott on a Grassmannian `Gr(k, n)` of `k`-dimensional subspaces, with
//! tautological subbundle `A` (rank `k`) and quotient `B` (rank `n - k`).
//!
//! Two bundle shapes occur: `S_mu A (x) S_alpha B^*` and `S_nu B^*`. For a weight
//! sequence `w`, the bundle has cohomology iff `w + (n-1, ..., 1, 0)` has no repeated
//! entry, and then only in degree equal to the number of inversions needed to sort it
//! strictly decreasing.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BwbOutcome {
    Vanishes,
    Nonzero(usize),
}

impl BwbOutcome {
    pub fn degree(self) -> Option<usize> {
        match self {
            BwbOutcome::Vanishes => None,
            BwbOutcome::Nonzero(d) => Some(d),
        }
    }

    pub fn is_nonzero(self) -> bool {
        matches!(self, BwbOutcome::Nonzero(_))
    }
}

/// Outcome for an already shifted sequence (weight plus staircase).
pub fn bwb_sorted_degree(shifted: &[i64]) -> BwbOutcome {
    let mut inversions = 0;
    for (i, a) in shifted.iter().enumerate() {
        for b in &shifted[i + 1..] {
            if a == b {
                return BwbOutcome::Vanishes;
            }
            if a < b {
                inversions += 1;
            }
        }
    }
    BwbOutcome::Nonzero(inversions)
}

fn check_grassmannian(op: &'static str, k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::pre(op, format!("need 1 <= k < n, got Gr({k},{n})")));
    }
    Ok(())
}

fn check_len(op: &'static str, name: &str, p: &Partition, cap: usize) -> Result<()> {
    if p.len() > cap {
        return Err(Error::pre(
            op,
            format!("{name} = {p} has more than {cap} parts"),
        ));
    }
    Ok(())
}

/// `f_i = n - k + i - 1 - mu_i` for `i = 1..=k`.
fn f_values(k: usize, n: usize, mu: &Partition) -> Vec<i64> {
    let q = (n - k) as i64;
    (1..=k)
        .map(|i| q + i as i64 - 1 - mu.part(i - 1) as i64)
        .collect()
}

/// `g_j = n - k - j + alpha_j` for `j = 1..=n-k`.
fn g_values(k: usize, n: usize, alpha: &Partition) -> Vec<i64> {
    let q = n - k;
    (1..=q)
        .map(|j| (q - j) as i64 + alpha.part(j - 1) as i64)
        .collect()
}

/// The shifted weight `(f_k, ..., f_1, g_1, ..., g_{n-k})` of `S_mu A (x) S_alpha B^*`.
pub fn mixed_sequence(k: usize, n: usize, mu: &Partition, alpha: &Partition) -> Vec<i64> {
    let mut seq: Vec<i64> = f_values(k, n, mu).into_iter().rev().collect();
    seq.extend(g_values(k, n, alpha));
    seq
}

/// The shifted weight `(0^k, nu) + (n-1, ..., 0)` of `S_nu B^*`.
pub fn dual_sequence(k: usize, n: usize, nu: &Partition) -> Vec<i64> {
    (0..n)
        .map(|p| {
            let w = if p < k { 0 } else { nu.part(p - k) as i64 };
            w + (n - 1 - p) as i64
        })
        .collect()
}

/// Cohomology of `S_mu A (x) S_alpha B^*` on `Gr(k, n)`, by inversion counting.
pub fn bwb_mixed(k: usize, n: usize, mu: &Partition, alpha: &Partition) -> Result<BwbOutcome> {
    const OP: &str = "bwb_mixed";
    check_grassmannian(OP, k, n)?;
    check_len(OP, "mu", mu, k)?;
    check_len(OP, "alpha", alpha, n - k)?;
    Ok(bwb_sorted_degree(&mixed_sequence(k, n, mu, alpha)))
}

/// The `j` with `nu_j >= k + j` and `nu_{j+1} <= j`, for every candidate `1 <= j <= n - k`.
fn dual_witnesses(k: usize, n: usize, nu: &Partition) -> Vec<usize> {
    (1..=n - k)
        .filter(|&j| nu.part(j - 1) as usize >= k + j && nu.part(j) as usize <= j)
        .collect()
}

/// Cohomology of `S_nu B^*` on `Gr(k, n)` by the crossing criterion: for nonempty `nu`
/// it is nonzero iff some `j` has `nu_j >= k + j` and `nu_{j+1} <= j`, and then lives in
/// degree `jk`. The empty partition gives the structure sheaf, degree 0 with no witness.
pub fn bwb_quot_dual(k: usize, n: usize, nu: &Partition) -> Result<(BwbOutcome, Option<usize>)> {
    const OP: &str = "bwb_quot_dual";
    check_grassmannian(OP, k, n)?;
    check_len(OP, "nu", nu, n - k)?;
    if nu.is_empty() {
        return Ok((BwbOutcome::Nonzero(0), None));
    }
    Ok(match dual_witnesses(k, n, nu).first() {
        Some(&j) => (BwbOutcome::Nonzero(j * k), Some(j)),
        None => (BwbOutcome::Vanishes, None),
    })
}

/// Crossing indices for a nonvanishing `S_mu A (x) S_alpha B^*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BwbIndices {
    /// `i_1 <= ... <= i_{n-k}`, `i_l` the largest index with `f_{i_l} < g_{n-k-l+1}`, or 0.
    pub i: Vec<usize>,
    /// Witness from the second Grassmannian factor, when there is one.
    pub j: Option<usize>,
}

impl BwbIndices {
    pub fn i1(&self) -> usize {
        self.i.first().copied().unwrap_or(0)
    }
}

/// The indices `i_l` and the closed-form degree
/// `D_1 = sum_l (i_l - i_{l-1}) (n - k - l + 1)` for a nonvanishing mixed bundle.
pub fn bwb_indices(
    k: usize,
    n: usize,
    mu: &Partition,
    alpha: &Partition,
) -> Result<(BwbIndices, usize)> {
    const OP: &str = "bwb_indices";
    if !bwb_mixed(k, n, mu, alpha)?.is_nonzero() {
        return Err(Error::pre(
            OP,
            format!("S_{mu} A (x) S_{alpha} B^* has no cohomology on Gr({k},{n})"),
        ));
    }
    let f = f_values(k, n, mu);
    let g = g_values(k, n, alpha);
    let q = n - k;
    let i: Vec<usize> = (1..=q)
        .map(|l| {
            let target = g[q - l];
            (1..=k).rev().find(|&idx| f[idx - 1] < target).unwrap_or(0)
        })
        .collect();
    let mut d1 = 0;
    let mut prev = 0;
    for (l, &il) in i.iter().enumerate() {
        d1 += (il - prev) * (q - l);
        prev = il;
    }
    Ok((BwbIndices { i, j: None }, d1))
}
