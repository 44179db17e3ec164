use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A splitting type `(e_1 <= ... <= e_r)`, standing for `O(e_1) (+) ... (+) O(e_r)` on P^1.
///
/// The empty type (rank 0) is allowed; it shows up as the trivial subsheaf and as empty
/// blocks of concatenations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SplittingType {
    entries: Vec<i64>,
}

impl SplittingType {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotIncreasing { entries });
        }
        Ok(SplittingType { entries })
    }

    pub(crate) fn from_sorted(entries: Vec<i64>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] <= w[1]));
        SplittingType { entries }
    }

    /// The unique balanced type of the given rank and degree.
    pub fn balanced(rank: usize, degree: i64) -> Self {
        if rank == 0 {
            return SplittingType::default();
        }
        let r = rank as i64;
        let q = degree.div_euclid(r);
        let rem = degree.rem_euclid(r) as usize;
        let mut entries = vec![q; rank - rem];
        entries.extend(std::iter::repeat_n(q + 1, rem));
        SplittingType { entries }
    }

    /// Concatenation of constant blocks `value^count`, in the given order.
    pub fn from_blocks(blocks: &[(i64, usize)]) -> Result<Self> {
        let entries = blocks
            .iter()
            .flat_map(|&(v, n)| std::iter::repeat_n(v, n))
            .collect();
        Self::new(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.entries.first().copied()
    }

    pub fn max_entry(&self) -> Option<i64> {
        self.entries.last().copied()
    }

    /// `e_r - e_1 <= 1`. The empty type counts as balanced.
    pub fn is_balanced(&self) -> bool {
        match (self.min_entry(), self.max_entry()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    pub fn is_perfectly_balanced(&self) -> bool {
        match (self.min_entry(), self.max_entry()) {
            (Some(lo), Some(hi)) => hi == lo,
            _ => true,
        }
    }

    /// Some split `(e_1..e_k | e_{k+1}..e_r)`, `1 <= k <= r`, has both halves balanced.
    pub fn is_tame(&self) -> bool {
        let e = &self.entries;
        if e.is_empty() {
            return true;
        }
        (1..=e.len()).any(|k| {
            let head = &e[..k];
            let tail = &e[k..];
            head[k - 1] - head[0] <= 1 && tail.last().zip(tail.first()).is_none_or(|(h, l)| h - l <= 1)
        })
    }

    /// Prefix sums `e_1 + ... + e_k` for `k = 1..=r`.
    pub fn prefix_sums(&self) -> Vec<i64> {
        self.entries
            .iter()
            .scan(0i64, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    /// Entries `k..` as a splitting type (the top `r - k` summands).
    pub fn suffix(&self, k: usize) -> SplittingType {
        SplittingType::from_sorted(self.entries[k..].to_vec())
    }

    /// Entries `..k` as a splitting type (the bottom `k` summands).
    pub fn prefix(&self, k: usize) -> SplittingType {
        SplittingType::from_sorted(self.entries[..k].to_vec())
    }

    /// Every splitting type of the given rank and degree with entries in `[lo, hi]`.
    pub fn enumerate(rank: usize, degree: i64, lo: i64, hi: i64) -> Vec<SplittingType> {
        fn go(
            slots: usize,
            rem: i64,
            lo: i64,
            hi: i64,
            cur: &mut Vec<i64>,
            out: &mut Vec<SplittingType>,
        ) {
            if slots == 0 {
                if rem == 0 {
                    out.push(SplittingType::from_sorted(cur.clone()));
                }
                return;
            }
            let n = slots as i64;
            // remaining entries all lie in [v, hi]
            for v in lo..=hi {
                if v * n > rem {
                    break;
                }
                if hi * (n - 1) + v < rem {
                    continue;
                }
                cur.push(v);
                go(slots - 1, rem - v, v, hi, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if lo <= hi {
            go(rank, degree, lo, hi, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Every splitting type of the given rank with entries in `[lo, hi]`, any degree.
    pub fn enumerate_all(rank: usize, lo: i64, hi: i64) -> Vec<SplittingType> {
        let lo_deg = lo * rank as i64;
        let hi_deg = hi * rank as i64;
        (lo_deg..=hi_deg)
            .flat_map(|d| Self::enumerate(rank, d, lo, hi))
            .collect()
    }
}

/// The splitting type `((-2)^{g-d+r}, (-1)^{k-g+d-2r-1}, 0^{r+1})` of rank `k` carried by
/// pushforwards of line bundles in `W^r_d` of a general degree-`k` genus-`g` cover.
pub fn gp_type(g: i64, d: i64, r: i64, k: i64) -> Result<SplittingType> {
    if g < 0 || r < 0 || k < 1 {
        return Err(Error::pre("gp_type", "need g >= 0, r >= 0, k >= 1"));
    }
    let exps = [g - d + r, k - g + d - 2 * r - 1, r + 1];
    if let Some(bad) = exps.iter().find(|&&x| x < 0) {
        return Err(Error::pre(
            "gp_type",
            format!("negative block exponent {bad} in {exps:?}"),
        ));
    }
    SplittingType::from_blocks(&[
        (-2, exps[0] as usize),
        (-1, exps[1] as usize),
        (0, exps[2] as usize),
    ])
}

impl fmt::Debug for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for SplittingType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SplittingType::new(crate::parse_int_list(s)?)
    }
}

impl Serialize for SplittingType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(e: &[i64]) -> SplittingType {
        SplittingType::new(e.to_vec()).unwrap()
    }

    #[test]
    fn rejects_decreasing() {
        let err = SplittingType::new(vec![2, 1]).unwrap_err();
        assert!(err.to_string().contains("weakly increasing"));
        assert!("3,-1".parse::<SplittingType>().is_err());
        assert_eq!("-2,2".parse::<SplittingType>().unwrap(), st(&[-2, 2]));
    }

    #[test]
    fn balanced_types() {
        assert_eq!(SplittingType::balanced(4, -1), st(&[-1, 0, 0, 0]));
        assert_eq!(SplittingType::balanced(3, 7), st(&[2, 2, 3]));
        assert_eq!(SplittingType::balanced(2, -3), st(&[-2, -1]));
        assert!(st(&[3, 3]).is_balanced());
        assert!(st(&[3, 3]).is_perfectly_balanced());
        assert!(st(&[1, 2]).is_balanced());
        assert!(!st(&[1, 2]).is_perfectly_balanced());
        assert!(!st(&[1, 3]).is_balanced());
    }

    #[test]
    fn tameness() {
        assert!(st(&[1, 2, 5, 6]).is_tame());
        assert!(!st(&[0, 2, 4]).is_tame());
        assert!(st(&[2, 2, 2]).is_tame());
        assert!(st(&[0, 5]).is_tame());
    }

    #[test]
    fn enumeration_counts() {
        // rank 2, degree 0, entries in [-5,5]: (-k,k) for k = 0..5
        assert_eq!(SplittingType::enumerate(2, 0, -5, 5).len(), 6);
        let all = SplittingType::enumerate_all(3, -1, 1);
        // multisets of size 3 from 3 values
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|t| t.rank() == 3));
    }

    #[test]
    fn gp_types() {
        assert_eq!(gp_type(4, 4, 1, 4).unwrap(), st(&[-2, -1, 0, 0]));
        assert_eq!(gp_type(0, 0, 0, 1).unwrap(), st(&[0]));
        assert_eq!(gp_type(2, 2, 0, 2).unwrap(), st(&[-1, 0]));
        assert!(gp_type(5, 1, 0, 3).is_err());
    }
}
