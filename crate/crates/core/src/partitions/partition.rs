use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition stored in normal form: weakly decreasing, trailing zeros stripped.
///
/// Equality, hashing and ordering are structural on the stripped parts, so `(2,1,0)` and
/// `(2,1)` are the same partition. The derived order is lexicographic on the parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition {
                parts: parts.iter().map(|&p| p as i64).collect(),
            });
        }
        Ok(Self::from_decreasing(parts))
    }

    /// Accepts signed input, rejecting negative parts.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0 || p > u32::MAX as i64) {
            return Err(Error::NotPartition {
                parts: parts.to_vec(),
            });
        }
        Self::new(parts.iter().map(|&p| p as u32).collect()).map_err(|_| Error::NotPartition {
            parts: parts.to_vec(),
        })
    }

    pub(crate) fn from_decreasing(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Self::from_decreasing(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_decreasing(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-based part access, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut out = vec![0u32; width];
        for &p in &self.parts {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: out }
    }

    /// Whether the Young diagram of `inner` sits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Partial sums of the parts, padded with the total up to `len` entries.
    pub fn partial_sums(&self, len: usize) -> Vec<u64> {
        let mut acc = 0u64;
        (0..len.max(self.len()))
            .map(|i| {
                acc += self.part(i) as u64;
                acc
            })
            .collect()
    }

    /// Dominance order on partitions: every partial sum of `self` is at most the matching
    /// partial sum of `other`.
    pub fn is_dominated_by(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        self.partial_sums(n)
            .iter()
            .zip(other.partial_sums(n))
            .all(|(a, b)| *a <= b)
    }

    /// Rowwise sum `(self + other)_i = self_i + other_i`.
    pub fn row_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_decreasing((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Rows of both diagrams stacked and re-sorted.
    pub fn row_union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.parts.iter().chain(&other.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_decreasing(parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `7,2`; the empty string and `()` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let parts = crate::parse_int_list(s)?;
        Partition::from_signed(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in lexicographically increasing order.
pub fn partitions_of(n: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn go(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_decreasing(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        // ascending first part keeps the output lexicographically sorted
        let hi = cap.min(rem);
        let lo = rem.div_ceil(slots as u32);
        for p in lo..=hi {
            cur.push(p);
            go(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size` fitting in a `max_len x max_part` box.
pub fn partitions_up_to(max_size: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|n| partitions_of(n, max_len, max_part))
        .collect()
}

/// All partitions whose diagram is contained in `outer`.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::from_decreasing(cur.clone()));
            return;
        }
        for p in 0..=cap.min(outer[i]) {
            cur.push(p);
            go(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer.parts(), 0, outer.first(), &mut Vec::new(), &mut out);
    out.sort();
    out
}
