use serde::Serialize;

use super::SplittingType;

/// Harder-Narasimhan data of `O(e)`.
///
/// `subbundle_types[i]` is `E_{i+1}`, the sum of the summands of the `i + 1` largest
/// distinct degrees; the last member is `O(e)` itself. The quotient numerics are those of
/// `O(e)/E_i` for the proper members `E_1, ..., E_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HnData {
    pub quotient_ranks: Vec<usize>,
    pub quotient_degrees: Vec<i64>,
    pub subbundle_types: Vec<SplittingType>,
}

impl HnData {
    /// Number of proper flag members `m`.
    pub fn len(&self) -> usize {
        self.quotient_ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotient_ranks.is_empty()
    }

    /// Flag member `E_i` for `1 <= i <= m + 1`, with `E_0 = 0`.
    pub fn member(&self, i: usize) -> SplittingType {
        if i == 0 {
            SplittingType::default()
        } else {
            self.subbundle_types[i - 1].clone()
        }
    }
}

pub fn hn_data(e: &SplittingType) -> HnData {
    let ent = e.entries();
    let r = e.rank();
    let d = e.degree();
    // start index of each block of equal entries, from the top block down
    let mut starts: Vec<usize> = (0..r)
        .filter(|&k| k == 0 || ent[k] != ent[k - 1])
        .collect();
    starts.reverse();
    let subbundle_types: Vec<SplittingType> = starts.iter().map(|&k| e.suffix(k)).collect();
    let m = subbundle_types.len().saturating_sub(1);
    let proper = &subbundle_types[..m];
    HnData {
        quotient_ranks: proper.iter().map(|t| r - t.rank()).collect(),
        quotient_degrees: proper.iter().map(|t| d - t.degree()).collect(),
        subbundle_types,
    }
}

/// Value blocks of `e` from the top: `blocks[i]` is the common degree of `E_{i+1}/E_i`.
fn block_values(hn: &HnData) -> Vec<i64> {
    hn.subbundle_types
        .iter()
        .map(|t| t.min_entry().expect("flag members are nonzero"))
        .collect()
}

/// Whether `E_b / E_a` is balanced, for `0 <= a < b <= m + 1`.
fn quotient_balanced(values: &[i64], a: usize, b: usize) -> bool {
    // blocks a+1..=b, values strictly decreasing down the flag
    values[a] - values[b - 1] <= 1
}

/// Whether the index set `I` (sorted, 1-based, inside `[m]`) is `e`-admissible: every
/// successive quotient of `0 = E_{i_0} ⊂ E_{i_1} ⊂ ... ⊂ E_{i_k} ⊂ O(e)` is balanced.
pub fn is_admissible(e: &SplittingType, set: &[usize]) -> bool {
    let hn = hn_data(e);
    let m = hn.len();
    if set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&i| i == 0 || i > m) {
        return false;
    }
    if e.rank() == 0 {
        return set.is_empty();
    }
    let values = block_values(&hn);
    let mut chain = Vec::with_capacity(set.len() + 2);
    chain.push(0);
    chain.extend_from_slice(set);
    chain.push(m + 1);
    chain.windows(2).all(|w| quotient_balanced(&values, w[0], w[1]))
}

/// All `e`-admissible subsets of `[m]`, ordered by size and then lexicographically.
pub fn admissible_sets(e: &SplittingType) -> Vec<Vec<usize>> {
    let m = hn_data(e).len();
    let mut out: Vec<Vec<usize>> = (0u64..1 << m)
        .map(|mask| (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect::<Vec<_>>())
        .filter(|set| is_admissible(e, set))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
