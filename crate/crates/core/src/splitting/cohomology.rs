//! Sheaf cohomology dimensions of split bundles on P^1 and of Hom/Ext between them.

use super::SplittingType;

fn h0_line(a: i64) -> i64 {
    (a + 1).max(0)
}

fn h1_line(a: i64) -> i64 {
    (-a - 1).max(0)
}

/// `h^0 O(e)(m)`.
pub fn h0(e: &SplittingType, m: i64) -> i64 {
    e.entries().iter().map(|&x| h0_line(x + m)).sum()
}

/// `h^1 O(e)(m)`.
pub fn h1(e: &SplittingType, m: i64) -> i64 {
    e.entries().iter().map(|&x| h1_line(x + m)).sum()
}

/// `dim Hom(O(a), O(b)) = sum_{i,j} max(b_i - a_j + 1, 0)`.
pub fn hom(a: &SplittingType, b: &SplittingType) -> i64 {
    let mut total = 0;
    for &bi in b.entries() {
        for &aj in a.entries() {
            total += h0_line(bi - aj);
        }
    }
    total
}

/// `dim Ext^1(O(a), O(b)) = sum_{i,j} max(a_j - b_i - 1, 0)`.
pub fn ext1(a: &SplittingType, b: &SplittingType) -> i64 {
    let mut total = 0;
    for &bi in b.entries() {
        for &aj in a.entries() {
            total += h1_line(bi - aj);
        }
    }
    total
}

/// `u(e) = h^1 End(O(e))`, the expected codimension of the splitting locus.
pub fn u(e: &SplittingType) -> i64 {
    ext1(e, e)
}

/// Euler characteristic of `Hom(A, B)` for bundles of the given ranks and degrees.
pub fn chi_hom(rank_a: i64, deg_a: i64, rank_b: i64, deg_b: i64) -> i64 {
    rank_a * deg_b - deg_a * rank_b + rank_a * rank_b
}
