//! Dominance order on splitting types, with three independent characterizations:
//! prefix sums, `h^1` of all twists, and the constructive subsheaf recursion.

use super::cohomology::h1;
use super::subsheaf::admits_subsheaf;
use super::SplittingType;
use crate::error::{Error, Result};

fn check_comparable(e: &SplittingType, f: &SplittingType) -> Result<()> {
    if e.rank() != f.rank() {
        return Err(Error::RankMismatch {
            left: e.rank(),
            right: f.rank(),
        });
    }
    if e.degree() != f.degree() {
        return Err(Error::DegreeMismatch {
            left: e.degree(),
            right: f.degree(),
        });
    }
    Ok(())
}

/// `e >= f`: every prefix sum of `e` is at least the matching prefix sum of `f`.
pub fn dominates(e: &SplittingType, f: &SplittingType) -> Result<bool> {
    check_comparable(e, f)?;
    Ok(e
        .prefix_sums()
        .iter()
        .zip(f.prefix_sums())
        .all(|(a, b)| *a >= b))
}

/// `e >= f` iff `h^1 O(e)(m) <= h^1 O(f)(m)` for every twist `m`.
///
/// Only `m` in `[-max - 1, -min - 1]` over the entries of both types needs checking: above
/// the window both sides vanish, below it both equal `-(d + r(m + 1))`.
pub fn dominates_via_h1(e: &SplittingType, f: &SplittingType) -> Result<bool> {
    check_comparable(e, f)?;
    let (lo, hi) = match (e.min_entry(), e.max_entry(), f.min_entry(), f.max_entry()) {
        (Some(a), Some(b), Some(c), Some(d)) => (a.min(c), b.max(d)),
        _ => return Ok(true),
    };
    Ok((-hi - 1..=-lo - 1).all(|m| h1(e, m) <= h1(f, m)))
}

/// `e >= f` by recursion on the subsheaf criterion.
///
/// Write `e = (Bal, a)` with `Bal` the longest balanced prefix. Then `f <= e` iff the
/// specific type `a' = (deg a - (f_{i+2} + ... + f_r), f_{i+2}, ..., f_r)` is a splitting
/// type, includes into `O(f)`, and satisfies `a' <= a`; the last check recurses on rank
/// `r - i < r`.
pub fn dominates_via_flag(e: &SplittingType, f: &SplittingType) -> Result<bool> {
    check_comparable(e, f)?;
    Ok(flag_recursion(e, f))
}

fn flag_recursion(e: &SplittingType, f: &SplittingType) -> bool {
    if e.is_balanced() {
        return true;
    }
    let ent = e.entries();
    let i = ent.iter().take_while(|&&x| x <= ent[0] + 1).count();
    let a = e.suffix(i);
    let tail = &f.entries()[i + 1..];
    let head = a.degree() - tail.iter().sum::<i64>();
    if tail.first().is_some_and(|&t| head > t) {
        return false;
    }
    let mut witness = Vec::with_capacity(a.rank());
    witness.push(head);
    witness.extend_from_slice(tail);
    let witness = SplittingType::from_sorted(witness);
    match admits_subsheaf(&witness, f) {
        Ok(true) => flag_recursion(&a, &witness),
        _ => false,
    }
}
