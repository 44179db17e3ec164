//! Subsheaf numerics: the inclusion criterion `O(a) -> O(e)`, the maximal type `e_b`
//! admitting a given subsheaf, and the dimension counts built from them.

use serde::Serialize;

use super::cohomology::{ext1, hom, u};
use super::SplittingType;
use crate::error::{Error, Result};

/// Whether `O(e)` admits an `O(a)`-subsheaf: `a_{s-j} <= e_{r-j}` for `0 <= j < s`.
pub fn admits_subsheaf(a: &SplittingType, e: &SplittingType) -> Result<bool> {
    if a.rank() > e.rank() {
        return Err(Error::pre(
            "admits_subsheaf",
            format!("subsheaf rank {} exceeds ambient rank {}", a.rank(), e.rank()),
        ));
    }
    Ok(a
        .entries()
        .iter()
        .rev()
        .zip(e.entries().iter().rev())
        .all(|(x, y)| x <= y))
}

/// The dominance-maximal splitting type of rank `r` and degree `d` admitting an
/// `O(a)`-subsheaf. It has the shape `(Bal, a_+)` with `Bal` balanced and `a_+` a tail of `a`.
///
/// Tails are tried from longest to shortest and the first valid one is returned. Fails
/// with [`Error::Infeasible`] when no type of that rank and degree admits `O(a)`, which
/// can only happen when `a` has full rank `r` and degree larger than `d`.
pub fn eb(r: usize, d: i64, a: &SplittingType) -> Result<SplittingType> {
    let s = a.rank();
    if s > r {
        return Err(Error::pre(
            "eb",
            format!("subsheaf rank {s} exceeds ambient rank {r}"),
        ));
    }
    let ent = a.entries();
    for k in (0..=s).rev() {
        let tail = &ent[s - k..];
        let rest = d - tail.iter().sum::<i64>();
        let slots = r - k;
        if slots == 0 && rest != 0 {
            continue;
        }
        let bal = SplittingType::balanced(slots, rest);
        if let (Some(top), Some(&next)) = (bal.max_entry(), tail.first()) {
            if top > next {
                continue;
            }
        }
        let mut entries = bal.entries().to_vec();
        entries.extend_from_slice(tail);
        let cand = SplittingType::from_sorted(entries);
        if admits_subsheaf(a, &cand)? {
            return Ok(cand);
        }
    }
    Err(Error::Infeasible {
        op: "eb",
        reason: format!("rank {r}, degree {d}, subsheaf {a}"),
    })
}

/// `u(e) - ext^1(O(a), O(e))`; nonnegative, zero exactly when `e = e_b(r, d, a)`.
pub fn gap(a: &SplittingType, e: &SplittingType) -> Result<i64> {
    if !admits_subsheaf(a, e)? {
        return Err(Error::pre("gap", format!("{e} admits no O{a}-subsheaf")));
    }
    Ok(u(e) - ext1(a, e))
}

/// Codimension of the stratum `X_{a,e}` inside the relative Quot scheme of subsheaves of
/// `pi^* F(c)`, where `0 -> E -> F(c) -> G(c+1) -> 0` on each fiber:
/// `u(a) + hom(O(a), O(c+1)^{rk G}) + u(e) - ext^1(O(a), O(e))`.
///
/// `rank_f`, `rank_g` default to `r(c+1) - d` and `rc - d`.
pub fn stratum_codim(
    a: &SplittingType,
    e: &SplittingType,
    c: i64,
    rank_f: Option<i64>,
    rank_g: Option<i64>,
) -> Result<i64> {
    const OP: &str = "stratum_codim";
    if !admits_subsheaf(a, e)? {
        return Err(Error::pre(OP, format!("{e} admits no O{a}-subsheaf")));
    }
    let top = e.max_entry().ok_or_else(|| Error::pre(OP, "ambient type is empty"))?;
    if c < top {
        return Err(Error::pre(OP, format!("twist c = {c} is below e_r = {top}")));
    }
    let r = e.rank() as i64;
    let d = e.degree();
    let rank_f = rank_f.unwrap_or(r * (c + 1) - d);
    let rank_g = rank_g.unwrap_or(r * c - d);
    if rank_g < 0 || rank_f < a.rank() as i64 {
        return Err(Error::pre(
            OP,
            format!("inconsistent ranks rk F = {rank_f}, rk G = {rank_g}"),
        ));
    }
    let target = SplittingType::from_sorted(vec![c + 1; rank_g as usize]);
    Ok(u(a) + hom(a, &target) + u(e) - ext1(a, e))
}

/// A chain of inclusions `O(t_1) -> O(t_2) -> ... -> O(t_k)` with strictly increasing
/// ranks; the last member is the ambient bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagChain {
    types: Vec<SplittingType>,
}

impl FlagChain {
    pub fn new(types: Vec<SplittingType>) -> Result<Self> {
        const OP: &str = "FlagChain";
        if types.is_empty() {
            return Err(Error::pre(OP, "empty chain"));
        }
        for w in types.windows(2) {
            if w[0].rank() >= w[1].rank() {
                return Err(Error::pre(
                    OP,
                    format!("ranks must strictly increase: {} then {}", w[0], w[1]),
                ));
            }
            if !admits_subsheaf(&w[0], &w[1])? {
                return Err(Error::pre(OP, format!("{} admits no O{}-subsheaf", w[1], w[0])));
            }
        }
        Ok(FlagChain { types })
    }

    pub fn types(&self) -> &[SplittingType] {
        &self.types
    }
}

/// Dimension of the locus of flags whose members split as the chain prescribes:
/// `sum_i hom(t_i, t_{i+1}) - hom(t_i, t_i)`.
pub fn flag_stratum_dim(chain: &FlagChain) -> i64 {
    chain
        .types
        .windows(2)
        .map(|w| hom(&w[0], &w[1]) - hom(&w[0], &w[0]))
        .sum()
}
