use super::cohomology::{chi_hom, u};
use super::dominance::dominates;
use super::hn::{hn_data, is_admissible};
use super::SplittingType;
use crate::error::{Error, Result};

/// Both sides of the tangent-space count for the flag resolution indexed by `(e, set)`
/// at a point over `e_prime`:
///
/// * `lhs = u(e') + sum_j chi Hom(E_{i_j}, E_{i_{j+1}} / E_{i_j})`, with ranks and degrees
///   read off the Harder-Narasimhan flag of `O(e)` restricted to `set`;
/// * `rhs = u(e') - u(e)`, the expected dimension.
///
/// `set` must be `e`-admissible and `e_prime <= e`.
pub fn tangent_check(e: &SplittingType, set: &[usize], e_prime: &SplittingType) -> Result<(i64, i64)> {
    const OP: &str = "tangent_check";
    if !is_admissible(e, set) {
        return Err(Error::pre(OP, format!("{set:?} is not {e}-admissible")));
    }
    if !dominates(e, e_prime)? {
        return Err(Error::pre(OP, format!("{e_prime} is not dominated by {e}")));
    }
    let hn = hn_data(e);
    let r = e.rank() as i64;
    let d = e.degree();
    // (rank, degree) of E_{i_1}, ..., E_{i_k}, then O(e)
    let mut members: Vec<(i64, i64)> = set
        .iter()
        .map(|&i| {
            (
                r - hn.quotient_ranks[i - 1] as i64,
                d - hn.quotient_degrees[i - 1],
            )
        })
        .collect();
    members.push((r, d));
    let chi_sum: i64 = members
        .windows(2)
        .map(|w| {
            let (rk, deg) = w[0];
            let (rk_next, deg_next) = w[1];
            chi_hom(rk, deg, rk_next - rk, deg_next - deg)
        })
        .sum();
    let u_prime = u(e_prime);
    Ok((u_prime + chi_sum, u_prime - u(e)))
}
