//! Cohomology of the summands
//! `V_{mu,alpha,beta} = (S_mu A1 (x) S_alpha B1^*) [x] (S_{mu^t}(B2^* (+) B2^*) (x) S_beta B2^*)`
//! of the twisted Koszul resolution on `Gr(k1, n1) x Gr(k2, n2)`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::QuotEmbedding;
use crate::bwb::{bwb_mixed, bwb_quot_dual, BwbOutcome};
use crate::error::{Error, Result};
use crate::partitions::{
    lr_coefficient, partitions_of, schur_of_double, tensor_schur, Multiset, Partition,
};

/// Degree to total multiplicity of the nonvanishing summands `W_{mu,alpha,nu}`.
///
/// Multiplicities count summands, not dimensions of cohomology groups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CohomologyReport {
    degrees: BTreeMap<usize, u64>,
}

impl CohomologyReport {
    pub fn add(&mut self, degree: usize, multiplicity: u64) {
        if multiplicity > 0 {
            *self.degrees.entry(degree).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, degree: usize) -> u64 {
        self.degrees.get(&degree).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.degrees.iter().map(|(&d, &m)| (d, m))
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.degrees.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// One `S_nu B2^*` summand of the second factor with nonzero cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondFactorTerm {
    pub nu: Partition,
    pub multiplicity: u64,
    pub j: Option<usize>,
    pub degree: usize,
}

/// Full breakdown of `H^*(V_{mu,alpha,beta})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VCohomology {
    pub first_factor: BwbOutcome,
    pub second_factor: Vec<SecondFactorTerm>,
    pub report: CohomologyReport,
}

/// `S_{lam}(W (+) W) = sum_{nu'} (sum_{g1,g2} c^lam_{g1,g2} c^{nu'}_{g1,g2}) S_{nu'} W`
/// on a space of dimension `rank`.
pub fn schur_of_doubled_space(lam: &Partition, rank: usize) -> Multiset<Partition> {
    let mut out = Multiset::new();
    for ((g1, g2), c) in schur_of_double(lam, rank).iter() {
        for (nu_prime, c2) in tensor_schur(g1, g2, rank).iter() {
            out.insert(nu_prime.clone(), c * c2);
        }
    }
    out
}

/// The pairs `(g1, g2)` with `c^lam_{g1,g2} c^{nu'}_{g1,g2} > 0`, each with both coefficients.
pub fn gamma_pairs(
    lam: &Partition,
    nu_prime: &Partition,
    rank: usize,
) -> Vec<(Partition, Partition, u64, u64)> {
    schur_of_double(lam, rank)
        .iter()
        .filter_map(|((g1, g2), c1)| {
            let c2 = lr_coefficient(g1, g2, nu_prime);
            (c2 > 0).then(|| (g1.clone(), g2.clone(), c1, c2))
        })
        .collect()
}

/// `S_{mu^t}(W (+) W) (x) S_beta W` decomposed into `S_nu W`, `dim W = rank`.
pub fn second_factor_decomposition(
    mu: &Partition,
    beta: &Partition,
    rank: usize,
) -> Multiset<Partition> {
    let doubled = schur_of_doubled_space(&mu.conjugate(), rank);
    tensor_with(&doubled, beta, rank)
}

pub(crate) fn tensor_with(
    doubled: &Multiset<Partition>,
    beta: &Partition,
    rank: usize,
) -> Multiset<Partition> {
    let mut out = Multiset::new();
    for (nu_prime, c) in doubled.iter() {
        if beta.is_empty() {
            out.insert(nu_prime.clone(), c);
            continue;
        }
        for (nu, c3) in tensor_schur(nu_prime, beta, rank).iter() {
            out.insert(nu.clone(), c * c3);
        }
    }
    out
}

fn check_inputs(
    emb: &QuotEmbedding,
    mu: &Partition,
    alpha: &Partition,
    beta: &Partition,
) -> Result<()> {
    const OP: &str = "v_cohomology";
    let checks = [
        ("mu", mu, emb.rank_a1()),
        ("alpha", alpha, emb.rank_b1()),
        ("beta", beta, emb.rank_b2()),
    ];
    for (name, p, cap) in checks {
        if p.len() > cap {
            return Err(Error::pre(OP, format!("{name} = {p} has more than {cap} parts")));
        }
    }
    Ok(())
}

pub(crate) fn combine(
    emb: &QuotEmbedding,
    first: BwbOutcome,
    nus: &Multiset<Partition>,
) -> Result<VCohomology> {
    let mut report = CohomologyReport::default();
    let mut second_factor = Vec::new();
    if let BwbOutcome::Nonzero(d1) = first {
        for (nu, mult) in nus.iter() {
            if let (BwbOutcome::Nonzero(d2), j) = bwb_quot_dual(emb.k2, emb.n2, nu)? {
                report.add(d1 + d2, mult);
                second_factor.push(SecondFactorTerm {
                    nu: nu.clone(),
                    multiplicity: mult,
                    j,
                    degree: d2,
                });
            }
        }
    }
    Ok(VCohomology {
        first_factor: first,
        second_factor,
        report,
    })
}

/// Cohomology of `V_{mu,alpha,beta}` with the per-`nu` breakdown.
pub fn v_cohomology_terms(
    emb: &QuotEmbedding,
    mu: &Partition,
    alpha: &Partition,
    beta: &Partition,
) -> Result<VCohomology> {
    check_inputs(emb, mu, alpha, beta)?;
    let first = bwb_mixed(emb.k1, emb.n1, mu, alpha)?;
    let nus = if first.is_nonzero() {
        second_factor_decomposition(mu, beta, emb.rank_b2())
    } else {
        Multiset::new()
    };
    combine(emb, first, &nus)
}

/// Degrees (with summand multiplicities) in which `V_{mu,alpha,beta}` has cohomology,
/// by Borel-Weil-Bott on each factor and Kunneth.
pub fn v_cohomology(
    emb: &QuotEmbedding,
    mu: &Partition,
    alpha: &Partition,
    beta: &Partition,
) -> Result<CohomologyReport> {
    Ok(v_cohomology_terms(emb, mu, alpha, beta)?.report)
}

/// The `mu |- k` indexing summands of `Lambda^k(A1 [x] (B2 (+) B2)^*)`: at most `k1` rows and
/// at most `2(n2 - k2)` columns.
pub fn koszul_summands(emb: &QuotEmbedding, k: u32) -> Vec<Partition> {
    partitions_of(k, emb.rank_a1(), (2 * emb.rank_b2()) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn example() -> QuotEmbedding {
        QuotEmbedding::new(1, 3, 3, 3).unwrap()
    }

    #[test]
    fn sharp_example_reaches_degree_twelve() {
        let v = v_cohomology_terms(&example(), &p(&[7, 2]), &p(&[1]), &p(&[2])).unwrap();
        assert_eq!(v.first_factor, BwbOutcome::Nonzero(7));
        assert!(v.report.multiplicity(12) > 0);
        let nu = p(&[6, 1, 1, 1, 1, 1]);
        let term = v.second_factor.iter().find(|t| t.nu == nu).unwrap();
        assert_eq!((term.j, term.degree), (Some(1), 5));
    }

    #[test]
    fn structure_sheaf() {
        let e = Partition::empty();
        let r = v_cohomology(&example(), &e, &e, &e).unwrap();
        assert_eq!(r.degrees().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn single_box_alpha_vanishes() {
        let e = Partition::empty();
        assert!(v_cohomology(&example(), &e, &p(&[1]), &e).unwrap().is_empty());
    }

    #[test]
    fn long_partitions_rejected() {
        let e = Partition::empty();
        assert!(v_cohomology(&example(), &p(&[1, 1, 1, 1]), &e, &e).is_err());
        assert!(v_cohomology(&example(), &e, &e, &Partition::column(8)).is_err());
    }

    #[test]
    fn koszul_lists() {
        let emb = example();
        assert_eq!(koszul_summands(&emb, 0), vec![Partition::empty()]);
        assert_eq!(koszul_summands(&emb, 1), vec![p(&[1])]);
        assert!(koszul_summands(&emb, 9).contains(&p(&[7, 2])));
        assert!(koszul_summands(&emb, 4).iter().all(|m| m.len() <= 3));
    }

    #[test]
    fn doubled_space_in_degree_one() {
        // S_1(W + W) = W + W
        let d = schur_of_doubled_space(&p(&[1]), 3);
        assert_eq!(d.multiplicity(&p(&[1])), 2);
        assert_eq!(d.len(), 1);
    }
}
