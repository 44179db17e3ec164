use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::vbundle::{combine, schur_of_doubled_space, second_factor_decomposition, tensor_with};
use super::QuotEmbedding;
use crate::bwb::{bwb_indices, bwb_mixed, bwb_quot_dual, BwbOutcome};
use crate::error::{Error, Result};
use crate::partitions::{
    partitions_of, partitions_up_to, schur_complex_terms, schur_of_double, tensor_schur, Multiset,
    Partition,
};

/// A triple `(mu, alpha, beta)` together with its top cohomology degree and the bound
/// `|mu| + |alpha| + |beta|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct VanishingCase {
    pub mu: Partition,
    pub alpha: Partition,
    pub beta: Partition,
    pub degree: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub mu_sizes: Vec<u32>,
    pub koszul_length: usize,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub embedding: QuotEmbedding,
    #[serde(rename = "D")]
    pub total: u32,
    pub mu_cap: u32,
    pub cases: u64,
    pub nonvanishing: u64,
    pub counterexamples: Vec<VanishingCase>,
    pub sharpness_witnesses: Vec<VanishingCase>,
    pub coverage: Coverage,
}

#[derive(Default)]
struct Tally {
    cases: u64,
    nonvanishing: u64,
    counterexamples: Vec<VanishingCase>,
    sharp: Vec<VanishingCase>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.nonvanishing += other.nonvanishing;
        self.counterexamples.extend(other.counterexamples);
        self.sharp.extend(other.sharp);
        self
    }
}

fn alpha_beta_pairs(emb: &QuotEmbedding, total: u32) -> Vec<(Partition, Partition)> {
    // alpha_{n1-k1} = 0, so alpha has at most n1 - k1 - 1 parts
    let alpha_len = emb.rank_b1() - 1;
    let mut out = Vec::new();
    for a in 0..=total {
        for alpha in partitions_of(a, alpha_len, a) {
            for beta in partitions_of(total - a, emb.rank_b2(), total - a) {
                out.push((alpha.clone(), beta));
            }
        }
    }
    out
}

fn check_mu(
    emb: &QuotEmbedding,
    mu: &Partition,
    pairs: &[(Partition, Partition)],
) -> Result<Tally> {
    let mut tally = Tally::default();
    let rank = emb.rank_b2();
    let doubled = schur_of_doubled_space(&mu.conjugate(), rank);
    let mut by_beta: BTreeMap<&Partition, Multiset<Partition>> = BTreeMap::new();
    for (alpha, beta) in pairs {
        tally.cases += 1;
        let first = bwb_mixed(emb.k1, emb.n1, mu, alpha)?;
        if !first.is_nonzero() {
            continue;
        }
        let nus = by_beta
            .entry(beta)
            .or_insert_with(|| tensor_with(&doubled, beta, rank));
        let v = combine(emb, first, nus)?;
        let Some(degree) = v.report.max_degree() else {
            continue;
        };
        tally.nonvanishing += 1;
        let bound = (mu.size() + alpha.size() + beta.size()) as usize;
        let case = VanishingCase {
            mu: mu.clone(),
            alpha: alpha.clone(),
            beta: beta.clone(),
            degree,
            bound,
        };
        if degree > bound {
            tally.counterexamples.push(case);
        } else if degree == bound {
            tally.sharp.push(case);
        }
    }
    Ok(tally)
}

/// Exhaustive check of `H^{> |mu|+|alpha|+|beta|}(V_{mu,alpha,beta}) = 0` over all
/// `|alpha| + |beta| = total` with `alpha_{n1-k1} = 0`, and all Koszul indices `mu` with
/// `|mu| <= mu_cap`. `jobs > 1` spreads the `mu` grid over a thread pool.
pub fn verify_vanishing(
    emb: &QuotEmbedding,
    total: u32,
    mu_cap: u32,
    jobs: usize,
) -> Result<VanishingReport> {
    const OP: &str = "verify_vanishing";
    if total == 0 {
        return Err(Error::pre(OP, "need D > 0"));
    }
    if total as usize >= emb.rank_b1() {
        return Err(Error::pre(
            OP,
            format!("need D < n1 - k1 = {}, got D = {total}", emb.rank_b1()),
        ));
    }
    let koszul = emb.koszul_length();
    let cap = mu_cap.min(koszul as u32);
    let mus = partitions_up_to(cap, emb.rank_a1(), (2 * emb.rank_b2()) as u32);
    let pairs = alpha_beta_pairs(emb, total);
    let results: Vec<Result<Tally>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::pre(OP, format!("thread pool: {e}")))?;
        pool.install(|| mus.par_iter().map(|mu| check_mu(emb, mu, &pairs)).collect())
    } else {
        mus.iter().map(|mu| check_mu(emb, mu, &pairs)).collect()
    };
    let mut tally = Tally::default();
    for r in results {
        tally = tally.merge(r?);
    }
    let key = |c: &VanishingCase| (c.mu.size(), c.mu.clone(), c.alpha.clone(), c.beta.clone());
    tally.counterexamples.sort_by_key(key);
    tally.sharp.sort_by_key(key);
    Ok(VanishingReport {
        embedding: *emb,
        total,
        mu_cap,
        cases: tally.cases,
        nonvanishing: tally.nonvanishing,
        counterexamples: tally.counterexamples,
        sharpness_witnesses: tally.sharp,
        coverage: Coverage {
            mu_sizes: (0..=cap).collect(),
            koszul_length: koszul,
            complete: cap as usize == koszul,
        },
    })
}

/// Both sides of `|mu| + |alpha| + |beta| >= j k2 + i1 (n1 - k1) + (i1 - j)^2 + |alpha|` for
/// a summand `W_{mu,alpha,nu}` of `V_{mu,alpha,beta}` with nonzero cohomology.
pub fn degree_lower_bound(
    emb: &QuotEmbedding,
    mu: &Partition,
    alpha: &Partition,
    beta: &Partition,
    nu: &Partition,
) -> Result<(i64, i64)> {
    const OP: &str = "degree_lower_bound";
    if mu.is_empty() {
        return Err(Error::pre(OP, "mu must be nonempty"));
    }
    if alpha.len() >= emb.rank_b1() {
        return Err(Error::pre(OP, format!("need alpha_(n1-k1) = 0, got alpha = {alpha}")));
    }
    let nus = second_factor_decomposition(mu, beta, emb.rank_b2());
    if nus.multiplicity(nu) == 0 {
        return Err(Error::pre(
            OP,
            format!("S_{nu} does not occur in the second factor of V_({mu},{alpha},{beta})"),
        ));
    }
    let (dual, j) = bwb_quot_dual(emb.k2, emb.n2, nu)?;
    let j = match (dual, j) {
        (BwbOutcome::Nonzero(_), Some(j)) => j as i64,
        _ => return Err(Error::pre(OP, format!("S_{nu} B2^* has no cohomology"))),
    };
    let (idx, _) = bwb_indices(emb.k1, emb.n1, mu, alpha)?;
    let i1 = idx.i1() as i64;
    let lhs = (mu.size() + alpha.size() + beta.size()) as i64;
    let rhs = j * emb.k2 as i64
        + i1 * emb.rank_b1() as i64
        + (i1 - j) * (i1 - j)
        + alpha.size() as i64;
    Ok((lhs, rhs))
}

/// Terms of the resolution of `(x)_i S_{lambdas[i]} E_i` obtained by resolving the factor at
/// `pos` through the degree-`t` Schur complex of `E_{pos+2} -> E_{pos+1}^{(+)2}`.
///
/// Each output sequence has `pos` emptied, `lambdas[pos+1]` tensored with the doubled part
/// and `lambdas[pos+2]` tensored with `alpha^t`; `max_len` truncates every partition.
pub fn schur_complex_step(
    lambdas: &[Partition],
    pos: usize,
    t: u32,
    max_len: usize,
) -> Result<Multiset<Vec<Partition>>> {
    if pos + 2 >= lambdas.len() {
        return Err(Error::pre(
            "schur_complex_step",
            format!("position {pos} needs two later factors among {}", lambdas.len()),
        ));
    }
    let mut out = Multiset::new();
    for ((alpha_t, beta), c) in schur_complex_terms(&lambdas[pos], t).iter() {
        if alpha_t.len() > max_len {
            continue;
        }
        let next = tensor_schur(&lambdas[pos + 2], alpha_t, max_len);
        for ((g1, g2), c1) in schur_of_double(beta, max_len).iter() {
            for (h, c2) in tensor_schur(&lambdas[pos + 1], g1, max_len).iter() {
                for (cur, c3) in tensor_schur(h, g2, max_len).iter() {
                    for (nx, c4) in next.iter() {
                        let mut seq = lambdas.to_vec();
                        seq[pos] = Partition::empty();
                        seq[pos + 1] = cur.clone();
                        seq[pos + 2] = nx.clone();
                        out.insert(seq, c * c1 * c2 * c3 * c4);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sharp_example_is_a_witness() {
        let emb = QuotEmbedding::new(1, 3, 3, 3).unwrap();
        let report = verify_vanishing(&emb, 3, 9, 1).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report
            .sharpness_witnesses
            .iter()
            .any(|c| c.mu == p(&[7, 2]) && c.alpha == p(&[1]) && c.beta == p(&[2]) && c.degree == 12));
    }

    #[test]
    fn empty_mu_is_strict() {
        let emb = QuotEmbedding::new(1, 3, 3, 3).unwrap();
        let report = verify_vanishing(&emb, 1, 0, 1).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.sharpness_witnesses.is_empty());
    }

    #[test]
    fn precondition_on_total() {
        let emb = QuotEmbedding::new(0, 2, 2, 2).unwrap();
        assert!(verify_vanishing(&emb, 2, 4, 1).is_err());
        assert!(verify_vanishing(&emb, 0, 4, 1).is_err());
        let r = verify_vanishing(&emb, 1, 4, 1).unwrap();
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn parallel_matches_serial() {
        let emb = QuotEmbedding::new(1, 3, 3, 3).unwrap();
        assert_eq!(
            verify_vanishing(&emb, 2, 6, 1).unwrap(),
            verify_vanishing(&emb, 2, 6, 3).unwrap()
        );
    }

    #[test]
    fn lower_bound_at_the_sharp_witness() {
        let emb = QuotEmbedding::new(1, 3, 3, 3).unwrap();
        let nu = p(&[6, 1, 1, 1, 1, 1]);
        assert_eq!(
            degree_lower_bound(&emb, &p(&[7, 2]), &p(&[1]), &p(&[2]), &nu).unwrap(),
            (12, 12)
        );
        assert!(degree_lower_bound(&emb, &Partition::empty(), &p(&[1]), &p(&[2]), &nu).is_err());
    }

    #[test]
    fn schur_complex_of_one_box() {
        // resolving S_1 E_0 against E_1, E_2: t = 0 gives 2 E_1, t = 1 gives E_2
        let lambdas = vec![p(&[1]), Partition::empty(), Partition::empty()];
        let t0 = schur_complex_step(&lambdas, 0, 0, 4).unwrap();
        assert_eq!(t0.multiplicity(&vec![Partition::empty(), p(&[1]), Partition::empty()]), 2);
        let t1 = schur_complex_step(&lambdas, 0, 1, 4).unwrap();
        assert_eq!(t1.multiplicity(&vec![Partition::empty(), Partition::empty(), p(&[1])]), 1);
        assert!(schur_complex_step(&lambdas, 1, 0, 4).is_err());
    }
}
