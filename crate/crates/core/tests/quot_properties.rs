use splitquot::bwb::{bwb_indices, bwb_quot_dual, BwbOutcome};
use splitquot::partitions::{partitions_of, partitions_up_to, Partition};
use splitquot::quot::{
    degree_lower_bound, schur_complex_step, second_factor_decomposition, v_cohomology_terms,
    verify_vanishing, QuotEmbedding,
};

fn dim_schur(lam: &Partition, n: i64) -> u128 {
    let conj = lam.conjugate();
    let (mut num, mut den) = (1i128, 1i128);
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row as usize {
            num *= (n + j as i64 - i as i64) as i128;
            den *= ((row as usize - j) + (conj.part(j) as usize - i) - 1) as i128;
        }
    }
    (num / den).max(0) as u128
}

#[test]
fn second_factor_dimension_count() {
    for n in 2..=3usize {
        for mu in partitions_up_to(5, 5, 2 * n as u32) {
            for beta in partitions_up_to(2, n, 2) {
                let lhs: u128 = second_factor_decomposition(&mu, &beta, n)
                    .iter()
                    .map(|(nu, c)| c as u128 * dim_schur(nu, n as i64))
                    .sum();
                let rhs = dim_schur(&mu.conjugate(), 2 * n as i64) * dim_schur(&beta, n as i64);
                assert_eq!(lhs, rhs, "mu={mu} beta={beta} n={n}");
            }
        }
    }
}

#[test]
fn kunneth_additivity() {
    let emb = QuotEmbedding::new(1, 3, 3, 3).unwrap();
    for mu in partitions_up_to(6, emb.rank_a1(), 14) {
        for alpha in partitions_up_to(2, 2, 2) {
            for beta in partitions_up_to(2, 2, 2) {
                let v = v_cohomology_terms(&emb, &mu, &alpha, &beta).unwrap();
                match v.first_factor {
                    BwbOutcome::Vanishes => assert!(v.report.is_empty()),
                    BwbOutcome::Nonzero(d1) => {
                        let expected: u64 = v.second_factor.iter().map(|t| t.multiplicity).sum();
                        let got: u64 = v.report.degrees().map(|(_, m)| m).sum();
                        assert_eq!(expected, got);
                        for t in &v.second_factor {
                            let (dual, j) = bwb_quot_dual(emb.k2, emb.n2, &t.nu).unwrap();
                            assert_eq!(dual, BwbOutcome::Nonzero(t.degree));
                            assert_eq!(j, t.j);
                            assert!(v.report.multiplicity(d1 + t.degree) >= t.multiplicity);
                        }
                    }
                }
            }
        }
    }
}

fn lower_bound_sweep(emb: &QuotEmbedding, mu_cap: u32, ab_cap: u32) -> usize {
    let mut checked = 0;
    for mu in partitions_up_to(mu_cap, emb.rank_a1(), 2 * emb.rank_b2() as u32) {
        if mu.is_empty() {
            continue;
        }
        for alpha in partitions_up_to(ab_cap, emb.rank_b1() - 1, ab_cap) {
            for beta in partitions_up_to(ab_cap - alpha.size(), emb.rank_b2(), ab_cap) {
                let v = v_cohomology_terms(emb, &mu, &alpha, &beta).unwrap();
                let BwbOutcome::Nonzero(d1) = v.first_factor else { continue };
                for t in &v.second_factor {
                    if t.nu.is_empty() {
                        continue;
                    }
                    let (lhs, rhs) = degree_lower_bound(emb, &mu, &alpha, &beta, &t.nu).unwrap();
                    assert!(lhs >= rhs, "mu={mu} alpha={alpha} beta={beta} nu={}", t.nu);
                    // the upper bound D <= j k2 + i1 (n1 - k1) + |alpha|
                    let (idx, _) = bwb_indices(emb.k1, emb.n1, &mu, &alpha).unwrap();
                    let j = t.j.unwrap();
                    let upper = j * emb.k2 + idx.i1() * emb.rank_b1() + alpha.size() as usize;
                    assert!(d1 + t.degree <= upper);
                    checked += 1;
                }
            }
        }
    }
    checked
}

#[test]
fn lower_bound_small_embedding() {
    let emb = QuotEmbedding::new(0, 2, 2, 2).unwrap();
    lower_bound_sweep(&emb, 4, 3);
}

#[test]
fn lower_bound_d3_embedding() {
    let emb = QuotEmbedding::new(1, 3, 3, 3).unwrap();
    assert!(lower_bound_sweep(&emb, 9, 3) > 0);
}

#[test]
fn small_embedding_sweep() {
    let emb = QuotEmbedding::new(0, 2, 2, 2).unwrap();
    let report = verify_vanishing(&emb, 1, 4, 1).unwrap();
    assert!(report.counterexamples.is_empty());
    assert!(report.cases > 0);
}

#[test]
fn empty_mu_only_strict_bound() {
    for (r, d, n, m) in [(1, 3, 3, 3), (1, 2, 3, 2), (0, 2, 3, 2)] {
        let emb = QuotEmbedding::new(r, d, n, m).unwrap();
        let report = verify_vanishing(&emb, 1, 0, 1).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.sharpness_witnesses.is_empty());
    }
}

#[test]
fn resolution_terms_conserve_total_size() {
    let lambdas_list: Vec<Vec<Partition>> = {
        let small = partitions_up_to(3, 3, 3);
        let mut out = Vec::new();
        for a in &small {
            for b in &small {
                for c in partitions_of(1, 3, 3).iter().chain(std::iter::once(&Partition::empty())) {
                    out.push(vec![a.clone(), b.clone(), c.clone()]);
                }
            }
        }
        out
    };
    for lambdas in lambdas_list {
        let total: u32 = lambdas.iter().map(Partition::size).sum();
        for t in 0..=lambdas[0].size() {
            for (seq, _) in schur_complex_step(&lambdas, 0, t, 6).unwrap().iter() {
                assert_eq!(seq.iter().map(Partition::size).sum::<u32>(), total);
                assert!(seq[0].is_empty());
                assert_eq!(seq[2].size(), lambdas[2].size() + t);
                assert_eq!(seq[1].size(), lambdas[1].size() + lambdas[0].size() - t);
            }
        }
    }
}
