use serde::Serialize;

use crate::error::{Error, Result};

/// Numerology of the embedding `Quot^{r,d}(O^N) -> Gr(k1, n1) x Gr(k2, n2)` built from the
/// twists `m - 1` and `m`, where `k1 = (N - r)m - d`, `n1 = Nm`, `k2 = (N - r)(m + 1) - d`,
/// `n2 = N(m + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuotEmbedding {
    pub r: i64,
    pub d: i64,
    #[serde(rename = "N")]
    pub n_sections: i64,
    pub m: i64,
    pub k1: usize,
    pub n1: usize,
    pub k2: usize,
    pub n2: usize,
}

impl QuotEmbedding {
    pub fn new(r: i64, d: i64, n_sections: i64, m: i64) -> Result<Self> {
        const OP: &str = "stromme_embedding";
        if d <= 0 {
            return Err(Error::pre(OP, format!("need d > 0, got d = {d}")));
        }
        if r < 0 || n_sections < r {
            return Err(Error::pre(
                OP,
                format!("need N >= r >= 0, got N = {n_sections}, r = {r}"),
            ));
        }
        if m < d {
            return Err(Error::pre(
                OP,
                format!("need m >= d for a closed embedding, got m = {m}, d = {d}"),
            ));
        }
        let k1 = (n_sections - r) * m - d;
        let n1 = n_sections * m;
        let k2 = (n_sections - r) * (m + 1) - d;
        let n2 = n_sections * (m + 1);
        for (k, n) in [(k1, n1), (k2, n2)] {
            if k < 1 || k >= n {
                return Err(Error::pre(
                    OP,
                    format!("degenerate Grassmannian Gr({k},{n}); need 1 <= k < n"),
                ));
            }
        }
        Ok(QuotEmbedding {
            r,
            d,
            n_sections,
            m,
            k1: k1 as usize,
            n1: n1 as usize,
            k2: k2 as usize,
            n2: n2 as usize,
        })
    }

    /// Smallest valid `m >= d` with `total < n1 - k1 = rm + d`.
    pub fn minimal_for(r: i64, d: i64, n_sections: i64, total: u32) -> Result<Self> {
        let total = total as i64;
        if r == 0 && total >= d {
            return Err(Error::Infeasible {
                op: "minimal_m",
                reason: format!("n1 - k1 = d = {d} for r = 0, never above D = {total}"),
            });
        }
        let mut m = d.max(1);
        if r > 0 {
            m = m.max((total - d) / r + 1);
        }
        // the Grassmannians can still be degenerate for the smallest m; a few steps settle it
        let mut last = None;
        for cand in m..m + 64 {
            match Self::new(r, d, n_sections, cand) {
                Ok(emb) => return Ok(emb),
                Err(e) => last = Some(e),
            }
        }
        Err(last.expect("loop ran"))
    }

    pub fn rank_a1(&self) -> usize {
        self.k1
    }

    pub fn rank_b1(&self) -> usize {
        self.n1 - self.k1
    }

    pub fn rank_a2(&self) -> usize {
        self.k2
    }

    pub fn rank_b2(&self) -> usize {
        self.n2 - self.k2
    }

    /// `k1(n1 - k1) + k2(n2 - k2)`.
    pub fn dimension(&self) -> usize {
        self.k1 * self.rank_b1() + self.k2 * self.rank_b2()
    }

    /// Largest exterior power in the Koszul resolution: the rank of `A1 (x) (B2 (+) B2)^*`.
    pub fn koszul_length(&self) -> usize {
        2 * self.k1 * self.rank_b2()
    }
}

/// Rank of `E_m = (p_* Q(m))^*`, namely `r(m + 1) + d`.
pub fn taut_rank(r: i64, d: i64, m: i64) -> Result<i64> {
    if m < -1 {
        return Err(Error::pre(
            "taut_rank",
            format!("need m >= -1 for p_* Q(m) to be a bundle, got m = {m}"),
        ));
    }
    Ok(r * (m + 1) + d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_embedding() {
        let e = QuotEmbedding::new(1, 3, 3, 3).unwrap();
        assert_eq!((e.k1, e.n1, e.k2, e.n2), (3, 9, 5, 12));
        assert_eq!(e.rank_b1(), 6);
        assert_eq!(e.rank_b2(), 7);
        let e = QuotEmbedding::new(0, 2, 2, 2).unwrap();
        assert_eq!((e.k1, e.n1, e.k2, e.n2), (2, 4, 4, 6));
    }

    #[test]
    fn invalid_embeddings() {
        assert!(QuotEmbedding::new(0, 1, 1, 1).is_err());
        assert!(QuotEmbedding::new(1, 3, 3, 2).is_err());
        assert!(QuotEmbedding::new(4, 3, 3, 3).is_err());
        assert!(QuotEmbedding::new(1, 0, 3, 3).is_err());
    }

    #[test]
    fn minimal_twist() {
        let e = QuotEmbedding::minimal_for(1, 3, 3, 3).unwrap();
        assert_eq!(e.m, 3);
        let e = QuotEmbedding::minimal_for(1, 3, 3, 8).unwrap();
        assert_eq!(e.m, 6);
        assert!(8 < e.rank_b1());
        assert!(QuotEmbedding::minimal_for(0, 2, 2, 2).is_err());
        assert_eq!(QuotEmbedding::minimal_for(0, 2, 2, 1).unwrap().m, 2);
    }

    #[test]
    fn tautological_ranks() {
        assert_eq!(taut_rank(1, 3, 1).unwrap(), 5);
        assert_eq!(taut_rank(0, 7, 4).unwrap(), 7);
        assert_eq!(taut_rank(1, 3, -1).unwrap(), 3);
        assert!(taut_rank(1, 3, -2).is_err());
    }
}
