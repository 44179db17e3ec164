//! Rank-2 splitting loci in `Ext^1(O(d), O)` with coordinates `a_0, ..., a_{d-2}`.
//!
//! The extension with class `a` splits as `(e, d - e)` where `e` is the largest `k <= d/2`
//! for which the `k x (d - k)` Hankel matrix `B_{k,d-k}(a)` has full row rank. The closed
//! locus of types at most `(d - e, e)` is cut out by the maximal minors of
//! `B_{d-e+1, e-1}`, i.e. a secant variety of the rational normal curve.

pub mod linalg;
mod poly;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

pub use poly::{IntegerPolynomial, Monomial};

use crate::error::{Error, Result};
use crate::splitting::SplittingType;

/// Environment variable overriding the default sampling seed.
pub const SEED_ENV: &str = "SPLITQUOT_SEED";
pub const DEFAULT_SEED: u64 = 0x5eed;

/// The `k x (d - k)` Hankel matrix with entry `(i, j)` equal to `a_{i+j}` (zero-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HankelMatrix {
    pub k: usize,
    pub d: usize,
}

impl HankelMatrix {
    pub fn rows(&self) -> usize {
        self.k
    }

    pub fn cols(&self) -> usize {
        self.d - self.k
    }

    /// Variable index of entry `(i, j)`, zero-based.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        i + j
    }

    /// Variable indices row by row.
    pub fn index_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn evaluate(&self, coords: &[BigRational]) -> Vec<Vec<BigRational>> {
        self.index_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|v| coords[v].clone()).collect())
            .collect()
    }

    /// Rows rendered as `a_i` names.
    pub fn symbolic(&self) -> Vec<Vec<String>> {
        self.index_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|v| format!("a_{v}")).collect())
            .collect()
    }
}

pub fn hankel(k: usize, d: usize) -> Result<HankelMatrix> {
    if k < 1 || k + 1 > d {
        return Err(Error::pre("hankel", format!("need 1 <= k <= d - 1, got k = {k}, d = {d}")));
    }
    Ok(HankelMatrix { k, d })
}

fn serialize_rationals<S: Serializer>(
    v: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// A point `(a_0, ..., a_{d-2})` of `Ext^1(O(d), O)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HankelPoint {
    pub d: usize,
    #[serde(serialize_with = "serialize_rationals")]
    coords: Vec<BigRational>,
}

impl HankelPoint {
    pub fn new(d: usize, coords: Vec<BigRational>) -> Result<Self> {
        if d < 2 {
            return Err(Error::pre("HankelPoint", format!("need d >= 2, got {d}")));
        }
        if coords.len() != d - 1 {
            return Err(Error::pre(
                "HankelPoint",
                format!("need {} coordinates for d = {d}, got {}", d - 1, coords.len()),
            ));
        }
        Ok(HankelPoint { d, coords })
    }

    pub fn zero(d: usize) -> Result<Self> {
        Self::new(d, vec![BigRational::zero(); d.saturating_sub(1)])
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Rank of `B_{k,d-k}` at this point; `k = 0` and `k = d` give the empty matrix.
    pub fn hankel_rank(&self, k: usize) -> usize {
        if k == 0 || k >= self.d {
            return 0;
        }
        linalg::rank(&HankelMatrix { k, d: self.d }.evaluate(&self.coords))
    }
}

/// Splitting type `(e, d - e)` of the extension with class `pt`.
pub fn splitting_from_point(pt: &HankelPoint) -> SplittingType {
    let d = pt.d;
    let e = (0..=d / 2)
        .rev()
        .find(|&k| pt.hankel_rank(k) == k)
        .unwrap_or(0);
    SplittingType::new(vec![e as i64, (d - e) as i64]).expect("e <= d - e")
}

fn symbolic_det(m: &[Vec<IntegerPolynomial>]) -> IntegerPolynomial {
    match m.len() {
        0 => IntegerPolynomial::constant(1),
        1 => m[0][0].clone(),
        n => {
            let mut acc = IntegerPolynomial::zero();
            for c in 0..n {
                let minor: Vec<Vec<IntegerPolynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * &symbolic_det(&minor);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Maximal minors of `B_{d-e+1, e-1}`, one per column subset in lexicographic order.
pub fn fitting_generators(d: usize, e: usize) -> Result<Vec<IntegerPolynomial>> {
    if 2 * e < d + 2 || e >= d {
        return Err(Error::pre(
            "fitting_generators",
            format!("need d/2 + 1 <= e < d, got d = {d}, e = {e}"),
        ));
    }
    let b = hankel(d - e + 1, d)?;
    let sym: Vec<Vec<IntegerPolynomial>> = b
        .index_rows()
        .into_iter()
        .map(|row| row.into_iter().map(IntegerPolynomial::var).collect())
        .collect();
    Ok(combinations(b.cols(), b.rows())
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<IntegerPolynomial>> = sym
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect();
            symbolic_det(&sub)
        })
        .collect())
}

/// `sum_l w_l (1, t_l, ..., t_l^{d-2})`, a point on the `s`-secant of the rational normal curve.
pub fn secant_point(
    d: usize,
    nodes: &[BigRational],
    weights: &[BigRational],
) -> Result<HankelPoint> {
    const OP: &str = "secant_point";
    let s = nodes.len();
    if weights.len() != s {
        return Err(Error::pre(OP, format!("{s} nodes but {} weights", weights.len())));
    }
    if d < 2 || s > d / 2 {
        return Err(Error::pre(OP, format!("need d >= 2 and s <= d/2, got d = {d}, s = {s}")));
    }
    if nodes.iter().collect::<BTreeSet<_>>().len() != s {
        return Err(Error::pre(OP, "nodes must be distinct"));
    }
    if weights.iter().any(Zero::is_zero) {
        return Err(Error::pre(OP, "weights must be nonzero"));
    }
    let mut coords = vec![BigRational::zero(); d - 1];
    for (t, w) in nodes.iter().zip(weights) {
        let mut power = BigRational::one();
        for c in coords.iter_mut() {
            *c += w * &power;
            power *= t;
        }
    }
    HankelPoint::new(d, coords)
}

/// Seeded source of pseudo-random rational points.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Seed from `SPLITQUOT_SEED` when set and numeric, else [`DEFAULT_SEED`].
    pub fn from_env() -> Self {
        Self::new(seed_from_env())
    }

    pub fn rational(&mut self) -> BigRational {
        let n: i64 = self.rng.gen_range(-9..=9);
        let d: i64 = self.rng.gen_range(1..=5);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn nonzero_rational(&mut self) -> BigRational {
        loop {
            let x = self.rational();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn point(&mut self, d: usize) -> Result<HankelPoint> {
        let coords = (0..d.saturating_sub(1)).map(|_| self.rational()).collect();
        HankelPoint::new(d, coords)
    }

    /// A point on the `s`-secant whose splitting type is exactly `(s, d - s)`; draws that
    /// land in a smaller stratum are discarded, at most `attempts` times.
    pub fn secant(&mut self, d: usize, s: usize, attempts: usize) -> Result<HankelPoint> {
        let target = SplittingType::new(vec![s as i64, (d - s) as i64])?;
        for _ in 0..attempts.max(1) {
            let mut nodes = BTreeSet::new();
            while nodes.len() < s {
                nodes.insert(self.rational());
            }
            let nodes: Vec<BigRational> = nodes.into_iter().collect();
            let weights: Vec<BigRational> = (0..s).map(|_| self.nonzero_rational()).collect();
            let pt = secant_point(d, &nodes, &weights)?;
            if splitting_from_point(&pt) == target {
                return Ok(pt);
            }
        }
        Err(Error::Infeasible {
            op: "PointSampler::secant",
            reason: format!("no generic point of type {target} after {attempts} draws"),
        })
    }
}

pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn st(e: &[i64]) -> SplittingType {
        SplittingType::new(e.to_vec()).unwrap()
    }

    #[test]
    fn hankel_shapes() {
        let b = hankel(2, 4).unwrap();
        assert_eq!(b.index_rows(), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(hankel(1, 5).unwrap().index_rows(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            hankel(3, 5).unwrap().index_rows(),
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
        assert!(hankel(0, 4).is_err());
        assert!(hankel(4, 4).is_err());
    }

    #[test]
    fn splitting_examples() {
        assert_eq!(splitting_from_point(&HankelPoint::zero(4).unwrap()), st(&[0, 4]));
        let t = BigRational::new(BigInt::from(3), BigInt::from(2));
        let pt = HankelPoint::new(4, vec![q(1), t.clone(), &t * &t]).unwrap();
        assert_eq!(splitting_from_point(&pt), st(&[1, 3]));
        let pt = HankelPoint::new(4, vec![q(1), q(0), q(1)]).unwrap();
        assert_eq!(splitting_from_point(&pt), st(&[2, 2]));
        assert!(HankelPoint::new(4, vec![q(1)]).is_err());
    }

    #[test]
    fn generators() {
        let g = fitting_generators(4, 3).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].to_string(), "1 * a_0^1 * a_2^1 + -1 * a_1^2");
        let g: Vec<String> = fitting_generators(5, 4)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            g,
            vec![
                "1 * a_0^1 * a_2^1 + -1 * a_1^2",
                "1 * a_0^1 * a_3^1 + -1 * a_1^1 * a_2^1",
                "1 * a_1^1 * a_3^1 + -1 * a_2^2",
            ]
        );
        assert!(fitting_generators(4, 2).is_err());
        assert!(fitting_generators(4, 4).is_err());
    }

    #[test]
    fn secant_examples() {
        assert_eq!(splitting_from_point(&secant_point(5, &[], &[]).unwrap()), st(&[0, 5]));
        let pt = secant_point(4, &[q(2)], &[q(1)]).unwrap();
        assert_eq!(pt.coords(), &[q(1), q(2), q(4)]);
        assert_eq!(splitting_from_point(&pt), st(&[1, 3]));
        let pt = secant_point(6, &[q(1), q(2)], &[q(1), q(1)]).unwrap();
        assert_eq!(splitting_from_point(&pt), st(&[2, 4]));
        assert!(secant_point(6, &[q(1), q(1)], &[q(1), q(1)]).is_err());
        assert!(secant_point(4, &[q(1), q(2), q(3)], &[q(1), q(1), q(1)]).is_err());
        assert!(secant_point(4, &[q(1)], &[q(0)]).is_err());
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = PointSampler::new(11).point(6).unwrap();
        let b = PointSampler::new(11).point(6).unwrap();
        assert_eq!(a, b);
        let mut s = PointSampler::new(3);
        for d in 2..=8 {
            for k in 0..=d / 2 {
                let pt = s.secant(d, k, 32).unwrap();
                assert_eq!(splitting_from_point(&pt), st(&[k as i64, (d - k) as i64]));
            }
        }
    }
}
