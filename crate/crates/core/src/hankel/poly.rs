use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Monomial as `(variable index, exponent)` pairs, sorted by index, exponents positive.
pub type Monomial = Vec<(usize, u32)>;

/// Sparse integer polynomial in `a_0, a_1, ...`.
///
/// Terms are kept in lexicographic order of their monomials, which is also the print order.
/// Text form: terms `coeff * a_i^p * a_j^q` joined by `" + "`; a constant term is its
/// coefficient alone; the zero polynomial is `0`. Parsing also accepts `a_i` for `a_i^1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    terms: BTreeMap<Monomial, i64>,
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut acc: BTreeMap<usize, u32> = a.iter().copied().collect();
    for &(v, e) in b {
        *acc.entry(v).or_insert(0) += e;
    }
    acc.into_iter().collect()
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(index: usize) -> Self {
        let mut p = Self::default();
        p.add_term(vec![(index, 1)], 1);
        p
    }

    fn add_term(&mut self, mono: Monomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(mono).or_insert(0);
        *slot = slot.checked_add(coeff).expect("coefficient overflow");
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (mono, &c) in &self.terms {
            let mut term = BigRational::from_integer(BigInt::from(c));
            for &(v, e) in mono {
                let x = point.get(v).cloned().unwrap_or_else(BigRational::zero);
                term *= num_traits::pow(x, e as usize);
            }
            total += term;
        }
        total
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial {
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let mut out = IntegerPolynomial::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                let c = ca.checked_mul(cb).expect("coefficient overflow");
                out.add_term(mul_monomials(ma, mb), c);
            }
        }
        out
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, e) in mono {
                write!(f, " * a_{v}^{e}")?;
            }
        }
        Ok(())
    }
}

fn parse_factor(tok: &str) -> Result<(usize, u32)> {
    let bad = || Error::Parse(format!("bad factor {tok:?}; expected a_i or a_i^p"));
    let rest = tok.strip_prefix("a_").ok_or_else(bad)?;
    let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let idx = idx.parse::<usize>().map_err(|_| bad())?;
    if exp == 0 {
        return Err(bad());
    }
    Ok((idx, exp))
}

impl FromStr for IntegerPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = IntegerPolynomial::zero();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let mut parts = term.split('*').map(str::trim);
            let head = parts.next().unwrap_or_default();
            let (coeff, first) = match head.parse::<i64>() {
                Ok(c) => (c, None),
                Err(_) => (1, Some(parse_factor(head)?)),
            };
            let mut mono: BTreeMap<usize, u32> = BTreeMap::new();
            for factor in first.into_iter().map(Ok).chain(parts.map(parse_factor)) {
                let (v, e) = factor?;
                *mono.entry(v).or_insert(0) += e;
            }
            out.add_term(mono.into_iter().collect(), coeff);
        }
        Ok(out)
    }
}

impl Serialize for IntegerPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
