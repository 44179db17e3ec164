//! Exact rank and determinant of rational matrices by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scales each row by the product of its denominators.
fn integer_rows(m: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| {
            let scale = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc * x.denom());
            row.iter()
                .map(|x| (x * BigRational::from_integer(scale.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Row echelon form by Bareiss elimination with row pivoting. Returns the rank and the
/// sign-adjusted final pivot (the determinant when the matrix is square and full rank).
fn bareiss(mut a: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            negate = !negate;
        }
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    (rank, if negate { -prev } else { prev })
}

pub fn rank(m: &[Vec<BigRational>]) -> usize {
    bareiss(integer_rows(m)).0
}

/// Determinant of a square rational matrix; the empty matrix has determinant 1.
pub fn det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "det needs a square matrix");
    if n == 0 {
        return BigRational::one();
    }
    let scales: Vec<BigInt> = m
        .iter()
        .map(|row| row.iter().fold(BigInt::one(), |acc, x| acc * x.denom()))
        .collect();
    let (r, d) = bareiss(integer_rows(m));
    if r < n {
        return BigRational::zero();
    }
    let total = scales.into_iter().fold(BigInt::one(), |acc, s| acc * s);
    BigRational::new(d, total)
}
