//! Exact multiplicities over the integers.
//!
//! `m(λ) = n − rank(λI − A)`; for `λ = p/q` the rank is taken of `pI − qA`,
//! which differs from `λI − A` by the positive factor `q`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

use super::adjacency;

/// A reduced fraction `p/q` with `q > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational {
    p: i64,
    q: i64,
}

impl Rational {
    pub fn new(p: i64, q: i64) -> Result<Rational> {
        if q == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Rational { p, q })
    }

    pub const fn integer(p: i64) -> Rational {
        Rational { p, q: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

/// Always `p/q`, also for integers.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let bad = |_| Error::Parse {
            line: 0,
            message: format!("invalid rational {s:?}"),
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::new(
                p.trim().parse().map_err(bad)?,
                q.trim().parse().map_err(bad)?,
            ),
            None => Ok(Rational::integer(s.trim().parse().map_err(bad)?)),
        }
    }
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination with row
/// pivoting and column skipping. Runs in `i128` with checked arithmetic and
/// restarts in arbitrary precision on overflow.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let wide: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_rank_checked(wide) {
        Some(rank) => rank,
        None => bareiss_rank_big(rows),
    }
}

fn bareiss_rank_checked(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let lead = row[col];
            for (x, &p) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                let num = pivot.checked_mul(*x)?.checked_sub(lead.checked_mul(p)?)?;
                debug_assert_eq!(num % prev, 0);
                *x = num / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let lead = row[col].clone();
            for (x, p) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                let num = &pivot * &*x - &lead * p;
                debug_assert!((&num % &prev).is_zero());
                *x = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// `m(G^σ, λ)` computed exactly.
pub fn multiplicity_exact(g: &SignedGraph, lambda: Rational) -> usize {
    let (p, q) = (lambda.numer(), lambda.denom());
    let mut rows = adjacency(g).rows();
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = if i == j { p } else { -q * *x };
        }
    }
    g.n() - integer_rank(&rows)
}

pub fn rank_exact(g: &SignedGraph) -> usize {
    integer_rank(&adjacency(g).rows())
}
