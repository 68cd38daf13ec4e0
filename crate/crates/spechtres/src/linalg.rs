//! Exact rank machinery for graded strands.
//!
//! Two routes: fraction-free Gaussian elimination (Bareiss) over the
//! integers for small matrices and as a fallback, and word-size modular
//! elimination used to produce certified rank *lower bounds*. A rank mod p
//! never exceeds the rational rank, so a modular rank that meets a known
//! upper bound pins the rational rank exactly; the verify module combines
//! such bounds into exact certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::polyring::Rational;

/// Primes below 2^31 so products fit comfortably in u64.
pub const RANK_PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

/// Sparse column-major matrix over the rationals.
#[derive(Debug, Clone)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> SparseMat {
        SparseMat {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn push_entry(&mut self, row: usize, col: usize, value: Rational) {
        debug_assert!(row < self.rows && col < self.cols);
        if !value.is_zero() {
            self.columns[col].push((row, value));
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Dense modular image, rows-major, entries reduced into [0, p).
    fn to_dense_mod(&self, p: u64) -> Option<Vec<Vec<u64>>> {
        let mut dense = vec![vec![0u64; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                let num = mod_bigint(v.numer(), p);
                let den = mod_bigint(v.denom(), p);
                if den == 0 {
                    return None; // prime divides a denominator; caller retries
                }
                dense[*r][c] = num * mod_inv(den, p) % p;
            }
        }
        Some(dense)
    }

    /// Rank of the image modulo p; None if p divides a denominator.
    pub fn rank_mod(&self, p: u64) -> Option<usize> {
        // eliminate over whichever dimension is smaller
        if self.rows <= self.cols {
            let dense = self.to_dense_mod(p)?;
            Some(rank_dense_mod(dense, p))
        } else {
            let mut dense = vec![vec![0u64; self.rows]; self.cols];
            for (c, col) in self.columns.iter().enumerate() {
                for (r, v) in col {
                    let num = mod_bigint(v.numer(), p);
                    let den = mod_bigint(v.denom(), p);
                    if den == 0 {
                        return None;
                    }
                    dense[c][*r] = num * mod_inv(den, p) % p;
                }
            }
            Some(rank_dense_mod(dense, p))
        }
    }

    /// Best modular lower bound over the fixed prime list.
    pub fn rank_lower_bound(&self) -> usize {
        RANK_PRIMES
            .iter()
            .filter_map(|&p| self.rank_mod(p))
            .max()
            .unwrap_or(0)
    }

    /// Exact rank by fraction-free elimination over the integers after
    /// clearing denominators (denominators are almost always 1 here).
    pub fn rank_exact(&self) -> usize {
        let mut dense: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            let lcm = col
                .iter()
                .fold(BigInt::from(1), |acc, (_, v)| acc.lcm(v.denom()));
            for (r, v) in col {
                dense[*r][c] = v.numer() * (&lcm / v.denom());
            }
        }
        rank_bareiss(dense)
    }
}

fn mod_bigint(x: &BigInt, p: u64) -> u64 {
    let m = (x % BigInt::from(p)).to_string();
    let v: i64 = m.parse().unwrap();
    if v < 0 {
        (v + p as i64) as u64
    } else {
        v as u64
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut base = b as u128 % p as u128;
    let pp = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % pp;
        }
        base = base * base % pp;
        e >>= 1;
    }
    acc as u64
}

/// In-place row echelon rank over F_p on a dense row-major matrix.
fn rank_dense_mod(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut pivot_col = 0;
    while rank < rows && pivot_col < cols {
        let Some(pr) = (rank..rows).find(|&r| m[r][pivot_col] != 0) else {
            pivot_col += 1;
            continue;
        };
        m.swap(rank, pr);
        let inv = mod_inv(m[rank][pivot_col], p) as u128;
        let pp = p as u128;
        // normalize pivot row once
        for j in pivot_col..cols {
            m[rank][j] = (m[rank][j] as u128 * inv % pp) as u64;
        }
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[pivot_col];
            if f == 0 {
                continue;
            }
            let fp = (p - f) as u128; // add (p - f) * pivot row
            for j in pivot_col..cols {
                if prow[j] != 0 {
                    row[j] = ((row[j] as u128 + fp * prow[j] as u128) % pp) as u64;
                }
            }
        }
        rank += 1;
        pivot_col += 1;
    }
    rank
}

/// Bareiss fraction-free elimination rank on an integer matrix.
pub fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut pivot_col = 0;
    let mut prev = BigInt::from(1);
    while rank < rows && pivot_col < cols {
        // partial pivot: smallest nonzero magnitude keeps growth down
        let pr = (rank..rows)
            .filter(|&r| !m[r][pivot_col].is_zero())
            .min_by_key(|&r| m[r][pivot_col].abs());
        let Some(pr) = pr else {
            pivot_col += 1;
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][pivot_col].clone();
        for r in rank + 1..rows {
            if m[r][pivot_col].is_zero() && pivot_col + 1 >= cols {
                continue;
            }
            let lead = m[r][pivot_col].clone();
            for j in pivot_col..cols {
                let v = (&pivot * &m[r][j] - &lead * &m[rank][j]) / &prev;
                m[r][j] = v;
            }
        }
        prev = pivot;
        rank += 1;
        pivot_col += 1;
    }
    rank
}
