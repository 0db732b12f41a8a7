//! Scalar and vector/matrix helpers over exact rationals, plus an integer
//! Bareiss rank that is algorithmically unrelated to the engine's rref.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational n/d.
pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn basis_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

pub fn vec_add(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn vec_neg(x: &[Q]) -> Vec<Q> {
    x.iter().map(|a| -a).collect()
}

pub fn vec_scale(c: &Q, x: &[Q]) -> Vec<Q> {
    x.iter().map(|a| c * a).collect()
}

pub fn vec_is_zero(x: &[Q]) -> bool {
    x.iter().all(|a| a.is_zero())
}

/// Matrix times vector; `m` is a list of rows.
pub fn mat_vec(m: &[Vec<Q>], x: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_col(m: &[Vec<Q>], j: usize) -> Vec<Q> {
    m.iter().map(|row| row[j].clone()).collect()
}

pub fn mat_id(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| basis_vec(n, i)).collect()
}

pub fn mat_zero(rows: usize, cols: usize) -> Vec<Vec<Q>> {
    vec![zeros(cols); rows]
}

pub fn mat_add(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    a.iter().zip(b).map(|(x, y)| vec_add(x, y)).collect()
}

pub fn mat_sub(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    a.iter().zip(b).map(|(x, y)| vec_sub(x, y)).collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = mat_zero(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn mat_is_zero(m: &[Vec<Q>]) -> bool {
    m.iter().all(|row| vec_is_zero(row))
}

/// Rank via fraction-free (Bareiss) elimination: clear denominators row by
/// row, then eliminate over the integers, dividing by the previous pivot.
/// Exactness of each division is asserted rather than assumed.
pub fn rank(m: &[Vec<Q>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut pivot_row = 0;
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, found);
        for r in pivot_row + 1..rows {
            for c in col + 1..cols {
                let num = &a[pivot_row][col] * &a[r][c] - &a[r][col] * &a[pivot_row][c];
                assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[pivot_row][col].clone();
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}
