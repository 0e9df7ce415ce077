//! Exact integer and rational helpers: gcd/lcm, prime supports, 2-adic data,
//! rational matrix inversion, and Smith/Hermite normal forms for small
//! integer matrices.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

pub fn gcd(a: u128, b: u128) -> u128 {
    a.gcd(&b)
}

pub fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes dividing `n`. Empty for `n` in {0, 1}; callers treat 0 separately.
pub fn prime_support(mut n: u128) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    if n == 0 {
        return out;
    }
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            out.insert(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n as u64);
    }
    out
}

/// 2-adic valuation; `None` stands for the valuation of zero (infinity).
pub fn v2(n: u128) -> Option<u32> {
    if n == 0 {
        None
    } else {
        Some(n.trailing_zeros())
    }
}

/// Number of ones in the binary expansion.
pub fn s2(n: u128) -> u32 {
    n.count_ones()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect()
}

pub fn int_to_q(a: &[Vec<i64>]) -> QMatrix {
    a.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect()
}

/// Gauss-Jordan inverse of a square rational matrix; `None` if singular.
pub fn invert(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    let mut m: QMatrix = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] = &m[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let t = &f * &m[col][j];
                    m[r][j] = &m[r][j] - t;
                    let t = &f * &inv[col][j];
                    inv[r][j] = &inv[r][j] - t;
                }
            }
        }
    }
    Some(inv)
}

/// Determinant of a square integer matrix via fraction-free elimination.
pub fn det_int(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * prev
}

/// Least common multiple of the denominators of all entries.
pub fn denominator_lcm<'a>(entries: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    entries
        .into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Smith normal form `U·A·V = D` of an integer matrix. Only the column
/// transform `V` and its inverse are tracked; the diagonal is nonnegative.
#[derive(Debug, Clone)]
pub struct Smith {
    pub diagonal: Vec<i64>,
    pub v: Vec<Vec<i64>>,
    pub v_inv: Vec<Vec<i64>>,
}

pub fn smith_normal_form(a: &[Vec<i64>]) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut v: Vec<Vec<i64>> = (0..cols)
        .map(|i| (0..cols).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut v_inv = v.clone();

    // column op: col_j -= f * col_t
    let col_sub = |m: &mut Vec<Vec<i64>>,
                   v: &mut Vec<Vec<i64>>,
                   v_inv: &mut Vec<Vec<i64>>,
                   j: usize,
                   t: usize,
                   f: i64| {
        for row in m.iter_mut() {
            row[j] -= f * row[t];
        }
        for row in v.iter_mut() {
            row[j] -= f * row[t];
        }
        for k in 0..v_inv[0].len() {
            let add = f * v_inv[j][k];
            v_inv[t][k] += add;
        }
    };
    let col_swap = |m: &mut Vec<Vec<i64>>,
                    v: &mut Vec<Vec<i64>>,
                    v_inv: &mut Vec<Vec<i64>>,
                    i: usize,
                    j: usize| {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        v_inv.swap(i, j);
    };

    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0
                        && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            m.swap(t, bi);
            if bj != t {
                col_swap(&mut m, &mut v, &mut v_inv, t, bj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = m[i][t] / p;
                if f != 0 {
                    for j in t..cols {
                        m[i][j] -= f * m[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let f = m[t][j] / p;
                if f != 0 {
                    col_sub(&mut m, &mut v, &mut v_inv, j, t, f);
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        m[t][j] += m[i][j];
                    }
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for j in t..cols {
                m[t][j] = -m[t][j];
            }
        }
        diagonal.push(m[t][t]);
    }
    Smith { diagonal, v, v_inv }
}

/// Row-style Hermite normal form: returns a basis (upper triangular, positive
/// pivots) of the row lattice spanned by `rows`. Zero rows are dropped.
pub fn hermite_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut pivot_row = 0;
    for c in 0..cols {
        loop {
            let nonzero: Vec<usize> = (pivot_row..m.len()).filter(|&r| m[r][c] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&r) = nonzero.first() {
                    m.swap(pivot_row, r);
                }
                break;
            }
            let best = *nonzero.iter().min_by_key(|&&r| m[r][c].abs()).unwrap();
            m.swap(pivot_row, best);
            for r in pivot_row + 1..m.len() {
                let f = Integer::div_floor(&m[r][c], &m[pivot_row][c]);
                if f != 0 {
                    for j in 0..cols {
                        m[r][j] -= f * m[pivot_row][j];
                    }
                }
            }
        }
        if pivot_row < m.len() && m[pivot_row][c] != 0 {
            if m[pivot_row][c] < 0 {
                for x in m[pivot_row].iter_mut() {
                    *x = -*x;
                }
            }
            let p = m[pivot_row][c];
            for r in 0..pivot_row {
                let f = Integer::div_floor(&m[r][c], &p);
                if f != 0 {
                    for j in 0..cols {
                        m[r][j] -= f * m[pivot_row][j];
                    }
                }
            }
            pivot_row += 1;
        }
    }
    m.truncate(pivot_row);
    m.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| i64::try_from(x).expect("Hermite basis entry fits in i64"))
                .collect()
        })
        .collect()
}
