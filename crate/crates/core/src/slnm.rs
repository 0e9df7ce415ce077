//! Type `A_{n-1}` specializations for `SL_n/μ_m`: the exponent-vector model
//! of dominant weights, the closed orbit-index formula, the constant `E`,
//! the prime set of `N(G)/E(G)`, and the 2-adic claim for weights whose
//! exponent sum is 2-adically at least as divisible as `n`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{self, factorial};
use crate::error::{Error, Result};
use crate::rootsys::Weight;

/// A dominant weight of `SL_n` as `t ↦ Π t_i^{e_i}` with
/// `e_1 ≥ … ≥ e_{n-1} ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentWeight {
    n: usize,
    exponents: Vec<u64>,
}

impl ExponentWeight {
    pub fn new(n: usize, exponents: Vec<u64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("n = {n} must be at least 2")));
        }
        if exponents.len() != n - 1 {
            return Err(Error::Precondition(format!(
                "expected {} exponents, got {}",
                n - 1,
                exponents.len()
            )));
        }
        if exponents.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "exponents {exponents:?} are not nonincreasing"
            )));
        }
        Ok(ExponentWeight { n, exponents })
    }

    /// From fundamental-weight coordinates of a dominant `A_{n-1}` weight.
    pub fn from_weight(w: &Weight) -> Result<Self> {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        let n = w.rank() + 1;
        let mut e = vec![0u64; n - 1];
        let mut acc = 0u64;
        for i in (0..n - 1).rev() {
            acc += w.0[i] as u64;
            e[i] = acc;
        }
        Self::new(n, e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `c_i = e_i - e_{i+1}` with `e_n = 0`.
    pub fn to_weight(&self) -> Weight {
        let e = &self.exponents;
        Weight(
            (0..self.n - 1)
                .map(|i| (e[i] - e.get(i + 1).copied().unwrap_or(0)) as i64)
                .collect(),
        )
    }

    /// Distinct values `a_1 > … > a_k = 0` with their repetition counts
    /// `r_i`, counting the implicit exponent `e_n = 0`.
    pub fn partition(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &e in self.exponents.iter().chain(std::iter::once(&0)) {
            match out.last_mut() {
                Some((a, r)) if *a == e => *r += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }

    pub fn exponent_sum(&self) -> u64 {
        self.exponents.iter().sum()
    }
}

/// `(n-2)!/(r_1!⋯r_k!) · [n Σ r_i a_i² - (Σ r_i a_i)²]`.
pub fn orbit_index_type_a(w: &ExponentWeight) -> Result<u128> {
    let n = w.n as u64;
    let parts = w.partition();
    let s1: BigInt = parts.iter().map(|&(a, r)| BigInt::from(r) * a).sum();
    let s2: BigInt = parts
        .iter()
        .map(|&(a, r)| BigInt::from(r) * a * a)
        .sum();
    let bracket = BigInt::from(n) * s2 - &s1 * &s1;
    let denom: BigInt = parts.iter().map(|&(_, r)| factorial(r)).product();
    let (value, rem) = (factorial(n - 2) * bracket).div_rem(&denom);
    assert!(rem.is_zero(), "orbit index must be an integer");
    value.to_u128().ok_or(Error::Overflow("type A orbit index"))
}

fn check_divides(m: u64, n: u64) -> Result<()> {
    if m == 0 || n % m != 0 {
        Err(Error::NotDivisor { m, n })
    } else {
        Ok(())
    }
}

/// `Σ e_i mod m`; zero iff the weight is trivial on `μ_m`.
pub fn center_character(w: &ExponentWeight, m: u64) -> Result<u64> {
    check_divides(m, w.n as u64)?;
    Ok(w.exponent_sum() % m)
}

/// `E(SL_n/μ_m) = m / gcd(m, n/m)`.
pub fn e_type_a(n: u64, m: u64) -> Result<u64> {
    check_divides(m, n)?;
    Ok(m / m.gcd(&(n / m)))
}

/// Primes dividing `N(G)/E(G)` for `G = SL_n/μ_m`: those of `gcd(m, n/m)`
/// for odd `m`, of `2·gcd(m, n/m)` for even `m`.
pub fn ratio_prime_set_type_a(n: u64, m: u64) -> Result<BTreeSet<u64>> {
    check_divides(m, n)?;
    let g = m.gcd(&(n / m));
    let g = if m % 2 == 0 { 2 * g } else { g };
    Ok(arith::prime_support(u128::from(g)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct P2Verdict {
    pub orbit_index: u128,
    /// `None` encodes the valuation of zero.
    pub v2_index: Option<u32>,
    pub v2_n: u32,
    pub holds: bool,
}

/// Checks `v₂(N(Wλ)) > v₂(n)` for a weight with
/// `v₂(Σ r_i a_i) ≥ v₂(n) > 0`.
pub fn check_p2_claim(w: &ExponentWeight) -> Result<P2Verdict> {
    let v2_n = arith::v2(w.n as u128).expect("n is positive");
    let v2_sum = arith::v2(u128::from(w.exponent_sum()));
    let hypothesis = v2_n > 0 && v2_sum.map_or(true, |v| v >= v2_n);
    if !hypothesis {
        return Err(Error::NotApplicable(format!(
            "need v2(Σ e_i) >= v2(n) > 0 for n = {}, e = {:?}",
            w.n, w.exponents
        )));
    }
    let orbit_index = orbit_index_type_a(w)?;
    let v2_index = arith::v2(orbit_index);
    Ok(P2Verdict {
        orbit_index,
        v2_index,
        v2_n,
        holds: v2_index.map_or(true, |v| v > v2_n),
    })
}

/// All exponent vectors `e_1 ≥ … ≥ e_{n-1}` with entries at most `max`.
pub fn exponent_weights(n: usize, max: u64) -> Vec<ExponentWeight> {
    fn rec(prefix: &mut Vec<u64>, len: usize, cap: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for e in (0..=cap).rev() {
            prefix.push(e);
            rec(prefix, len, e, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), n - 1, max, &mut raw);
    raw.into_iter()
        .map(|e| ExponentWeight { n, exponents: e })
        .collect()
}
