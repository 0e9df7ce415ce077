//! Explicit integral models of `sl_n` for checking trace forms entry by
//! entry, the quadratic form `s_ρ`, and the finite trace sums over baby
//! Verma modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{self, invert, q, QMatrix};
use crate::dynkin;
use crate::error::{Error, Result};
use crate::lattice::{compute_e, coroot_gram, GroupSpec, NamedForm};
use crate::rootsys::{build_root_system, RootSystem, TypeLetter, Weight};

pub type IntMatrix = Vec<Vec<i64>>;

/// A Chevalley basis element of `sl_n`: `h_i = E_ii - E_{i+1,i+1}` or
/// `x_{ij} = E_ij` (the root vector of `e_i - e_j`). Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BasisElement {
    H(usize),
    X(usize, usize),
}

impl BasisElement {
    pub fn label(&self) -> String {
        match *self {
            BasisElement::H(i) => format!("h{}", i + 1),
            BasisElement::X(i, j) => format!("x{}{}", i + 1, j + 1),
        }
    }
}

/// Chevalley basis of `sl_n`: the `h_i`, then positive, then negative root
/// vectors.
pub fn chevalley_basis(n: usize) -> Vec<BasisElement> {
    let mut out: Vec<BasisElement> = (0..n - 1).map(BasisElement::H).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(BasisElement::X(i, j));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(BasisElement::X(j, i));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixRep {
    /// `n` of `sl_n`.
    pub n: usize,
    pub dimension: usize,
    pub highest_weight: Weight,
    pub basis: Vec<BasisElement>,
    pub basis_labels: Vec<String>,
    pub images: Vec<IntMatrix>,
}

fn check_n(n: usize) -> Result<()> {
    if (2..=5).contains(&n) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("sl_n models need 2 <= n <= 5, got {n}")))
    }
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let d = a.len();
    let mut out = vec![vec![0i64; d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..d {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn bracket(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

fn trace(a: &IntMatrix) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

fn trace_of_product(a: &IntMatrix, b: &IntMatrix) -> i64 {
    let d = a.len();
    (0..d)
        .map(|i| (0..d).map(|k| a[i][k] * b[k][i]).sum::<i64>())
        .sum()
}

/// The natural representation of `sl_n` on `F^n`.
pub fn chevalley_sl(n: usize) -> Result<MatrixRep> {
    check_n(n)?;
    let basis = chevalley_basis(n);
    let images = basis
        .iter()
        .map(|b| {
            let mut m = vec![vec![0i64; n]; n];
            match *b {
                BasisElement::H(i) => {
                    m[i][i] = 1;
                    m[i + 1][i + 1] = -1;
                }
                BasisElement::X(i, j) => m[i][j] = 1,
            }
            m
        })
        .collect();
    let mut hw = Weight::zero(n - 1);
    hw.0[0] = 1;
    Ok(MatrixRep {
        n,
        dimension: n,
        highest_weight: hw,
        basis_labels: basis.iter().map(BasisElement::label).collect(),
        basis,
        images,
    })
}

/// Solves `target = Σ c_k images[k]` exactly, assuming the images are
/// linearly independent.
struct CoordinateSolver {
    rows: Vec<(usize, usize)>,
    inverse: QMatrix,
    images: Vec<IntMatrix>,
}

impl CoordinateSolver {
    fn new(images: &[IntMatrix]) -> Self {
        let d = images[0].len();
        let k = images.len();
        // greedily pick k matrix positions with independent coefficient rows
        let mut rows = Vec::new();
        let mut echelon: Vec<Vec<BigRational>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        'positions: for r in 0..d {
            for c in 0..d {
                let mut v: Vec<BigRational> = images.iter().map(|m| q(m[r][c])).collect();
                for (e, &p) in echelon.iter().zip(&pivots) {
                    if !v[p].is_zero() {
                        let f = v[p].clone() / &e[p];
                        for (x, y) in v.iter_mut().zip(e) {
                            *x -= &f * y;
                        }
                    }
                }
                if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                    echelon.push(v);
                    pivots.push(p);
                    rows.push((r, c));
                    if rows.len() == k {
                        break 'positions;
                    }
                }
            }
        }
        assert_eq!(rows.len(), k, "representation is not faithful");
        let square: QMatrix = rows
            .iter()
            .map(|&(r, c)| images.iter().map(|m| q(m[r][c])).collect())
            .collect();
        let inverse = invert(&square).expect("selected rows are independent");
        CoordinateSolver {
            rows,
            inverse,
            images: images.to_vec(),
        }
    }

    fn solve(&self, target: &IntMatrix) -> Vec<i64> {
        let rhs: Vec<BigRational> = self.rows.iter().map(|&(r, c)| q(target[r][c])).collect();
        let coords: Vec<i64> = self
            .inverse
            .iter()
            .map(|row| {
                let x: BigRational = row.iter().zip(&rhs).map(|(a, b)| a * b).sum();
                assert!(x.is_integer(), "structure constants are integral");
                x.to_integer().to_i64().expect("small structure constant")
            })
            .collect();
        let d = target.len();
        for r in 0..d {
            for c in 0..d {
                let v: i64 = coords
                    .iter()
                    .zip(&self.images)
                    .map(|(x, m)| x * m[r][c])
                    .sum();
                assert_eq!(v, target[r][c], "target is not in the span of the basis");
            }
        }
        coords
    }
}

/// The adjoint representation, read off from brackets computed in `rep`.
pub fn adjoint_of(rep: &MatrixRep) -> Result<MatrixRep> {
    let solver = CoordinateSolver::new(&rep.images);
    let k = rep.images.len();
    let images = rep
        .images
        .iter()
        .map(|a| {
            let cols: Vec<Vec<i64>> = rep
                .images
                .iter()
                .map(|b| solver.solve(&bracket(a, b)))
                .collect();
            (0..k).map(|r| (0..k).map(|c| cols[c][r]).collect()).collect()
        })
        .collect();
    let l = rep.n - 1;
    let mut hw = Weight::zero(l);
    hw.0[0] += 1;
    hw.0[l - 1] += 1;
    Ok(MatrixRep {
        n: rep.n,
        dimension: k,
        highest_weight: hw,
        basis: rep.basis.clone(),
        basis_labels: rep.basis_labels.clone(),
        images,
    })
}

impl MatrixRep {
    /// Traceless images and `[x_α, x_{-α}] = h_α` for simple `α`.
    pub fn check_invariants(&self) -> Result<()> {
        let find = |b: BasisElement| self.basis.iter().position(|&x| x == b).expect("basis element");
        for (label, m) in self.basis_labels.iter().zip(&self.images) {
            if trace(m) != 0 {
                return Err(Error::Precondition(format!("image of {label} has nonzero trace")));
            }
        }
        for i in 0..self.n - 1 {
            let e = &self.images[find(BasisElement::X(i, i + 1))];
            let f = &self.images[find(BasisElement::X(i + 1, i))];
            if &bracket(e, f) != &self.images[find(BasisElement::H(i))] {
                return Err(Error::Precondition(format!("[x, x-] != h for simple root {}", i + 1)));
            }
        }
        Ok(())
    }

    /// The image of `Σ coeffs_k b_k`.
    pub fn element(&self, coeffs: &[i64]) -> IntMatrix {
        let d = self.dimension;
        let mut m = vec![vec![0i64; d]; d];
        for (c, img) in coeffs.iter().zip(&self.images) {
            if *c == 0 {
                continue;
            }
            for r in 0..d {
                for s in 0..d {
                    m[r][s] += c * img[r][s];
                }
            }
        }
        m
    }
}

/// `trace(ρ(b_i) ρ(b_j))` on the Chevalley basis; reduced into `[0, p)`
/// when `modulus = p > 0`.
pub fn trace_gram(rep: &MatrixRep, modulus: u64) -> IntMatrix {
    rep.images
        .iter()
        .map(|a| {
            rep.images
                .iter()
                .map(|b| {
                    let t = trace_of_product(a, b);
                    if modulus == 0 {
                        t
                    } else {
                        t.rem_euclid(modulus as i64)
                    }
                })
                .collect()
        })
        .collect()
}

/// `b̃` on the Chevalley basis of `sl_n`, from the root data of `A_{n-1}`:
/// `b̃(h_i, h_j) = (α_i∨, α_j∨)`, `b̃(x_α, x_{-α}) = b̃(α∨, α∨)/2`, all other
/// pairings zero.
pub fn b_tilde_gram(rs: &RootSystem, basis: &[BasisElement]) -> QMatrix {
    let l = rs.rank();
    let g = coroot_gram(rs);
    let root_of = |i: usize, j: usize| {
        let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let coords: Vec<i64> = (0..l).map(|k| if lo <= k && k < hi { sign } else { 0 }).collect();
        let idx = rs.root_index(&coords).expect("e_i - e_j is a root");
        &rs.roots[idx]
    };
    let coroot_norm = |coords: &[i64]| -> BigRational {
        let mut acc = BigRational::zero();
        for a in 0..l {
            for b in 0..l {
                acc += &g[a][b] * q(coords[a] * coords[b]);
            }
        }
        acc
    };
    basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| match (*x, *y) {
                    (BasisElement::H(i), BasisElement::H(j)) => g[i][j].clone(),
                    (BasisElement::X(i, j), BasisElement::X(k, m)) if i == m && j == k => {
                        let r = root_of(i, j);
                        coroot_norm(&rs.coroot_coords(r)) / q(2)
                    }
                    _ => BigRational::zero(),
                })
                .collect()
        })
        .collect()
}

/// Rank over `Q` (`p = 0`) or `F_p`.
pub fn rank_mod(m: &IntMatrix, p: u64) -> usize {
    if p == 0 {
        let qm: QMatrix = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        return rank_q(qm);
    }
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_pow(a[rank][c], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_q(mut a: QMatrix) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..a.len() {
            if !a[r][c].is_zero() {
                let f = a[r][c].clone() / &a[rank][c];
                let pivot_row = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn is_degenerate(rep: &MatrixRep, p: u64) -> bool {
    rank_mod(&trace_gram(rep, p), p) < rep.images.len()
}

/// `s_ρ(x) = -trace(∧² ρ(x)) = (trace(M²) - trace(M)²)/2`, exact.
pub fn s_rho(rep: &MatrixRep, coeffs: &[i64]) -> BigInt {
    let m = rep.element(coeffs);
    let t = BigInt::from(trace(&m));
    let t2 = BigInt::from(trace_of_product(&m, &m));
    let twice = t2 - &t * &t;
    assert!((&twice % 2u32).is_zero());
    twice / 2
}

/// `s_ρ(x)` reduced into `[0, p)`; the halving happens before reduction.
pub fn s_rho_mod(rep: &MatrixRep, coeffs: &[i64], p: u64) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let s = s_rho(rep, coeffs);
    let r = ((s % p) + p) % p;
    Ok(r.to_u64().expect("residue fits"))
}

/// `Σ_{i=0}^{p-1} (a - 2i)² mod p`.
pub fn baby_verma_trace(p: u64, a: u64) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p128 = u128::from(p);
    let a = u128::from(a) % p128;
    let sum = (0..p128)
        .map(|i| {
            let x = (a + 2 * (p128 - i)) % p128;
            x * x % p128
        })
        .sum::<u128>()
        % p128;
    Ok(sum as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// For the natural and adjoint models of `sl_n`: the trace Gram matrix is
/// `N(ρ)/E(G)·b̃` entrywise, and it vanishes mod `p` exactly when
/// `p | N(ρ)/E(G)`.
pub fn check_trace_identity(rep: &MatrixRep, primes: &[u64]) -> Result<CheckOutcome> {
    let n = rep.n;
    let rs = build_root_system(TypeLetter::A, n - 1)?;
    let spec = GroupSpec::named(NamedForm::SlMod { n, m: 1 })?;
    let n_rho = dynkin::irrep_index(&rs, &rep.highest_weight)?;
    let e = compute_e(&spec);
    let scale = q(i64::try_from(n_rho / e).map_err(|_| Error::Overflow("index"))?);
    let gram = trace_gram(rep, 0);
    let bt = b_tilde_gram(&rs, &rep.basis);
    let mut failures = Vec::new();
    for (i, (row, brow)) in gram.iter().zip(&bt).enumerate() {
        for (j, (x, b)) in row.iter().zip(brow).enumerate() {
            if q(*x) != &scale * b {
                failures.push(format!("entry ({}, {})", rep.basis_labels[i], rep.basis_labels[j]));
            }
        }
    }
    for &p in primes {
        let zero = trace_gram(rep, p).iter().flatten().all(|&x| x == 0);
        let predicted = (n_rho / e) % u128::from(p) == 0;
        if zero != predicted {
            failures.push(format!("mod {p}: zero = {zero}, predicted {predicted}"));
        }
    }
    Ok(CheckOutcome {
        name: format!("sl{n} dim {} trace form", rep.dimension),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("Tr = {}·b̃, N = {n_rho}, E = {e}", n_rho / e)
        } else {
            failures.join("; ")
        },
    })
}

pub const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Natural and adjoint models for `2 ≤ n ≤ 5`.
pub fn trace_suite() -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 2..=5 {
        let nat = chevalley_sl(n)?;
        let ad = adjoint_of(&nat)?;
        for rep in [&nat, &ad] {
            rep.check_invariants()?;
            out.push(check_trace_identity(rep, &SMALL_PRIMES)?);
        }
    }
    Ok(out)
}

/// Baby Verma sums: 0 for `5 ≤ p ≤ 97`, 2 for `p = 3`, over all residues.
pub fn appendix_suite() -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for p in (3..=97).filter(|&p| arith::is_prime(p)) {
        let expected = if p == 3 { 2 } else { 0 };
        let bad: Vec<u64> = (0..p)
            .filter(|&a| baby_verma_trace(p, a).map_or(true, |v| v != expected))
            .collect();
        out.push(CheckOutcome {
            name: format!("baby Verma trace p = {p}"),
            passed: bad.is_empty(),
            detail: if bad.is_empty() {
                format!("{expected} for all residues")
            } else {
                format!("residues {bad:?} differ from {expected}")
            },
        });
    }
    Ok(out)
}
