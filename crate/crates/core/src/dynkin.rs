//! Orbit indices `N(Wλ)`, irreducible characters, Dynkin indices `N(ρ)`,
//! and the group invariant `N(G)`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::lattice::{compute_e, GroupSpec};
use crate::rootsys::{default_orbit_cap, RootSystem, Weight};

/// Default cap on the dimension of representations whose characters are
/// computed explicitly.
pub const DEFAULT_DIMENSION_CAP: u64 = 100_000;

/// Default box bound for the `N(G)` gcd search.
pub const DEFAULT_SEARCH_BOUND: u32 = 4;

/// `½ Σ_{x ∈ Wλ} <x, α∨>²` over the enumerated orbit, for the long root
/// `rs.roots[root]`.
pub fn orbit_index_enum_with_root(rs: &RootSystem, w: &Weight, root: usize) -> Result<u128> {
    let r = &rs.roots[root];
    if !r.long {
        return Err(Error::Precondition(format!(
            "root {:?} is not long",
            r.simple_coords
        )));
    }
    let coroot = rs.coroot_coords(r);
    let orbit = rs.orbit_enumerate_capped(w, default_orbit_cap())?;
    let twice: i128 = orbit
        .iter()
        .map(|x| {
            let p: i128 = x.0.iter().zip(&coroot).map(|(&c, &k)| i128::from(c * k)).sum();
            p * p
        })
        .sum();
    assert!(twice % 2 == 0, "orbit index must be an integer");
    Ok((twice / 2) as u128)
}

/// Orbit index by direct enumeration, using the highest root.
pub fn orbit_index_enum(rs: &RootSystem, w: &Weight) -> Result<u128> {
    rs.check_dominant(w)?;
    let highest = rs
        .root_index(&rs.root_marks)
        .expect("highest root is a root");
    orbit_index_enum_with_root(rs, w, highest)
}

/// `|Wλ|·(λ,λ)/ℓ` with long roots of squared length 2.
pub fn orbit_index_closed(rs: &RootSystem, w: &Weight) -> Result<u128> {
    let size = rs.orbit_size(w)?;
    let scaled = rs.weight_inner_scaled(&w.0, &w.0);
    closed_from_parts(rs, size, scaled)
}

fn closed_from_parts(rs: &RootSystem, orbit_size: u128, scaled_norm: i128) -> Result<u128> {
    let denom = rs.weight_form_denominator() as u128 * rs.rank() as u128;
    let num = orbit_size
        .checked_mul(scaled_norm as u128)
        .ok_or(Error::Overflow("orbit index"))?;
    assert!(num % denom == 0, "orbit index must be an integer");
    Ok(num / denom)
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α∨)/(ρ, α∨)`.
pub fn irrep_dimension(rs: &RootSystem, w: &Weight) -> Result<BigUint> {
    rs.check_dominant(w)?;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for r in rs.positive_roots() {
        let k = rs.coroot_coords(r);
        let a: i64 = k.iter().zip(&w.0).map(|(ki, ci)| ki * (ci + 1)).sum();
        let b: i64 = k.iter().sum();
        num *= a;
        den *= b;
    }
    let (d, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "Weyl dimension must be an integer");
    Ok(d.to_biguint().expect("dimension is positive"))
}

/// Dominant weights of the irreducible module `V(λ)` with their depth
/// (height of `λ - μ` in the simple roots).
fn dominant_weights_with_depth(rs: &RootSystem, w: &Weight) -> Vec<(Weight, i64)> {
    let pos: Vec<(Weight, i64)> = rs
        .positive_roots()
        .map(|r| (rs.root_as_weight(&r.simple_coords), r.height()))
        .collect();
    let mut depth: HashMap<Weight, i64> = HashMap::new();
    depth.insert(w.clone(), 0);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu];
        for (alpha, h) in &pos {
            let nu = Weight(mu.0.iter().zip(&alpha.0).map(|(a, b)| a - b).collect());
            if nu.is_dominant() && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + h);
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<(Weight, i64)> = depth.into_iter().collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Multiplicities of the dominant weights of the irreducible Weyl character
/// with highest weight `λ`, by Freudenthal's recursion.
pub fn weight_multiplicities(rs: &RootSystem, w: &Weight) -> Result<BTreeMap<Weight, u64>> {
    weight_multiplicities_capped(rs, w, DEFAULT_DIMENSION_CAP)
}

pub fn weight_multiplicities_capped(
    rs: &RootSystem,
    w: &Weight,
    cap: u64,
) -> Result<BTreeMap<Weight, u64>> {
    let dim = irrep_dimension(rs, w)?;
    if dim > BigUint::from(cap) {
        return Err(Error::RepresentationTooLarge {
            dim: dim.to_string(),
            cap,
        });
    }
    let pos: Vec<(Vec<i64>, i64)> = rs
        .positive_roots()
        .map(|r| (rs.root_as_weight(&r.simple_coords).0, r.height()))
        .collect();
    let plus_rho = |x: &[i64]| -> Vec<i64> { x.iter().map(|c| c + 1).collect() };
    let norm = |x: &[i64]| rs.weight_inner_scaled(x, x);
    let top = norm(&plus_rho(&w.0));

    let mut mult: HashMap<Weight, u64> = HashMap::new();
    for (mu, depth) in dominant_weights_with_depth(rs, w) {
        if depth == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let lhs = top - norm(&plus_rho(&mu.0));
        assert!(lhs > 0, "Freudenthal denominator must be positive");
        let mut rhs: i128 = 0;
        for (alpha, h) in &pos {
            let mut k = 1;
            loop {
                if depth - k * h < 0 {
                    break;
                }
                let nu: Vec<i64> = mu.0.iter().zip(alpha).map(|(a, b)| a + k * b).collect();
                let rep = rs.dominant_representative(&Weight(nu.clone()));
                if let Some(&m) = mult.get(&rep) {
                    rhs += rs.weight_inner_scaled(&nu, alpha) * i128::from(m);
                }
                k += 1;
            }
        }
        let num = 2 * rhs;
        assert!(num % lhs == 0, "Freudenthal multiplicity must be an integer");
        let m = num / lhs;
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    Ok(mult.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepData {
    pub highest_weight: Weight,
    pub dimension: u64,
    pub dominant_weight_multiplicities: BTreeMap<Weight, u64>,
    pub dynkin_index: u128,
}

/// Dimension, dominant multiplicities, and Dynkin index of `V(λ)`.
pub fn irrep_data(rs: &RootSystem, w: &Weight) -> Result<IrrepData> {
    let mults = weight_multiplicities(rs, w)?;
    let dimension = irrep_dimension(rs, w)?
        .to_u64()
        .expect("capped dimension fits in u64");
    let dynkin_index = index_of_character(rs, &mults)?;
    Ok(IrrepData {
        highest_weight: w.clone(),
        dimension,
        dominant_weight_multiplicities: mults,
        dynkin_index,
    })
}

/// `Σ multiplicity · N(Wμ)` over a dominant character.
pub fn index_of_character(rs: &RootSystem, mults: &BTreeMap<Weight, u64>) -> Result<u128> {
    mults.iter().try_fold(0u128, |acc, (mu, &m)| {
        Ok(acc + u128::from(m) * orbit_index_closed(rs, mu)?)
    })
}

/// Dynkin index `N(ρ_λ)` of the irreducible Weyl module with highest weight `λ`.
pub fn irrep_index(rs: &RootSystem, w: &Weight) -> Result<u128> {
    let mults = weight_multiplicities(rs, w)?;
    index_of_character(rs, &mults)
}

/// Derivation formula `N(ρ₁ ⊗ ρ₂) = dim ρ₁ · N(ρ₂) + dim ρ₂ · N(ρ₁)`.
pub fn tensor_index(dim1: u128, index1: u128, dim2: u128, index2: u128) -> u128 {
    dim1 * index2 + dim2 * index1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupIndex {
    /// gcd over the box of side `bound`.
    pub value: u128,
    /// gcd over the box of side `bound - 1`.
    pub previous: u128,
    pub bound: u32,
    pub stabilized: bool,
}

/// Visits every nonzero dominant `λ ∈ T*` with coordinates at most `bound`,
/// passing its coordinates, `N(Wλ)`, and whether some coordinate equals
/// `bound` to `fold`. The sweep ends early once `fold` returns `false`.
/// Work is split across threads by the trailing coordinates and merged
/// with `reduce`.
pub fn sweep_orbit_indices<A, I, F, R>(
    spec: &GroupSpec,
    bound: u32,
    identity: I,
    fold: F,
    reduce: R,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[i64], OrbitValue, bool) -> bool + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    let rs = spec.root_system();
    let l = rs.rank();
    let side = i64::from(bound) + 1;
    let top = side - 1;
    let gram = rs.weight_gram_scaled();
    let max_gram = gram.iter().flatten().map(|g| g.abs()).max().unwrap_or(0);
    let reach = (l as i64).checked_mul(side).expect("sweep bound too large");
    assert!(
        reach
            .checked_mul(reach)
            .and_then(|r| r.checked_mul(4 * max_gram.max(1)))
            .is_some(),
        "sweep bound too large"
    );

    // classes of P/Q flattened to one index; membership as a table
    let fg = spec.fundamental_group();
    let factors = &fg.factors;
    let strides: Vec<usize> = factors
        .iter()
        .scan(1usize, |acc, &d| {
            let s = *acc;
            *acc *= d as usize;
            Some(s)
        })
        .collect();
    let n_classes: usize = factors.iter().map(|&d| d as usize).product();
    let flat = |class: &[i64]| -> usize {
        class.iter().zip(&strides).map(|(&c, &s)| c as usize * s).sum()
    };
    let member: Vec<bool> = {
        let mut t = vec![false; n_classes];
        for class in spec.subgroup() {
            t[flat(class)] = true;
        }
        t
    };
    let unflat = |mut x: usize| -> Vec<i64> {
        factors
            .iter()
            .map(|&d| {
                let c = (x % d as usize) as i64;
                x /= d as usize;
                c
            })
            .collect()
    };
    let add: Vec<usize> = (0..n_classes * n_classes)
        .map(|ab| {
            let (a, b) = (unflat(ab / n_classes), unflat(ab % n_classes));
            let sum: Vec<i64> = a
                .iter()
                .zip(&b)
                .zip(factors)
                .map(|((x, y), d)| (x + y) % d)
                .collect();
            flat(&sum)
        })
        .collect();
    let fund_class: Vec<Vec<i64>> = (0..l)
        .map(|i| fg.class_of(&Weight::fundamental(l, i).0))
        .collect();
    let fund_flat: Vec<usize> = fund_class.iter().map(|c| flat(c)).collect();
    // flat class of -b·ω_i
    let neg_multiple: Vec<Vec<usize>> = fund_class
        .iter()
        .map(|c| {
            (0..side)
                .map(|b| {
                    let v: Vec<i64> = c
                        .iter()
                        .zip(factors)
                        .map(|(x, d)| (-b * x).rem_euclid(*d))
                        .collect();
                    flat(&v)
                })
                .collect()
        })
        .collect();

    let denom = rs.weight_form_denominator() as u128 * l as u128;
    let orbit_by_mask: Option<Vec<u128>> = (l <= 16).then(|| {
        (0..1u64 << l)
            .into_par_iter()
            .map(|m| rs.weyl_order / rs.stabilizer_order(m))
            .collect()
    });
    let orbit_size = |mask: u64| match &orbit_by_mask {
        Some(t) => t[mask as usize],
        None => rs.weyl_order / rs.stabilizer_order(mask),
    };
    let full = (1u64 << l) - 1;

    // trailing coordinates fixed per task
    let mut split = 0;
    while split < l && side.pow(split as u32) < 256 {
        split += 1;
    }
    let inner = l - split;
    let tasks = side.pow(split as u32);
    let stop = AtomicBool::new(false);

    (0..tasks)
        .into_par_iter()
        .fold(&identity, |mut acc, t| {
            if stop.load(Ordering::Relaxed) {
                return acc;
            }
            let mut c = vec![0i64; l];
            let mut rest = t;
            for slot in c.iter_mut().skip(inner) {
                *slot = rest % side;
                rest /= side;
            }
            // state: G·c, (c, G·c), class, zero mask, count of top coordinates
            let mut gc: Vec<i64> = (0..l)
                .map(|i| (0..l).map(|j| gram[i][j] * c[j]).sum())
                .collect();
            let mut norm: i64 = (0..l).map(|i| c[i] * gc[i]).sum();
            let mut class = 0usize;
            for (i, &ci) in c.iter().enumerate() {
                for _ in 0..ci {
                    class = add[class * n_classes + fund_flat[i]];
                }
            }
            let mut mask: u64 = (0..l).filter(|&i| c[i] == 0).fold(0, |m, i| m | (1 << i));
            let mut at_top = c.iter().filter(|&&x| x == top).count();
            let g00 = gram[0][0];
            loop {
                // coordinate 0 in closed form over the current outer position
                let (base_norm, base_gc0) = (norm, gc[0]);
                let outer_mask = mask & !1;
                let mut cls = class;
                for c0 in 0..if inner > 0 { side } else { 1 } {
                    let m = match (inner, c0) {
                        (0, _) => mask,
                        (_, 0) => outer_mask | 1,
                        _ => outer_mask,
                    };
                    if m != full && member[cls] {
                        let nrm = base_norm + c0 * (2 * base_gc0 + c0 * g00);
                        let n = OrbitValue {
                            num: orbit_size(m) * nrm as u128,
                            den: denom,
                        };
                        let on_top = at_top > 0 || (inner > 0 && c0 == top);
                        if inner > 0 {
                            c[0] = c0;
                        }
                        if !fold(&mut acc, &c, n, on_top) {
                            stop.store(true, Ordering::Relaxed);
                            return acc;
                        }
                    }
                    if inner > 0 {
                        cls = add[cls * n_classes + fund_flat[0]];
                    }
                }
                if inner > 0 {
                    c[0] = 0;
                }
                // odometer step over inner coordinates 1..inner
                let mut i = 1;
                loop {
                    if i >= inner {
                        return acc;
                    }
                    if c[i] < top {
                        norm += 2 * gc[i] + gram[i][i];
                        for (g, row) in gc.iter_mut().zip(gram) {
                            *g += row[i];
                        }
                        class = add[class * n_classes + fund_flat[i]];
                        c[i] += 1;
                        if c[i] == top {
                            at_top += 1;
                        }
                        mask &= !(1 << i);
                        break;
                    }
                    let b = c[i];
                    norm += -2 * b * gc[i] + b * b * gram[i][i];
                    for (g, row) in gc.iter_mut().zip(gram) {
                        *g -= b * row[i];
                    }
                    class = add[class * n_classes + neg_multiple[i][b as usize]];
                    c[i] = 0;
                    at_top -= 1;
                    mask |= 1 << i;
                    i += 1;
                }
            }
        })
        .reduce(&identity, reduce)
}

/// `N(Wλ)` as `num / den`, left undivided until asked for.
#[derive(Debug, Clone, Copy)]
pub struct OrbitValue {
    pub num: u128,
    pub den: u128,
}

impl OrbitValue {
    pub fn get(self) -> u128 {
        debug_assert!(self.num % self.den == 0);
        if self.num <= u128::from(u64::MAX) {
            u128::from(self.num as u64 / self.den as u64)
        } else {
            self.num / self.den
        }
    }
}

/// Divisibility by a fixed modulus using the inverse of its odd part
/// modulo 2^64.
#[derive(Debug, Clone, Copy)]
struct DivTest {
    modulus: u128,
    shift: u32,
    inv: u64,
    limit: u64,
}

impl DivTest {
    fn new(modulus: u128) -> Self {
        let (shift, inv, limit) = match u64::try_from(modulus) {
            Ok(d) if d != 0 => {
                let shift = d.trailing_zeros();
                let odd = d >> shift;
                let mut inv = odd;
                for _ in 0..5 {
                    inv = inv.wrapping_mul(2u64.wrapping_sub(odd.wrapping_mul(inv)));
                }
                (shift, inv, u64::MAX / odd)
            }
            _ => (u32::MAX, 0, 0),
        };
        DivTest {
            modulus,
            shift,
            inv,
            limit,
        }
    }

    fn divides(&self, x: u128) -> bool {
        match u64::try_from(x) {
            Ok(0) => true,
            Ok(x) if self.shift != u32::MAX => {
                x.trailing_zeros() >= self.shift
                    && (x >> self.shift).wrapping_mul(self.inv) <= self.limit
            }
            _ => self.modulus != 0 && x % self.modulus == 0,
        }
    }
}

/// Running gcd of orbit values sharing one denominator.
#[derive(Debug, Clone, Copy)]
struct RunningGcd {
    value: u128,
    den: u128,
    test: Option<DivTest>,
}

impl RunningGcd {
    const EMPTY: RunningGcd = RunningGcd {
        value: 0,
        den: 0,
        test: None,
    };

    fn set(value: u128, den: u128) -> Self {
        RunningGcd {
            value,
            den,
            test: value.checked_mul(den).map(DivTest::new),
        }
    }

    fn merge(self, other: Self) -> Self {
        Self::set(arith::gcd(self.value, other.value), self.den.max(other.den))
    }

    #[inline]
    fn push(&mut self, v: OrbitValue) {
        if let Some(t) = &self.test {
            if t.divides(v.num) {
                return;
            }
        }
        *self = Self::set(arith::gcd(self.value, v.get()), v.den);
    }
}

/// `N(G) = gcd{ N(Wλ) : λ ∈ T* }` over the box `0 ≤ c_i ≤ bound`, with a
/// stabilization check against the box of side `bound - 1`.
pub fn group_index(spec: &GroupSpec, bound: u32) -> GroupIndex {
    // E(G) divides every N(Wλ): once both gcds reach it they are final
    let floor = compute_e(spec);
    let (g, gp) = sweep_orbit_indices(
        spec,
        bound,
        || (RunningGcd::EMPTY, RunningGcd::EMPTY),
        |(g, gp), _, n, on_top| {
            g.push(n);
            if !on_top {
                gp.push(n);
            }
            !(g.value == floor && gp.value == floor)
        },
        |(a, ap), (b, bp)| (a.merge(b), ap.merge(bp)),
    );
    let (value, previous) = (g.value, gp.value);
    GroupIndex {
        value,
        previous,
        bound,
        stabilized: value == previous && value != 0,
    }
}
