//! Simple root systems with exact coordinates and Weyl-group combinatorics.
//!
//! Ambient models follow the usual orthonormal-coordinate tables (Bourbaki
//! numbering of simple roots). The inner product is a rational multiple of
//! the standard dot product, scaled so that long roots have squared length 2.
//! Weights are stored in the fundamental-weight basis, so the pairing
//! `<λ, α_i∨>` is just the `i`-th coordinate.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, q, q_frac, QMatrix};
use crate::error::{Error, Result};

/// Default cap on enumerated orbit sizes.
pub const DEFAULT_ORBIT_CAP: u128 = 1_000_000;

/// Environment variable overriding [`DEFAULT_ORBIT_CAP`].
pub const ORBIT_CAP_ENV: &str = "TRACEFORM_ORBIT_CAP";

pub fn default_orbit_cap() -> u128 {
    std::env::var(ORBIT_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORBIT_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => TypeLetter::A,
            'B' => TypeLetter::B,
            'C' => TypeLetter::C,
            'D' => TypeLetter::D,
            'E' => TypeLetter::E,
            'F' => TypeLetter::F,
            'G' => TypeLetter::G,
            _ => return None,
        })
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl CartanType {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        let ok = match letter {
            TypeLetter::A => rank >= 1,
            TypeLetter::B | TypeLetter::C => rank >= 2,
            TypeLetter::D => rank >= 3,
            TypeLetter::E => (6..=8).contains(&rank),
            TypeLetter::F => rank == 4,
            TypeLetter::G => rank == 2,
        };
        if ok {
            Ok(CartanType { letter, rank })
        } else {
            Err(Error::InvalidType {
                letter: letter.as_char(),
                rank,
            })
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.letter, TypeLetter::A | TypeLetter::D | TypeLetter::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// A weight `Σ c_i ω_i` in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Bitmask of the coordinates equal to zero (the simple reflections
    /// fixing a dominant weight).
    pub fn zero_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `[1,0,2]`, `1,0,2`, or `1 0 2`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Err(Error::Precondition(format!("empty weight '{s}'")));
        }
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Precondition(format!("malformed weight coordinate '{t}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the basis of simple roots.
    pub simple_coords: Vec<i64>,
    pub ambient: Vec<BigRational>,
    pub long: bool,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.simple_coords.iter().all(|&m| m >= 0)
    }

    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// `cartan_matrix[i][j] = <α_j, α_i∨>`.
    pub cartan_matrix: Vec<Vec<i64>>,
    pub roots: Vec<Root>,
    pub long_roots: Vec<usize>,
    pub short_roots: Vec<usize>,
    /// Simple roots as rows in the ambient space.
    pub simple_ambient: QMatrix,
    /// Inner product is `form_scale` times the standard dot product.
    pub form_scale: BigRational,
    /// `(α_i, α_j)`.
    pub simple_gram: QMatrix,
    /// `(ω_i, ω_j)`.
    pub weight_gram: QMatrix,
    /// Fundamental weights as rows in simple-root coordinates.
    pub fundamental_in_simple: QMatrix,
    /// Half-sum of positive roots, in fundamental-weight coordinates (all ones).
    pub weyl_vector: Weight,
    /// Marks of the highest root in the simple-root basis.
    pub root_marks: Vec<i64>,
    /// Marks `m∨_δ` of the highest coroot in the simple-coroot basis.
    pub coroot_marks: Vec<i64>,
    pub weyl_order: u128,
    /// `weight_gram_scaled = weight_gram_denominator * weight_gram`, integral.
    weight_gram_scaled: Vec<Vec<i64>>,
    weight_gram_denominator: i64,
    root_index: HashMap<Vec<i64>, usize>,
}

fn unit(dim: usize, i: usize) -> Vec<BigRational> {
    (0..dim).map(|k| if k == i { q(1) } else { q(0) }).collect()
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<BigRational> {
    (0..dim)
        .map(|k| {
            if k == i {
                q(1)
            } else if k == j {
                q(-1)
            } else {
                q(0)
            }
        })
        .collect()
}

/// Ambient simple roots and the scale of the dot product.
fn ambient_model(ct: CartanType) -> (QMatrix, BigRational) {
    let l = ct.rank;
    match ct.letter {
        TypeLetter::A => ((0..l).map(|i| diff(l + 1, i, i + 1)).collect(), q(1)),
        TypeLetter::B => {
            let mut s: QMatrix = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            s.push(unit(l, l - 1));
            (s, q(1))
        }
        TypeLetter::C => {
            let mut s: QMatrix = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            let mut last = unit(l, l - 1);
            last[l - 1] = q(2);
            s.push(last);
            (s, q_frac(1, 2))
        }
        TypeLetter::D => {
            let mut s: QMatrix = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            let mut last = unit(l, l - 1);
            last[l - 2] = q(1);
            s.push(last);
            (s, q(1))
        }
        TypeLetter::E => {
            let h = q_frac(1, 2);
            let mh = q_frac(-1, 2);
            let mut a1 = vec![mh.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut a2 = vec![q(0); 8];
            a2[0] = q(1);
            a2[1] = q(1);
            let mut s = vec![a1, a2];
            for i in 0..6 {
                s.push(diff(8, i + 1, i));
            }
            s.truncate(l);
            (s, q(1))
        }
        TypeLetter::F => {
            let h = q_frac(1, 2);
            let mh = q_frac(-1, 2);
            (
                vec![
                    diff(4, 1, 2),
                    diff(4, 2, 3),
                    unit(4, 3),
                    vec![h, mh.clone(), mh.clone(), mh],
                ],
                q(1),
            )
        }
        TypeLetter::G => (
            vec![
                vec![q(1), q(-1), q(0)],
                vec![q(-2), q(1), q(1)],
            ],
            q_frac(1, 3),
        ),
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Order of the Weyl group of a connected Dynkin diagram given by a
/// principal submatrix of a Cartan matrix.
fn connected_weyl_order(cartan: &[Vec<i64>], nodes: &[usize]) -> u128 {
    let k = nodes.len() as u128;
    let fact = |n: u128| (1..=n).product::<u128>();
    let mut max_bond = 1;
    let mut degree = vec![0usize; nodes.len()];
    for (a, &i) in nodes.iter().enumerate() {
        for (b, &j) in nodes.iter().enumerate() {
            if a != b && cartan[i][j] != 0 {
                degree[a] += 1;
                max_bond = max_bond.max(cartan[i][j] * cartan[j][i]);
            }
        }
    }
    if max_bond == 3 {
        return 12;
    }
    if max_bond == 2 {
        if k == 4 {
            // F4 has its double bond between the two middle nodes.
            let middle_double = nodes.iter().enumerate().any(|(a, &i)| {
                nodes.iter().enumerate().any(|(b, &j)| {
                    a != b
                        && cartan[i][j] * cartan[j][i] == 2
                        && degree[a] == 2
                        && degree[b] == 2
                })
            });
            if middle_double {
                return 1152;
            }
        }
        return (1u128 << k) * fact(k);
    }
    let Some(branch) = degree.iter().position(|&d| d == 3) else {
        return fact(k + 1);
    };
    // arm lengths from the branch node
    let mut arms = Vec::new();
    for (b, &j) in nodes.iter().enumerate() {
        if b != branch && cartan[nodes[branch]][j] != 0 {
            let (mut prev, mut cur, mut len) = (branch, b, 1);
            loop {
                let next = (0..nodes.len()).find(|&c| {
                    c != prev && c != cur && cartan[nodes[cur]][nodes[c]] != 0
                });
                match next {
                    Some(c) => {
                        prev = cur;
                        cur = c;
                        len += 1;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
    }
    arms.sort_unstable();
    if arms[0] == 1 && arms[1] == 1 {
        return (1u128 << (k - 1)) * fact(k);
    }
    match k {
        6 => 51_840,
        7 => 2_903_040,
        8 => 696_729_600,
        _ => unreachable!("unexpected branched diagram of size {k}"),
    }
}

/// Order of the parabolic subgroup generated by the simple reflections in
/// `mask` (bit `i` set means `s_i` is included).
pub fn parabolic_order(cartan: &[Vec<i64>], mask: u64) -> u128 {
    let nodes: Vec<usize> = (0..cartan.len()).filter(|i| mask & (1 << i) != 0).collect();
    let mut seen = vec![false; cartan.len()];
    let mut order = 1u128;
    for &start in &nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in &nodes {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        order *= connected_weyl_order(cartan, &comp);
    }
    order
}

pub fn build_root_system(letter: TypeLetter, rank: usize) -> Result<RootSystem> {
    let ct = CartanType::new(letter, rank)?;
    let (simple_ambient, form_scale) = ambient_model(ct);
    let l = rank;
    let ip = |a: &[BigRational], b: &[BigRational]| &form_scale * dot(a, b);

    let simple_gram: QMatrix = (0..l)
        .map(|i| (0..l).map(|j| ip(&simple_ambient[i], &simple_ambient[j])).collect())
        .collect();
    let cartan_matrix: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let v = q(2) * &simple_gram[j][i] / &simple_gram[i][i];
                    assert!(v.is_integer(), "non-integral Cartan entry");
                    v.to_integer().to_i64().unwrap()
                })
                .collect()
        })
        .collect();

    // closure of the simple roots under simple reflections, in simple-root coordinates
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..l {
        let mut e = vec![0; l];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..l {
            let pairing: i64 = (0..l).map(|j| beta[j] * cartan_matrix[i][j]).sum();
            if pairing != 0 {
                let mut img = beta.clone();
                img[i] -= pairing;
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
    }
    let mut simple_coords: Vec<Vec<i64>> = seen.into_iter().collect();
    // positive roots first by height, then negatives
    simple_coords.sort_by_key(|m| {
        let h: i64 = m.iter().sum();
        (h < 0, h.abs(), m.iter().map(|x| -x).collect::<Vec<_>>())
    });

    let dim = simple_ambient[0].len();
    let long_len = (0..l)
        .map(|i| simple_gram[i][i].clone())
        .max()
        .expect("rank is positive");
    assert_eq!(long_len, q(2), "long roots must have squared length 2");

    let roots: Vec<Root> = simple_coords
        .into_iter()
        .map(|m| {
            let ambient: Vec<BigRational> = (0..dim)
                .map(|k| {
                    (0..l).fold(BigRational::zero(), |acc, i| {
                        acc + q(m[i]) * &simple_ambient[i][k]
                    })
                })
                .collect();
            let len = ip(&ambient, &ambient);
            Root {
                simple_coords: m,
                ambient,
                long: len == long_len,
            }
        })
        .collect();
    let long_roots = (0..roots.len()).filter(|&i| roots[i].long).collect();
    let short_roots = (0..roots.len()).filter(|&i| !roots[i].long).collect();

    // ω_i = Σ_k F_ik α_k with F = (Cᵀ)^{-1}
    let ct_q = arith::int_to_q(&arith::transpose(&cartan_matrix));
    let fundamental_in_simple = arith::invert(&ct_q).expect("Cartan matrix is invertible");
    let weight_gram = arith::mat_mul(
        &arith::mat_mul(&fundamental_in_simple, &simple_gram),
        &arith::transpose(&fundamental_in_simple),
    );
    let denom = arith::denominator_lcm(weight_gram.iter().flatten());
    let weight_gram_denominator = denom.to_i64().expect("small denominator");
    let weight_gram_scaled = weight_gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (x * q(weight_gram_denominator)).to_integer().to_i64().unwrap())
                .collect()
        })
        .collect();

    let highest = roots
        .iter()
        .filter(|r| r.is_positive())
        .max_by_key(|r| r.height())
        .expect("nonempty root system");
    let root_marks = highest.simple_coords.clone();
    let coroot_marks = (0..l)
        .map(|i| {
            // highest root is long, so its coroot equals itself
            let v = q(root_marks[i]) * &simple_gram[i][i] / q(2);
            assert!(v.is_integer());
            v.to_integer().to_i64().unwrap()
        })
        .collect();

    let weyl_order = parabolic_order(&cartan_matrix, (1u64 << l) - 1);
    let root_index = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.simple_coords.clone(), i))
        .collect();

    Ok(RootSystem {
        cartan_type: ct,
        cartan_matrix,
        roots,
        long_roots,
        short_roots,
        simple_ambient,
        form_scale,
        simple_gram,
        weight_gram,
        fundamental_in_simple,
        weyl_vector: Weight(vec![1; l]),
        root_marks,
        coroot_marks,
        weyl_order,
        weight_gram_scaled,
        weight_gram_denominator,
        root_index,
    })
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn root_index(&self, simple_coords: &[i64]) -> Option<usize> {
        self.root_index.get(simple_coords).copied()
    }

    /// Inner product on the ambient space.
    pub fn ambient_inner(&self, a: &[BigRational], b: &[BigRational]) -> BigRational {
        &self.form_scale * dot(a, b)
    }

    /// `(α_i, α_i)`.
    pub fn simple_length(&self, i: usize) -> &BigRational {
        &self.simple_gram[i][i]
    }

    /// Square-length ratio of long to short roots (1 when simply laced).
    pub fn length_ratio(&self) -> i64 {
        let min = (0..self.rank())
            .map(|i| self.simple_length(i).clone())
            .min()
            .unwrap();
        (q(2) / min).to_integer().to_i64().unwrap()
    }

    pub fn coxeter_number(&self) -> i64 {
        1 + self.root_marks.iter().sum::<i64>()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::WeightLength {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// A root (given in simple-root coordinates) expressed as a weight.
    pub fn root_as_weight(&self, simple_coords: &[i64]) -> Weight {
        let l = self.rank();
        Weight(
            (0..l)
                .map(|i| (0..l).map(|j| self.cartan_matrix[i][j] * simple_coords[j]).sum())
                .collect(),
        )
    }

    /// Coroot of a root, in simple-coroot coordinates.
    pub fn coroot_coords(&self, root: &Root) -> Vec<i64> {
        let len = self.ambient_inner(&root.ambient, &root.ambient);
        root.simple_coords
            .iter()
            .enumerate()
            .map(|(j, &m)| {
                let v = q(m) * self.simple_length(j) / &len;
                assert!(v.is_integer());
                v.to_integer().to_i64().unwrap()
            })
            .collect()
    }

    /// `s_i(λ) = λ - <λ, α_i∨> α_i`.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let c = w.0[i];
        let mut out = w.0.clone();
        if c != 0 {
            for (k, x) in out.iter_mut().enumerate() {
                *x -= c * self.cartan_matrix[k][i];
            }
        }
        Weight(out)
    }

    /// The unique dominant weight in the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            cur = self.reflect(&cur, i);
        }
        cur
    }

    /// `(λ, μ)` for weights in fundamental coordinates.
    pub fn weight_inner(&self, a: &Weight, b: &Weight) -> BigRational {
        let l = self.rank();
        let mut acc = BigRational::zero();
        for i in 0..l {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..l {
                if b.0[j] != 0 {
                    acc += q(a.0[i] * b.0[j]) * &self.weight_gram[i][j];
                }
            }
        }
        acc
    }

    /// Denominator `D` such that `D·(λ, μ)` is an integer for all weights.
    pub fn weight_form_denominator(&self) -> i64 {
        self.weight_gram_denominator
    }

    /// `D·(λ, μ)` as an exact integer.
    pub fn weight_inner_scaled(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut acc: i128 = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.weight_gram_scaled[i];
            let mut s: i128 = 0;
            for (j, &bj) in b.iter().enumerate() {
                s += i128::from(row[j]) * i128::from(bj);
            }
            acc += i128::from(ai) * s;
        }
        acc
    }

    pub fn weight_gram_scaled(&self) -> &[Vec<i64>] {
        &self.weight_gram_scaled
    }

    /// Order of the stabilizer of a dominant weight with the given zero mask.
    pub fn stabilizer_order(&self, zero_mask: u64) -> u128 {
        parabolic_order(&self.cartan_matrix, zero_mask)
    }

    /// `|Wλ| = |W| / |W_J|` with `J` the simple roots orthogonal to `λ`.
    pub fn orbit_size(&self, w: &Weight) -> Result<u128> {
        self.check_dominant(w)?;
        Ok(self.weyl_order / self.stabilizer_order(w.zero_mask()))
    }

    /// All elements of the Weyl orbit of a dominant weight, by breadth-first
    /// closure under the simple reflections.
    pub fn orbit_enumerate(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.orbit_enumerate_capped(w, default_orbit_cap())
    }

    pub fn orbit_enumerate_capped(&self, w: &Weight, cap: u128) -> Result<Vec<Weight>> {
        let size = self.orbit_size(w)?;
        if size > cap {
            return Err(Error::OrbitTooLarge { size, cap });
        }
        let mut seen: HashSet<Vec<i64>> = HashSet::with_capacity(size as usize);
        let mut out = Vec::with_capacity(size as usize);
        let mut queue = VecDeque::new();
        seen.insert(w.0.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank() {
                if cur.0[i] != 0 {
                    let img = self.reflect(&cur, i);
                    if seen.insert(img.0.clone()) {
                        queue.push_back(img);
                    }
                }
            }
            out.push(cur);
        }
        debug_assert_eq!(out.len() as u128, size);
        Ok(out)
    }

    /// `1 + Σ m∨_δ`.
    pub fn dual_coxeter_number(&self) -> i64 {
        1 + self.coroot_marks.iter().sum::<i64>()
    }

    /// Highest root as a weight (the adjoint highest weight).
    pub fn highest_root_weight(&self) -> Weight {
        self.root_as_weight(&self.root_marks)
    }

    /// Highest short root as a weight; `None` when simply laced.
    pub fn highest_short_root_weight(&self) -> Option<Weight> {
        self.short_roots
            .iter()
            .map(|&i| &self.roots[i])
            .filter(|r| r.is_positive())
            .max_by_key(|r| r.height())
            .map(|r| self.root_as_weight(&r.simple_coords))
    }

    /// Exponent of the fundamental group `P/Q`.
    pub fn fundamental_group_exponent(&self) -> i64 {
        let snf = arith::smith_normal_form(&arith::transpose(&self.cartan_matrix));
        snf.diagonal.iter().fold(1, |a, &d| a.lcm(&d))
    }
}

pub fn dual_coxeter_number(rs: &RootSystem) -> i64 {
    rs.dual_coxeter_number()
}

pub fn orbit_size(rs: &RootSystem, w: &Weight) -> Result<u128> {
    rs.orbit_size(w)
}

pub fn orbit_enumerate(rs: &RootSystem, w: &Weight) -> Result<Vec<Weight>> {
    rs.orbit_enumerate(w)
}

/// Every simple type of rank at most `max_rank`, in a fixed order.
pub fn all_types_up_to(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for letter in [
        TypeLetter::A,
        TypeLetter::B,
        TypeLetter::C,
        TypeLetter::D,
        TypeLetter::E,
        TypeLetter::F,
        TypeLetter::G,
    ] {
        for rank in 1..=max_rank {
            if let Ok(ct) = CartanType::new(letter, rank) {
                out.push(ct);
            }
        }
    }
    out
}
