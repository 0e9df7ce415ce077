//! Isogeny types as intermediate lattices `Q ⊆ T* ⊆ P`, the dual
//! cocharacter lattice `T_*`, the normalized invariant form on `T_*`, and the
//! constants `E(G)` and `E_q(G)`.
//!
//! Coordinates: `T*` rows are in the fundamental-weight basis; `T_*` rows are
//! in the simple-coroot basis, so the pairing of the two is the ordinary dot
//! product of coordinate vectors.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{self, q, QMatrix};
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, CartanType, RootSystem, TypeLetter, Weight};

/// Invariant-factor decomposition of `P/Q`, with the change of basis needed
/// to read off the class of a weight.
#[derive(Debug, Clone)]
pub struct FundamentalGroup {
    /// Cyclic factor orders, all greater than 1. Empty when `P = Q`.
    pub factors: Vec<i64>,
    v: Vec<Vec<i64>>,
    v_inv: Vec<Vec<i64>>,
    offset: usize,
}

impl FundamentalGroup {
    pub fn order(&self) -> i64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> i64 {
        self.factors.iter().fold(1, |a, &d| num_integer::lcm(a, d))
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Class of a weight in invariant-factor coordinates.
    pub fn class_of(&self, w: &[i64]) -> Vec<i64> {
        self.factors
            .iter()
            .enumerate()
            .map(|(k, &d)| {
                let col = self.offset + k;
                let x: i64 = w.iter().zip(&self.v).map(|(&c, row)| c * row[col]).sum();
                x.rem_euclid(d)
            })
            .collect()
    }

    /// A weight representing the given class.
    pub fn representative(&self, class: &[i64]) -> Weight {
        let l = self.v.len();
        let mut w = vec![0; l];
        for (k, &x) in class.iter().enumerate() {
            for (j, wj) in w.iter_mut().enumerate() {
                *wj += x * self.v_inv[self.offset + k][j];
            }
        }
        Weight(w)
    }

    /// Additive closure of a set of classes.
    pub fn subgroup_generated(&self, gens: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
        let zero = vec![0; self.factors.len()];
        let mut seen = BTreeSet::new();
        seen.insert(zero.clone());
        let mut queue = VecDeque::from([zero]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y: Vec<i64> = x
                    .iter()
                    .zip(g)
                    .zip(&self.factors)
                    .map(|((a, b), d)| (a + b).rem_euclid(*d))
                    .collect();
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

/// `P/Q` via the Smith normal form of the matrix whose rows are the simple
/// roots in fundamental-weight coordinates.
pub fn fundamental_group(rs: &RootSystem) -> FundamentalGroup {
    let q_rows = arith::transpose(&rs.cartan_matrix);
    let snf = arith::smith_normal_form(&q_rows);
    let offset = snf.diagonal.iter().take_while(|&&d| d == 1).count();
    FundamentalGroup {
        factors: snf.diagonal[offset..].to_vec(),
        v: snf.v,
        v_inv: snf.v_inv,
        offset,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NamedForm {
    SimplyConnected,
    Adjoint,
    Spin(usize),
    SO(usize),
    PSO(usize),
    HSpin(usize),
    Sp(usize),
    PSp(usize),
    /// `SL_n / μ_m`.
    SlMod { n: usize, m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Isogeny {
    Named(NamedForm),
    /// Generators of a subgroup of `P/Q` in invariant-factor coordinates.
    Subgroup(Vec<Vec<i64>>),
}

/// A split almost-simple group: a root system and a subgroup of `P/Q`
/// (the image of `T*`).
#[derive(Debug, Clone)]
pub struct GroupSpec {
    root_system: Arc<RootSystem>,
    isogeny: Isogeny,
    fundamental_group: FundamentalGroup,
    subgroup: BTreeSet<Vec<i64>>,
    subgroup_lookup: HashSet<Vec<i64>>,
}

fn named_type(form: NamedForm) -> Result<CartanType> {
    let bad = || Error::InvalidGroupSpec(format!("{form:?}"));
    let ct = match form {
        NamedForm::SimplyConnected | NamedForm::Adjoint => return Err(bad()),
        NamedForm::Spin(n) | NamedForm::SO(n) | NamedForm::PSO(n) => {
            if n < 5 {
                return Err(bad());
            }
            if n % 2 == 1 {
                CartanType::new(TypeLetter::B, (n - 1) / 2)
            } else {
                CartanType::new(TypeLetter::D, n / 2)
            }
        }
        NamedForm::HSpin(n) => {
            if n % 4 != 0 || n < 12 {
                return Err(bad());
            }
            CartanType::new(TypeLetter::D, n / 2)
        }
        NamedForm::Sp(n) | NamedForm::PSp(n) => {
            if n % 2 != 0 {
                return Err(bad());
            }
            CartanType::new(TypeLetter::C, n / 2)
        }
        NamedForm::SlMod { n, m } => {
            if m == 0 || n < 2 || n % m != 0 {
                return Err(bad());
            }
            CartanType::new(TypeLetter::A, n - 1)
        }
    };
    ct.map_err(|_| bad())
}

/// Generator weights of `T*/Q` for a named form.
fn named_generators(rs: &RootSystem, form: NamedForm) -> Vec<Weight> {
    let l = rs.rank();
    let all = || (0..l).map(|i| Weight::fundamental(l, i)).collect();
    match form {
        NamedForm::SimplyConnected | NamedForm::Spin(_) | NamedForm::Sp(_) => all(),
        NamedForm::Adjoint | NamedForm::PSO(_) | NamedForm::PSp(_) => vec![],
        NamedForm::SO(n) => {
            if n % 2 == 1 {
                vec![]
            } else {
                vec![Weight::fundamental(l, 0)]
            }
        }
        // ω_l-kernel convention: weights with c_1 + c_{l-1} even
        NamedForm::HSpin(_) => vec![Weight::fundamental(l, l - 1)],
        NamedForm::SlMod { m, .. } => {
            let mut w = Weight::zero(l);
            w.0[0] = m as i64;
            vec![w]
        }
    }
}

impl GroupSpec {
    pub fn new(rs: Arc<RootSystem>, isogeny: Isogeny) -> Result<Self> {
        let fg = fundamental_group(&rs);
        let gens: Vec<Vec<i64>> = match &isogeny {
            Isogeny::Named(form) => {
                if !matches!(form, NamedForm::SimplyConnected | NamedForm::Adjoint) {
                    let ct = named_type(*form)?;
                    if ct != rs.cartan_type {
                        return Err(Error::InvalidGroupSpec(format!(
                            "{form:?} does not have type {}",
                            rs.cartan_type
                        )));
                    }
                }
                named_generators(&rs, *form)
                    .iter()
                    .map(|w| fg.class_of(&w.0))
                    .collect()
            }
            Isogeny::Subgroup(gens) => {
                for g in gens {
                    if g.len() != fg.factors.len() {
                        return Err(Error::BadSubgroupGenerator(format!(
                            "{g:?} (P/Q has invariant factors {:?})",
                            fg.factors
                        )));
                    }
                }
                gens.iter()
                    .map(|g| g.iter().zip(&fg.factors).map(|(x, d)| x.rem_euclid(*d)).collect())
                    .collect()
            }
        };
        let subgroup = fg.subgroup_generated(&gens);
        let subgroup_lookup = subgroup.iter().cloned().collect();
        Ok(GroupSpec {
            root_system: rs,
            isogeny,
            fundamental_group: fg,
            subgroup,
            subgroup_lookup,
        })
    }

    pub fn named(form: NamedForm) -> Result<Self> {
        let ct = named_type(form)?;
        let rs = build_root_system(ct.letter, ct.rank)?;
        Self::new(Arc::new(rs), Isogeny::Named(form))
    }

    pub fn simply_connected(letter: TypeLetter, rank: usize) -> Result<Self> {
        let rs = build_root_system(letter, rank)?;
        Self::new(Arc::new(rs), Isogeny::Named(NamedForm::SimplyConnected))
    }

    pub fn adjoint(letter: TypeLetter, rank: usize) -> Result<Self> {
        let rs = build_root_system(letter, rank)?;
        Self::new(Arc::new(rs), Isogeny::Named(NamedForm::Adjoint))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.root_system)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.root_system.cartan_type
    }

    pub fn isogeny(&self) -> &Isogeny {
        &self.isogeny
    }

    pub fn fundamental_group(&self) -> &FundamentalGroup {
        &self.fundamental_group
    }

    /// Elements of `T*/Q ⊆ P/Q` in invariant-factor coordinates.
    pub fn subgroup(&self) -> &BTreeSet<Vec<i64>> {
        &self.subgroup
    }

    pub fn is_simply_connected(&self) -> bool {
        self.subgroup.len() as i64 == self.fundamental_group.order()
    }

    pub fn is_adjoint(&self) -> bool {
        self.subgroup.len() == 1
    }

    /// Whether a weight lies in `T*`, decided by its class in `P/Q`.
    pub fn contains_weight(&self, w: &[i64]) -> bool {
        self.subgroup_lookup.contains(&self.fundamental_group.class_of(w))
    }

    /// The same root system with `T* = Q`.
    pub fn adjoint_form(&self) -> GroupSpec {
        GroupSpec::new(self.root_system_arc(), Isogeny::Named(NamedForm::Adjoint))
            .expect("adjoint form always exists")
    }

    /// The same root system with `T* = P`.
    pub fn simply_connected_form(&self) -> GroupSpec {
        GroupSpec::new(
            self.root_system_arc(),
            Isogeny::Named(NamedForm::SimplyConnected),
        )
        .expect("simply connected form always exists")
    }

    /// Generator weights of `T*` (simple roots followed by class representatives).
    pub fn tstar_generators(&self) -> Vec<Vec<i64>> {
        let mut rows = arith::transpose(&self.root_system.cartan_matrix);
        for class in &self.subgroup {
            if class.iter().any(|&x| x != 0) {
                rows.push(self.fundamental_group.representative(class).0);
            }
        }
        rows
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ct = self.cartan_type();
        match &self.isogeny {
            Isogeny::Named(form) => match *form {
                NamedForm::SimplyConnected => {
                    if self.fundamental_group.is_trivial() {
                        write!(f, "{ct}")
                    } else {
                        write!(f, "{ct}sc")
                    }
                }
                NamedForm::Adjoint => {
                    if self.fundamental_group.is_trivial() {
                        write!(f, "{ct}")
                    } else {
                        write!(f, "{ct}ad")
                    }
                }
                NamedForm::Spin(n) => write!(f, "Spin{n}"),
                NamedForm::SO(n) => write!(f, "SO{n}"),
                NamedForm::PSO(n) => write!(f, "PSO{n}"),
                NamedForm::HSpin(n) => write!(f, "HSpin{n}"),
                NamedForm::Sp(n) => write!(f, "Sp{n}"),
                NamedForm::PSp(n) => write!(f, "PSp{n}"),
                NamedForm::SlMod { n, m } => {
                    if m == 1 {
                        write!(f, "SL{n}")
                    } else {
                        write!(f, "SL{n}/mu{m}")
                    }
                }
            },
            Isogeny::Subgroup(gens) => {
                write!(f, "{ct}")?;
                for g in gens {
                    write!(f, "[")?;
                    for (i, x) in g.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{x}")?;
                    }
                    write!(f, "]")?;
                }
                Ok(())
            }
        }
    }
}

fn split_family(s: &str) -> (&str, &str) {
    let idx = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    (&s[..idx], &s[idx..])
}

fn parse_usize(s: &str, whole: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::InvalidGroupSpec(format!("cannot parse '{whole}'")))
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Grammar: `SL9/mu3`, `SL4`, `PGL5`, `Spin11`, `SO8`, `PSO8`,
    /// `HSpin12`, `Sp10`, `PSp10`, `E6sc`, `E6ad`, `E8`, `F4`, `G2`,
    /// `<Type><rank>sc|ad`, or `<Type><rank>[a,b][c,d]` with explicit
    /// subgroup generators of `P/Q` in invariant-factor coordinates.
    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s.trim()).map_err(|e| match e {
            Error::InvalidGroupSpec(_) => Error::InvalidGroupSpec(s.trim().to_string()),
            other => other,
        })
    }
}

fn parse_group_spec(s: &str) -> Result<GroupSpec> {
    let err = || Error::InvalidGroupSpec(s.to_string());
    let (family, rest) = split_family(s);
    let named = |form| GroupSpec::named(form);
    match family {
        "SL" => {
            if let Some((n, m)) = rest.split_once("/mu") {
                let n = parse_usize(n, s)?;
                let m = parse_usize(m, s)?;
                return named(NamedForm::SlMod { n, m });
            }
            let n = parse_usize(rest, s)?;
            return named(NamedForm::SlMod { n, m: 1 });
        }
        "PGL" => {
            let n = parse_usize(rest, s)?;
            return named(NamedForm::SlMod { n, m: n });
        }
        "Spin" => return named(NamedForm::Spin(parse_usize(rest, s)?)),
        "SO" => return named(NamedForm::SO(parse_usize(rest, s)?)),
        "PSO" => return named(NamedForm::PSO(parse_usize(rest, s)?)),
        "HSpin" => return named(NamedForm::HSpin(parse_usize(rest, s)?)),
        "Sp" => return named(NamedForm::Sp(parse_usize(rest, s)?)),
        "PSp" => return named(NamedForm::PSp(parse_usize(rest, s)?)),
        _ => {}
    }
    let mut chars = family.chars();
    let letter = match (chars.next(), chars.next()) {
        (Some(c), None) => TypeLetter::from_char(c).ok_or_else(err)?,
        _ => return Err(err()),
    };
    let digits_end = rest
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(rest.len());
    let rank = parse_usize(&rest[..digits_end], s)?;
    let suffix = &rest[digits_end..];
    let rs = Arc::new(build_root_system(letter, rank)?);
    let trivial = fundamental_group(&rs).is_trivial();
    let isogeny = match suffix {
        "sc" => Isogeny::Named(NamedForm::SimplyConnected),
        "ad" => Isogeny::Named(NamedForm::Adjoint),
        "" if trivial => Isogeny::Named(NamedForm::SimplyConnected),
        "" => {
            return Err(Error::InvalidGroupSpec(format!(
                "'{s}' is ambiguous; append sc, ad, or subgroup generators"
            )))
        }
        gens if gens.starts_with('[') => {
            let mut out = Vec::new();
            for chunk in gens.split('[').skip(1) {
                let body = chunk.strip_suffix(']').ok_or_else(err)?;
                let g = if body.trim().is_empty() {
                    vec![]
                } else {
                    body.split(',')
                        .map(|t| t.trim().parse::<i64>().map_err(|_| err()))
                        .collect::<Result<Vec<_>>>()?
                };
                out.push(g);
            }
            Isogeny::Subgroup(out)
        }
        _ => return Err(err()),
    };
    GroupSpec::new(rs, isogeny)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LatticePresentation {
    /// Rows: a basis of `T*` in fundamental-weight coordinates.
    pub tstar_basis: Vec<Vec<i64>>,
    /// Rows: the dual basis of `T_*` in simple-coroot coordinates.
    pub tsub_basis: QMatrix,
    /// Gram matrix of the normalized form on `tsub_basis`.
    pub gram_b: QMatrix,
    /// `q(v_i) = b(v_i, v_i) / 2`.
    pub q_diagonal: Vec<BigRational>,
}

/// Gram matrix of the normalized form on the simple coroots:
/// `b(α_i∨, α_j∨) = 4 (α_i, α_j) / ((α_i, α_i)(α_j, α_j))`.
pub fn coroot_gram(rs: &RootSystem) -> QMatrix {
    let l = rs.rank();
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    q(4) * &rs.simple_gram[i][j] / (rs.simple_length(i) * rs.simple_length(j))
                })
                .collect()
        })
        .collect()
}

/// `b(x, y)` for coweights given in simple-coroot coordinates.
pub fn b_tilde(rs: &RootSystem, x: &[BigRational], y: &[BigRational]) -> BigRational {
    let g = coroot_gram(rs);
    let mut acc = BigRational::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            acc += xi * &g[i][j] * yj;
        }
    }
    acc
}

/// The fundamental coweight `ω_i∨` (dual to `α_i`) in simple-coroot coordinates.
pub fn fundamental_coweight(rs: &RootSystem, i: usize) -> Vec<BigRational> {
    let inv = arith::invert(&arith::int_to_q(&rs.cartan_matrix)).expect("invertible");
    inv[i].clone()
}

/// Basis of `T*` with its dual basis of `T_*` and the form on `T_*`.
pub fn resolve_lattices(spec: &GroupSpec) -> LatticePresentation {
    let basis = arith::hermite_basis(&spec.tstar_generators());
    presentation_from_basis(spec.root_system(), basis)
}

/// Builds the presentation from any basis of `T*`.
pub fn presentation_from_basis(rs: &RootSystem, tstar_basis: Vec<Vec<i64>>) -> LatticePresentation {
    let l = rs.rank();
    assert_eq!(tstar_basis.len(), l, "T* must have full rank");
    let t = arith::int_to_q(&tstar_basis);
    let tsub_basis = arith::transpose(&arith::invert(&t).expect("T* basis is nonsingular"));
    let gram_b = arith::mat_mul(
        &arith::mat_mul(&tsub_basis, &coroot_gram(rs)),
        &arith::transpose(&tsub_basis),
    );
    let q_diagonal = (0..l).map(|i| &gram_b[i][i] / q(2)).collect();
    LatticePresentation {
        tstar_basis,
        tsub_basis,
        gram_b,
        q_diagonal,
    }
}

impl LatticePresentation {
    /// Pairing matrix `<t_i, v_j>` between the two bases.
    pub fn pairing(&self) -> QMatrix {
        arith::mat_mul(
            &arith::int_to_q(&self.tstar_basis),
            &arith::transpose(&self.tsub_basis),
        )
    }

    /// Whether a coweight (simple-coroot coordinates) lies in `T_*`.
    pub fn tsub_contains(&self, v: &[BigRational]) -> bool {
        self.tstar_basis.iter().all(|row| {
            row.iter()
                .zip(v)
                .fold(BigRational::zero(), |acc, (&a, b)| acc + q(a) * b)
                .is_integer()
        })
    }

    /// Index `[T_* : Q∨]`, equal to `[P : T*]`.
    pub fn tsub_index_over_coroots(&self) -> BigInt {
        num_traits::Signed::abs(&arith::det_int(&self.tstar_basis))
    }

    pub fn e_constant(&self) -> u128 {
        arith::denominator_lcm(self.gram_b.iter().flatten())
            .to_u128()
            .expect("E fits in u128")
    }

    pub fn eq_constant(&self) -> u128 {
        let l = self.q_diagonal.len();
        let off = (0..l).flat_map(|i| (i + 1..l).map(move |j| (i, j)));
        let entries = self
            .q_diagonal
            .iter()
            .chain(off.map(|(i, j)| &self.gram_b[i][j]));
        arith::denominator_lcm(entries)
            .to_u128()
            .expect("E_q fits in u128")
    }
}

/// Smallest positive integer `e` with `e·b` integral on `T_*`.
pub fn compute_e(spec: &GroupSpec) -> u128 {
    resolve_lattices(spec).e_constant()
}

/// Smallest positive integer `e` with `e·q` integral on `T_*`.
pub fn compute_eq(spec: &GroupSpec) -> u128 {
    resolve_lattices(spec).eq_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q_frac;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn fundamental_groups() {
        for n in 2..=9 {
            let rs = build_root_system(TypeLetter::A, n - 1).unwrap();
            assert_eq!(fundamental_group(&rs).factors, vec![n as i64]);
        }
        let e8 = build_root_system(TypeLetter::E, 8).unwrap();
        assert!(fundamental_group(&e8).is_trivial());
        let d4 = build_root_system(TypeLetter::D, 4).unwrap();
        assert_eq!(fundamental_group(&d4).factors, vec![2, 2]);
        let d5 = build_root_system(TypeLetter::D, 5).unwrap();
        assert_eq!(fundamental_group(&d5).factors, vec![4]);
        let e6 = build_root_system(TypeLetter::E, 6).unwrap();
        assert_eq!(fundamental_group(&e6).factors, vec![3]);
    }

    #[test]
    fn class_representatives_round_trip() {
        let d6 = build_root_system(TypeLetter::D, 6).unwrap();
        let fg = fundamental_group(&d6);
        for a in 0..2 {
            for b in 0..2 {
                let rep = fg.representative(&[a, b]);
                assert_eq!(fg.class_of(&rep.0), vec![a, b]);
            }
        }
        // roots are in the trivial class
        for r in &d6.roots {
            let w = d6.root_as_weight(&r.simple_coords);
            assert_eq!(fg.class_of(&w.0), vec![0, 0]);
        }
    }

    #[test]
    fn membership_of_named_forms() {
        // SO_{2l}: c_{l-1} + c_l even
        let so10 = spec("SO10");
        for w in [[0, 0, 0, 1, 1], [1, 0, 0, 0, 0], [0, 0, 0, 2, 0]] {
            assert!(so10.contains_weight(&w));
        }
        assert!(!so10.contains_weight(&[0, 0, 0, 1, 0]));
        // HSpin_{4n}: c_1 + c_{l-1} even
        let hs = spec("HSpin12");
        assert!(hs.contains_weight(&[0, 0, 0, 0, 0, 1]));
        assert!(hs.contains_weight(&[1, 0, 0, 0, 1, 0]));
        assert!(!hs.contains_weight(&[1, 0, 0, 0, 0, 0]));
        assert!(!hs.contains_weight(&[0, 0, 0, 0, 1, 0]));
        // SL_n/μ_m: Σ i c_i ≡ 0 mod m
        let sl = spec("SL6/mu3");
        assert!(sl.contains_weight(&[3, 0, 0, 0, 0]));
        assert!(sl.contains_weight(&[1, 1, 0, 0, 0]));
        assert!(!sl.contains_weight(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn duality_and_coroot_lengths() {
        for s in ["E6sc", "E7ad", "SO12", "HSpin16", "PSp10", "SL12/mu4", "G2", "F4", "D4[1,1]"] {
            let g = spec(s);
            let lp = resolve_lattices(&g);
            assert_eq!(lp.pairing(), arith::identity(g.root_system().rank()), "{s}");
        }
        let b3 = build_root_system(TypeLetter::B, 3).unwrap();
        let g = coroot_gram(&b3);
        // α_1, α_2 long: coroot length 2; α_3 short: coroot length 2c = 4
        assert_eq!(g[0][0], q(2));
        assert_eq!(g[2][2], q(4));
    }

    #[test]
    fn simply_connected_and_adjoint_lattices() {
        let g = GroupSpec::simply_connected(TypeLetter::E, 7).unwrap();
        let lp = resolve_lattices(&g);
        // T* = P, so T_* = Q∨ and the dual basis is the simple coroots
        let mut rows = lp.tsub_basis.clone();
        rows.sort();
        let mut id = arith::identity(7);
        id.sort();
        assert_eq!(rows, id);
        assert_eq!(lp.e_constant(), 1);
        let ad = GroupSpec::adjoint(TypeLetter::E, 7).unwrap();
        assert_eq!(compute_e(&ad), 2);
    }

    #[test]
    fn sl_mod_mu_contains_beta() {
        for (n, m) in [(4usize, 2usize), (6, 3), (9, 3), (8, 4), (12, 6)] {
            let g = GroupSpec::named(NamedForm::SlMod { n, m }).unwrap();
            let lp = resolve_lattices(&g);
            let rs = g.root_system();
            let beta: Vec<BigRational> = fundamental_coweight(rs, n - 2)
                .into_iter()
                .map(|x| x * q((n / m) as i64))
                .collect();
            assert!(lp.tsub_contains(&beta));
            // <β, α_{n-1}> = n/m
            let pairing: BigRational = (0..n - 1)
                .map(|i| &beta[i] * q(rs.cartan_matrix[i][n - 2]))
                .sum();
            assert_eq!(pairing, q((n / m) as i64));
            assert_eq!(lp.tsub_index_over_coroots(), BigInt::from(m));
        }
    }

    #[test]
    fn so_even_contains_first_coweight() {
        for l in 3..=6 {
            let g = GroupSpec::named(NamedForm::SO(2 * l)).unwrap();
            let lp = resolve_lattices(&g);
            let w1 = fundamental_coweight(g.root_system(), 0);
            assert!(lp.tsub_contains(&w1));
            assert_eq!(b_tilde(g.root_system(), &w1, &w1), q(1));
            assert_eq!(lp.tsub_index_over_coroots(), BigInt::from(2));
        }
    }

    #[test]
    fn e_constants_of_examples() {
        assert_eq!(compute_e(&spec("PSp4")), 1);
        assert_eq!(compute_e(&spec("PSp6")), 2);
        assert_eq!(compute_e(&spec("SO9")), 1);
        assert_eq!(compute_e(&spec("SO10")), 1);
        assert_eq!(compute_e(&spec("HSpin12")), 2);
        assert_eq!(compute_e(&spec("HSpin16")), 1);
        assert_eq!(compute_e(&spec("SL4/mu2")), 1);
        assert_eq!(compute_e(&spec("SL9/mu3")), 1);
        assert_eq!(compute_e(&spec("SL4/mu4")), 4);
        assert_eq!(compute_e(&spec("E6ad")), 3);
        assert_eq!(compute_e(&spec("D5ad")), 4);
    }

    #[test]
    fn quadratic_constants() {
        assert_eq!(compute_eq(&spec("SL2/mu2")), 4);
        assert_eq!(compute_eq(&spec("SO10")), 2);
        assert_eq!(compute_eq(&spec("E6sc")), 1);
        assert_eq!(compute_eq(&spec("Sp8")), 1);
        // q(ω∨) for A1 adjoint is 1/4
        let lp = resolve_lattices(&spec("PGL2"));
        assert_eq!(lp.q_diagonal, vec![q_frac(1, 4)]);
    }

    #[test]
    fn parsing_and_display() {
        for s in ["SL9/mu3", "SL4", "Spin11", "HSpin12", "PSp10", "E6sc", "E6ad", "SO8", "PSO8", "E8", "G2", "D4[1,0]"] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert_eq!(spec("PGL5").to_string(), "SL5/mu5");
        for bad in ["SL9/mu2", "HSpin8", "HSpin10", "Sp5", "E6", "X3", "E9", "SO4", "D4[1]", "A3[1", "Spin"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn explicit_subgroups_match_named_forms() {
        let named = spec("SO12");
        let d6 = named.root_system_arc();
        let fg = fundamental_group(&d6);
        let class = fg.class_of(&Weight::fundamental(6, 0).0);
        let explicit = GroupSpec::new(d6, Isogeny::Subgroup(vec![class])).unwrap();
        assert_eq!(explicit.subgroup(), named.subgroup());
        assert_eq!(compute_e(&explicit), compute_e(&named));
    }
}
