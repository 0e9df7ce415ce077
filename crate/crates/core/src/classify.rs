//! Characteristic-by-characteristic decisions: whether every trace form
//! vanishes (`p | N(G)/E(G)`) and whether some trace form is nondegenerate
//! (`p` very good), plus the lookup table for non-split forms.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::dynkin::{self, GroupIndex, DEFAULT_SEARCH_BOUND};
use crate::error::{Error, Result};
use crate::lattice::{compute_e, GroupSpec, NamedForm};
use crate::rootsys::{CartanType, TypeLetter};

/// Marker carried by every result taken from the non-split lookup table.
pub const LOOKUP_PROVENANCE: &str = "paper-sourced lookup";
pub const COMPUTED_PROVENANCE: &str = "computed";

/// `p = 0` stands for characteristic zero.
pub fn check_characteristic(p: u64) -> Result<()> {
    if p == 0 || arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Primes that are not very good for the type.
pub fn very_good_excluded_primes(ct: CartanType) -> BTreeSet<u64> {
    match ct.letter {
        TypeLetter::A => arith::prime_support((ct.rank + 1) as u128),
        TypeLetter::B | TypeLetter::C | TypeLetter::D => BTreeSet::from([2]),
        TypeLetter::G | TypeLetter::F => BTreeSet::from([2, 3]),
        TypeLetter::E if ct.rank == 8 => BTreeSet::from([2, 3, 5]),
        TypeLetter::E => BTreeSet::from([2, 3]),
    }
}

/// Human-readable form of [`very_good_excluded_primes`]; symbolic for type A.
pub fn excluded_primes_label(ct: CartanType) -> String {
    match ct.letter {
        TypeLetter::A => format!("divisors of {}", ct.rank + 1),
        _ => format_primes(&very_good_excluded_primes(ct)),
    }
}

pub fn format_primes(primes: &BTreeSet<u64>) -> String {
    if primes.is_empty() {
        return "none".to_string();
    }
    primes
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// `N(G)`, `E(G)` and the quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexRatio {
    pub n_of_g: GroupIndex,
    pub e_of_g: u128,
    pub ratio: u128,
    /// Stabilized, or the box gcd already equals the lower bound `E(G)`.
    pub conclusive: bool,
}

pub fn index_ratio(spec: &GroupSpec, bound: u32) -> IndexRatio {
    let n = dynkin::group_index(spec, bound);
    let e = compute_e(spec);
    assert!(
        n.value == 0 || n.value % e == 0,
        "E(G) = {e} must divide N(G) = {}",
        n.value
    );
    let ratio = if n.value == 0 { 0 } else { n.value / e };
    IndexRatio {
        n_of_g: n,
        e_of_g: e,
        ratio,
        conclusive: n.value != 0 && (n.stabilized || n.value == e),
    }
}

fn zero_verdict(r: &IndexRatio, p: u64) -> Result<bool> {
    if !r.conclusive {
        return Err(Error::Inconclusive {
            bound: r.n_of_g.bound,
        });
    }
    Ok(p != 0 && r.ratio % u128::from(p) == 0)
}

/// Every trace form of every representation vanishes in characteristic `p`.
pub fn trace_zero_all(spec: &GroupSpec, p: u64) -> Result<bool> {
    trace_zero_all_with_bound(spec, p, DEFAULT_SEARCH_BOUND)
}

pub fn trace_zero_all_with_bound(spec: &GroupSpec, p: u64, bound: u32) -> Result<bool> {
    check_characteristic(p)?;
    zero_verdict(&index_ratio(spec, bound), p)
}

/// The trace form of a single representation vanishes iff `p | N(ρ)/E(G)`.
pub fn trace_zero_single(n_rho: u128, e_g: u128, p: u64) -> Result<bool> {
    check_characteristic(p)?;
    if e_g == 0 || n_rho % e_g != 0 {
        return Err(Error::Precondition(format!(
            "E(G) = {e_g} does not divide N(rho) = {n_rho}"
        )));
    }
    Ok(p != 0 && (n_rho / e_g) % u128::from(p) == 0)
}

/// Some representation has a nondegenerate trace form.
pub fn nondegenerate_exists(spec: &GroupSpec, p: u64) -> Result<bool> {
    check_characteristic(p)?;
    Ok(p == 0 || !very_good_excluded_primes(spec.cartan_type()).contains(&p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub characteristic: u64,
    pub exists_nonzero: bool,
    pub exists_nondegenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub group: String,
    pub n_of_g: GroupIndex,
    pub e_of_g: u128,
    pub ratio_primes: BTreeSet<u64>,
    pub very_good_primes_excluded: BTreeSet<u64>,
    pub verdicts: Vec<Verdict>,
    pub provenance: &'static str,
}

pub fn classify(spec: &GroupSpec, characteristics: &[u64], bound: u32) -> Result<ClassificationResult> {
    for &p in characteristics {
        check_characteristic(p)?;
    }
    let r = index_ratio(spec, bound);
    let verdicts = characteristics
        .iter()
        .map(|&p| {
            Ok(Verdict {
                characteristic: p,
                exists_nonzero: !zero_verdict(&r, p)?,
                exists_nondegenerate: nondegenerate_exists(spec, p)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassificationResult {
        group: spec.to_string(),
        n_of_g: r.n_of_g,
        e_of_g: r.e_of_g,
        ratio_primes: arith::prime_support(r.ratio),
        very_good_primes_excluded: very_good_excluded_primes(spec.cartan_type()),
        verdicts,
        provenance: COMPUTED_PROVENANCE,
    })
}

/// Order of the image of the Galois group in the diagram automorphisms:
/// 1 (split), 2, 3 or 6.
pub fn check_twist(ct: CartanType, twist: u8) -> Result<()> {
    let ok = match twist {
        1 => true,
        2 => matches!(
            (ct.letter, ct.rank),
            (TypeLetter::A, 2..) | (TypeLetter::D, 4..) | (TypeLetter::E, 6)
        ),
        3 | 6 => ct.letter == TypeLetter::D && ct.rank == 4,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidGroupSpec(format!(
            "no twist of order {twist} for type {ct}"
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroAnswer {
    Known(bool),
    OutOfScope(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistedResult {
    pub twisted_type: String,
    pub characteristic: u64,
    pub degenerate_always: bool,
    pub zero_always: ZeroAnswer,
    pub provenance: &'static str,
}

pub struct TwistedType {
    pub twist: u8,
    pub cartan_type: CartanType,
}

impl fmt::Display for TwistedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.twist, self.cartan_type)
    }
}

/// Lookup for absolutely almost simple, possibly non-split groups. Nothing
/// here is computed from root data beyond the split excluded primes.
pub fn twisted_classify(
    ct: CartanType,
    twist: u8,
    simply_connected: bool,
    p: u64,
) -> Result<TwistedResult> {
    check_characteristic(p)?;
    check_twist(ct, twist)?;
    let tt = TwistedType {
        twist,
        cartan_type: ct,
    };
    let n = (ct.rank + 1) as u64;
    let degenerate_always = p != 0
        && match (ct.letter, twist) {
            (TypeLetter::A, 2) if n % 2 == 1 => (2 * n) % p == 0,
            (TypeLetter::D, 3 | 6) => p == 2 || p == 3,
            _ => very_good_excluded_primes(ct).contains(&p),
        };
    let trivial_center = matches!(ct.letter, TypeLetter::G | TypeLetter::F)
        || (ct.letter == TypeLetter::E && ct.rank == 8);
    let zero_always = if simply_connected || trivial_center {
        ZeroAnswer::OutOfScope("simply connected groups are not covered by the table".into())
    } else if ct.letter == TypeLetter::A {
        ZeroAnswer::OutOfScope("type A is not covered by the table".into())
    } else {
        let two_or_three = matches!(
            (ct.letter, ct.rank, twist),
            (TypeLetter::D, 4, 3 | 6) | (TypeLetter::E, 7, _)
        );
        ZeroAnswer::Known(p == 2 || (two_or_three && p == 3))
    };
    Ok(TwistedResult {
        twisted_type: tt.to_string(),
        characteristic: p,
        degenerate_always,
        zero_always,
        provenance: LOOKUP_PROVENANCE,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub family: String,
    pub params: String,
    pub group: String,
    pub n: u128,
    pub e: u128,
    pub ratio_primes: BTreeSet<u64>,
    pub degenerate_primes: BTreeSet<u64>,
    pub zero_primes: BTreeSet<u64>,
    pub stabilized: bool,
    pub flags: Vec<String>,
}

/// The groups of each table family whose rank is at most `max_rank`, in
/// table order, with family name and parameters.
pub fn table1_groups(max_rank: usize) -> Vec<(String, String, GroupSpec)> {
    let mut out = Vec::new();
    let mut push = |family: &str, params: String, form: NamedForm| {
        let spec = GroupSpec::named(form).expect("table entries are valid");
        out.push((family.to_string(), params, spec));
    };
    for n in 2..=max_rank + 1 {
        for m in (1..=n).filter(|m| n % m == 0) {
            let family = if m % 2 == 1 {
                "SL_n/mu_m (m odd)"
            } else {
                "SL_n/mu_m (m even)"
            };
            push(family, format!("n={n} m={m}"), NamedForm::SlMod { n, m });
        }
    }
    for n in 2..=max_rank {
        push("Sp_2n", format!("n={n}"), NamedForm::Sp(2 * n));
    }
    for n in 7..=2 * max_rank + 1 {
        push("SO_n", format!("n={n}"), NamedForm::SO(n));
        push("Spin_n", format!("n={n}"), NamedForm::Spin(n));
        push("PSO_n", format!("n={n}"), NamedForm::PSO(n));
    }
    for n in (3..).take_while(|n| 2 * n <= max_rank) {
        push("HSpin_4n", format!("n={n}"), NamedForm::HSpin(4 * n));
    }
    for n in 2..=max_rank {
        push("PSp_2n", format!("n={n}"), NamedForm::PSp(2 * n));
    }
    let exceptional: [(&str, TypeLetter, usize, bool); 7] = [
        ("E6 adjoint", TypeLetter::E, 6, false),
        ("G2", TypeLetter::G, 2, true),
        ("E6 simply connected", TypeLetter::E, 6, true),
        ("E7 simply connected", TypeLetter::E, 7, true),
        ("E7 adjoint", TypeLetter::E, 7, false),
        ("F4", TypeLetter::F, 4, true),
        ("E8", TypeLetter::E, 8, true),
    ];
    for (family, letter, rank, sc) in exceptional {
        if rank <= max_rank {
            let spec = if sc {
                GroupSpec::simply_connected(letter, rank)
            } else {
                GroupSpec::adjoint(letter, rank)
            }
            .expect("exceptional types are valid");
            out.push((family.to_string(), String::new(), spec));
        }
    }
    out
}

pub fn table1_row(family: String, params: String, spec: &GroupSpec, bound: u32) -> Table1Row {
    let r = index_ratio(spec, bound);
    let ratio_primes = arith::prime_support(r.ratio);
    let mut flags = Vec::new();
    if !r.conclusive {
        flags.push(format!("inconclusive at bound {bound}"));
    }
    Table1Row {
        family,
        params,
        group: spec.to_string(),
        n: r.n_of_g.value,
        e: r.e_of_g,
        zero_primes: ratio_primes.clone(),
        ratio_primes,
        degenerate_primes: very_good_excluded_primes(spec.cartan_type()),
        stabilized: r.conclusive,
        flags,
    }
}

/// Every table row up to `max_rank`, computed from `N(G)` and `E(G)`.
pub fn table1_render(max_rank: usize, bound: u32) -> Vec<Table1Row> {
    table1_groups(max_rank)
        .into_iter()
        .map(|(family, params, spec)| table1_row(family, params, &spec, bound))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(form: NamedForm) -> GroupSpec {
        GroupSpec::named(form).unwrap()
    }

    fn ct(letter: TypeLetter, rank: usize) -> CartanType {
        CartanType::new(letter, rank).unwrap()
    }

    #[test]
    fn excluded_primes() {
        assert_eq!(very_good_excluded_primes(ct(TypeLetter::C, 5)), BTreeSet::from([2]));
        assert_eq!(very_good_excluded_primes(ct(TypeLetter::E, 8)), BTreeSet::from([2, 3, 5]));
        assert_eq!(very_good_excluded_primes(ct(TypeLetter::A, 5)), BTreeSet::from([2, 3]));
        assert!(very_good_excluded_primes(ct(TypeLetter::A, 6)).contains(&7));
        assert_eq!(excluded_primes_label(ct(TypeLetter::A, 5)), "divisors of 6");
    }

    #[test]
    fn zero_all_examples() {
        let e6ad = GroupSpec::adjoint(TypeLetter::E, 6).unwrap();
        assert!(trace_zero_all(&e6ad, 2).unwrap());
        assert!(!trace_zero_all(&e6ad, 3).unwrap());
        let e6sc = GroupSpec::simply_connected(TypeLetter::E, 6).unwrap();
        assert!(trace_zero_all(&e6sc, 3).unwrap());
        for p in [0, 2, 3, 5] {
            assert!(!trace_zero_all(&named(NamedForm::Sp(6)), p).unwrap());
        }
        assert!(trace_zero_all(&named(NamedForm::PSp(6)), 2).unwrap());
        assert!(trace_zero_all(&named(NamedForm::SlMod { n: 9, m: 3 }), 3).unwrap());
        assert!(matches!(trace_zero_all(&e6ad, 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn inconclusive_is_reported() {
        let spec = named(NamedForm::PSp(6));
        assert!(matches!(
            trace_zero_all_with_bound(&spec, 2, 1),
            Err(Error::Inconclusive { bound: 1 })
        ));
    }

    #[test]
    fn single_examples() {
        assert!(trace_zero_single(12, 2, 2).unwrap());
        assert!(!trace_zero_single(12, 2, 5).unwrap());
        assert!(!trace_zero_single(1, 1, 7).unwrap());
        // 1344 / 2 = 2^5 · 3 · 7
        assert!(trace_zero_single(1344, 2, 7).unwrap());
        assert!(trace_zero_single(1344, 2, 3).unwrap());
        assert!(!trace_zero_single(1344, 2, 5).unwrap());
        assert!(!trace_zero_single(12, 2, 0).unwrap());
        assert!(trace_zero_single(12, 5, 2).is_err());
    }

    #[test]
    fn nondegenerate_examples() {
        assert!(!nondegenerate_exists(&named(NamedForm::Sp(8)), 2).unwrap());
        let g2 = GroupSpec::simply_connected(TypeLetter::G, 2).unwrap();
        assert!(nondegenerate_exists(&g2, 5).unwrap());
        assert!(!nondegenerate_exists(&g2, 3).unwrap());
        // p | n/m, p odd, p ∤ m: forms are nonzero but all degenerate
        let spec = named(NamedForm::SlMod { n: 6, m: 2 });
        assert!(!nondegenerate_exists(&spec, 3).unwrap());
        assert!(!trace_zero_all(&spec, 3).unwrap());
        assert!(nondegenerate_exists(&spec, 0).unwrap());
    }

    #[test]
    fn classify_result() {
        let spec = GroupSpec::adjoint(TypeLetter::E, 7).unwrap();
        let r = classify(&spec, &[0, 2, 3, 5], DEFAULT_SEARCH_BOUND).unwrap();
        assert_eq!((r.n_of_g.value, r.e_of_g), (12, 2));
        assert_eq!(r.ratio_primes, BTreeSet::from([2, 3]));
        let nonzero: Vec<bool> = r.verdicts.iter().map(|v| v.exists_nonzero).collect();
        assert_eq!(nonzero, [true, false, false, true]);
        for v in &r.verdicts {
            assert!(!v.exists_nondegenerate || v.exists_nonzero);
        }
    }

    #[test]
    fn twisted_lookup() {
        let d4 = ct(TypeLetter::D, 4);
        let r = twisted_classify(d4, 3, false, 3).unwrap();
        assert_eq!(r.zero_always, ZeroAnswer::Known(true));
        assert!(r.degenerate_always);
        assert_eq!(r.provenance, LOOKUP_PROVENANCE);
        assert_eq!(r.twisted_type, "3D4");

        let a4 = ct(TypeLetter::A, 4);
        for p in [2, 5] {
            assert!(twisted_classify(a4, 2, true, p).unwrap().degenerate_always);
        }
        assert!(!twisted_classify(a4, 2, true, 3).unwrap().degenerate_always);
        assert!(matches!(
            twisted_classify(a4, 2, false, 2).unwrap().zero_always,
            ZeroAnswer::OutOfScope(_)
        ));
        // ²A_3 (n = 4 even) falls back to very good primes
        assert!(!twisted_classify(ct(TypeLetter::A, 3), 2, true, 5).unwrap().degenerate_always);

        let d5 = ct(TypeLetter::D, 5);
        assert_eq!(twisted_classify(d5, 2, false, 2).unwrap().zero_always, ZeroAnswer::Known(true));
        assert_eq!(twisted_classify(d5, 2, false, 3).unwrap().zero_always, ZeroAnswer::Known(false));
        assert!(matches!(
            twisted_classify(d5, 2, true, 2).unwrap().zero_always,
            ZeroAnswer::OutOfScope(_)
        ));
        let e6 = ct(TypeLetter::E, 6);
        assert_eq!(twisted_classify(e6, 2, false, 3).unwrap().zero_always, ZeroAnswer::Known(false));
        let e7 = ct(TypeLetter::E, 7);
        assert_eq!(twisted_classify(e7, 1, false, 3).unwrap().zero_always, ZeroAnswer::Known(true));
        assert!(matches!(
            twisted_classify(ct(TypeLetter::G, 2), 1, false, 2).unwrap().zero_always,
            ZeroAnswer::OutOfScope(_)
        ));
        assert!(twisted_classify(ct(TypeLetter::B, 3), 2, false, 2).is_err());
        assert!(twisted_classify(ct(TypeLetter::D, 5), 3, false, 2).is_err());
        assert!(twisted_classify(d4, 6, false, 1).is_err());
    }

    #[test]
    fn table_rows() {
        let spin9 = table1_row(String::new(), String::new(), &named(NamedForm::Spin(9)), 4);
        assert_eq!(spin9.degenerate_primes, BTreeSet::from([2]));
        assert_eq!(spin9.zero_primes, BTreeSet::from([2]));
        let sl4 = table1_row(String::new(), String::new(), &named(NamedForm::SlMod { n: 4, m: 2 }), 4);
        assert_eq!(sl4.degenerate_primes, BTreeSet::from([2]));
        assert_eq!(sl4.zero_primes, BTreeSet::from([2]));
        let e8 = GroupSpec::simply_connected(TypeLetter::E, 8).unwrap();
        let e8 = table1_row(String::new(), String::new(), &e8, 4);
        assert_eq!(e8.zero_primes, BTreeSet::from([2, 3, 5]));
        assert_eq!(e8.degenerate_primes, BTreeSet::from([2, 3, 5]));
        assert!(e8.flags.is_empty());
    }

    #[test]
    fn table_groups_are_ordered_and_bounded() {
        let groups = table1_groups(4);
        assert!(groups.iter().all(|(_, _, g)| g.cartan_type().rank <= 4));
        let names: Vec<String> = groups.iter().map(|g| g.2.to_string()).collect();
        assert_eq!(&names[..3], ["SL2", "SL2/mu2", "SL3"]);
        assert!(names.contains(&"F4".to_string()));
        assert!(!names.contains(&"E6sc".to_string()));
    }
}
