use num_bigint::BigInt;
use proptest::prelude::*;

use traceform::arith::is_prime;
use traceform::classify::{nondegenerate_exists, trace_zero_all};
use traceform::dynkin::{group_index, orbit_index_closed, orbit_index_enum};
use traceform::lattice::{compute_e, GroupSpec, NamedForm};
use traceform::rootsys::all_types_up_to;
use traceform::slnm::{center_character, e_type_a, orbit_index_type_a, ExponentWeight};
use traceform::verify::{baby_verma_trace, chevalley_sl, s_rho, trace_gram, adjoint_of};
use traceform::{build_root_system, Error, Weight};

fn exponent_weight(max_n: usize) -> impl Strategy<Value = ExponentWeight> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u64..=6, n - 1).prop_map(move |mut e| {
            e.sort_unstable_by(|a, b| b.cmp(a));
            ExponentWeight::new(n, e).unwrap()
        })
    })
}

fn divisor_pair(max_n: u64) -> impl Strategy<Value = (u64, u64)> {
    (2..=max_n).prop_flat_map(|n| {
        let divisors: Vec<u64> = (1..=n).filter(|m| n % m == 0).collect();
        prop::sample::select(divisors).prop_map(move |m| (n, m))
    })
}

fn sl_mod(n: u64, m: u64) -> GroupSpec {
    GroupSpec::named(NamedForm::SlMod {
        n: n as usize,
        m: m as usize,
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_orbit_index_matches_enumeration(
        t in 0usize..all_types_up_to(4).len(),
        coords in prop::collection::vec(0i64..=3, 4),
    ) {
        let ct = all_types_up_to(4)[t];
        let rs = build_root_system(ct.letter, ct.rank).unwrap();
        let w = Weight(coords[..ct.rank].to_vec());
        match orbit_index_enum(&rs, &w) {
            Ok(n) => prop_assert_eq!(orbit_index_closed(&rs, &w).unwrap(), n),
            Err(Error::OrbitTooLarge { .. }) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn type_a_formula_matches_enumeration(w in exponent_weight(6)) {
        let rs = build_root_system(traceform::TypeLetter::A, w.n() - 1).unwrap();
        prop_assert_eq!(
            orbit_index_type_a(&w).unwrap(),
            orbit_index_enum(&rs, &w.to_weight()).unwrap()
        );
    }

    #[test]
    fn center_character_detects_membership(w in exponent_weight(12), pick in any::<prop::sample::Index>()) {
        let n = w.n() as u64;
        let divisors: Vec<u64> = (1..=n).filter(|m| n % m == 0).collect();
        let m = divisors[pick.index(divisors.len())];
        let spec = sl_mod(n, m);
        let trivial = center_character(&w, m).unwrap() == 0;
        prop_assert_eq!(trivial, spec.contains_weight(w.to_weight().coords()));
    }

    #[test]
    fn type_a_e_matches_lattice((n, m) in divisor_pair(24)) {
        prop_assert_eq!(u128::from(e_type_a(n, m).unwrap()), compute_e(&sl_mod(n, m)));
    }

    #[test]
    fn partition_invariants(w in exponent_weight(12)) {
        let parts = w.partition();
        prop_assert_eq!(parts.iter().map(|&(_, r)| r).sum::<u64>(), w.n() as u64);
        prop_assert_eq!(parts.last().unwrap().0, 0);
        prop_assert!(parts.windows(2).all(|p| p[0].0 > p[1].0));
        prop_assert!(parts.iter().all(|&(_, r)| r > 0));
        prop_assert_eq!(parts.iter().map(|&(a, r)| a * r).sum::<u64>(), w.exponent_sum());
        prop_assert_eq!(ExponentWeight::from_weight(&w.to_weight()).unwrap(), w);
    }

    #[test]
    fn s_rho_polarizes_to_trace_form(
        n in 2usize..=4,
        adjoint in any::<bool>(),
        x in prop::collection::vec(-3i64..=3, 24),
        y in prop::collection::vec(-3i64..=3, 24),
    ) {
        let nat = chevalley_sl(n).unwrap();
        let rep = if adjoint { adjoint_of(&nat).unwrap() } else { nat };
        let d = n * n - 1;
        let (x, y) = (&x[..d], &y[..d]);
        let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        let gram = trace_gram(&rep, 0);
        let mut pairing = BigInt::from(0);
        for i in 0..d {
            for j in 0..d {
                pairing += BigInt::from(x[i] * y[j] * gram[i][j]);
            }
        }
        prop_assert_eq!(s_rho(&rep, &sum) - s_rho(&rep, x) - s_rho(&rep, y), pairing);
    }

    #[test]
    fn baby_verma_trace_is_sum_of_squares(p in (3u64..60).prop_filter("prime", |&p| is_prime(p)), a in 0u64..1000) {
        let expected = (0..p).map(|x| x * x).sum::<u64>() % p;
        prop_assert_eq!(baby_verma_trace(p, a).unwrap(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn nondegenerate_implies_nonzero(
        (n, m) in divisor_pair(6),
        p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
    ) {
        let spec = sl_mod(n, m);
        if nondegenerate_exists(&spec, p).unwrap() {
            prop_assert!(!trace_zero_all(&spec, p).unwrap());
        }
    }

    #[test]
    fn isogeny_divisibility((n, m) in divisor_pair(6)) {
        let spec = sl_mod(n, m);
        let sc = spec.simply_connected_form();
        let ng = group_index(&spec, 4).value;
        let nsc = group_index(&sc, 4).value;
        prop_assert_eq!(nsc, 1);
        prop_assert_eq!(ng % nsc, 0);
        prop_assert_eq!(ng % compute_e(&spec), 0);
        prop_assert_eq!(compute_e(&sc), 1);
        prop_assert_eq!(ng % m as u128, 0);
    }
}
