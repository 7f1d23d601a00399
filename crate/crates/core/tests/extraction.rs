//! Every extraction path against the brute-force oracle on all fields with
//! `q <= 343`.

use std::collections::BTreeSet;

use amm_core::field::find_irreducible;
use amm_core::oracle::{brute_root, residues, small_field_orders, EXHAUSTIVE_SUITE_BOUND};
use amm_core::{cbrt, extract, rth_root, sqrt_ext, Error, Field, Field64, FieldCtx, Natural};
use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_fields() -> Vec<Field64> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    small_field_orders(EXHAUSTIVE_SUITE_BOUND)
        .into_iter()
        .map(|(p, m)| {
            if m == 1 {
                FieldCtx::prime(p).unwrap()
            } else {
                FieldCtx::extension(p, find_irreducible(&p, m, &mut rng).unwrap()).unwrap()
            }
        })
        .collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[test]
fn extract_matches_oracle_for_every_prime_divisor() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for f in small_fields() {
        let q_minus_1 = *f.order_minus_one();
        for r in (2..=q_minus_1).filter(|&r| is_prime(r) && q_minus_1 % r == 0) {
            let (t, _) = amm_core::ntcore::factor_out(&q_minus_1, &r).unwrap();
            for delta in residues(&f, &r).unwrap() {
                let oracle = brute_root(&f, &delta, &r).unwrap();
                assert_eq!(oracle.len() as u64, r);
                let rep = extract(&f, &delta, &r, &mut rng, true).unwrap();
                assert!(
                    oracle.contains(&rep.root),
                    "q = {}, r = {r}, delta = {delta}",
                    f.order()
                );
                let all: BTreeSet<_> = rep.all_roots.unwrap().into_iter().collect();
                assert_eq!(all, oracle);
                assert_eq!(rep.params.t, t);
                assert_eq!(rep.counters.loop_iterations, u64::from(t - 1));
                assert!(rep.counters.dlog_multiplications <= u64::from(t - 1) * (r - 1));
            }
        }
    }
}

#[test]
fn nonresidues_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for f in small_fields() {
        let q_minus_1 = *f.order_minus_one();
        for r in [2u64, 3, 5, 7] {
            if q_minus_1 % r != 0 {
                continue;
            }
            let res = residues(&f, &r).unwrap();
            for delta in f.elements().skip(1).filter(|x| !res.contains(x)) {
                assert!(brute_root(&f, &delta, &r).unwrap().is_empty());
                assert_eq!(
                    extract(&f, &delta, &r, &mut rng, false),
                    Err(Error::NotAResidue)
                );
            }
        }
    }
}

#[test]
fn specialized_and_general_paths_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for f in small_fields() {
        let q_minus_1 = *f.order_minus_one();
        for delta in residues(&f, &2).unwrap() {
            let oracle = brute_root(&f, &delta, &2).unwrap();
            assert!(oracle.contains(&sqrt_ext(&f, &delta, &mut rng).unwrap().root));
            assert!(oracle.contains(&rth_root(&f, &delta, &2, &mut rng).unwrap().root));
        }
        if q_minus_1 % 3 == 0 {
            for delta in residues(&f, &3).unwrap() {
                let oracle = brute_root(&f, &delta, &3).unwrap();
                assert!(oracle.contains(&cbrt(&f, &delta, &mut rng).unwrap().root));
                assert!(oracle.contains(&rth_root(&f, &delta, &3, &mut rng).unwrap().root));
            }
        }
    }
}

#[test]
fn coprime_and_composite_exponents() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for f in small_fields() {
        let q_minus_1 = *f.order_minus_one();
        for r in 2u64..=12 {
            let g = r.gcd(&q_minus_1);
            for delta in f.elements().skip(1) {
                let result = extract(&f, &delta, &r, &mut rng, false);
                if g == 1 {
                    let oracle = brute_root(&f, &delta, &r).unwrap();
                    assert_eq!(oracle.len(), 1);
                    assert!(oracle.contains(&result.unwrap().root));
                } else if !is_prime(r) {
                    assert_eq!(result, Err(Error::UnsupportedExponent));
                }
            }
        }
    }
}

#[test]
fn seed_determines_report() {
    let f = FieldCtx::prime(101u64).unwrap();
    let delta = f.from_nat(&32);
    let a = extract(&f, &delta, &5, &mut ChaCha8Rng::seed_from_u64(42), true).unwrap();
    let b = extract(&f, &delta, &5, &mut ChaCha8Rng::seed_from_u64(42), true).unwrap();
    assert_eq!(a, b);
}

#[test]
fn scalar_type_does_not_change_results() {
    // the same seed drives identical draws for u64 and arbitrary precision
    let small = FieldCtx::prime(197u64).unwrap();
    let big = Field::prime(Natural::from(197u32)).unwrap();
    for d in 1..197u64 {
        let ds = small.from_nat(&d);
        let db = big.from_nat(&Natural::from(d));
        let rs = extract(&small, &ds, &7, &mut ChaCha8Rng::seed_from_u64(d), false);
        let rb = extract(
            &big,
            &db,
            &Natural::from(7u32),
            &mut ChaCha8Rng::seed_from_u64(d),
            false,
        );
        match (rs, rb) {
            (Ok(a), Ok(b)) => {
                assert_eq!(Natural::from(a.root.coeffs()[0]), b.root.coeffs()[0]);
                assert_eq!(a.counters, b.counters);
            }
            (Err(a), Err(b)) => assert_eq!(a, b),
            (a, b) => panic!("diverged at {d}: {a:?} vs {b:?}"),
        }
    }
}

#[test]
fn large_prime_field_round_trip() {
    // 2^127 - 1: q - 1 = 2 * 3^3 * 7^2 * 19 * 43 * 73 * 127 * 337 * 5419 * 92737 * 649657 * 77158673929
    let p: Natural = "170141183460469231731687303715884105727".parse().unwrap();
    let f = Field::prime(p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for r in [2u32, 3, 7, 19, 43] {
        let r = Natural::from(r);
        let x = f.random_nonzero(&mut rng);
        let delta = f.pow(&x, &r).unwrap();
        let rep = extract(&f, &delta, &r, &mut rng, false).unwrap();
        assert_eq!(f.pow(&rep.root, &r).unwrap(), delta);
    }
}
