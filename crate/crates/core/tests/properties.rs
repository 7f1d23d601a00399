use std::collections::BTreeSet;

use amm_core::dlog::subgroup_dlog;
use amm_core::field::find_irreducible;
use amm_core::ntcore::{factor_out, least_alpha, legendre, modpow};
use amm_core::oracle::{residues, small_field_orders, EXHAUSTIVE_SUITE_BOUND};
use amm_core::residue::{is_rth_residue, sample_nonresidue};
use amm_core::{Counters, Field64, FieldCtx};
use num_integer::Integer;
use proptest::prelude::*;
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

fn odd_primes_below(n: u64) -> Vec<u64> {
    (3..n)
        .step_by(2)
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

proptest! {
    #[test]
    fn modpow_adds_exponents(a in 0u64..10_000, e1 in 0u64..500, e2 in 0u64..500, n in 2u64..10_000) {
        let lhs = modpow(&a, &(e1 + e2), &n).unwrap();
        let rhs = modpow(&a, &e1, &n).unwrap() * modpow(&a, &e2, &n).unwrap() % n;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn modpow_same_for_u64_and_biguint(a in any::<u64>(), e in any::<u64>(), n in 2u64..) {
        let small = modpow(&a, &e, &n).unwrap();
        let big = modpow(&num_bigint::BigUint::from(a), &e.into(), &n.into()).unwrap();
        prop_assert_eq!(num_bigint::BigUint::from(small), big);
    }

    #[test]
    fn factor_out_round_trip(n in 1u64..1_000_000, r in 2u64..50) {
        let (t, s) = factor_out(&n, &r).unwrap();
        prop_assert_eq!(r.pow(t) * s, n);
        prop_assert_ne!(s % r, 0);
    }

    #[test]
    fn least_alpha_is_least(r in 2u64..200, s in 1u64..2000) {
        prop_assume!(r.gcd(&s) == 1);
        let alpha = least_alpha(&r, &s).unwrap();
        prop_assert!(alpha < s.max(1));
        prop_assert_eq!((r * alpha + s - 1) % s, 0);
        for smaller in 0..alpha {
            prop_assert_ne!((r * smaller + s - 1) % s, 0);
        }
    }
}

#[test]
fn legendre_is_multiplicative() {
    for p in odd_primes_below(200) {
        for a in 1..p {
            for b in 1..p {
                let lhs = legendre(&(a * b % p), &p).unwrap();
                assert_eq!(lhs, legendre(&a, &p).unwrap() * legendre(&b, &p).unwrap());
            }
        }
    }
}

#[test]
fn legendre_matches_euler_criterion() {
    for p in odd_primes_below(200) {
        for a in 1..p {
            let euler = match modpow(&a, &((p - 1) / 2), &p).unwrap() {
                1 => 1,
                x if x == p - 1 => -1,
                x => panic!("Euler value {x} mod {p}"),
            };
            assert_eq!(legendre(&a, &p).unwrap(), euler, "a = {a}, p = {p}");
        }
    }
}

#[test]
fn field_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for f in small_fields() {
        for _ in 0..40 {
            let x = f.random_nonzero(&mut rng);
            let y = f.random_nonzero(&mut rng);
            let z = f.random_nonzero(&mut rng);
            let xy = f.mul(&x, &y).unwrap();
            assert_eq!(xy, f.mul(&y, &x).unwrap());
            assert_eq!(
                f.mul(&xy, &z).unwrap(),
                f.mul(&x, &f.mul(&y, &z).unwrap()).unwrap()
            );
            let lhs = f.mul(&x, &f.add(&y, &z).unwrap()).unwrap();
            let rhs = f.add(&xy, &f.mul(&x, &z).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(f.add(&x, &y).unwrap(), f.add(&y, &x).unwrap());
            assert!(f.add(&x, &f.neg(&x).unwrap()).unwrap().is_zero());
            assert_eq!(
                f.sub(&x, &y).unwrap(),
                f.add(&x, &f.neg(&y).unwrap()).unwrap()
            );
        }
    }
}

#[test]
fn fermat_and_inverse_exhaustive() {
    for f in small_fields() {
        let q = *f.order();
        for x in f.elements().skip(1) {
            assert!(f.pow(&x, &(q - 1)).unwrap().is_one(), "{x} in F_{q}");
            let inv = f.inv(&x).unwrap();
            assert_eq!(f.pow(&x, &(q - 2)).unwrap(), inv);
            assert!(f.mul(&x, &inv).unwrap().is_one());
            assert_eq!(inv.coeffs().len(), f.degree());
            assert!(inv.coeffs().iter().all(|c| *c < *f.characteristic()));
        }
    }
}

#[test]
fn residue_density_matches_group_count() {
    for f in small_fields() {
        let q_minus_1 = *f.order_minus_one();
        for r in prime_divisors(q_minus_1) {
            let set = residues(&f, &r).unwrap();
            assert_eq!(
                set.len() as u64,
                q_minus_1 / r,
                "r = {r}, q = {}",
                f.order()
            );
            let by_criterion: BTreeSet<_> = f
                .elements()
                .skip(1)
                .filter(|x| is_rth_residue(&f, x, &r).unwrap())
                .collect();
            assert_eq!(by_criterion, set);
        }
        for r in [2u64, 3, 4, 5, 6, 7, 11] {
            let expected = q_minus_1 / r.gcd(&q_minus_1);
            assert_eq!(residues(&f, &r).unwrap().len() as u64, expected);
        }
    }
}

#[test]
fn sampler_is_sound_everywhere() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for f in small_fields() {
        let q_minus_1 = *f.order_minus_one();
        for r in prime_divisors(q_minus_1) {
            for _ in 0..10 {
                let mut c = Counters::default();
                let rho = sample_nonresidue(&f, &r, &mut rng, &mut c).unwrap();
                assert!(!f.pow(&rho, &(q_minus_1 / r)).unwrap().is_one());
                assert!(c.nonresidue_trials >= 1);
            }
        }
    }
}

#[test]
fn sampler_mean_trials_for_squares() {
    let f = FieldCtx::prime(1009u64).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let mut total = 0;
    for _ in 0..1000 {
        let mut c = Counters::default();
        sample_nonresidue(&f, &2, &mut rng, &mut c).unwrap();
        total += c.nonresidue_trials;
    }
    assert!(total as f64 / 1000.0 <= 4.0);
}

#[test]
fn dlog_round_trip() {
    for f in small_fields() {
        let q_minus_1 = *f.order_minus_one();
        for r in prime_divisors(q_minus_1) {
            // every element of order exactly r generates the subgroup
            let generators = f
                .elements()
                .skip(1)
                .filter(|x| !x.is_one() && f.pow(x, &r).unwrap().is_one());
            for a in generators {
                for e in 0..r {
                    let d = f.pow(&a, &e).unwrap();
                    let mut c = Counters::default();
                    assert_eq!(subgroup_dlog(&f, &a, &d, &r, &mut c), Ok(e));
                    assert!(c.dlog_multiplications < r);
                }
            }
        }
    }
}
