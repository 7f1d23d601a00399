use rand::Rng;

use super::poly;
use crate::error::{Error, Result};
use crate::scalar::Nat;

/// Rabin's test: a monic `f` of degree `m` is irreducible over `F_p` iff
/// `X^(p^m) ≡ X (mod f)` and `gcd(X^(p^(m/l)) - X, f) = 1` for each prime
/// `l | m`.
pub fn is_irreducible<N: Nat>(p: &N, f: &[N]) -> Result<bool> {
    check_monic(f)?;
    let m = f.len() - 1;
    if m == 0 {
        return Err(Error::InvalidArgument("modulus must have degree >= 1"));
    }
    if m == 1 {
        return Ok(true);
    }
    let x = vec![N::zero(), N::one()];
    // frobenius[k] = X^(p^k) mod f
    let mut frobenius = vec![x.clone()];
    for k in 1..=m {
        let next = poly::pow_mod(&frobenius[k - 1], p, f, p);
        frobenius.push(next);
    }
    if !poly::sub(&frobenius[m], &x, p).is_empty() {
        return Ok(false);
    }
    for l in prime_divisors(m) {
        let diff = poly::sub(&frobenius[m / l], &x, p);
        if poly::gcd(&diff, f, p).len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn check_monic<N: Nat>(f: &[N]) -> Result<()> {
    match f.last() {
        Some(lc) if lc.is_one() => Ok(()),
        _ => Err(Error::NotMonic),
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
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

/// Default number of candidates [`find_irreducible`] tries per unit degree.
pub const IRREDUCIBLE_TRIALS_PER_DEGREE: usize = 64;

/// Random monic irreducible polynomial of degree `m` over `F_p`.
pub fn find_irreducible<N: Nat, R: Rng + ?Sized>(p: &N, m: usize, rng: &mut R) -> Result<Vec<N>> {
    find_irreducible_bounded(p, m, rng, IRREDUCIBLE_TRIALS_PER_DEGREE * m)
}

/// As [`find_irreducible`], giving up after `max_trials` candidates.
pub fn find_irreducible_bounded<N: Nat, R: Rng + ?Sized>(
    p: &N,
    m: usize,
    rng: &mut R,
    max_trials: usize,
) -> Result<Vec<N>> {
    if m < 2 {
        return Err(Error::InvalidArgument("find_irreducible needs degree >= 2"));
    }
    for _ in 0..max_trials {
        let mut f: Vec<N> = (0..m).map(|_| N::random_below(p, rng)).collect();
        f.push(N::one());
        // a zero constant term means X divides f
        if !f[0].is_zero() && is_irreducible(p, &f)? {
            return Ok(f);
        }
    }
    Err(Error::TrialBudgetExceeded(max_trials as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    // Degree <= 3 polynomials are irreducible iff they have no root.
    fn has_root(p: u64, f: &[u64]) -> bool {
        (0..p).any(|x| f.iter().rev().fold(0, |acc, c| (acc * x + c) % p) == 0)
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(is_irreducible(&3u64, &[1, 0, 1]), Ok(true));
        assert_eq!(is_irreducible(&5u64, &[1, 0, 1]), Ok(false));
        assert!(!has_root(3, &[2, 1, 1]));
        assert_eq!(is_irreducible(&3u64, &[2, 1, 1]), Ok(true));
        assert_eq!(is_irreducible(&3u64, &[1, 0, 2]), Err(Error::NotMonic));
    }

    #[test]
    fn agrees_with_root_test_on_all_small_cubics() {
        for p in [3u64, 5, 7] {
            for c0 in 0..p {
                for c1 in 0..p {
                    for c2 in 0..p {
                        let f = [c0, c1, c2, 1];
                        assert_eq!(
                            is_irreducible(&p, &f).unwrap(),
                            !has_root(p, &f),
                            "{f:?} mod {p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quartic_products_of_quadratics_are_rejected() {
        // (X^2 + 1)^2 over F_3 has no root but is reducible
        let f = poly::mul(&[1u64, 0, 1], &[1, 0, 1], &3);
        assert!(!has_root(3, &f));
        assert_eq!(is_irreducible(&3u64, &f), Ok(false));
    }

    #[test]
    fn irreducible_count_matches_necklace_formula() {
        // number of monic irreducible quartics over F_3 is (3^4 - 3^2) / 4 = 18
        let p = 3u64;
        let mut count = 0;
        for code in 0..81u64 {
            let f = [code % 3, code / 3 % 3, code / 9 % 3, code / 27, 1];
            if is_irreducible(&p, &f).unwrap() {
                count += 1;
            }
        }
        assert_eq!(count, 18);
    }

    #[test]
    fn find_produces_irreducibles() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = find_irreducible(&3u64, 2, &mut rng).unwrap();
        assert_eq!(f.len(), 3);
        assert!(is_irreducible(&3u64, &f).unwrap());
        let g = find_irreducible(&5u64, 3, &mut rng).unwrap();
        assert_eq!(g.len(), 4);
        assert!(is_irreducible(&5u64, &g).unwrap());
    }

    #[test]
    fn exhausted_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(
            find_irreducible_bounded(&3u64, 2, &mut rng, 0),
            Err(Error::TrialBudgetExceeded(0))
        );
    }
}
