//! Integer-level number theory over any [`Nat`].

mod legendre;

pub use legendre::legendre;

use crate::error::{Error, Result};
use crate::scalar::{nat, Nat};

/// `base^exp mod modulus` by left-to-right repeated squaring.
pub fn modpow<N: Nat>(base: &N, exp: &N, modulus: &N) -> Result<N> {
    if *modulus < nat(2) {
        return Err(Error::ModulusTooSmall);
    }
    let b = base.mod_floor(modulus);
    let mut acc = N::one();
    for i in (0..exp.bits()).rev() {
        acc = acc.mul_mod(&acc, modulus);
        if exp.bit(i) {
            acc = acc.mul_mod(&b, modulus);
        }
    }
    Ok(acc)
}

/// A signed Bézout coefficient in sign-magnitude form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cofactor<N> {
    pub negative: bool,
    pub magnitude: N,
}

impl<N: Nat> Cofactor<N> {
    fn from_nat(magnitude: N) -> Self {
        Cofactor {
            negative: false,
            magnitude,
        }
    }

    // self - k * other
    fn sub_scaled(&self, k: &N, other: &Self) -> Self {
        let scaled = k.clone() * other.magnitude.clone();
        let scaled_negative = !other.negative;
        if self.negative == scaled_negative {
            return Cofactor {
                negative: self.negative,
                magnitude: self.magnitude.clone() + scaled,
            };
        }
        if self.magnitude >= scaled {
            let magnitude = self.magnitude.clone() - scaled;
            Cofactor {
                negative: self.negative && !magnitude.is_zero(),
                magnitude,
            }
        } else {
            Cofactor {
                negative: scaled_negative,
                magnitude: scaled - self.magnitude.clone(),
            }
        }
    }

    /// The coefficient as an `i128`, if it fits.
    pub fn to_i128(&self) -> Option<i128> {
        let m = self.magnitude.to_i128()?;
        Some(if self.negative { -m } else { m })
    }
}

/// Extended Euclid: `(g, x, y)` with `g = gcd(a, b)` and `a*x + b*y = g`.
pub fn ext_gcd<N: Nat>(a: &N, b: &N) -> Result<(N, Cofactor<N>, Cofactor<N>)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_x, mut x) = (Cofactor::from_nat(N::one()), Cofactor::from_nat(N::zero()));
    let (mut old_y, mut y) = (Cofactor::from_nat(N::zero()), Cofactor::from_nat(N::one()));
    while !r.is_zero() {
        let (quot, rem) = old_r.div_rem(&r);
        old_r = std::mem::replace(&mut r, rem);
        let next_x = old_x.sub_scaled(&quot, &x);
        old_x = std::mem::replace(&mut x, next_x);
        let next_y = old_y.sub_scaled(&quot, &y);
        old_y = std::mem::replace(&mut y, next_y);
    }
    Ok((old_r, old_x, old_y))
}

/// The unique `u` in `[1, n)` with `a*u ≡ 1 (mod n)`.
pub fn mod_inverse<N: Nat>(a: &N, n: &N) -> Result<N> {
    if *n < nat(2) {
        return Err(Error::ModulusTooSmall);
    }
    let (g, x, _) = ext_gcd(&a.mod_floor(n), n)?;
    if !g.is_one() {
        return Err(Error::NotInvertible);
    }
    let mag = x.magnitude.mod_floor(n);
    Ok(if x.negative && !mag.is_zero() {
        n.clone() - mag
    } else {
        mag
    })
}

/// Split `n = r^t * s` with `r ∤ s` and `t` maximal.
pub fn factor_out<N: Nat>(n: &N, r: &N) -> Result<(u32, N)> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("factor_out needs n >= 1"));
    }
    if *r < nat(2) {
        return Err(Error::InvalidArgument("factor_out needs r >= 2"));
    }
    let mut t = 0u32;
    let mut s = n.clone();
    loop {
        let (quot, rem) = s.div_rem(r);
        if !rem.is_zero() {
            return Ok((t, s));
        }
        s = quot;
        t += 1;
    }
}

/// Least `alpha >= 0` with `s | r*alpha - 1`.
pub fn least_alpha<N: Nat>(r: &N, s: &N) -> Result<N> {
    if s.is_zero() {
        return Err(Error::InvalidArgument("least_alpha needs s >= 1"));
    }
    if !r.gcd(s).is_one() {
        return Err(Error::NotCoprime);
    }
    if s.is_one() {
        return Ok(N::zero());
    }
    mod_inverse(r, s)
}

const WITNESSES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Strong-pseudoprime test against the first twenty prime bases.
///
/// Deterministic below 3.3·10^24; beyond that a composite passing every base
/// is astronomically unlikely but not impossible.
pub fn is_probable_prime<N: Nat>(n: &N) -> bool {
    let two: N = nat(2);
    if *n < two {
        return false;
    }
    for &w in &WITNESSES {
        if let Some(w) = N::from_u64(w) {
            if *n == w {
                return true;
            }
            if n.mod_floor(&w).is_zero() {
                return false;
            }
        }
    }
    let n_minus_1 = n.clone() - N::one();
    let (k, d) = factor_out(&n_minus_1, &two).expect("n - 1 >= 1");
    'witness: for &w in &WITNESSES {
        let Some(w) = N::from_u64(w) else { continue };
        let mut x = modpow(&w, &d, n).expect("n >= 2");
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..k {
            x = x.mul_mod(&x, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
