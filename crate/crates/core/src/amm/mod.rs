//! Adleman-Manders-Miller root extraction.
//!
//! Square roots ([`sqrt_prime`], [`sqrt_ext`]), cube roots ([`cbrt`]) and
//! general prime-degree roots ([`rth_root`]) all follow the same shape:
//! write `q - 1 = r^t * s` with `r ∤ s`, pick an r-th nonresidue `rho`, and
//! walk the `t - 1` layers of the r-primary part of `F_q^*`, cancelling the
//! component of the working value at each layer with a power of `rho^s`.
//! Exponents coprime to `q - 1` are handled by [`coprime_root`], and
//! [`extract`] dispatches between all of them.
//!
//! Every function verifies `root^r = delta` before returning.

mod cbrt;
mod rth;
mod sqrt;

pub use cbrt::cbrt;
pub use rth::rth_root;
pub use sqrt::{sqrt_ext, sqrt_prime};

use std::collections::BTreeSet;

use rand::Rng;

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::ntcore::{is_probable_prime, least_alpha, mod_inverse};
use crate::scalar::{nat, Nat};

/// `q - 1 = r^t * s` with `gcd(r, s) = 1`, and the least `alpha` with
/// `s | r*alpha - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<N> {
    pub t: u32,
    pub s: N,
    pub alpha: N,
}

impl<N: Nat> Decomposition<N> {
    fn of(q_minus_1: &N, r: &N) -> Result<Self> {
        let (t, s) = crate::ntcore::factor_out(q_minus_1, r)?;
        let alpha = least_alpha(r, &s)?;
        Ok(Decomposition { t, s, alpha })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport<N> {
    pub root: FieldElement<N>,
    /// All r-th roots of `delta`, when requested from [`extract`].
    pub all_roots: Option<Vec<FieldElement<N>>>,
    pub counters: Counters,
    pub params: Decomposition<N>,
}

/// What an algorithm hands back before verification.
pub(crate) struct Outcome<N> {
    root: FieldElement<N>,
    /// A primitive r-th root of unity, `rho^(s * r^(t-1))`.
    unity: Option<FieldElement<N>>,
    counters: Counters,
    params: Decomposition<N>,
}

impl<N: Nat> Outcome<N> {
    fn zero(ctx: &FieldCtx<N>, params: Decomposition<N>) -> Self {
        Outcome {
            root: ctx.zero(),
            unity: None,
            counters: Counters::default(),
            params,
        }
    }
}

/// `x^(r^k)` by `k` successive r-th powers.
pub(crate) fn pow_iter<N: Nat>(
    ctx: &FieldCtx<N>,
    x: &FieldElement<N>,
    r: &N,
    k: u32,
    counters: &mut Counters,
) -> Result<FieldElement<N>> {
    let mut acc = x.clone();
    for _ in 0..k {
        acc = ctx.pow_counted(&acc, r, counters)?;
    }
    Ok(acc)
}

fn finish<N: Nat>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
    outcome: Outcome<N>,
    want_all: bool,
) -> Result<RootReport<N>> {
    let Outcome {
        root,
        unity,
        counters,
        params,
    } = outcome;
    if ctx.pow(&root, r)? != *delta {
        return Err(Error::InternalVerificationFailed);
    }
    let all_roots = if want_all {
        Some(all_roots(ctx, delta, r, &root, unity.as_ref())?)
    } else {
        None
    };
    Ok(RootReport {
        root,
        all_roots,
        counters,
        params,
    })
}

fn all_roots<N: Nat>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
    root: &FieldElement<N>,
    unity: Option<&FieldElement<N>>,
) -> Result<Vec<FieldElement<N>>> {
    let Some(omega) = unity.filter(|_| !delta.is_zero()) else {
        return Ok(vec![root.clone()]);
    };
    let count = r
        .to_usize()
        .ok_or(Error::InvalidArgument("too many roots to list"))?;
    let mut roots = Vec::with_capacity(count);
    let mut k = ctx.one();
    let mut seen = BTreeSet::new();
    for _ in 0..count {
        // the K_i must be pairwise distinct for omega to be primitive
        if !seen.insert(k.clone()) {
            return Err(Error::InternalVerificationFailed);
        }
        let x = ctx.mul(root, &k)?;
        if ctx.pow(&x, r)? != *delta {
            return Err(Error::InternalVerificationFailed);
        }
        roots.push(x);
        k = ctx.mul(&k, omega)?;
    }
    if !k.is_one() {
        return Err(Error::InternalVerificationFailed);
    }
    Ok(roots)
}

/// The unique r-th root when `gcd(r, q - 1) = 1`: `delta^(r^-1 mod q-1)`.
pub fn coprime_root<N: Nat>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
) -> Result<RootReport<N>> {
    let outcome = coprime_outcome(ctx, delta, r)?;
    finish(ctx, delta, r, outcome, false)
}

fn coprime_outcome<N: Nat>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
) -> Result<Outcome<N>> {
    let q_minus_1 = ctx.order_minus_one();
    if !r.gcd(q_minus_1).is_one() {
        return Err(Error::NotCoprime);
    }
    let inverse = mod_inverse(r, q_minus_1)?;
    let mut counters = Counters::default();
    let root = ctx.pow_counted(delta, &inverse, &mut counters)?;
    let params = Decomposition {
        t: 0,
        s: q_minus_1.clone(),
        alpha: inverse,
    };
    Ok(Outcome {
        root,
        unity: None,
        counters,
        params,
    })
}

/// Find an r-th root of `delta`, choosing the algorithm from `r` and `q`.
///
/// * `gcd(r, q - 1) = 1`: [`coprime_root`].
/// * `r = 2`: the Legendre-screened prime-field path on `F_p`, otherwise
///   [`sqrt_ext`].
/// * `r = 3` dividing `q - 1`: [`cbrt`].
/// * any other prime `r | q - 1`: [`rth_root`].
///
/// `delta = 0` yields the root 0. With `want_all` the report also lists all
/// roots, `root * omega^i` for a primitive r-th root of unity `omega`.
pub fn extract<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
    rng: &mut R,
    want_all: bool,
) -> Result<RootReport<N>> {
    if !ctx.contains(delta) {
        return Err(Error::CtxMismatch);
    }
    if *r < nat(2) {
        return Err(Error::UnsupportedExponent);
    }
    let q_minus_1 = ctx.order_minus_one();
    let outcome = if r.gcd(q_minus_1).is_one() {
        coprime_outcome(ctx, delta, r)?
    } else if is_probable_prime(r) {
        if *r == nat(2) {
            if ctx.is_prime_field() {
                sqrt::sqrt_outcome(ctx, delta, rng, sqrt::Variant::Prime)?
            } else {
                sqrt::sqrt_outcome(ctx, delta, rng, sqrt::Variant::Extension)?
            }
        } else if *r == nat(3) {
            cbrt::cbrt_outcome(ctx, delta, rng)?
        } else {
            rth::rth_outcome(ctx, delta, r, rng)?
        }
    } else if delta.is_zero() {
        Outcome::zero(
            ctx,
            Decomposition {
                t: 0,
                s: q_minus_1.clone(),
                alpha: N::zero(),
            },
        )
    } else {
        return Err(Error::UnsupportedExponent);
    };
    finish(ctx, delta, r, outcome, want_all)
}
