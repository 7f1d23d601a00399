//! r-th residue tests and randomized r-th nonresidue search.

use rand::Rng;

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::ntcore::{is_probable_prime, legendre};
use crate::scalar::{nat, Nat};

/// Candidates tried per bit of `q` before [`sample_nonresidue`] gives up.
pub const NONRESIDUE_TRIALS_PER_BIT: u64 = 64;

/// `(q - 1) / r`, after checking `r >= 2` and `r | q - 1`.
pub(crate) fn cofactor_exponent<N: Nat>(ctx: &FieldCtx<N>, r: &N) -> Result<N> {
    if *r < nat(2) {
        return Err(Error::InvalidArgument("r must be at least 2"));
    }
    let (quot, rem) = ctx.order_minus_one().div_rem(r);
    if !rem.is_zero() {
        return Err(Error::RDoesNotDivide);
    }
    Ok(quot)
}

/// Generalized Euler criterion: `delta^((q-1)/r) = 1`.
pub fn is_rth_residue<N: Nat>(ctx: &FieldCtx<N>, delta: &FieldElement<N>, r: &N) -> Result<bool> {
    is_rth_residue_counted(ctx, delta, r, &mut Counters::default())
}

pub(crate) fn is_rth_residue_counted<N: Nat>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
    counters: &mut Counters,
) -> Result<bool> {
    let e = cofactor_exponent(ctx, r)?;
    if delta.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(ctx.pow_counted(delta, &e, counters)?.is_one())
}

/// Default trial budget, `ceil(64 * log2 q)`.
pub fn default_trial_budget<N: Nat>(ctx: &FieldCtx<N>) -> u64 {
    let per_bit = NONRESIDUE_TRIALS_PER_BIT as f64;
    match ctx.order().to_f64() {
        Some(q) if q.is_finite() => (per_bit * q.log2()).ceil() as u64,
        _ => NONRESIDUE_TRIALS_PER_BIT * ctx.order().bits(),
    }
}

/// Draw uniform nonzero candidates until one is an r-th nonresidue.
///
/// For `F_p` with `r = 2` candidates are screened by the Legendre symbol;
/// everything else uses `rho^((q-1)/r) != 1`. `r` must be prime.
pub fn sample_nonresidue<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    r: &N,
    rng: &mut R,
    counters: &mut Counters,
) -> Result<FieldElement<N>> {
    sample_nonresidue_bounded(ctx, r, rng, counters, default_trial_budget(ctx))
}

/// As [`sample_nonresidue`] with an explicit candidate budget.
pub fn sample_nonresidue_bounded<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    r: &N,
    rng: &mut R,
    counters: &mut Counters,
    max_trials: u64,
) -> Result<FieldElement<N>> {
    let screen = if ctx.is_prime_field() && *r == nat(2) {
        Screen::Legendre
    } else {
        Screen::Power
    };
    sample_screened(ctx, r, rng, counters, max_trials, screen)
}

/// How candidate nonresidues are recognized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Screen {
    /// Legendre symbol; prime fields and `r = 2` only.
    Legendre,
    /// `rho^((q-1)/r) != 1`.
    Power,
}

pub(crate) fn sample_screened<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    r: &N,
    rng: &mut R,
    counters: &mut Counters,
    max_trials: u64,
    screen: Screen,
) -> Result<FieldElement<N>> {
    let e = cofactor_exponent(ctx, r)?;
    if !is_probable_prime(r) {
        return Err(Error::RNotPrime);
    }
    debug_assert!(screen == Screen::Power || (ctx.is_prime_field() && *r == nat(2)));
    for _ in 0..max_trials {
        let rho = ctx.random_nonzero(rng);
        counters.nonresidue_trials += 1;
        let nonresidue = match screen {
            Screen::Legendre => legendre(&rho.coeffs()[0], ctx.characteristic())? == -1,
            Screen::Power => !ctx.pow_counted(&rho, &e, counters)?.is_one(),
        };
        if nonresidue {
            return Ok(rho);
        }
    }
    Err(Error::TrialBudgetExceeded(max_trials))
}
