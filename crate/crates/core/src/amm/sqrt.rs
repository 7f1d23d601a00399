use rand::Rng;

use super::{finish, Decomposition, Outcome, RootReport};
use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::ntcore::legendre;
use crate::residue::{default_trial_budget, is_rth_residue_counted, sample_screened, Screen};
use crate::scalar::{nat, Nat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Variant {
    /// `F_p`: residuosity decided by the Legendre symbol.
    Prime,
    /// `F_{p^m}`: residuosity decided by Euler's criterion.
    Extension,
}

/// Square root of `delta` in `F_p`, `p` an odd prime.
///
/// Nonresidue candidates are screened with the Legendre symbol.
pub fn sqrt_prime<N: Nat, R: Rng + ?Sized>(p: &N, delta: &N, rng: &mut R) -> Result<RootReport<N>> {
    let ctx = FieldCtx::prime(p.clone())?;
    let delta = ctx.element(vec![delta.clone()])?;
    let outcome = sqrt_outcome(&ctx, &delta, rng, Variant::Prime)?;
    finish(&ctx, &delta, &nat(2), outcome, false)
}

/// Square root of `delta` in any field of odd characteristic, screening
/// candidates by `rho^((q-1)/2) != 1`.
pub fn sqrt_ext<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    rng: &mut R,
) -> Result<RootReport<N>> {
    let outcome = sqrt_outcome(ctx, delta, rng, Variant::Extension)?;
    finish(ctx, delta, &nat(2), outcome, false)
}

pub(crate) fn sqrt_outcome<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    rng: &mut R,
    variant: Variant,
) -> Result<Outcome<N>> {
    if !ctx.contains(delta) {
        return Err(Error::CtxMismatch);
    }
    let two: N = nat(2);
    let params = Decomposition::of(ctx.order_minus_one(), &two)?;
    if delta.is_zero() {
        return Ok(Outcome::zero(ctx, params));
    }
    let mut c = Counters::default();
    let screen = match variant {
        Variant::Prime => {
            if legendre(&delta.coeffs()[0], ctx.characteristic())? != 1 {
                return Err(Error::NotAResidue);
            }
            Screen::Legendre
        }
        Variant::Extension => {
            if !is_rth_residue_counted(ctx, delta, &two, &mut c)? {
                return Err(Error::NotAResidue);
            }
            Screen::Power
        }
    };

    let rho = sample_screened(ctx, &two, rng, &mut c, default_trial_budget(ctx), screen)?;

    let t = params.t;
    let s = &params.s;
    let mut a = ctx.pow_counted(&rho, s, &mut c)?;
    let mut b = ctx.pow_counted(delta, s, &mut c)?;
    let mut h = ctx.one();
    for i in 1..t {
        let d = super::pow_iter(ctx, &b, &two, t - 1 - i, &mut c)?;
        let a_sq = ctx.mul_counted(&a, &a, &mut c)?;
        if !d.is_one() {
            b = ctx.mul_counted(&b, &a_sq, &mut c)?;
            h = ctx.mul_counted(&h, &a, &mut c)?;
        }
        a = a_sq;
        c.loop_iterations += 1;
        debug_assert!(ctx.pow(&b, &pow2(t - 1 - i))?.is_one());
    }

    let half = (s.clone() + N::one()) / two;
    let lead = ctx.pow_counted(delta, &half, &mut c)?;
    let root = ctx.mul_counted(&lead, &h, &mut c)?;
    // a = rho^(s * 2^(t-1)) = -1 once the loop has run its t - 1 squarings
    Ok(Outcome {
        root,
        unity: Some(a),
        counters: c,
        params,
    })
}

fn pow2<N: Nat>(k: u32) -> N {
    num_traits::pow(nat(2), k as usize)
}
