use rand::Rng;

use super::{finish, pow_iter, Decomposition, Outcome, RootReport};
use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::residue::{default_trial_budget, is_rth_residue_counted, sample_screened, Screen};
use crate::scalar::{nat, Nat};

/// Cube root of `delta` in `F_q`, `3 | q - 1`.
///
/// With `q - 1 = 3^t * s`, the cofactor is `s = 3l + 1` or `s = 3l - 1`;
/// the loop produces `h` with `delta^s * h^3 = 1`, so `delta^l * h` is a
/// cube root when `s = 3l - 1` and its inverse is one when `s = 3l + 1`.
pub fn cbrt<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    rng: &mut R,
) -> Result<RootReport<N>> {
    let outcome = cbrt_outcome(ctx, delta, rng)?;
    finish(ctx, delta, &nat(3), outcome, false)
}

pub(crate) fn cbrt_outcome<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    rng: &mut R,
) -> Result<Outcome<N>> {
    if !ctx.contains(delta) {
        return Err(Error::CtxMismatch);
    }
    let three: N = nat(3);
    let params = Decomposition::of(ctx.order_minus_one(), &three)?;
    if params.t == 0 {
        return Err(Error::RDoesNotDivide);
    }
    if delta.is_zero() {
        return Ok(Outcome::zero(ctx, params));
    }
    let mut c = Counters::default();
    if !is_rth_residue_counted(ctx, delta, &three, &mut c)? {
        return Err(Error::NotAResidue);
    }

    let rho = sample_screened(
        ctx,
        &three,
        rng,
        &mut c,
        default_trial_budget(ctx),
        Screen::Power,
    )?;

    let t = params.t;
    let s = &params.s;
    let (l, invert) = match s.mod_floor(&three).to_u8() {
        Some(1) => ((s.clone() - N::one()) / three.clone(), true),
        Some(2) => ((s.clone() + N::one()) / three.clone(), false),
        _ => unreachable!("3 does not divide s"),
    };

    let mut a = ctx.pow_counted(&rho, s, &mut c)?;
    let unity = pow_iter(ctx, &a, &three, t - 1, &mut c)?;
    let mut b = ctx.pow_counted(delta, s, &mut c)?;
    let mut h = ctx.one();
    for i in 1..t {
        let d = pow_iter(ctx, &b, &three, t - 1 - i, &mut c)?;
        let k: u8 = if d.is_one() {
            0
        } else if d == unity {
            2
        } else {
            1
        };
        let a_sq = ctx.mul_counted(&a, &a, &mut c)?;
        let a_cube = ctx.mul_counted(&a_sq, &a, &mut c)?;
        match k {
            1 => {
                b = ctx.mul_counted(&b, &a_cube, &mut c)?;
                h = ctx.mul_counted(&h, &a, &mut c)?;
            }
            2 => {
                let a_sixth = ctx.mul_counted(&a_cube, &a_cube, &mut c)?;
                b = ctx.mul_counted(&b, &a_sixth, &mut c)?;
                h = ctx.mul_counted(&h, &a_sq, &mut c)?;
            }
            _ => {}
        }
        a = a_cube;
        c.loop_iterations += 1;
    }

    let lead = ctx.pow_counted(delta, &l, &mut c)?;
    let mut root = ctx.mul_counted(&lead, &h, &mut c)?;
    if invert {
        root = ctx.inv(&root)?;
    }
    Ok(Outcome {
        root,
        unity: Some(unity),
        counters: c,
        params,
    })
}
