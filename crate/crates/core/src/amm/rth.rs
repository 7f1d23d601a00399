use rand::Rng;

use super::{finish, pow_iter, Decomposition, Outcome, RootReport};
use crate::counters::Counters;
use crate::dlog::subgroup_dlog;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::ntcore::is_probable_prime;
use crate::residue::{
    cofactor_exponent, default_trial_budget, is_rth_residue_counted, sample_screened, Screen,
};
use crate::scalar::Nat;

/// An r-th root of `delta` in `F_q` for a prime `r | q - 1`.
///
/// With `q - 1 = r^t * s` and `s | r*alpha - 1`, the working value starts at
/// `b = delta^(r*alpha - 1)`, which has order dividing `r^(t-1)`. Iteration
/// `i` projects `b` onto the order-r subgroup generated by
/// `a = rho^(s * r^(t-1))`, recovers the exponent `j` with a brute-force
/// discrete log, and multiplies `b` by `(c^r)^j` to strip that layer while
/// accumulating `h *= c^j`. When the loop ends `b = 1`, so
/// `(delta^alpha * h)^r = delta`.
pub fn rth_root<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
    rng: &mut R,
) -> Result<RootReport<N>> {
    let outcome = rth_outcome(ctx, delta, r, rng)?;
    finish(ctx, delta, r, outcome, false)
}

pub(crate) fn rth_outcome<N: Nat, R: Rng + ?Sized>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
    rng: &mut R,
) -> Result<Outcome<N>> {
    if !ctx.contains(delta) {
        return Err(Error::CtxMismatch);
    }
    if *r < N::one() + N::one() {
        return Err(Error::InvalidArgument("r must be at least 2"));
    }
    if !is_probable_prime(r) {
        return Err(Error::RNotPrime);
    }
    cofactor_exponent(ctx, r)?;
    let params = Decomposition::of(ctx.order_minus_one(), r)?;
    if delta.is_zero() {
        return Ok(Outcome::zero(ctx, params));
    }
    let mut counters = Counters::default();
    let c = &mut counters;
    if !is_rth_residue_counted(ctx, delta, r, c)? {
        return Err(Error::NotAResidue);
    }

    let rho = sample_screened(ctx, r, rng, c, default_trial_budget(ctx), Screen::Power)?;

    let t = params.t;
    let s = &params.s;
    let alpha = &params.alpha;
    let mut cc = ctx.pow_counted(&rho, s, c)?;
    let a = pow_iter(ctx, &cc, r, t - 1, c)?;
    // delta^(r*alpha - 1); alpha = 0 only when s = 1, giving delta^-1
    let mut b = if alpha.is_zero() {
        ctx.inv(delta)?
    } else {
        ctx.pow_counted(delta, &(r.clone() * alpha.clone() - N::one()), c)?
    };
    let mut h = ctx.one();
    for i in 1..t {
        let d = pow_iter(ctx, &b, r, t - 1 - i, c)?;
        let j = if d.is_one() {
            N::zero()
        } else {
            let e = subgroup_dlog(ctx, &a, &d, r, c)?;
            r.clone() - e
        };
        let c_r = ctx.pow_counted(&cc, r, c)?;
        if !j.is_zero() {
            let step = ctx.pow_counted(&c_r, &j, c)?;
            b = ctx.mul_counted(&b, &step, c)?;
            let corr = ctx.pow_counted(&cc, &j, c)?;
            h = ctx.mul_counted(&h, &corr, c)?;
        }
        cc = c_r;
        c.loop_iterations += 1;
        debug_assert!(pow_iter(ctx, &b, r, t - 1 - i, &mut Counters::default())?.is_one());
    }

    let lead = ctx.pow_counted(delta, alpha, c)?;
    let root = ctx.mul_counted(&lead, &h, c)?;
    Ok(Outcome {
        root,
        unity: Some(a),
        counters,
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fifth_root_in_f101() {
        // 100 = 5^2 * 4, so t = 2 and the loop runs once
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f101 = FieldCtx::prime(101u64).unwrap();
        assert_eq!(2u64.pow(5), 32);
        let roots: Vec<u64> = (0..101u64)
            .filter(|&x| (0..5).fold(1, |acc, _| acc * x % 101) == 32)
            .collect();
        assert_eq!(roots.len(), 5);
        assert!(roots.contains(&2));
        let rep = rth_root(&f101, &f101.from_nat(&32), &5, &mut rng).unwrap();
        assert!(roots.contains(&rep.root.coeffs()[0]));
        assert_eq!(
            rep.params,
            Decomposition {
                t: 2,
                s: 4,
                alpha: 1
            }
        );
        assert_eq!(rep.counters.loop_iterations, 1);
        assert!(rep.counters.dlog_multiplications <= 4);
    }

    #[test]
    fn matches_cube_roots_in_f19() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f19 = FieldCtx::prime(19u64).unwrap();
        let roots: Vec<u64> = (0..19u64).filter(|x| x * x * x % 19 == 7).collect();
        let rep = rth_root(&f19, &f19.from_nat(&7), &3, &mut rng).unwrap();
        assert!(roots.contains(&rep.root.coeffs()[0]));
    }

    #[test]
    fn s_equal_one_uses_the_inverse() {
        // 9 - 1 = 2^3, s = 1, alpha = 0; 3 - 1 = 2^1 likewise
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f9 = FieldCtx::extension(3u64, vec![1, 0, 1]).unwrap();
        for delta in f9.elements().skip(1) {
            match rth_root(&f9, &delta, &2, &mut rng) {
                Ok(rep) => {
                    assert!(rep.params.alpha == 0 && rep.params.s == 1);
                    assert_eq!(f9.mul(&rep.root, &rep.root).unwrap(), delta);
                }
                Err(e) => assert_eq!(e, Error::NotAResidue),
            }
        }
    }

    #[test]
    fn errors() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f7 = FieldCtx::prime(7u64).unwrap();
        assert_eq!(
            rth_root(&f7, &f7.from_nat(&3), &2, &mut rng),
            Err(Error::NotAResidue)
        );
        let f13 = FieldCtx::prime(13u64).unwrap();
        assert_eq!(
            rth_root(&f13, &f13.from_nat(&3), &4, &mut rng),
            Err(Error::RNotPrime)
        );
        assert_eq!(
            rth_root(&f13, &f13.from_nat(&3), &5, &mut rng),
            Err(Error::RDoesNotDivide)
        );
    }
}
