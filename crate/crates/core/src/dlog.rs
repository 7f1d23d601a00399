//! Discrete logarithms in a subgroup of small prime order.

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::scalar::Nat;

/// The `e` in `[0, r)` with `a^e = d`, where `a` has order `r`.
///
/// Brute force: walk `1, a, a^2, ...` making at most `r - 1`
/// multiplications, each counted in both `dlog_multiplications` and
/// `field_multiplications`. The order of `a` is not verified.
pub fn subgroup_dlog<N: Nat>(
    ctx: &FieldCtx<N>,
    a: &FieldElement<N>,
    d: &FieldElement<N>,
    r: &N,
    counters: &mut Counters,
) -> Result<N> {
    if !ctx.contains(a) || !ctx.contains(d) {
        return Err(Error::CtxMismatch);
    }
    let mut acc = ctx.one();
    let mut e = N::zero();
    loop {
        if acc == *d {
            return Ok(e);
        }
        e = e + N::one();
        if e >= *r {
            return Err(Error::NotInSubgroup);
        }
        acc = ctx.mul(&acc, a)?;
        counters.dlog_multiplications += 1;
        counters.field_multiplications += 1;
    }
}
