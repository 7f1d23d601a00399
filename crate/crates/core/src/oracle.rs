//! Exhaustive ground truth for small fields.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::scalar::Nat;

/// Largest field order the oracle enumerates by default.
pub const DEFAULT_ORACLE_BOUND: u64 = 1_000_000;

fn check_bound<N: Nat>(ctx: &FieldCtx<N>, bound: u64) -> Result<()> {
    match ctx.order().to_u64() {
        Some(q) if q <= bound => Ok(()),
        _ => Err(Error::FieldTooLarge(ctx.order().to_string())),
    }
}

/// `{x in F_q : x^r = delta}` by enumerating the field.
pub fn brute_root<N: Nat>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
) -> Result<BTreeSet<FieldElement<N>>> {
    brute_root_bounded(ctx, delta, r, DEFAULT_ORACLE_BOUND)
}

pub fn brute_root_bounded<N: Nat>(
    ctx: &FieldCtx<N>,
    delta: &FieldElement<N>,
    r: &N,
    bound: u64,
) -> Result<BTreeSet<FieldElement<N>>> {
    check_bound(ctx, bound)?;
    if !ctx.contains(delta) {
        return Err(Error::CtxMismatch);
    }
    let mut out = BTreeSet::new();
    for x in ctx.elements() {
        if ctx.pow(&x, r)? == *delta {
            out.insert(x);
        }
    }
    Ok(out)
}

/// `{x^r : x in F_q^*}`.
pub fn residues<N: Nat>(ctx: &FieldCtx<N>, r: &N) -> Result<BTreeSet<FieldElement<N>>> {
    residues_bounded(ctx, r, DEFAULT_ORACLE_BOUND)
}

pub fn residues_bounded<N: Nat>(
    ctx: &FieldCtx<N>,
    r: &N,
    bound: u64,
) -> Result<BTreeSet<FieldElement<N>>> {
    check_bound(ctx, bound)?;
    ctx.elements().skip(1).map(|x| ctx.pow(&x, r)).collect()
}

/// Bound used by the exhaustive test suites.
pub const EXHAUSTIVE_SUITE_BOUND: u64 = 343;

/// Field orders `q = p^m <= bound` with `p` odd prime, as `(p, m)` pairs.
pub fn small_field_orders(bound: u64) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    for p in (3..=bound).step_by(2) {
        if !crate::ntcore::is_probable_prime(&p) {
            continue;
        }
        let mut q = p;
        let mut m = 1;
        while q <= bound {
            out.push((p, m));
            q *= p;
            m += 1;
        }
    }
    out.sort_by_key(|&(p, m)| p.pow(m as u32));
    out
}
