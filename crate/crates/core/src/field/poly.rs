//! Dense polynomials over `Z_p`, constant term first, no trailing zeros.
//! The zero polynomial is the empty vector.

use crate::ntcore::mod_inverse;
use crate::scalar::Nat;

pub(crate) fn trim<N: Nat>(mut v: Vec<N>) -> Vec<N> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn sub<N: Nat>(a: &[N], b: &[N], p: &N) -> Vec<N> {
    let len = a.len().max(b.len());
    let zero = N::zero();
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            x.sub_mod(y, p)
        })
        .collect();
    trim(out)
}

pub(crate) fn mul<N: Nat>(a: &[N], b: &[N], p: &N) -> Vec<N> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![N::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_mod(&x.mul_mod(y, p), p);
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero with a leading coefficient
/// invertible mod `p`.
pub(crate) fn div_rem<N: Nat>(a: &[N], b: &[N], p: &N) -> (Vec<N>, Vec<N>) {
    let b = trim(b.to_vec());
    let db = b
        .len()
        .checked_sub(1)
        .expect("division by the zero polynomial");
    let lc_inv = mod_inverse(&b[db], p).expect("leading coefficient is a unit");
    let mut rem = trim(a.to_vec());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![N::zero(); rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = rem[rem.len() - 1].mul_mod(&lc_inv, p);
        for (i, bi) in b.iter().enumerate() {
            let t = c.mul_mod(bi, p);
            rem[shift + i] = rem[shift + i].sub_mod(&t, p);
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub(crate) fn rem<N: Nat>(a: &[N], b: &[N], p: &N) -> Vec<N> {
    div_rem(a, b, p).1
}

/// Monic gcd (the zero polynomial if both inputs are zero).
pub(crate) fn gcd<N: Nat>(a: &[N], b: &[N], p: &N) -> Vec<N> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = std::mem::replace(&mut y, r);
    }
    make_monic(x, p)
}

fn make_monic<N: Nat>(v: Vec<N>, p: &N) -> Vec<N> {
    match v.last() {
        None => v,
        Some(lc) if lc.is_one() => v,
        Some(lc) => {
            let inv = mod_inverse(lc, p).expect("nonzero coefficient is a unit");
            v.iter().map(|c| c.mul_mod(&inv, p)).collect()
        }
    }
}

pub(crate) fn mul_mod<N: Nat>(a: &[N], b: &[N], f: &[N], p: &N) -> Vec<N> {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn pow_mod<N: Nat>(base: &[N], e: &N, f: &[N], p: &N) -> Vec<N> {
    let base = rem(base, f, p);
    let mut acc = rem(&[N::one()], f, p);
    for i in (0..e.bits()).rev() {
        acc = mul_mod(&acc, &acc, f, p);
        if e.bit(i) {
            acc = mul_mod(&acc, &base, f, p);
        }
    }
    acc
}

/// Inverse of `a` modulo `f`, if `gcd(a, f) = 1`.
pub(crate) fn inverse_mod<N: Nat>(a: &[N], f: &[N], p: &N) -> Option<Vec<N>> {
    let (mut r0, mut r1) = (trim(f.to_vec()), rem(a, f, p));
    let (mut s0, mut s1): (Vec<N>, Vec<N>) = (Vec::new(), vec![N::one()]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let next = sub(&s0, &mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, next);
    }
    if r0.len() != 1 {
        return None;
    }
    let c_inv = mod_inverse(&r0[0], p).ok()?;
    let scaled: Vec<N> = s0.iter().map(|c| c.mul_mod(&c_inv, p)).collect();
    Some(rem(&scaled, f, p))
}
