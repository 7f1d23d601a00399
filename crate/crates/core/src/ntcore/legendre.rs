use crate::error::{Error, Result};
use crate::scalar::{nat, Nat};

/// Legendre symbol `(a / p)` for an odd prime `p`.
///
/// Computed with the reciprocity-based Euclidean reduction (the Jacobi
/// symbol algorithm), never by exponentiation, so it runs in quadratic
/// rather than cubic bit time. Returns `0` when `p | a`.
///
/// Primality of `p` is not checked; for composite odd `p` the result is the
/// Jacobi symbol.
pub fn legendre<N: Nat>(a: &N, p: &N) -> Result<i8> {
    if p.is_even() {
        return Err(Error::EvenModulus);
    }
    let three: N = nat(3);
    let four: N = nat(4);
    let five: N = nat(5);
    let eight: N = nat(8);
    let two: N = nat(2);

    let mut num = a.mod_floor(p);
    let mut den = p.clone();
    let mut sign = 1i8;
    while !num.is_zero() {
        while num.is_even() {
            num = num / two.clone();
            // second supplementary law
            let m8 = den.mod_floor(&eight);
            if m8 == three || m8 == five {
                sign = -sign;
            }
        }
        std::mem::swap(&mut num, &mut den);
        if num.mod_floor(&four) == three && den.mod_floor(&four) == three {
            sign = -sign;
        }
        num = num.mod_floor(&den);
    }
    Ok(if den.is_one() { sign } else { 0 })
}
