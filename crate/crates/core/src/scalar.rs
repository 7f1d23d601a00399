//! The unsigned integer abstraction every algorithm in this crate is written
//! against.
//!
//! [`Nat`] is implemented for `u32`, `u64`, `u128` and [`BigUint`]. Modular
//! products never overflow: primitive types widen (or fall back to
//! double-and-add for `u128`), so a field over `u64` is exact as long as its
//! order `p^m` itself fits the type.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, ToPrimitive, Unsigned};
use rand::Rng;

pub trait Nat:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Integer
    + Unsigned
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedMul
    + Send
    + Sync
    + 'static
{
    /// Number of significant bits; zero has zero bits.
    fn bits(&self) -> u64;

    /// Bit `i`, counted from the least significant end.
    fn bit(&self, i: u64) -> bool;

    /// A value drawn uniformly from `[0, bound)`. `bound` must be nonzero.
    ///
    /// Rejection sampling on `bits(bound)`-bit candidates, assembled from the
    /// high halves of 64-bit draws. The procedure does not depend on the
    /// implementing type, so a seeded generator yields the same values for
    /// `u64` and `BigUint`.
    fn random_below<R: Rng + ?Sized>(bound: &Self, rng: &mut R) -> Self {
        assert!(!bound.is_zero(), "empty range");
        let bits = bound.bits();
        loop {
            let mut acc = Self::zero();
            let mut left = bits;
            while left > 0 {
                let take = left.min(32);
                let chunk = rng.next_u64() >> (64 - take);
                let chunk = Self::from_u64(chunk).expect("chunk fits");
                acc = if left == bits {
                    chunk
                } else {
                    acc * Self::from_u64(1 << take).expect("shift fits") + chunk
                };
                left -= take;
            }
            if acc < *bound {
                return acc;
            }
        }
    }

    /// `(self + other) mod m` for operands already reduced below `m`.
    fn add_mod(&self, other: &Self, m: &Self) -> Self {
        let gap = m.clone() - other.clone();
        if *self >= gap {
            self.clone() - gap
        } else {
            self.clone() + other.clone()
        }
    }

    /// `(self - other) mod m` for operands already reduced below `m`.
    fn sub_mod(&self, other: &Self, m: &Self) -> Self {
        if self >= other {
            self.clone() - other.clone()
        } else {
            m.clone() - (other.clone() - self.clone())
        }
    }

    /// `(self * other) mod m` for operands already reduced below `m`.
    fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        // Double-and-add; only reached by types without a wider companion.
        let mut acc = Self::zero();
        let mut addend = self.clone();
        for i in 0..other.bits() {
            if other.bit(i) {
                acc = acc.add_mod(&addend, m);
            }
            addend = addend.add_mod(&addend, m);
        }
        acc
    }
}

/// Lift a small constant into any [`Nat`].
///
/// Panics if the constant does not fit, which only happens for `u32` with
/// constants beyond `u32::MAX`.
pub(crate) fn nat<N: Nat>(v: u64) -> N {
    N::from_u64(v).expect("constant fits the scalar type")
}

macro_rules! impl_nat_primitive {
    ($t:ty, $wide:ty) => {
        impl Nat for $t {
            fn bits(&self) -> u64 {
                u64::from(<$t>::BITS - self.leading_zeros())
            }

            fn bit(&self, i: u64) -> bool {
                i < u64::from(<$t>::BITS) && (self >> i) & 1 == 1
            }

            fn mul_mod(&self, other: &Self, m: &Self) -> Self {
                ((<$wide>::from(*self) * <$wide>::from(*other)) % <$wide>::from(*m)) as $t
            }
        }
    };
}

impl_nat_primitive!(u32, u64);
impl_nat_primitive!(u64, u128);

impl Nat for u128 {
    fn bits(&self) -> u64 {
        u64::from(u128::BITS - self.leading_zeros())
    }

    fn bit(&self, i: u64) -> bool {
        i < u64::from(u128::BITS) && (self >> i) & 1 == 1
    }

    fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        match u128::checked_mul(*self, *other) {
            Some(prod) => prod % m,
            None => {
                let mut acc = 0u128;
                let mut addend = *self;
                for i in 0..other.bits() {
                    if other.bit(i) {
                        acc = acc.add_mod(&addend, m);
                    }
                    addend = addend.add_mod(&addend, m);
                }
                acc
            }
        }
    }
}

impl Nat for BigUint {
    fn bits(&self) -> u64 {
        BigUint::bits(self)
    }

    fn bit(&self, i: u64) -> bool {
        BigUint::bit(self, i)
    }

    fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self * other) % m
    }
}
