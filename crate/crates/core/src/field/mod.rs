//! Prime fields `F_p` and extensions `F_p[X]/(f)`.
//!
//! Every element is a dense coefficient vector of length `m` in the monomial
//! basis, constant term first; prime-field elements have length one. An
//! element remembers a fingerprint of the field it was made in, and mixing
//! elements of different fields is reported as [`Error::CtxMismatch`].

mod irreducible;
pub(crate) mod poly;

pub use irreducible::{
    find_irreducible, find_irreducible_bounded, is_irreducible, IRREDUCIBLE_TRIALS_PER_DEGREE,
};

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::Rng;

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::ntcore::mod_inverse;
use crate::scalar::{nat, Nat};

/// An immutable description of `F_q`, `q = p^m`.
#[derive(Debug, Clone)]
pub struct FieldCtx<N> {
    tag: u64,
    p: N,
    modulus: Vec<N>,
    order: N,
    order_minus_one: N,
}

impl<N: Nat> PartialEq for FieldCtx<N> {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl<N: Nat> Eq for FieldCtx<N> {}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement<N> {
    coeffs: Vec<N>,
    tag: u64,
}

impl<N: Nat> FieldElement<N> {
    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[N] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

impl<N: Nat> fmt::Display for FieldElement<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coeffs(&self.coeffs))
    }
}

/// Comma-separated decimal coefficients, constant term first.
pub fn format_coeffs<N: Nat>(coeffs: &[N]) -> String {
    coeffs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Inverse of [`format_coeffs`]; no range checking.
pub fn parse_coeffs<N: Nat>(text: &str) -> Result<Vec<N>> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<N>()
                .map_err(|_| Error::Parse(part.to_string()))
        })
        .collect()
}

fn fingerprint<N: Nat>(p: &N, modulus: &[N]) -> u64 {
    let mut h = DefaultHasher::new();
    p.hash(&mut h);
    modulus.hash(&mut h);
    h.finish()
}

fn check_characteristic<N: Nat>(p: &N) -> Result<()> {
    if p.is_even() {
        Err(Error::EvenCharacteristic)
    } else if *p < nat(3) {
        Err(Error::CharTooSmall)
    } else {
        Ok(())
    }
}

impl<N: Nat> FieldCtx<N> {
    /// `F_p`. Primality of `p` is the caller's responsibility.
    pub fn prime(p: N) -> Result<Self> {
        check_characteristic(&p)?;
        let modulus = vec![N::zero(), N::one()];
        Ok(FieldCtx {
            tag: fingerprint(&p, &modulus),
            order_minus_one: p.clone() - N::one(),
            order: p.clone(),
            p,
            modulus,
        })
    }

    /// `F_p[X]/(f)` for a monic irreducible `f`, given constant term first.
    ///
    /// A degree-one modulus yields the prime field.
    pub fn extension(p: N, modulus: Vec<N>) -> Result<Self> {
        check_characteristic(&p)?;
        if let Some(c) = modulus.iter().find(|c| **c >= p) {
            return Err(Error::CoefficientOutOfRange(c.to_string()));
        }
        irreducible::check_monic(&modulus)?;
        let m = modulus.len() - 1;
        if m == 0 {
            return Err(Error::InvalidArgument("modulus must have degree >= 1"));
        }
        if m == 1 {
            return Self::prime(p);
        }
        if !is_irreducible(&p, &modulus)? {
            return Err(Error::NotIrreducible);
        }
        let mut order = N::one();
        for _ in 0..m {
            order = order.checked_mul(&p).ok_or(Error::ScalarOverflow)?;
        }
        Ok(FieldCtx {
            tag: fingerprint(&p, &modulus),
            order_minus_one: order.clone() - N::one(),
            order,
            p,
            modulus,
        })
    }

    pub fn characteristic(&self) -> &N {
        &self.p
    }

    /// Extension degree `m`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The modulus polynomial, constant term first (`X` for prime fields).
    pub fn modulus(&self) -> &[N] {
        &self.modulus
    }

    /// `q = p^m`.
    pub fn order(&self) -> &N {
        &self.order
    }

    /// `q - 1`, the order of the multiplicative group.
    pub fn order_minus_one(&self) -> &N {
        &self.order_minus_one
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree() == 1
    }

    pub fn contains(&self, x: &FieldElement<N>) -> bool {
        x.tag == self.tag
    }

    fn wrap(&self, coeffs: Vec<N>) -> FieldElement<N> {
        FieldElement {
            coeffs,
            tag: self.tag,
        }
    }

    pub fn zero(&self) -> FieldElement<N> {
        self.wrap(vec![N::zero(); self.degree()])
    }

    pub fn one(&self) -> FieldElement<N> {
        self.from_nat(&N::one())
    }

    /// The constant `v mod p`.
    pub fn from_nat(&self, v: &N) -> FieldElement<N> {
        let mut coeffs = vec![N::zero(); self.degree()];
        coeffs[0] = v.mod_floor(&self.p);
        self.wrap(coeffs)
    }

    /// Build an element from exactly `m` reduced coefficients.
    pub fn element(&self, coeffs: Vec<N>) -> Result<FieldElement<N>> {
        if coeffs.len() != self.degree() {
            return Err(Error::WrongLength {
                expected: self.degree(),
                got: coeffs.len(),
            });
        }
        if let Some(c) = coeffs.iter().find(|c| **c >= self.p) {
            return Err(Error::CoefficientOutOfRange(c.to_string()));
        }
        Ok(self.wrap(coeffs))
    }

    /// Parse the `c0,c1,...` text encoding.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement<N>> {
        self.element(parse_coeffs(text)?)
    }

    /// Every element of the field, in increasing coefficient order with the
    /// constant term varying fastest.
    pub fn elements(&self) -> Elements<'_, N> {
        Elements {
            ctx: self,
            next: Some(vec![N::zero(); self.degree()]),
        }
    }

    fn check(&self, x: &FieldElement<N>) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    pub fn add(&self, x: &FieldElement<N>, y: &FieldElement<N>) -> Result<FieldElement<N>> {
        self.check(x)?;
        self.check(y)?;
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(a, b)| a.add_mod(b, &self.p))
            .collect();
        Ok(self.wrap(coeffs))
    }

    pub fn sub(&self, x: &FieldElement<N>, y: &FieldElement<N>) -> Result<FieldElement<N>> {
        self.check(x)?;
        self.check(y)?;
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(a, b)| a.sub_mod(b, &self.p))
            .collect();
        Ok(self.wrap(coeffs))
    }

    pub fn neg(&self, x: &FieldElement<N>) -> Result<FieldElement<N>> {
        self.check(x)?;
        let coeffs = x
            .coeffs
            .iter()
            .map(|a| N::zero().sub_mod(a, &self.p))
            .collect();
        Ok(self.wrap(coeffs))
    }

    pub fn mul(&self, x: &FieldElement<N>, y: &FieldElement<N>) -> Result<FieldElement<N>> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    /// [`FieldCtx::mul`], tallied in `counters.field_multiplications`.
    pub fn mul_counted(
        &self,
        x: &FieldElement<N>,
        y: &FieldElement<N>,
        counters: &mut Counters,
    ) -> Result<FieldElement<N>> {
        let out = self.mul(x, y)?;
        counters.field_multiplications += 1;
        Ok(out)
    }

    fn mul_unchecked(&self, x: &FieldElement<N>, y: &FieldElement<N>) -> FieldElement<N> {
        let m = self.degree();
        let p = &self.p;
        if m == 1 {
            return self.wrap(vec![x.coeffs[0].mul_mod(&y.coeffs[0], p)]);
        }
        let mut prod = vec![N::zero(); 2 * m - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                prod[i + j] = prod[i + j].add_mod(&a.mul_mod(b, p), p);
            }
        }
        // fold X^k for k >= m back using the monic modulus
        for k in (m..prod.len()).rev() {
            let lead = std::mem::replace(&mut prod[k], N::zero());
            if lead.is_zero() {
                continue;
            }
            for (i, f) in self.modulus[..m].iter().enumerate() {
                let idx = k - m + i;
                prod[idx] = prod[idx].sub_mod(&lead.mul_mod(f, p), p);
            }
        }
        prod.truncate(m);
        self.wrap(prod)
    }

    pub fn inv(&self, x: &FieldElement<N>) -> Result<FieldElement<N>> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if self.is_prime_field() {
            return Ok(self.wrap(vec![mod_inverse(&x.coeffs[0], &self.p)?]));
        }
        let inv = poly::inverse_mod(&x.coeffs, &self.modulus, &self.p).ok_or(Error::ZeroInverse)?;
        let mut coeffs = inv;
        coeffs.resize(self.degree(), N::zero());
        Ok(self.wrap(coeffs))
    }

    /// `x^e` by repeated squaring; `0^0 = 1`.
    pub fn pow(&self, x: &FieldElement<N>, e: &N) -> Result<FieldElement<N>> {
        self.pow_counted(x, e, &mut Counters::default())
    }

    /// [`FieldCtx::pow`], tallying every squaring and multiplication.
    pub fn pow_counted(
        &self,
        x: &FieldElement<N>,
        e: &N,
        counters: &mut Counters,
    ) -> Result<FieldElement<N>> {
        self.check(x)?;
        let mut acc = self.one();
        let mut started = false;
        for i in (0..e.bits()).rev() {
            if started {
                acc = self.mul_unchecked(&acc, &acc);
                counters.field_multiplications += 1;
            }
            if e.bit(i) {
                if started {
                    acc = self.mul_unchecked(&acc, x);
                    counters.field_multiplications += 1;
                } else {
                    acc = x.clone();
                    started = true;
                }
            }
        }
        Ok(acc)
    }

    /// Uniform draw from the nonzero elements.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement<N> {
        loop {
            let coeffs: Vec<N> = (0..self.degree())
                .map(|_| N::random_below(&self.p, rng))
                .collect();
            if coeffs.iter().any(|c| !c.is_zero()) {
                return self.wrap(coeffs);
            }
        }
    }
}

/// Iterator over all `q` elements of a field; see [`FieldCtx::elements`].
pub struct Elements<'a, N> {
    ctx: &'a FieldCtx<N>,
    next: Option<Vec<N>>,
}

impl<N: Nat> Iterator for Elements<'_, N> {
    type Item = FieldElement<N>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for c in succ.iter_mut() {
            *c = c.clone() + N::one();
            if *c < self.ctx.p {
                carried = false;
                break;
            }
            *c = N::zero();
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(self.ctx.wrap(current))
    }
}
