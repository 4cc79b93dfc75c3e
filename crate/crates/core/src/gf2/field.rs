use std::fmt;
use std::sync::Arc;

use super::poly::{is_irreducible, poly_mul_mod};
use super::BinaryPolynomial;
use crate::error::{invalid, Result};

/// GF(2^m) realised as GF(2)[x] modulo an irreducible polynomial of degree `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    m: usize,
    modulus: BinaryPolynomial,
}

impl FieldContext {
    pub fn new(modulus: BinaryPolynomial) -> Result<Arc<Self>> {
        if !is_irreducible(&modulus)? {
            return Err(invalid(format!("modulus {modulus} is reducible")));
        }
        let m = modulus.degree().expect("irreducible implies nonzero");
        if m >= 127 {
            return Err(invalid("extension degree must be below 127"));
        }
        Ok(Arc::new(Self { m, modulus }))
    }

    /// Field built on the smallest irreducible of degree `m`.
    pub fn with_degree(m: usize) -> Result<Arc<Self>> {
        Self::new(super::poly::find_irreducible(m)?)
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &BinaryPolynomial {
        &self.modulus
    }

    /// `2^m - 1`, the order of the multiplicative group.
    pub fn group_order(&self) -> u128 {
        (1u128 << self.m) - 1
    }

    pub fn element(self: &Arc<Self>, value: BinaryPolynomial) -> FieldElement {
        let value = value.rem(&self.modulus).expect("modulus is nonzero");
        FieldElement {
            value,
            ctx: Arc::clone(self),
        }
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.element(BinaryPolynomial::zero())
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.element(BinaryPolynomial::one())
    }

    /// Element whose polynomial representation is the integer `bits`.
    pub fn from_u128(self: &Arc<Self>, bits: u128) -> FieldElement {
        self.element(BinaryPolynomial::from_u128(bits))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    value: BinaryPolynomial,
    ctx: Arc<FieldContext>,
}

impl FieldElement {
    pub fn value(&self) -> &BinaryPolynomial {
        &self.value
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// The element lies in the prime subfield GF(2).
    pub fn is_prime_field(&self) -> bool {
        self.value.degree().map_or(true, |d| d == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        Self {
            value: self.value.add(&other.value),
            ctx: Arc::clone(&self.ctx),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        Self {
            value: poly_mul_mod(&self.value, &other.value, &self.ctx.modulus)
                .expect("modulus is nonzero"),
            ctx: Arc::clone(&self.ctx),
        }
    }

    pub fn pow(&self, e: u128) -> Self {
        Self {
            value: self
                .value
                .pow_mod(e, &self.ctx.modulus)
                .expect("modulus is nonzero"),
            ctx: Arc::clone(&self.ctx),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.ctx.group_order() - 1))
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self) -> Option<u128> {
        if self.is_zero() {
            return None;
        }
        let mut n = self.ctx.group_order();
        for q in prime_factors(n) {
            while n % q == 0 && self.pow(n / q).is_one() {
                n /= q;
            }
        }
        Some(n)
    }

    pub fn has_order(&self, n: u128) -> bool {
        n > 0
            && self.pow(n).is_one()
            && prime_factors(n)
                .into_iter()
                .all(|q| !self.pow(n / q).is_one())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({} mod {})", self.value, self.ctx.modulus)
    }
}

/// Distinct prime divisors by trial division.
pub(crate) fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut q = 2u128;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Deterministic element of exact multiplicative order `n`: scan nonzero
/// elements `β` by increasing polynomial value and return `β^((2^m-1)/n)`
/// for the first one whose power has order exactly `n`.
pub fn element_of_order(ctx: &Arc<FieldContext>, n: u128) -> Result<FieldElement> {
    let q = ctx.group_order();
    if n == 0 || q % n != 0 {
        return Err(invalid(format!(
            "{n} does not divide 2^{} - 1",
            ctx.degree()
        )));
    }
    let cofactor = q / n;
    (1..=q)
        .map(|bits| ctx.from_u128(bits).pow(cofactor))
        .find(|cand| cand.has_order(n))
        .ok_or_else(|| crate::Error::Internal(format!("no element of order {n} found")))
}
