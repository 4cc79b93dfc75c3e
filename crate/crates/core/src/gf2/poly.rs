use std::fmt;

use super::BitVector;
use crate::error::{invalid, Result};

/// Univariate polynomial over GF(2). Bit `i` of the coefficient vector is
/// the coefficient of `x^i`; the vector is kept trimmed so that its length
/// is `degree + 1` (zero for the zero polynomial).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryPolynomial {
    coeffs: BitVector,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        Self {
            coeffs: BitVector::zeros(0),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        Self {
            coeffs: BitVector::from_indices(d + 1, [d]),
        }
    }

    /// Polynomial with coefficient of `x^i` at bit `i` of `bits`.
    pub fn from_u128(bits: u128) -> Self {
        Self::from_coefficients(BitVector::from_u128(128, bits))
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let exps: Vec<usize> = exps.into_iter().collect();
        let len = exps.iter().max().map_or(0, |&d| d + 1);
        let mut coeffs = BitVector::zeros(len);
        for e in exps {
            coeffs.flip(e);
        }
        Self::from_coefficients(coeffs)
    }

    pub fn from_coefficients(coeffs: BitVector) -> Self {
        let len = coeffs.highest_one().map_or(0, |d| d + 1);
        Self {
            coeffs: coeffs.resized(len),
        }
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn coeff(&self, i: usize) -> bool {
        i < self.coeffs.len() && self.coeffs.get(i)
    }

    pub fn coefficients(&self) -> &BitVector {
        &self.coeffs
    }

    /// Coefficients as a vector of the given length (`len > degree`).
    pub fn to_bitvector(&self, len: usize) -> BitVector {
        assert!(
            self.coeffs.len() <= len,
            "polynomial does not fit in {len} bits"
        );
        self.coeffs.resized(len)
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.coeffs.to_u128()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.weight()
    }

    pub fn exponents(&self) -> Vec<usize> {
        self.coeffs.support()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut c = self.coeffs.resized(len);
        c ^= &other.coeffs.resized(len);
        Self::from_coefficients(c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Self::zero();
        };
        let len = da + db + 1;
        let mut acc = BitVector::zeros(len);
        let shifted = other.coeffs.resized(len);
        for i in self.coeffs.ones_iter() {
            acc ^= &shifted.shifted_up(i, len);
        }
        Self::from_coefficients(acc)
    }

    /// `x^k * self`.
    pub fn shl(&self, k: usize) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Self {
                coeffs: self.coeffs.shifted_up(k, d + k + 1),
            },
        }
    }

    /// Quotient and remainder. Fails on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| invalid("division by the zero polynomial"))?;
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(dd);
        let mut quot = BitVector::zeros(qlen);
        while let Some(dr) = rem.highest_one() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            quot.flip(shift);
            rem ^= &divisor.coeffs.shifted_up(shift, rem.len());
        }
        Ok((Self::from_coefficients(quot), Self::from_coefficients(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one().rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mul_mod(&acc, &base, modulus)?;
            }
            base = poly_mul_mod(&base, &base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Reverse the coefficient order: `x^deg * f(1/x)`.
    pub fn reciprocal(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Self::from_exponents(self.exponents().into_iter().map(|i| d - i)),
        }
    }
}

/// `(a * b) mod modulus`.
pub fn poly_mul_mod(
    a: &BinaryPolynomial,
    b: &BinaryPolynomial,
    modulus: &BinaryPolynomial,
) -> Result<BinaryPolynomial> {
    if modulus.is_zero() {
        return Err(invalid("modulus must be nonzero"));
    }
    a.mul(b).rem(modulus)
}

/// Irreducibility over GF(2): `f` of degree `d` is irreducible iff
/// `gcd(x^(2^i) - x, f) = 1` for every `1 <= i <= d/2`.
pub fn is_irreducible(f: &BinaryPolynomial) -> Result<bool> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(invalid("irreducibility needs a polynomial of degree >= 1")),
    };
    let x = BinaryPolynomial::monomial(1);
    let mut power = x.rem(f)?;
    for _ in 1..=d / 2 {
        power = poly_mul_mod(&power, &power, f)?;
        if !power.add(&x).gcd(f).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest irreducible polynomial of degree `m`, ordering polynomials by the
/// integer whose bit `i` is the coefficient of `x^i`.
pub fn find_irreducible(m: usize) -> Result<BinaryPolynomial> {
    if m == 0 {
        return Err(invalid("degree must be at least 1"));
    }
    if m >= 127 {
        return Err(invalid("degree must be below 127"));
    }
    let start = 1u128 << m;
    (start..start << 1)
        .map(BinaryPolynomial::from_u128)
        .find(|f| is_irreducible(f).unwrap_or(false))
        .ok_or_else(|| crate::Error::Internal(format!("no irreducible polynomial of degree {m}")))
}

/// Terms from high to low degree, e.g. `x^3+x+1`.
impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPolynomial({self})")
    }
}
