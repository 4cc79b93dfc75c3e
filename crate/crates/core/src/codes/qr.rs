use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::linear::{cyclic_code, extend, LinearCode};
use crate::error::{Error, Result};
use crate::gf2::{element_of_order, BinaryPolynomial, FieldContext, FieldElement};

/// Construction data of a binary quadratic residue code of prime length `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QrCodeSpec {
    pub p: u64,
    /// Nonzero squares mod `p`, ascending.
    pub residues: Vec<u64>,
    /// Multiplicative order of 2 mod `p`: the degree of the splitting field.
    pub m: usize,
    /// Modulus of GF(2^m) that hosts the root of unity.
    #[serde(with = "poly_string")]
    pub field_modulus: BinaryPolynomial,
    /// `∏_{r ∈ residues} (x - α^r)`.
    #[serde(with = "poly_string")]
    pub generator_poly: BinaryPolynomial,
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn quadratic_residues(p: u64) -> Vec<u64> {
    (1..p)
        .map(|x| x * x % p)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Smallest `m >= 1` with `2^m ≡ 1 (mod p)`, for odd `p`.
pub fn order_of_two(p: u64) -> usize {
    let mut acc = 2 % p;
    let mut m = 1;
    while acc != 1 {
        acc = acc * 2 % p;
        m += 1;
    }
    m
}

/// Quadratic residue code of prime length `p ≡ ±1 (mod 8)`.
///
/// The generator polynomial is computed from its roots in GF(2^m),
/// `m = ord_p(2)`, using the deterministic root of unity from
/// [`element_of_order`]; every coefficient of the product must land in GF(2).
pub fn qr_code(p: u64) -> Result<(QrCodeSpec, LinearCode)> {
    if !is_prime(p) || p == 2 {
        return Err(Error::UnsupportedParameter(format!(
            "{p} is not an odd prime"
        )));
    }
    if p % 8 != 1 && p % 8 != 7 {
        return Err(Error::UnsupportedParameter(format!(
            "p = {p} is not ±1 mod 8, so 2 is not a quadratic residue"
        )));
    }
    let residues = quadratic_residues(p);
    let m = order_of_two(p);
    let ctx = FieldContext::with_degree(m)?;
    let alpha = element_of_order(&ctx, p as u128)?;

    // product over the residues of (x - α^r), coefficients in GF(2^m)
    let mut coeffs: Vec<FieldElement> = vec![ctx.one()];
    for &r in &residues {
        let root = alpha.pow(r as u128);
        let mut next = vec![ctx.zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].add(&c.mul(&root));
        }
        coeffs = next;
    }
    if let Some(i) = coeffs.iter().position(|c| !c.is_prime_field()) {
        return Err(Error::Internal(format!(
            "coefficient of x^{i} of the QR generator is outside GF(2)"
        )));
    }
    let generator_poly = BinaryPolynomial::from_exponents(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_one())
            .map(|(i, _)| i),
    );
    let code = cyclic_code(p as usize, &generator_poly)?;
    let spec = QrCodeSpec {
        p,
        residues,
        m,
        field_modulus: ctx.modulus().clone(),
        generator_poly,
    };
    Ok((spec, code))
}

/// QR code of length `p` extended by an overall parity bit at index `p`.
pub fn extended_qr_code(p: u64) -> Result<(QrCodeSpec, LinearCode)> {
    let (spec, code) = qr_code(p)?;
    Ok((spec, extend(&code)))
}

mod poly_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::gf2::BinaryPolynomial;

    pub fn serialize<S: Serializer>(p: &BinaryPolynomial, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BinaryPolynomial, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).map_err(serde::de::Error::custom)
    }

    pub fn parse(text: &str) -> Result<BinaryPolynomial, String> {
        if text.trim() == "0" {
            return Ok(BinaryPolynomial::zero());
        }
        let exps = text
            .split('+')
            .map(|t| match t.trim() {
                "1" => Ok(0),
                "x" => Ok(1),
                t => t
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| format!("bad polynomial term {t:?}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BinaryPolynomial::from_exponents(exps))
    }
}

pub use poly_string::parse as parse_polynomial;
