use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::schreier::PermutationGroup;
use crate::codes::is_prime;
use crate::error::{invalid, Result};

/// Fractional linear map `y -> (a + b y) / (c + d y)` on the projective
/// line `F_p ∪ {∞}`.
///
/// The map acts through the matrix `[[b, a], [d, c]]` on `(y, 1)`, and the
/// determinant condition is imposed on that matrix: `b c - a d ≡ 1`. With
/// this normalisation `y -> y` is `(a, b, c, d) = (0, 1, 1, 0)`.
///
/// Point labels: field element `i` is point `i`, `∞` is point `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoebiusMap {
    p: u64,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

fn inv_mod(x: u64, p: u64) -> u64 {
    // Fermat; p is prime
    let mut base = x % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl MoebiusMap {
    /// Coefficients may be any integers; they are reduced mod `p`.
    pub fn new(p: u64, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if !is_prime(p) || p == 2 {
            return Err(invalid(format!("{p} is not an odd prime")));
        }
        if p >= 1 << 31 {
            return Err(invalid("modulus too large"));
        }
        let r = |x: i64| x.rem_euclid(p as i64) as u64;
        let m = Self {
            p,
            a: r(a),
            b: r(b),
            c: r(c),
            d: r(d),
        };
        if m.determinant() != 1 {
            return Err(invalid(format!(
                "determinant b*c - a*d = {} mod {p}, expected 1",
                m.determinant()
            )));
        }
        Ok(m)
    }

    pub fn identity(p: u64) -> Result<Self> {
        Self::new(p, 0, 1, 1, 0)
    }

    /// `y -> y + 1`.
    pub fn translation(p: u64) -> Result<Self> {
        Self::new(p, 1, 1, 1, 0)
    }

    /// `y -> -1 / y`.
    pub fn negative_inversion(p: u64) -> Result<Self> {
        Self::new(p, -1, 0, 0, 1)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coefficients(&self) -> (u64, u64, u64, u64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn determinant(&self) -> u64 {
        let p = self.p;
        (self.b * self.c % p + p - self.a * self.d % p) % p
    }

    /// Image of a point `0..=p` (with `p` standing for `∞`), using
    /// `0/0 = 0` and `x/0 = ∞` for `x ≠ 0`.
    pub fn apply(&self, y: u64) -> u64 {
        let p = self.p;
        let (num, den) = if y == p {
            // leading coefficients of (a + b y) / (c + d y) at infinity
            (self.b, self.d)
        } else {
            ((self.a + self.b * y) % p, (self.c + self.d * y) % p)
        };
        match (num, den) {
            (0, 0) => 0,
            (_, 0) => p,
            _ => num * inv_mod(den, p) % p,
        }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let p = self.p;
        // matrices [[b, a], [d, c]]; product other * self
        let (b1, a1, d1, c1) = (self.b, self.a, self.d, self.c);
        let (b2, a2, d2, c2) = (other.b, other.a, other.d, other.c);
        Self {
            p,
            b: (b2 * b1 + a2 * d1) % p,
            a: (b2 * a1 + a2 * c1) % p,
            d: (d2 * b1 + c2 * d1) % p,
            c: (d2 * a1 + c2 * c1) % p,
        }
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_images_unchecked((0..=self.p).map(|y| self.apply(y) as usize).collect())
    }
}

pub fn moebius_to_permutation(m: &MoebiusMap) -> Permutation {
    m.to_permutation()
}

/// PSL(2, p) on `p + 1` points, generated by `y -> y + 1` and `y -> -1/y`.
pub fn psl2(p: u64) -> Result<PermutationGroup> {
    let gens = vec![
        MoebiusMap::translation(p)?.to_permutation(),
        MoebiusMap::negative_inversion(p)?.to_permutation(),
    ];
    PermutationGroup::new(p as usize + 1, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_map() {
        assert!(MoebiusMap::identity(41)
            .unwrap()
            .to_permutation()
            .is_identity());
        assert!(MoebiusMap::new(41, 1, 1, 1, 1).is_err());
        assert!(MoebiusMap::new(9, 0, 1, 1, 0).is_err());
    }

    #[test]
    fn translation_is_a_41_cycle_fixing_infinity() {
        let t = MoebiusMap::translation(41).unwrap().to_permutation();
        assert_eq!(t.apply(41), 41);
        let cycles = t.cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 41);
        for y in 0..41 {
            assert_eq!(t.apply(y), (y + 1) % 41);
        }
    }

    #[test]
    fn inversion_swaps_zero_and_infinity() {
        let s = MoebiusMap::negative_inversion(41).unwrap().to_permutation();
        assert_eq!(s.apply(0), 41);
        assert_eq!(s.apply(41), 0);
        for y in 1..41u64 {
            assert_eq!(s.apply(y as usize) as u64 * y % 41, 40);
        }
        assert!(s.then(&s).is_identity());
    }

    fn arb_map(p: u64) -> impl Strategy<Value = MoebiusMap> {
        (0..p, 0..p, 0..p).prop_filter_map("singular", move |(a, b, d)| {
            // solve b c - a d = 1 for c when b != 0
            if b == 0 {
                return None;
            }
            let c = (1 + a * d) % p * inv_mod(b, p) % p;
            MoebiusMap::new(p, a as i64, b as i64, c as i64, d as i64).ok()
        })
    }

    proptest! {
        #[test]
        fn action_is_a_homomorphism(m1 in arb_map(41), m2 in arb_map(41)) {
            let composed = m1.then(&m2);
            prop_assert_eq!(composed.determinant(), 1);
            prop_assert_eq!(
                composed.to_permutation(),
                m1.to_permutation().then(&m2.to_permutation())
            );
        }
    }
}
