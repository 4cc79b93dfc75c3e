use crate::error::{invalid, Result};
use crate::gf2::{BinaryPolynomial, BitMatrix, BitVector};

/// Binary linear `[n, k]` code given by a full-rank `k x n` generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    generator: BitMatrix,
}

impl LinearCode {
    /// Code generated by the rows of `generator`, which must be independent.
    pub fn new(generator: BitMatrix) -> Result<Self> {
        let k = generator.num_rows();
        if generator.rank() != k {
            return Err(invalid(format!(
                "generator rows are dependent (rank {} < {k})",
                generator.rank()
            )));
        }
        Ok(Self {
            n: generator.num_cols(),
            k,
            generator,
        })
    }

    /// Row space of an arbitrary spanning set, kept in RREF.
    pub fn from_spanning_rows(n: usize, rows: Vec<BitVector>) -> Result<Self> {
        let m = BitMatrix::from_rows(n, rows)?;
        let generator = m.rref().0.without_zero_rows();
        Ok(Self {
            n,
            k: generator.num_rows(),
            generator,
        })
    }

    pub fn zero_code(n: usize) -> Self {
        Self {
            n,
            k: 0,
            generator: BitMatrix::zeros(0, n),
        }
    }

    pub fn full_space(n: usize) -> Self {
        Self {
            n,
            k: n,
            generator: BitMatrix::identity(n),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// Generator in reduced row-echelon form, a canonical form of the code.
    pub fn rref_generator(&self) -> BitMatrix {
        self.generator.rref().0
    }

    /// Same set of codewords.
    pub fn same_code(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.rref_generator() == other.rref_generator()
    }

    /// Parity-check matrix: a generator of the dual code.
    pub fn parity_check(&self) -> BitMatrix {
        self.generator.null_space()
    }

    pub fn membership(&self) -> Membership {
        Membership {
            checks: self.parity_check(),
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.membership().contains(v)
    }

    pub fn encode(&self, message: &BitVector) -> BitVector {
        self.generator.left_mul(message)
    }

    /// Generator rows packed into `u128` (coordinate `i` at bit `i`).
    pub(crate) fn packed_rows(&self) -> Result<Vec<u128>> {
        if self.n > 128 {
            return Err(crate::Error::CapacityExceeded(format!(
                "enumeration supports length <= 128, got {}",
                self.n
            )));
        }
        Ok(self
            .generator
            .rows()
            .iter()
            .map(|r| r.to_u128().expect("length checked"))
            .collect())
    }
}

/// Reusable parity-check membership test.
#[derive(Debug, Clone)]
pub struct Membership {
    checks: BitMatrix,
}

impl Membership {
    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.checks.num_cols() && self.checks.rows().iter().all(|h| !h.dot(v))
    }
}

/// `x^n - 1 = x^n + 1` over GF(2).
pub fn x_n_minus_one(n: usize) -> BinaryPolynomial {
    BinaryPolynomial::from_exponents([n, 0])
}

/// Cyclic code of length `n` with generator polynomial `g`; the generator
/// matrix rows are `x^i g(x)` for `0 <= i < n - deg g`.
pub fn cyclic_code(n: usize, g: &BinaryPolynomial) -> Result<LinearCode> {
    let deg = g
        .degree()
        .ok_or_else(|| invalid("generator polynomial must be nonzero"))?;
    if n == 0 || !g.divides(&x_n_minus_one(n))? {
        return Err(invalid(format!("{g} does not divide x^{n} - 1")));
    }
    let rows = (0..n - deg).map(|i| g.shl(i).to_bitvector(n)).collect();
    LinearCode::new(BitMatrix::from_rows(n, rows)?)
}

/// Append an overall parity bit at index `n`.
pub fn extend(code: &LinearCode) -> LinearCode {
    let n = code.n + 1;
    let rows = code
        .generator
        .rows()
        .iter()
        .map(|r| {
            let mut e = r.resized(n);
            if r.weight() % 2 == 1 {
                e.set(n - 1, true);
            }
            e
        })
        .collect();
    LinearCode {
        n,
        k: code.k,
        generator: BitMatrix::from_rows(n, rows).expect("rows have length n"),
    }
}

/// Delete coordinate `x` from every codeword.
pub fn puncture(code: &LinearCode, x: usize) -> Result<LinearCode> {
    if x >= code.n {
        return Err(invalid(format!("coordinate {x} out of range")));
    }
    let rows = code
        .generator
        .rows()
        .iter()
        .map(|r| r.delete_coordinate(x))
        .collect();
    LinearCode::from_spanning_rows(code.n - 1, rows)
}

/// All vectors orthogonal to every codeword.
pub fn dual(code: &LinearCode) -> LinearCode {
    let generator = code.parity_check();
    LinearCode {
        n: code.n,
        k: generator.num_rows(),
        generator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming() -> LinearCode {
        cyclic_code(7, &BinaryPolynomial::from_exponents([3, 1, 0])).unwrap()
    }

    #[test]
    fn hamming_parameters() {
        let h = hamming();
        assert_eq!((h.len(), h.dimension()), (7, 4));
    }

    #[test]
    fn unit_ideal_gives_full_space() {
        let c = cyclic_code(9, &BinaryPolynomial::one()).unwrap();
        assert!(c.same_code(&LinearCode::full_space(9)));
    }

    #[test]
    fn non_divisor_rejected() {
        assert!(cyclic_code(7, &BinaryPolynomial::from_exponents([2, 0, 1])).is_err());
        assert!(cyclic_code(7, &BinaryPolynomial::zero()).is_err());
    }

    #[test]
    fn cyclic_shift_invariance() {
        let h = hamming();
        let m = h.membership();
        for row in h.generator().rows() {
            assert!(m.contains(&row.rotated(1)));
        }
    }

    #[test]
    fn extension_is_even_and_punctures_back() {
        let h = hamming();
        let e = extend(&h);
        assert_eq!((e.len(), e.dimension()), (8, 4));
        assert!(e.generator().rows().iter().all(|r| r.weight() % 2 == 0));
        assert!(puncture(&e, 7).unwrap().same_code(&h));
    }

    #[test]
    fn extending_even_code_appends_zero() {
        let even = extend(&hamming());
        let twice = extend(&even);
        assert!(twice.generator().rows().iter().all(|r| !r.get(8)));
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let d = dual(&LinearCode::full_space(5));
        assert_eq!(d.dimension(), 0);
        assert!(dual(&d).same_code(&LinearCode::full_space(5)));
    }

    #[test]
    fn biduality() {
        let h = hamming();
        let d = dual(&h);
        assert_eq!(d.dimension(), 3);
        assert!(dual(&d).same_code(&h));
    }

    #[test]
    fn dependent_generator_rejected() {
        let m = BitMatrix::from_strs(&["110", "011", "101"]).unwrap();
        assert!(LinearCode::new(m.clone()).is_err());
        assert_eq!(
            LinearCode::from_spanning_rows(3, m.into_rows())
                .unwrap()
                .dimension(),
            2
        );
    }
}
