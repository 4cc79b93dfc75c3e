use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Largest dimension enumerated exhaustively.
pub const MAX_ENUMERATION_DIMENSION: usize = 28;

/// Number of high-order message bits fixed per parallel chunk.
const CHUNK_BITS: usize = 6;

/// Weight distribution `A_0, ..., A_n` of a length-`n` code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    n: usize,
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(n: usize, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != n + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} counts for length {n}, got {}",
                n + 1,
                counts.len()
            )));
        }
        Ok(Self { n, counts })
    }

    /// From `(w, A_w)` pairs; unlisted weights are zero.
    pub fn from_pairs(n: usize, pairs: &[(usize, u64)]) -> Result<Self> {
        let mut counts = vec![0; n + 1];
        for &(w, a) in pairs {
            if w > n {
                return Err(Error::InvalidArgument(format!(
                    "weight {w} exceeds length {n}"
                )));
            }
            counts[w] += a;
        }
        Ok(Self { n, counts })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// `(w, A_w)` for every `A_w > 0`, ascending in `w`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
    }

    /// Smallest positive weight present.
    pub fn minimum_distance(&self) -> Option<usize> {
        self.nonzero().map(|(w, _)| w).find(|&w| w > 0)
    }
}

/// `[ <w, A_w>, ... ]` over the nonzero entries.
impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.nonzero().map(|(w, a)| format!("<{w}, {a}>")).collect();
        write!(f, "[ {} ]", items.join(", "))
    }
}

/// Codewords of a single weight, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodewordSet {
    pub n: usize,
    pub weight: usize,
    pub words: Vec<BitVector>,
}

impl CodewordSet {
    /// Sorts and deduplicates; every word must have length `n` and weight `weight`.
    pub fn new(n: usize, weight: usize, mut words: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = words.iter().find(|w| w.len() != n || w.weight() != weight) {
            return Err(Error::InvalidArgument(format!(
                "word {bad} does not have length {n} and weight {weight}"
            )));
        }
        words.sort();
        words.dedup();
        Ok(Self { n, weight, words })
    }

    pub(crate) fn from_packed(n: usize, weight: usize, mut words: Vec<u128>) -> Self {
        words.sort_unstable();
        words.dedup();
        Self {
            n,
            weight,
            words: words
                .into_iter()
                .map(|w| BitVector::from_u128(n, w))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Visit every codeword of `rows`' span. Chunks fix the top message bits
/// and walk the remaining ones in Gray-code order, XORing one row per step.
/// Returns per-chunk results in chunk order.
pub(crate) fn enumerate_chunks<T, F>(rows: &[u128], init: impl Fn() -> T + Sync, visit: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut T, u128) + Sync,
{
    let k = rows.len();
    let high = k.min(CHUNK_BITS);
    let low = k - high;
    let (low_rows, high_rows) = rows.split_at(low);
    (0u64..1 << high)
        .into_par_iter()
        .map(|chunk| {
            let mut acc = init();
            let mut word = high_rows
                .iter()
                .enumerate()
                .filter(|(i, _)| chunk >> i & 1 == 1)
                .fold(0u128, |w, (_, r)| w ^ r);
            visit(&mut acc, word);
            for step in 1u64..1 << low {
                word ^= low_rows[step.trailing_zeros() as usize];
                visit(&mut acc, word);
            }
            acc
        })
        .collect()
}

fn check_capacity(code: &LinearCode) -> Result<Vec<u128>> {
    if code.dimension() > MAX_ENUMERATION_DIMENSION {
        return Err(Error::CapacityExceeded(format!(
            "dimension {} exceeds the exhaustive enumeration bound {MAX_ENUMERATION_DIMENSION}",
            code.dimension()
        )));
    }
    code.packed_rows()
}

/// Exact weight distribution by enumerating all `2^k` codewords.
pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    let rows = check_capacity(code)?;
    let n = code.len();
    let chunks = enumerate_chunks(
        &rows,
        || vec![0u64; n + 1],
        |hist, word| hist[word.count_ones() as usize] += 1,
    );
    let mut counts = vec![0u64; n + 1];
    for hist in chunks {
        for (c, h) in counts.iter_mut().zip(hist) {
            *c += h;
        }
    }
    Ok(WeightDistribution { n, counts })
}

/// All codewords of weight exactly `w`.
pub fn codewords_of_weight(code: &LinearCode, w: usize) -> Result<CodewordSet> {
    let rows = check_capacity(code)?;
    let target = w as u32;
    let chunks = enumerate_chunks(&rows, Vec::new, |found: &mut Vec<u128>, word| {
        if word.count_ones() == target {
            found.push(word)
        }
    });
    Ok(CodewordSet::from_packed(
        code.len(),
        w,
        chunks.into_iter().flatten().collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{cyclic_code, extend};
    use crate::gf2::{BinaryPolynomial, BitMatrix};

    fn hamming() -> LinearCode {
        cyclic_code(7, &BinaryPolynomial::from_exponents([3, 1, 0])).unwrap()
    }

    /// Brute force over every message vector.
    fn brute_force(code: &LinearCode) -> Vec<u64> {
        let mut counts = vec![0; code.len() + 1];
        for m in 0u64..1 << code.dimension() {
            let msg = BitVector::from_u128(code.dimension(), m as u128);
            counts[code.encode(&msg).weight()] += 1;
        }
        counts
    }

    #[test]
    fn hamming_distribution() {
        let wd = weight_distribution(&hamming()).unwrap();
        assert_eq!(wd.counts(), &brute_force(&hamming())[..]);
        assert_eq!(
            wd.nonzero().collect::<Vec<_>>(),
            vec![(0, 1), (3, 7), (4, 7), (7, 1)]
        );
        assert_eq!(wd.to_string(), "[ <0, 1>, <3, 7>, <4, 7>, <7, 1> ]");
        assert_eq!(wd.minimum_distance(), Some(3));
    }

    #[test]
    fn extended_hamming_is_8_4_4() {
        let e = extend(&hamming());
        let wd = weight_distribution(&e).unwrap();
        assert_eq!(wd.counts(), &brute_force(&e)[..]);
        assert_eq!(wd.minimum_distance(), Some(4));
        assert_eq!(
            wd.nonzero().collect::<Vec<_>>(),
            vec![(0, 1), (4, 14), (8, 1)]
        );
    }

    #[test]
    fn zero_code_distribution() {
        let wd = weight_distribution(&LinearCode::zero_code(5)).unwrap();
        assert_eq!(wd.nonzero().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn chunked_enumeration_covers_every_word_once() {
        // k = 10 forces both chunk and Gray-code levels
        let rows: Vec<BitVector> = (0..10)
            .map(|i| BitVector::from_indices(12, [i, i + 1, 11]))
            .collect();
        let code = LinearCode::new(BitMatrix::from_rows(12, rows).unwrap()).unwrap();
        let wd = weight_distribution(&code).unwrap();
        assert_eq!(wd.total(), 1024);
        assert_eq!(wd.counts(), &brute_force(&code)[..]);
    }

    #[test]
    fn fixed_weight_words() {
        let h = hamming();
        let w3 = codewords_of_weight(&h, 3).unwrap();
        assert_eq!(w3.len(), 7);
        assert!(w3.words.windows(2).all(|p| p[0] < p[1]));
        assert!(w3.words.iter().all(|w| h.contains(w)));
        let w0 = codewords_of_weight(&h, 0).unwrap();
        assert_eq!(w0.words, vec![BitVector::zeros(7)]);
        let w7 = codewords_of_weight(&h, 7).unwrap();
        assert_eq!(w7.words, vec![BitVector::ones(7)]);
    }

    #[test]
    fn capacity_bound() {
        let big = LinearCode::full_space(29);
        assert!(matches!(
            weight_distribution(&big),
            Err(Error::CapacityExceeded(_))
        ));
        assert!(matches!(
            codewords_of_weight(&big, 1),
            Err(Error::CapacityExceeded(_))
        ));
    }
}
