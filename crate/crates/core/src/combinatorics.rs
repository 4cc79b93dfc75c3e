//! Binomial coefficients and the combinatorial number system.
//!
//! A `t`-subset `{c_1 < c_2 < ... < c_t}` of `{0..n}` has colex rank
//! `C(c_1, 1) + C(c_2, 2) + ... + C(c_t, t)`, a bijection onto
//! `0..C(n, t)`. Flat count arrays over subsets are indexed by this rank.

/// Exact binomial coefficient; `None` on overflow of `u128`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is integral; cancel first to delay overflow
        let d = i as u128 + 1;
        let g = gcd(acc, d);
        acc = (acc / g).checked_mul((n - i) as u128 / (d / g))?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Precomputed Pascal triangle for fast colex ranking.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    max_n: usize,
    max_k: usize,
    table: Vec<u64>,
}

impl BinomialTable {
    /// Table of `C(n, j)` for `n <= max_n`, `j <= max_k`. Entries that do
    /// not fit in `u64` saturate.
    pub fn new(max_n: usize, max_k: usize) -> Self {
        let width = max_k + 1;
        let mut table = vec![0u64; (max_n + 1) * width];
        for n in 0..=max_n {
            table[n * width] = 1;
            for j in 1..=max_k.min(n) {
                let above = table[(n - 1) * width + j];
                let diag = table[(n - 1) * width + j - 1];
                table[n * width + j] = above.saturating_add(diag);
            }
        }
        Self {
            max_n,
            max_k,
            table,
        }
    }

    #[inline]
    pub fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        debug_assert!(n <= self.max_n && k <= self.max_k);
        self.table[n * (self.max_k + 1) + k]
    }

    /// Colex rank of a strictly increasing subset.
    #[inline]
    pub fn rank(&self, subset: &[usize]) -> u64 {
        subset
            .iter()
            .enumerate()
            .map(|(i, &c)| self.get(c, i + 1))
            .sum()
    }

    /// Inverse of [`rank`](Self::rank) for subsets of size `t`.
    pub fn unrank(&self, mut rank: u64, t: usize) -> Vec<usize> {
        let mut out = vec![0; t];
        for i in (1..=t).rev() {
            // largest c with C(c, i) <= rank
            let mut c = i - 1;
            while c < self.max_n && self.get(c + 1, i) <= rank {
                c += 1;
            }
            rank -= self.get(c, i);
            out[i - 1] = c;
        }
        out
    }
}

/// Advance `subset` (strictly increasing, elements `< n`) to the next
/// subset in lexicographic order. Returns `false` after the last one.
pub fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let t = subset.len();
    let mut i = t;
    while i > 0 {
        i -= 1;
        if subset[i] < n - t + i {
            subset[i] += 1;
            for j in i + 1..t {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Iterator over all `t`-subsets of `{0..n}` in lexicographic order.
pub fn subsets(n: usize, t: usize) -> Subsets {
    Subsets {
        n,
        current: if t <= n { Some((0..t).collect()) } else { None },
    }
}

pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        self.current = if next_subset(&mut next, self.n) {
            Some(next)
        } else {
            None
        };
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(42, 3), Some(11480));
        assert_eq!(binomial(10, 3), Some(120));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(
            binomial(128, 64),
            Some(23_951_146_041_928_082_866_135_587_776_380_551_750)
        );
    }

    #[test]
    fn colex_rank_is_a_bijection() {
        let table = BinomialTable::new(12, 4);
        for t in 0..=4 {
            let mut seen = vec![false; table.get(12, t) as usize];
            for s in subsets(12, t) {
                let r = table.rank(&s) as usize;
                assert!(!seen[r]);
                seen[r] = true;
                assert_eq!(table.unrank(r as u64, t), s);
            }
            assert!(seen.into_iter().all(|x| x));
        }
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(7, 3).count(), 35);
        assert_eq!(subsets(5, 0).count(), 1);
        assert_eq!(subsets(2, 3).count(), 0);
    }
}
