//! Low-weight codeword search by enumeration over several information sets.
//!
//! Gaussian elimination is run repeatedly with a column priority order so
//! that each pass pivots on columns not used by earlier passes. Pass `j`
//! yields a systematic generator whose first `r_j` pivots lie in a set
//! `I_j` disjoint from all earlier sets. A codeword whose message (with
//! respect to generator `j`) has weight `> i` has at least
//! `i + 1 - (k - r_j)` ones on `I_j`. Once every message of weight `<= i`
//! has been encoded under every generator, each codeword not yet seen has
//! weight at least `Σ_j max(0, i + 1 - (k - r_j))`.
//!
//! For codes of length `2k` the first two sets are repaired by column swaps
//! so that they partition the coordinates whenever possible, which makes the
//! bound `2(i + 1)`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CodewordSet, LinearCode};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Upper limit on encoded messages before giving up.
pub const MAX_ENCODINGS: u128 = 1 << 40;

/// Systematic generator attached to one pivot set.
#[derive(Debug, Clone)]
pub struct InformationSet {
    /// Pivot columns inside this set, in pivot-row order.
    pub columns: Vec<usize>,
    /// All `k` rows of the systematic generator; rows `0..columns.len()`
    /// are the unit vectors on `columns`.
    rows: Vec<u128>,
}

impl InformationSet {
    pub fn rank(&self) -> usize {
        self.columns.len()
    }
}

/// Pivot sets found for a code, with the lower-bound bookkeeping.
#[derive(Debug, Clone)]
pub struct InformationSets {
    k: usize,
    sets: Vec<InformationSet>,
}

impl InformationSets {
    pub fn sets(&self) -> &[InformationSet] {
        &self.sets
    }

    /// Weight below which every codeword has been seen after encoding all
    /// messages of weight `<= i` under every set.
    pub fn lower_bound(&self, i: usize) -> usize {
        if i >= self.k {
            return usize::MAX;
        }
        self.sets
            .iter()
            .map(|s| (i + 1).saturating_sub(self.k - s.rank()))
            .sum()
    }

    /// Whether the sets are pairwise disjoint and cover `0..n`.
    pub fn partitions(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for c in self.sets.iter().flat_map(|s| &s.columns) {
            if seen[*c] {
                return false;
            }
            seen[*c] = true;
        }
        seen.into_iter().all(|b| b)
    }

    fn encodings_up_to(&self, i: usize) -> u128 {
        let per_set: u128 = (0..=i.min(self.k))
            .map(|s| crate::combinatorics::binomial(self.k as u64, s as u64).unwrap_or(u128::MAX))
            .fold(0u128, |a, b| a.saturating_add(b));
        per_set.saturating_mul(self.sets.len() as u128)
    }
}

fn systematic(generator: &BitMatrix, first: &[usize]) -> (Vec<usize>, Vec<u128>) {
    let n = generator.num_cols();
    let mut order = first.to_vec();
    let mut in_first = vec![false; n];
    for &c in first {
        in_first[c] = true;
    }
    order.extend((0..n).filter(|&c| !in_first[c]));
    let (r, pivots) = generator.rref_with_column_order(&order);
    let own: Vec<usize> = pivots.iter().copied().filter(|&p| in_first[p]).collect();
    let rows = r
        .rows()
        .iter()
        .map(|row| row.to_u128().expect("n <= 128"))
        .collect();
    (own, rows)
}

fn rank_of_columns(generator: &BitMatrix, cols: &[usize]) -> usize {
    generator.select_columns(cols).rank()
}

/// Swap columns between a full-rank set `first` and its complement until the
/// complement also has full rank, or no single swap improves it.
fn repair_partition(generator: &BitMatrix, first: &mut Vec<usize>, k: usize) {
    let n = generator.num_cols();
    loop {
        let rest: Vec<usize> = (0..n).filter(|c| !first.contains(c)).collect();
        let current = rank_of_columns(generator, &rest);
        if current == k {
            return;
        }
        let mut improved = false;
        'search: for ai in 0..first.len() {
            for bi in 0..rest.len() {
                let mut f = first.clone();
                f[ai] = rest[bi];
                if rank_of_columns(generator, &f) < k {
                    continue;
                }
                let mut r = rest.clone();
                r[bi] = first[ai];
                if rank_of_columns(generator, &r) > current {
                    f.sort_unstable();
                    *first = f;
                    improved = true;
                    break 'search;
                }
            }
        }
        if !improved {
            return;
        }
    }
}

/// Greedily extract disjoint pivot sets.
pub fn information_sets(code: &LinearCode) -> Result<InformationSets> {
    let n = code.len();
    let k = code.dimension();
    if n > 128 {
        return Err(Error::CapacityExceeded(format!("length {n} exceeds 128")));
    }
    let g = code.generator();
    let mut sets = Vec::new();
    let mut available: Vec<usize> = (0..n).collect();

    if k > 0 && n == 2 * k {
        let (mut first, _) = systematic(g, &available);
        first.sort_unstable();
        repair_partition(g, &mut first, k);
        let (cols, rows) = systematic(g, &first);
        available.retain(|c| !cols.contains(c));
        sets.push(InformationSet {
            columns: cols,
            rows,
        });
    }
    while k > 0 && !available.is_empty() {
        let (cols, rows) = systematic(g, &available);
        if cols.is_empty() {
            break;
        }
        available.retain(|c| !cols.contains(c));
        sets.push(InformationSet {
            columns: cols,
            rows,
        });
    }
    Ok(InformationSets { k, sets })
}

/// Call `f` on every XOR of exactly `weight` rows, split across threads by
/// the lowest chosen row.
fn for_each_message<T, F>(rows: &[u128], weight: usize, init: impl Fn() -> T + Sync, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut T, u128) + Sync,
{
    fn walk<T>(
        rows: &[u128],
        start: usize,
        left: usize,
        acc: u128,
        out: &mut T,
        f: &impl Fn(&mut T, u128),
    ) {
        if left == 0 {
            f(out, acc);
            return;
        }
        for i in start..=rows.len() - left {
            walk(rows, i + 1, left - 1, acc ^ rows[i], out, f);
        }
    }
    if weight == 0 {
        let mut out = init();
        f(&mut out, 0);
        return vec![out];
    }
    if weight > rows.len() {
        return Vec::new();
    }
    (0..=rows.len() - weight)
        .into_par_iter()
        .map(|first| {
            let mut out = init();
            walk(rows, first + 1, weight - 1, rows[first], &mut out, &f);
            out
        })
        .collect()
}

/// Minimum distance search together with the enumeration depth reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimumDistance {
    pub distance: usize,
    /// Largest message weight enumerated on every set.
    pub depth: usize,
    pub sets: usize,
}

/// Minimum nonzero weight, stopping once the lower bound meets the best
/// weight found. `None` for the zero code.
pub fn minimum_distance(code: &LinearCode) -> Result<Option<MinimumDistance>> {
    let info = information_sets(code)?;
    let k = code.dimension();
    if k == 0 {
        return Ok(None);
    }
    let mut best = usize::MAX;
    for i in 1..=k {
        if info.encodings_up_to(i) > MAX_ENCODINGS {
            return Err(Error::CapacityExceeded(format!(
                "minimum distance not certified: best weight {best}, lower bound {} after depth {}",
                info.lower_bound(i - 1),
                i - 1
            )));
        }
        for set in &info.sets {
            let mins = for_each_message(
                &set.rows,
                i,
                || usize::MAX,
                |m, w| {
                    let wt = w.count_ones() as usize;
                    if wt > 0 && wt < *m {
                        *m = wt;
                    }
                },
            );
            best = mins.into_iter().fold(best, usize::min);
        }
        if info.lower_bound(i) >= best {
            return Ok(Some(MinimumDistance {
                distance: best,
                depth: i,
                sets: info.sets.len(),
            }));
        }
    }
    Err(Error::Internal(
        "exhausted all messages without a certificate".into(),
    ))
}

/// Every codeword of weight `<= w_max`, one [`CodewordSet`] per weight
/// `0..=w_max`.
pub fn low_weight_codewords(code: &LinearCode, w_max: usize) -> Result<Vec<CodewordSet>> {
    let n = code.len();
    let info = information_sets(code)?;
    let k = code.dimension();
    let depth = (0..=k).find(|&i| info.lower_bound(i) > w_max).unwrap_or(k);
    if info.encodings_up_to(depth) > MAX_ENCODINGS {
        return Err(Error::CapacityExceeded(format!(
            "completeness for weight {w_max} needs message weight {depth} on {} sets ({} encodings)",
            info.sets.len(),
            info.encodings_up_to(depth)
        )));
    }
    let mut found: HashSet<u128> = HashSet::new();
    found.insert(0);
    for set in &info.sets {
        for weight in 1..=depth {
            let parts = for_each_message(&set.rows, weight, Vec::new, |out: &mut Vec<u128>, w| {
                if (w.count_ones() as usize) <= w_max {
                    out.push(w);
                }
            });
            found.extend(parts.into_iter().flatten());
        }
    }
    let mut by_weight: Vec<Vec<u128>> = vec![Vec::new(); w_max + 1];
    for w in found {
        by_weight[w.count_ones() as usize].push(w);
    }
    Ok(by_weight
        .into_iter()
        .enumerate()
        .map(|(w, words)| CodewordSet::from_packed(n, w, words))
        .collect())
}

/// Minimum distance and all codewords of that weight.
pub fn minimum_weight_codewords(
    code: &LinearCode,
) -> Result<Option<(MinimumDistance, CodewordSet)>> {
    let Some(md) = minimum_distance(code)? else {
        return Ok(None);
    };
    let mut sets = low_weight_codewords(code, md.distance)?;
    Ok(Some((md, sets.swap_remove(md.distance))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{codewords_of_weight, cyclic_code, extend, weight_distribution};
    use crate::gf2::{BinaryPolynomial, BitVector};

    fn ext_hamming() -> LinearCode {
        extend(&cyclic_code(7, &BinaryPolynomial::from_exponents([3, 1, 0])).unwrap())
    }

    #[test]
    fn extended_hamming_sets_partition() {
        let info = information_sets(&ext_hamming()).unwrap();
        assert!(info.partitions(8));
        assert_eq!(info.sets().len(), 2);
        assert_eq!(info.lower_bound(1), 4);
    }

    #[test]
    fn matches_full_enumeration_on_hamming() {
        let code = ext_hamming();
        let low = low_weight_codewords(&code, 4).unwrap();
        assert_eq!(low[4], codewords_of_weight(&code, 4).unwrap());
        assert!(low[1].is_empty() && low[2].is_empty() && low[3].is_empty());
        assert_eq!(low[0].words, vec![BitVector::zeros(8)]);
        let md = minimum_distance(&code).unwrap().unwrap();
        assert_eq!(md.distance, 4);
    }

    #[test]
    fn w_max_zero_is_the_zero_word() {
        let low = low_weight_codewords(&ext_hamming(), 0).unwrap();
        assert_eq!(low.len(), 1);
        assert_eq!(low[0].words, vec![BitVector::zeros(8)]);
    }

    #[test]
    fn zero_code_has_no_distance() {
        assert!(minimum_distance(&LinearCode::zero_code(5))
            .unwrap()
            .is_none());
        let low = low_weight_codewords(&LinearCode::zero_code(5), 2).unwrap();
        assert_eq!(low[0].len(), 1);
    }

    #[test]
    fn rate_one_code_uses_a_single_set() {
        let full = LinearCode::full_space(6);
        let info = information_sets(&full).unwrap();
        assert_eq!(info.sets().len(), 1);
        let wd = weight_distribution(&full).unwrap();
        let low = low_weight_codewords(&full, 3).unwrap();
        for w in 0..=3 {
            assert_eq!(low[w].len() as u64, wd.get(w));
        }
    }
}
