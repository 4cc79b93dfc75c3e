use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Design;
use crate::combinatorics::{binomial, next_subset, BinomialTable};
use crate::error::{invalid, Error, Result};

/// Largest number of `t`-subsets tracked in one count array.
pub const MAX_SUBSETS: u128 = 1 << 28;

/// Parameters `t-(v, k, λ)` with block count `b` and replication `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub b: u64,
    pub r: u64,
    pub lambda: u64,
}

impl DesignParams {
    /// `λ_s = λ C(v-s, t-s) / C(k-s, t-s)`, the number of blocks through
    /// any `s`-subset, when that quotient is integral.
    pub fn lambda_s(&self, s: usize) -> Option<u128> {
        if s > self.t || self.k < self.t {
            return None;
        }
        let num = (self.lambda as u128)
            .checked_mul(binomial((self.v - s) as u64, (self.t - s) as u64)?)?;
        let den = binomial((self.k - s) as u64, (self.t - s) as u64)?;
        (den != 0 && num % den == 0).then(|| num / den)
    }
}

/// Arithmetic consequences of the design axioms: `b k = v r`, every `λ_s`
/// integral, `λ_0 = b` and `λ_1 = r`.
pub fn params_consistency(p: &DesignParams) -> bool {
    if p.t > p.k || p.k > p.v {
        return false;
    }
    if (p.b as u128) * (p.k as u128) != (p.v as u128) * (p.r as u128) {
        return false;
    }
    let all_integral = (0..=p.t).all(|s| p.lambda_s(s).is_some());
    all_integral
        && p.lambda_s(0) == Some(p.b as u128)
        && (p.t == 0 || p.lambda_s(1) == Some(p.r as u128))
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-({},{},{}), b={}, r={}",
            self.t, self.v, self.k, self.lambda, self.b, self.r
        )
    }
}

/// How many `t`-subsets are covered by each number of blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceProfile {
    pub t: usize,
    /// blocks containing a subset → number of such subsets
    pub counts: BTreeMap<u64, u64>,
}

impl IncidenceProfile {
    pub fn total_subsets(&self) -> u128 {
        self.counts.values().map(|&m| m as u128).sum()
    }

    /// `Σ count × multiplicity`, which equals `b C(k, t)`.
    pub fn incidences(&self) -> u128 {
        self.counts
            .iter()
            .map(|(&c, &m)| c as u128 * m as u128)
            .sum()
    }

    pub fn is_constant(&self) -> bool {
        self.counts.len() == 1
    }
}

impl fmt::Display for IncidenceProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(c, m)| format!("{m} {}-subsets in {c} blocks", self.t))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Outcome of [`verify_design`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verification {
    Design(DesignParams),
    NotDesign(IncidenceProfile),
}

impl Verification {
    pub fn is_design(&self) -> bool {
        matches!(self, Verification::Design(_))
    }

    pub fn params(&self) -> Option<&DesignParams> {
        match self {
            Verification::Design(p) => Some(p),
            Verification::NotDesign(_) => None,
        }
    }
}

/// Number of blocks containing each `t`-subset, indexed by colex rank.
pub fn subset_counts(d: &Design, t: usize) -> Result<Vec<u32>> {
    let (v, k) = (d.points(), d.block_size());
    if t == 0 || t > k {
        return Err(invalid(format!("strength {t} must lie in 1..={k}")));
    }
    let size = binomial(v as u64, t as u64).unwrap_or(u128::MAX);
    if size > MAX_SUBSETS {
        return Err(Error::CapacityExceeded(format!(
            "C({v}, {t}) = {size} subsets"
        )));
    }
    let size = size as usize;
    let table = BinomialTable::new(v, t);
    let counts = d
        .blocks()
        .par_chunks(64)
        .map(|chunk| {
            let mut local = vec![0u32; size];
            let mut idx: Vec<usize> = Vec::with_capacity(t);
            let mut sub = vec![0usize; t];
            for block in chunk {
                let pts = block.support();
                idx.clear();
                idx.extend(0..t);
                loop {
                    for (s, &i) in sub.iter_mut().zip(&idx) {
                        *s = pts[i];
                    }
                    local[table.rank(&sub) as usize] += 1;
                    if !next_subset(&mut idx, k) {
                        break;
                    }
                }
            }
            local
        })
        .reduce(
            || vec![0u32; size],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(counts)
}

/// Histogram of [`subset_counts`].
pub fn incidence_profile(d: &Design, t: usize) -> Result<IncidenceProfile> {
    let mut counts = BTreeMap::new();
    for c in subset_counts(d, t)? {
        *counts.entry(c as u64).or_insert(0u64) += 1;
    }
    Ok(IncidenceProfile { t, counts })
}

/// Exhaustive check that every `t`-subset lies in the same number of
/// blocks; otherwise the full incidence profile is returned.
pub fn verify_design(d: &Design, t: usize) -> Result<Verification> {
    let IncidenceProfile {
        counts: profile, ..
    } = incidence_profile(d, t)?;
    let replication = d.replication();
    let r_constant = replication.windows(2).all(|w| w[0] == w[1]);
    if profile.len() == 1 && r_constant {
        let lambda = *profile.keys().next().expect("one entry");
        return Ok(Verification::Design(DesignParams {
            t,
            v: d.points(),
            k: d.block_size(),
            b: d.num_blocks() as u64,
            r: replication.first().copied().unwrap_or(0) as u64,
            lambda,
        }));
    }
    Ok(Verification::NotDesign(IncidenceProfile {
        t,
        counts: profile,
    }))
}
