use serde::{Deserialize, Serialize};

use crate::codes::{CodewordSet, LinearCode};
use crate::error::{invalid, Error, Result};
use crate::gf2::BitVector;

/// Incidence structure on points `0..v` whose blocks are distinct `k`-sets,
/// kept in ascending [`BitVector`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Design {
    v: usize,
    k: usize,
    blocks: Vec<BitVector>,
}

impl Design {
    pub fn new(v: usize, k: usize, mut blocks: Vec<BitVector>) -> Result<Self> {
        if k > v {
            return Err(invalid(format!("block size {k} exceeds point count {v}")));
        }
        if let Some(bad) = blocks.iter().find(|b| b.len() != v || b.weight() != k) {
            return Err(invalid(format!(
                "block {:?} is not a {k}-subset of {v} points",
                bad.support()
            )));
        }
        blocks.sort();
        if let Some(w) = blocks.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("repeated block {:?}", w[0].support())));
        }
        Ok(Self { v, k, blocks })
    }

    /// Blocks given as point lists.
    pub fn from_point_lists(v: usize, k: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let blocks = lists
            .iter()
            .map(|l| {
                if let Some(&p) = l.iter().find(|&&p| p >= v) {
                    return Err(invalid(format!("point {p} out of range for {v} points")));
                }
                Ok(BitVector::from_indices(v, l.iter().copied()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(v, k, blocks)
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.k
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[BitVector] {
        &self.blocks
    }

    pub fn contains_block(&self, block: &BitVector) -> bool {
        self.blocks.binary_search(block).is_ok()
    }

    /// Number of blocks through each point.
    pub fn replication(&self) -> Vec<usize> {
        let mut r = vec![0; self.v];
        for b in &self.blocks {
            for p in b.ones_iter() {
                r[p] += 1;
            }
        }
        r
    }
}

/// Blocks are the supports of the given words.
pub fn design_from_codewords(words: &CodewordSet, v: usize) -> Result<Design> {
    if words.n != v {
        return Err(invalid(format!(
            "words have length {}, expected {v}",
            words.n
        )));
    }
    let blocks = words.words.clone();
    let distinct = {
        let mut b = blocks.clone();
        b.sort();
        b.dedup();
        b.len()
    };
    if distinct != blocks.len() {
        return Err(Error::InconsistentInput(format!(
            "{} words share only {distinct} supports",
            blocks.len()
        )));
    }
    Design::new(v, words.weight, blocks)
}

fn check_point(d: &Design, x: usize) -> Result<()> {
    if x >= d.v {
        return Err(invalid(format!(
            "point {x} out of range for {} points",
            d.v
        )));
    }
    Ok(())
}

/// Blocks through `x`, with `x` deleted, on the remaining `v - 1` points.
pub fn derived_design(d: &Design, x: usize) -> Result<Design> {
    check_point(d, x)?;
    let blocks = d
        .blocks
        .iter()
        .filter(|b| b.get(x))
        .map(|b| b.delete_coordinate(x))
        .collect();
    Design::new(d.v - 1, d.k.saturating_sub(1), blocks)
}

/// Blocks avoiding `x`, on the remaining `v - 1` points.
pub fn residual_at_point(d: &Design, x: usize) -> Result<Design> {
    check_point(d, x)?;
    let k = if d.k == d.v { d.k - 1 } else { d.k };
    let blocks = d
        .blocks
        .iter()
        .filter(|b| !b.get(x))
        .map(|b| b.delete_coordinate(x))
        .collect();
    Design::new(d.v - 1, k, blocks)
}

/// GF(2) row space of the block incidence vectors, generator in RREF.
pub fn linear_span(d: &Design) -> LinearCode {
    LinearCode::from_spanning_rows(d.v, d.blocks.clone()).expect("blocks have length v")
}
