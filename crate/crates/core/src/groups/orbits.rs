use serde::{Deserialize, Serialize};

use super::schreier::PermutationGroup;
use crate::combinatorics::{binomial, BinomialTable};
use crate::error::{invalid, Error, Result};

/// Largest number of subsets handled by [`orbits_on_subsets`].
pub const MAX_SUBSET_ORBIT_DOMAIN: u128 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetOrbit {
    /// Colex-least member.
    pub representative: Vec<usize>,
    pub size: u64,
}

/// Orbits of a group on the `s`-subsets of its points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPartition {
    pub s: usize,
    /// Sorted by the colex rank of the representative.
    pub orbits: Vec<SubsetOrbit>,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<u64> {
        self.orbits.iter().map(|o| o.size).collect()
    }

    pub fn total(&self) -> u128 {
        self.orbits.iter().map(|o| o.size as u128).sum()
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Union–find over colex ranks; merging always keeps the smaller rank as
/// root, so each root is the colex-least member of its orbit.
pub fn orbits_on_subsets(g: &PermutationGroup, s: usize) -> Result<OrbitPartition> {
    let n = g.degree();
    if s > n {
        return Err(invalid(format!("subset size {s} exceeds degree {n}")));
    }
    let total = binomial(n as u64, s as u64).unwrap_or(u128::MAX);
    if total > MAX_SUBSET_ORBIT_DOMAIN {
        return Err(Error::CapacityExceeded(format!(
            "C({n}, {s}) = {total} subsets"
        )));
    }
    let total = total as usize;
    let table = BinomialTable::new(n, s);
    let mut parent: Vec<u32> = (0..total as u32).collect();
    for gen in g.generators() {
        for rank in 0..total {
            let subset = table.unrank(rank as u64, s);
            let image = table.rank(&gen.apply_to_points(&subset)) as u32;
            let (a, b) = (find(&mut parent, rank as u32), find(&mut parent, image));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut sizes = vec![0u64; total];
    for x in 0..total as u32 {
        let r = find(&mut parent, x);
        sizes[r as usize] += 1;
    }
    let orbits = (0..total)
        .filter(|&r| parent[r] == r as u32)
        .map(|r| SubsetOrbit {
            representative: table.unrank(r as u64, s),
            size: sizes[r],
        })
        .collect();
    Ok(OrbitPartition { s, orbits })
}

/// Transitive on unordered `s`-subsets.
pub fn is_s_homogeneous(g: &PermutationGroup, s: usize) -> Result<bool> {
    Ok(orbits_on_subsets(g, s)?.orbits.len() == 1)
}
