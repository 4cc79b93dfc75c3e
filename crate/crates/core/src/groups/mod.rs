//! Permutation groups, PSL(2, p) and design automorphisms.

mod automorphism;
pub mod io;
mod moebius;
mod orbits;
mod perm;
mod schreier;

pub use automorphism::design_automorphism_group;
pub use io::{
    permutations_from_str, permutations_to_string, read_permutations, write_permutations,
};
pub use moebius::{moebius_to_permutation, psl2, MoebiusMap};
pub use orbits::{
    is_s_homogeneous, orbits_on_subsets, OrbitPartition, SubsetOrbit, MAX_SUBSET_ORBIT_DOMAIN,
};
pub use perm::{preserves_design, Permutation};
pub use schreier::{PermutationGroup, StabilizerChain};
