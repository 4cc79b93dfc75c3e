//! Computational toolkit for binary quadratic residue codes and the block
//! designs held by their fixed-weight codewords.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf2`]: bit-packed vectors, matrices and polynomials over GF(2), plus
//!   the extension fields GF(2^m) used to locate roots of unity.
//! * [`codes`]: cyclic and quadratic residue codes, extension, duality,
//!   weight enumeration, the MacWilliams transform, the Assmus–Mattson
//!   criterion and low-weight codeword search for larger codes.
//! * [`designs`]: block designs built from codeword supports, exhaustive
//!   t-design verification, derived/residual designs and linear spans.
//! * [`groups`]: permutations, PSL(2,p) on the projective line,
//!   Schreier–Sims stabilizer chains, orbits on subsets and a backtracking
//!   automorphism search for designs.
//!
//! Coordinate convention used throughout: in a code of prime length `p`,
//! coordinate `i` carries the coefficient of `x^i` and corresponds to the
//! field element `i` of the projective line; the parity coordinate appended
//! by [`codes::extend`] is index `p` and plays the role of `∞`.

pub mod codes;
pub mod combinatorics;
pub mod designs;
mod error;
pub mod gf2;
pub mod groups;

pub use codes::{CodewordSet, LinearCode, QrCodeSpec, WeightDistribution};
pub use designs::{Design, DesignParams, IncidenceProfile, Verification};
pub use error::{Error, Result};
pub use gf2::{BinaryPolynomial, BitMatrix, BitVector, FieldContext, FieldElement};
pub use groups::{MoebiusMap, OrbitPartition, Permutation, PermutationGroup};
