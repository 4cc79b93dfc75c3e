//! Arithmetic over GF(2) and its extensions.

mod bitvec;
mod field;
mod matrix;
mod poly;

pub use bitvec::BitVector;
pub use field::{element_of_order, FieldContext, FieldElement};
pub use matrix::BitMatrix;
pub use poly::{find_irreducible, is_irreducible, poly_mul_mod, BinaryPolynomial};
