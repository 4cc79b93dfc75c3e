//! Block designs held by codeword supports.

mod design;
pub mod io;
mod verify;

pub use design::{derived_design, design_from_codewords, linear_span, residual_at_point, Design};
pub use io::{design_from_str, design_to_string, read_design, write_design};
pub use verify::{
    incidence_profile, params_consistency, subset_counts, verify_design, DesignParams,
    IncidenceProfile, Verification, MAX_SUBSETS,
};
