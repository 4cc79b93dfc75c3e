//! Binary linear codes: construction, duality and weight enumeration.

pub mod cache;
mod linear;
mod lowweight;
mod macwilliams;
mod qr;
mod weights;

pub use cache::Cache;
pub use linear::{cyclic_code, dual, extend, puncture, x_n_minus_one, LinearCode, Membership};
pub use lowweight::{
    information_sets, low_weight_codewords, minimum_distance, minimum_weight_codewords,
    InformationSet, InformationSets, MinimumDistance, MAX_ENCODINGS,
};
pub use macwilliams::{assmus_mattson_check, krawtchouk, macwilliams_transform, AssmusMattson};
pub use qr::{
    extended_qr_code, is_prime, order_of_two, parse_polynomial, qr_code, quadratic_residues,
    QrCodeSpec,
};
pub use weights::{
    codewords_of_weight, weight_distribution, CodewordSet, WeightDistribution,
    MAX_ENUMERATION_DIMENSION,
};
