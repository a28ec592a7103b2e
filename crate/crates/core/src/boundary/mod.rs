//! Dynamics on the space of ends: fixed points of hyperbolic elements,
//! transversality, and construction and verification of Powers data.

mod hyperbolic;
mod point;
mod powers;
mod prefix_set;

pub use hyperbolic::{
    hyperbolic_data, is_hyperbolic, is_transverse, make_transverse_family, primitive_root, FixedPoints, SearchBounds,
};
pub use point::BoundaryPoint;
pub use powers::{
    construct_powers_data, supports_powers_construction, verify_powers_data, ConditionCheck, Cylinder, PowersData,
    PowersDoc, VerificationReport, VerifyMode, Witness,
};
pub use prefix_set::{Piece, PrefixSet};
