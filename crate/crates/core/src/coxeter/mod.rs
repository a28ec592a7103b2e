//! Tits forms of Coxeter systems and the finite / affine / other split.

mod catalog;
mod matrix;
mod tits;
mod verdict;

pub use catalog::{recognize, CatalogKind};
pub use matrix::CoxeterMatrix;
pub use tits::{
    classify, classify_with_tol, irreducible_components, sorted_eigenvalues, tits_form, TitsClassification,
    TitsVerdict, DEFAULT_TOL,
};
pub use verdict::{cstar_verdict, cstar_verdict_with_tol, ComponentEvidence, CoxeterReport, CstarVerdict};
