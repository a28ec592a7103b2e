//! Group-algebra arithmetic on `l2(G)`: exact coefficients, moments, norm
//! bounds from compressions, the radial Kesten norm, and Powers averaging.

mod algebra;
mod averaging;
mod coefficients;
mod moments;
mod norm;
mod radial;
mod vector;

pub use algebra::{coeff, rational, real, to_complex64, AlgebraElement, Coeff};
pub use averaging::{
    averaging_inequality_check, invertibility_certificate, powers_average, smallest_n, AveragingReport,
    InvertibilityCertificate, RangeOverlap, AVERAGING_TOL,
};
pub use coefficients::{
    kesten_bound_check, separation_check, separation_value, uniform_unit_vector, KestenReport, SeparationReport,
    KESTEN_TOL, UNIT_TOL,
};
pub use moments::{markov_moment, moment};
pub use norm::{compressed_norm, norm_bounds, NormReport, POWER_MAX_ITER, POWER_TOL};
pub use radial::{radial_norm, radial_off_diagonal, tridiagonal_top_eigenvalue, DEFAULT_TRUNCATION};
pub use vector::{apply, diag_coefficient, L2Vector, Real};
