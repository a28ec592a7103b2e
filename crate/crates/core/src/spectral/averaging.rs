use std::collections::{BTreeMap, HashMap};

use num::{BigRational, One, Zero};
use serde::Serialize;

use super::algebra::{real, to_complex64, AlgebraElement, Coeff};
use super::norm::{compressed_norm, NormReport};
use crate::boundary::{construct_powers_data, verify_powers_data, PowersData, PowersDoc, SearchBounds, VerifyMode};
use crate::error::{Error, Result};
use crate::group::Group;

pub const AVERAGING_TOL: f64 = 1e-9;

/// `V = (1/N) sum_j lambda(gamma_j) U lambda(gamma_j)^-1`, exactly.
pub fn powers_average(group: &Group, u: &AlgebraElement, data: &PowersData) -> AlgebraElement {
    let weight = real(BigRational::new(1.into(), data.gammas.len().into()));
    let mut v = AlgebraElement::zero();
    for gamma in &data.gammas {
        for (x, z) in u.terms() {
            v.add_term(group.conjugate(x, gamma), z * &weight);
        }
    }
    v
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RangeOverlap {
    pub j: usize,
    pub k: usize,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AveragingReport {
    pub n: usize,
    pub radius: usize,
    pub l1_x: f64,
    /// `(2 / sqrt(N)) * l1(X')`.
    pub ceiling: f64,
    /// Compressed norm of `Y'`.
    pub norm: NormReport,
    pub inequality_holds: bool,
    /// Number of range elements examined in the disjointness check.
    pub range_points: usize,
    pub ranges_disjoint: bool,
    pub overlap: Option<RangeOverlap>,
    pub pass: bool,
}

/// For `X'` supported in `F`, checks `||Y'|| <= (2 / sqrt N) l1(X')` on the
/// compression to `B(R)`, where `Y' = powers_average(X')`, and that the
/// operators `P_j lambda(gamma_j) X' lambda(gamma_j)^-1` map `l2(B(R))` onto
/// pairwise disjointly supported subspaces, `P_j` restricting to `gamma_j D`.
pub fn averaging_inequality_check(
    group: &Group,
    x: &AlgebraElement,
    data: &PowersData,
    radius: usize,
) -> Result<AveragingReport> {
    if let Some(bad) = x.support().into_iter().find(|g| !data.f_set.contains(g)) {
        return Err(Error::domain(format!("{bad} is in the support of X' but not in F")));
    }
    let exact = verify_powers_data(group, data, 0, VerifyMode::Exact)?;
    if !exact.pass {
        return Err(Error::domain("Powers data fails exact verification"));
    }

    let y = powers_average(group, x, data);
    let norm = compressed_norm(group, &y, radius)?;
    let l1_x = x.l1_norm();
    let ceiling = 2.0 / (data.n as f64).sqrt() * l1_x;
    let inequality_holds = norm.lower <= ceiling + AVERAGING_TOL;

    // Range of P_j lambda(gamma_j) X' lambda(gamma_j^-1) on l2(B(R)) is spanned by
    // the deltas at gamma_j w, w = x gamma_j^-1 y in D, for x in supp(X'), y in B(R).
    let ball = group.enumerate_ball(radius)?;
    let cylinder = &data.cylinder;
    let mut owner: HashMap<_, usize> = HashMap::new();
    let mut overlap = None;
    'outer: for (j, gamma) in data.gammas.iter().enumerate() {
        let inv = group.invert(gamma);
        for y in ball.iter() {
            let shifted = group.multiply(&inv, y);
            for (g, _) in x.terms() {
                let w = group.multiply(g, &shifted);
                if cylinder.contains(&w) {
                    continue;
                }
                let z = group.multiply(gamma, &w);
                match owner.get(&z) {
                    Some(&k) if k != j => {
                        overlap = Some(RangeOverlap { j: k + 1, k: j + 1, element: z.to_string() });
                        break 'outer;
                    }
                    Some(_) => {}
                    None => {
                        owner.insert(z, j);
                    }
                }
            }
        }
    }
    let ranges_disjoint = overlap.is_none();
    Ok(AveragingReport {
        n: data.n,
        radius,
        l1_x,
        ceiling,
        range_points: owner.len(),
        norm,
        inequality_holds,
        ranges_disjoint,
        overlap,
        pass: inequality_holds && ranges_disjoint,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvertibilityCertificate {
    pub epsilon: f64,
    pub l1_x: f64,
    pub n: usize,
    /// Rigorous bound `(2 / sqrt N) l1(X) >= ||Y||`.
    pub bound: f64,
    pub data: PowersDoc,
    /// `V = 1 + Y` as word to `[re, im]`.
    pub v: BTreeMap<String, [String; 2]>,
    pub trace_v_is_one: bool,
    /// Compressed norm of `Y = V - 1`, as corroboration.
    pub compressed: NormReport,
    pub pass: bool,
}

/// Smallest `N` with `(2 / sqrt N) l1 < 1 - eps`.
pub fn smallest_n(l1: f64, epsilon: f64) -> usize {
    if l1 == 0.0 {
        return 1;
    }
    let mut n = (4.0 * l1 * l1 / ((1.0 - epsilon) * (1.0 - epsilon))).floor().max(1.0) as usize;
    while 2.0 / (n as f64).sqrt() * l1 >= 1.0 - epsilon {
        n += 1;
    }
    while n > 1 && 2.0 / ((n - 1) as f64).sqrt() * l1 < 1.0 - epsilon {
        n -= 1;
    }
    n
}

/// Averages `U = 1 + X` over Powers data for `(supp X, N)` so that
/// `V = 1 + Y` has `||Y|| < 1 - eps`, whence `V` is invertible.
pub fn invertibility_certificate(
    group: &Group,
    u: &AlgebraElement,
    epsilon: f64,
    radius: usize,
    bounds: &SearchBounds,
) -> Result<InvertibilityCertificate> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::domain(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    if u.trace() != Coeff::one() {
        return Err(Error::domain(format!("trace(U) = {} but must be 1", to_complex64(&u.trace()))));
    }
    let x = u.sub(&AlgebraElement::one());
    let l1_x = x.l1_norm();
    let n = smallest_n(l1_x, epsilon);
    let bound = 2.0 / (n as f64).sqrt() * l1_x;

    let data = construct_powers_data(group, &x.support(), n, bounds)?;
    let v = powers_average(group, u, &data);
    let y = v.sub(&AlgebraElement::one());
    let trace_v_is_one = v.trace() == Coeff::one() && y.trace().is_zero();
    let compressed = compressed_norm(group, &y, radius)?;
    let pass = trace_v_is_one && bound < 1.0 - epsilon && compressed.lower <= bound + AVERAGING_TOL;
    Ok(InvertibilityCertificate {
        epsilon,
        l1_x,
        n,
        bound,
        data: data.to_doc(),
        v: v.to_doc(),
        trace_v_is_one,
        compressed,
        pass,
    })
}
