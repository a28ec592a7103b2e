use num::complex::{Complex, Complex64};
use num::{BigRational, One, Zero};
use serde::Serialize;

use super::algebra::{rational, to_complex64, Coeff};
use super::radial::{radial_norm, DEFAULT_TRUNCATION};
use super::vector::{diag_coefficient, L2Vector};
use crate::error::{Error, Result};
use crate::group::{Element, Group, GroupSpec};

pub const UNIT_TOL: f64 = 1e-12;
pub const KESTEN_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeparationReport {
    pub element: String,
    /// `<xi | lambda(a) xi>` for `xi = (delta_e + i delta_a) / sqrt 2`, as exact `[re, im]`.
    pub value: [String; 2],
    pub distance_from_one: f64,
    pub pass: bool,
}

/// Evaluates the diagonal coefficient of `xi = 2^(-1/2) (delta_e + i delta_a)`
/// at `a`, which separates `a` from the identity.
pub fn separation_value(group: &Group, a: &Element) -> Result<Coeff> {
    if a.is_identity() {
        return Err(Error::domain("separation needs a != e"));
    }
    let i = Complex::new(BigRational::zero(), BigRational::one());
    let mut eta: L2Vector = L2Vector::delta(Element::identity());
    eta.add_entry(a.clone(), i);
    // scaling eta by 2^(-1/2) divides the coefficient by |eta|^2 = 2
    let raw = diag_coefficient(group, &eta, a);
    Ok(raw * rational(1, 2))
}

pub fn separation_check(group: &Group, a: &Element) -> Result<SeparationReport> {
    let value = separation_value(group, a)?;
    let distance_from_one = (to_complex64(&value) - Complex64::new(1.0, 0.0)).norm();
    Ok(SeparationReport {
        element: a.to_string(),
        value: [value.re.to_string(), value.im.to_string()],
        distance_from_one,
        pass: value != Coeff::one(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KestenReport {
    pub rank: usize,
    /// `(1/2k) sum_s Re <xi | lambda(s) xi>`.
    pub average: f64,
    pub radial_norm: f64,
    pub epsilon: f64,
    pub pass: bool,
}

/// Checks `(1/2k) sum_s Re phi(s) <= ||h||` for a unit vector `xi` in `l2(F_k)`.
pub fn kesten_bound_check(group: &Group, xi: &L2Vector<f64>) -> Result<KestenReport> {
    let rank = match group.spec() {
        GroupSpec::Free { rank } if *rank >= 2 => *rank,
        other => return Err(Error::domain(format!("Kesten check needs F_k with k >= 2, got {other}"))),
    };
    let len = xi.norm_sqr();
    if (len - 1.0).abs() > UNIT_TOL {
        return Err(Error::domain(format!("xi has squared norm {len}, normalize it first")));
    }
    let mut total = 0.0;
    for i in 0..rank {
        let s = group.generator(i);
        total += diag_coefficient(group, xi, &s).re + diag_coefficient(group, xi, &group.invert(&s)).re;
    }
    let average = total / (2 * rank) as f64;
    let norm = radial_norm(rank, DEFAULT_TRUNCATION)?;
    Ok(KestenReport { rank, average, radial_norm: norm, epsilon: 1.0 - norm, pass: average <= norm + KESTEN_TOL })
}

/// `xi(x) = 1/sqrt(|B|)` on a ball.
pub fn uniform_unit_vector(elements: &[Element]) -> L2Vector<f64> {
    let w = 1.0 / (elements.len() as f64).sqrt();
    L2Vector::from_real(elements.iter().map(|g| (g.clone(), w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separation_values() {
        let g = Group::free(2).unwrap();
        let v = separation_value(&g, &g.parse("a").unwrap()).unwrap();
        assert_eq!(v, Complex::new(rational(0, 1), rational(-1, 2)));
        let d = Group::cyclic_product(&[2, 2]).unwrap();
        assert!(separation_value(&d, &d.parse("a").unwrap()).unwrap().is_zero());
        assert!(separation_check(&g, &Element::identity()).is_err());
        let rep = separation_check(&g, &g.parse("a*b").unwrap()).unwrap();
        assert!(rep.pass && rep.distance_from_one >= 0.9);
    }

    #[test]
    fn kesten_examples() {
        let g = Group::free(2).unwrap();
        let delta = L2Vector::<f64>::delta(Element::identity());
        let rep = kesten_bound_check(&g, &delta).unwrap();
        assert_eq!(rep.average, 0.0);
        assert!(rep.pass);
        let ball = g.enumerate_ball(1).unwrap();
        let rep = kesten_bound_check(&g, &uniform_unit_vector(ball.elements())).unwrap();
        assert!((rep.average - 0.4).abs() < 1e-14);
        let twice = L2Vector::<f64>::from_real([(Element::identity(), 2.0)]);
        assert!(kesten_bound_check(&g, &twice).is_err());
        assert!(kesten_bound_check(&Group::free(1).unwrap(), &delta).is_err());
    }
}
