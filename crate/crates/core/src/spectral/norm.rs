use std::collections::HashMap;

use num::complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::group::{Element, Group};

pub const POWER_TOL: f64 = 1e-10;
pub const POWER_MAX_ITER: usize = 10_000;

const CHUNK: usize = 4096;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormReport {
    /// `sup ||X xi|| / ||xi||` over `xi` supported in `B(radius)`, from below.
    pub lower: f64,
    /// `l1` norm of the coefficients.
    pub upper: f64,
    pub radius: usize,
    pub iterations: usize,
    pub converged: bool,
}

/// `X` restricted to `l2(B(R))`, as a sparse map into `l2(supp(X) B(R))`.
struct Compression {
    coeffs: Vec<Complex64>,
    /// `targets[j * T + t]` is the row of `g_t x_j`.
    targets: Vec<u32>,
    /// Rows in CSR form: entries `(column, term)` hitting each row.
    row_start: Vec<usize>,
    row_entries: Vec<(u32, u32)>,
}

impl Compression {
    fn new(group: &Group, x: &AlgebraElement, ball: &[Element]) -> Result<Self> {
        let terms = x.to_float_terms();
        let t = terms.len();
        let cap = group.ball_cap();
        let requested = (ball.len() as u128) * (t as u128);
        if requested > cap as u128 {
            return Err(Error::ResourceCap { what: "compressed operator".into(), requested, cap });
        }
        let products: Vec<Element> =
            ball.par_iter().flat_map_iter(|y| terms.iter().map(move |(g, _)| group.multiply(g, y))).collect();
        let mut index: HashMap<Element, u32> = HashMap::with_capacity(products.len());
        let mut targets = Vec::with_capacity(products.len());
        for p in products {
            let next = index.len() as u32;
            targets.push(*index.entry(p).or_insert(next));
        }
        let rows = index.len();
        let mut row_start = vec![0usize; rows + 1];
        for &r in &targets {
            row_start[r as usize + 1] += 1;
        }
        for i in 0..rows {
            row_start[i + 1] += row_start[i];
        }
        let mut fill = row_start.clone();
        let mut row_entries = vec![(0u32, 0u32); targets.len()];
        for (k, &r) in targets.iter().enumerate() {
            row_entries[fill[r as usize]] = ((k / t.max(1)) as u32, (k % t.max(1)) as u32);
            fill[r as usize] += 1;
        }
        Ok(Compression { coeffs: terms.into_iter().map(|(_, z)| z).collect(), targets, row_start, row_entries })
    }

    fn rows(&self) -> usize {
        self.row_start.len() - 1
    }

    fn apply(&self, v: &[Complex64], out: &mut [Complex64]) {
        out.par_iter_mut().enumerate().for_each(|(r, o)| {
            *o = self.row_entries[self.row_start[r]..self.row_start[r + 1]]
                .iter()
                .map(|&(j, t)| self.coeffs[t as usize] * v[j as usize])
                .sum();
        });
    }

    fn apply_adjoint(&self, w: &[Complex64], out: &mut [Complex64]) {
        let t = self.coeffs.len();
        out.par_iter_mut().enumerate().for_each(|(j, o)| {
            *o = (0..t).map(|k| self.coeffs[k].conj() * w[self.targets[j * t + k] as usize]).sum();
        });
    }
}

/// `sum |v_i|^2` in a fixed summation order.
fn norm_sqr(v: &[Complex64]) -> f64 {
    let partial: Vec<f64> = v.par_chunks(CHUNK).map(|c| c.iter().map(|z| z.norm_sqr()).sum()).collect();
    partial.iter().sum()
}

/// Power iteration on `P X* X P` for `P` the projection onto `l2(B(R))`,
/// started at the normalized all-ones vector.
pub fn compressed_norm(group: &Group, x: &AlgebraElement, radius: usize) -> Result<NormReport> {
    let upper = x.l1_norm();
    let ball = group.enumerate_ball(radius)?;
    let report = |lower, iterations, converged| NormReport { lower, upper, radius, iterations, converged };
    if x.is_zero() {
        return Ok(report(0.0, 0, true));
    }
    let a = Compression::new(group, x, ball.elements())?;
    let n = ball.len();
    let mut v = vec![Complex64::new(1.0 / (n as f64).sqrt(), 0.0); n];
    let mut w = vec![Complex64::new(0.0, 0.0); a.rows()];
    let mut best = 0.0_f64;
    let mut prev = f64::NAN;
    for it in 1..=POWER_MAX_ITER {
        a.apply(&v, &mut w);
        // Rayleigh quotient of A*A at the unit vector v
        let mu = norm_sqr(&w);
        best = best.max(mu);
        if mu == 0.0 || (mu - prev).abs() <= POWER_TOL * mu {
            return Ok(report(best.sqrt(), it, true));
        }
        prev = mu;
        a.apply_adjoint(&w, &mut v);
        let len = norm_sqr(&v).sqrt();
        if len == 0.0 {
            return Ok(report(best.sqrt(), it, true));
        }
        v.par_iter_mut().for_each(|z| *z /= len);
    }
    Ok(report(best.sqrt(), POWER_MAX_ITER, false))
}

/// Certified lower bound and `l1` upper bound for `||lambda(X)||`.
pub fn norm_bounds(group: &Group, x: &AlgebraElement, radius: usize) -> Result<NormReport> {
    compressed_norm(group, x, radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::algebra::{coeff, rational};

    #[test]
    fn unitary_and_identity() {
        let g = Group::free(2).unwrap();
        for r in 0..3 {
            let one = norm_bounds(&g, &AlgebraElement::one(), r).unwrap();
            assert!((one.lower - 1.0).abs() < 1e-12 && one.upper == 1.0);
        }
        let a = norm_bounds(&g, &AlgebraElement::basis(g.parse("a").unwrap()), 0).unwrap();
        assert!((a.lower - 1.0).abs() < 1e-12);
        assert_eq!(norm_bounds(&g, &AlgebraElement::zero(), 2).unwrap().lower, 0.0);
    }

    #[test]
    fn markov_lower_bounds_increase() {
        let g = Group::free(2).unwrap();
        let h = AlgebraElement::markov(&g);
        let mut last = 0.0;
        for r in [0, 1, 2, 4, 6] {
            let rep = norm_bounds(&g, &h, r).unwrap();
            assert!(rep.converged);
            assert!(rep.lower > last - 1e-12, "{r}: {} after {last}", rep.lower);
            assert!(rep.lower <= 3f64.sqrt() / 2.0 + 1e-9);
            last = rep.lower;
        }
    }

    #[test]
    fn complex_coefficients() {
        let g = Group::free(1).unwrap();
        // 1 + i lambda(a) on Z has norm max |1 + i e^(it)| = 2
        let x = AlgebraElement::one()
            .add(&AlgebraElement::from_terms([(g.parse("a").unwrap(), coeff(rational(0, 1), rational(1, 1)))]));
        let rep = norm_bounds(&g, &x, 30).unwrap();
        assert!(rep.lower > 1.99 && rep.lower <= 2.0 + 1e-9);
        assert!((rep.upper - 2.0).abs() < 1e-15);
    }
}
