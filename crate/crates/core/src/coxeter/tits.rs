use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use super::catalog::{recognize, CatalogKind};
use super::matrix::CoxeterMatrix;
use crate::error::{Error, Result};
use crate::group::Order;

/// Eigenvalue tolerance separating positive, zero and negative.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TitsVerdict {
    Finite,
    Affine,
    Other,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TitsClassification {
    /// The Tits form as a dense symmetric matrix.
    pub form: Vec<Vec<f64>>,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub kernel_dim: usize,
    pub verdict: TitsVerdict,
    /// Diagram name when it is a spherical or affine one.
    pub catalog_name: Option<String>,
}

/// `B_st = -cos(pi / m_st)`, with `-1` for `m_st = infinity`.
pub fn tits_form(m: &CoxeterMatrix) -> DMatrix<f64> {
    let n = m.rank();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            return 1.0;
        }
        match m.entry(i, j) {
            Order::Infinite => -1.0,
            Order::Finite(2) => 0.0,
            Order::Finite(k) => -(PI / k as f64).cos(),
        }
    })
}

/// Connected components of the Coxeter diagram (edges where `m_st >= 3`),
/// each sorted, ordered by smallest member.
pub fn irreducible_components(m: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let n = m.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && m.entry(i, j) != Order::Finite(2) && i != j {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn sorted_eigenvalues(b: &DMatrix<f64>) -> Vec<f64> {
    if b.nrows() == 0 {
        return Vec::new();
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(b.clone()).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub fn classify(m: &CoxeterMatrix) -> Result<TitsClassification> {
    classify_with_tol(m, DEFAULT_TOL)
}

/// Classifies an irreducible Coxeter system by the signature of its Tits form.
pub fn classify_with_tol(m: &CoxeterMatrix, tol: f64) -> Result<TitsClassification> {
    if m.rank() == 0 {
        return Err(Error::domain("empty Coxeter system has no classification"));
    }
    if irreducible_components(m).len() != 1 {
        return Err(Error::domain("classify expects a diagram-connected Coxeter matrix"));
    }
    let b = tits_form(m);
    let eigenvalues = sorted_eigenvalues(&b);
    let kernel_dim = eigenvalues.iter().filter(|x| x.abs() <= tol).count();
    let numeric = if eigenvalues.iter().any(|&x| x < -tol) {
        TitsVerdict::Other
    } else if kernel_dim > 0 {
        TitsVerdict::Affine
    } else {
        TitsVerdict::Finite
    };
    let catalog = recognize(m);
    let ambiguous = eigenvalues.iter().any(|x| x.abs() > tol && x.abs() < 10.0 * tol);
    let catalog_verdict = catalog.as_ref().map(|(k, _)| match k {
        CatalogKind::Finite => TitsVerdict::Finite,
        CatalogKind::Affine => TitsVerdict::Affine,
    });

    if ambiguous && catalog_verdict.is_none() {
        return Err(Error::AmbiguousClassification(format!(
            "eigenvalues {eigenvalues:?} have an entry within (tol, 10 tol) of zero and the diagram {m} is not in the catalog"
        )));
    }
    let verdict = match (numeric, catalog_verdict) {
        (v, Some(c)) if v == c => v,
        // near-zero eigenvalue settled by the catalog
        (_, Some(c)) if ambiguous => c,
        (TitsVerdict::Affine, None) => {
            return Err(Error::AmbiguousClassification(format!(
                "eigenvalues of {m} look affine but the diagram is not an affine one"
            )))
        }
        (v, None) => v,
        (v, Some(c)) => {
            return Err(Error::AmbiguousClassification(format!(
                "eigenvalues of {m} say {v:?} but the catalog says {c:?}"
            )))
        }
    };
    let kernel_dim = if verdict == TitsVerdict::Affine { kernel_dim.max(1) } else { kernel_dim };

    let form = (0..b.nrows()).map(|i| b.row(i).iter().copied().collect()).collect();
    Ok(TitsClassification { form, eigenvalues, kernel_dim, verdict, catalog_name: catalog.map(|(_, name)| name) })
}
