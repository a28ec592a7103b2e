use crate::error::{Error, Result};

pub const DEFAULT_TRUNCATION: usize = 10_000;

/// Off-diagonal entries of the radial reduction of the `F_k` Markov operator:
/// `1/sqrt(2k)` first, then `sqrt(2k-1)/(2k)`.
pub fn radial_off_diagonal(k: usize, size: usize) -> Vec<f64> {
    let d = (2 * k) as f64;
    let first = (1.0 / d).sqrt();
    let rest = (d - 1.0).sqrt() / d;
    (0..size.saturating_sub(1)).map(|i| if i == 0 { first } else { rest }).collect()
}

/// Number of eigenvalues below `x` of the symmetric tridiagonal matrix with
/// zero diagonal and off-diagonal `b` (Sturm sequence).
fn count_below(b: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = -x;
    if q < 0.0 {
        count += 1;
    }
    for &bi in b {
        let prev = if q == 0.0 { f64::EPSILON * bi.abs().max(1.0) } else { q };
        q = -x - bi * bi / prev;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Largest eigenvalue of a zero-diagonal symmetric tridiagonal matrix, by bisection.
pub fn tridiagonal_top_eigenvalue(b: &[f64]) -> f64 {
    if b.is_empty() {
        return 0.0;
    }
    let size = b.len() + 1;
    let mut hi = 2.0 * b.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let mut lo = 0.0;
    while hi - lo > 1e-15 * hi {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(b, mid) < size {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Norm of the Markov operator on `F_k`, from its radial reduction truncated to `size` spheres.
pub fn radial_norm(k: usize, size: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::domain("rank must be at least 1"));
    }
    if size == 0 {
        return Err(Error::domain("truncation size must be at least 1"));
    }
    Ok(tridiagonal_top_eigenvalue(&radial_off_diagonal(k, size)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert_eq!(tridiagonal_top_eigenvalue(&[]), 0.0);
        assert!((tridiagonal_top_eigenvalue(&[0.5]) - 0.5).abs() < 1e-14);
        let b = [1.0, 1.0];
        assert!((tridiagonal_top_eigenvalue(&b) - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn known_norms() {
        let t = DEFAULT_TRUNCATION;
        assert!((radial_norm(1, t).unwrap() - 1.0).abs() < 1e-6);
        assert!((radial_norm(2, t).unwrap() - 3f64.sqrt() / 2.0).abs() < 1e-6);
        assert!((radial_norm(3, t).unwrap() - 5f64.sqrt() / 3.0).abs() < 1e-6);
        assert!(radial_norm(0, t).is_err());
    }

    #[test]
    fn increases_with_truncation() {
        let mut last = 0.0;
        for size in [1, 2, 5, 20, 100, 1000] {
            let r = radial_norm(2, size).unwrap();
            assert!(r >= last);
            last = r;
        }
    }
}
