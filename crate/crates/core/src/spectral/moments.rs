use num::{BigInt, BigRational, One, Zero};

use super::algebra::AlgebraElement;
use super::vector::{apply, L2Vector};
use crate::error::{Error, Result};
use crate::group::{Element, Group};

/// `<delta_e | (X* X)^n delta_e>`, exactly.
pub fn moment(group: &Group, x: &AlgebraElement, n: usize) -> Result<BigRational> {
    let xs = x.adjoint(group);
    let cap = group.ball_cap();
    let half = n / 2;
    let mut v: L2Vector = L2Vector::delta(Element::identity());
    let mut prev = v.clone();
    for step in 0..n - half {
        prev = v;
        v = apply(group, &xs, &apply(group, x, &prev));
        if v.support_len() as u64 > cap {
            return Err(Error::ResourceCap {
                what: format!("support of (X*X)^{} delta_e", step + 1),
                requested: v.support_len() as u128,
                cap,
            });
        }
    }
    // (X*X)^n = (X*X)^half (X*X)^(n-half) and X*X is self-adjoint
    let left = if half == n - half { &v } else { &prev };
    Ok(left.inner(&v).re)
}

/// Return probability after `2n` steps of the simple random walk on `F_k`,
/// which is the `n`-th moment of the Markov operator. Exact, through the
/// distance-from-the-identity chain.
pub fn markov_moment(k: usize, n: usize) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::domain("rank must be at least 1"));
    }
    let deg = BigInt::from(2 * k);
    let out = BigInt::from(2 * k - 1);
    // counts[d] = number of walks of the current length ending at distance d
    let mut counts = vec![BigInt::one()];
    for _ in 0..2 * n {
        let mut next = vec![BigInt::zero(); counts.len() + 1];
        for (d, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d == 0 {
                next[1] += c * &deg;
            } else {
                next[d - 1] += c;
                next[d + 1] += c * &out;
            }
        }
        counts = next;
    }
    Ok(BigRational::new(counts[0].clone(), num::pow(deg, 2 * n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::algebra::rational;

    #[test]
    fn unitary_moments_are_one() {
        let g = Group::free(2).unwrap();
        let a = AlgebraElement::basis(g.parse("a").unwrap());
        for n in 0..4 {
            assert_eq!(moment(&g, &a, n).unwrap(), rational(1, 1));
        }
    }

    #[test]
    fn markov_moments_agree() {
        let g = Group::free(2).unwrap();
        let h = AlgebraElement::markov(&g);
        assert_eq!(moment(&g, &h, 1).unwrap(), rational(1, 4));
        assert_eq!(moment(&g, &h, 2).unwrap(), rational(7, 64));
        for n in 0..5 {
            assert_eq!(moment(&g, &h, n).unwrap(), markov_moment(2, n).unwrap());
        }
        assert_eq!(markov_moment(3, 1).unwrap(), rational(1, 6));
        assert_eq!(markov_moment(3, 2).unwrap(), rational(11, 216));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Group::free(2).unwrap().with_ball_cap(10);
        let h = AlgebraElement::markov(&g);
        assert!(matches!(moment(&g, &h, 3), Err(Error::ResourceCap { .. })));
    }
}
