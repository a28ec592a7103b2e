use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::Neg;

use num::complex::Complex;
use num::{BigRational, Num, ToPrimitive, Zero};

use super::algebra::{AlgebraElement, Coeff};
use crate::group::{Element, Group};

/// Real field underlying the complex scalars of an [`L2Vector`].
pub trait Real: Num + Clone + Neg<Output = Self> + Debug + Send + Sync {
    fn from_rational(q: &BigRational) -> Self;
    fn to_f64(&self) -> f64;
}

impl Real for f64 {
    fn from_rational(q: &BigRational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Real for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

fn lift<T: Real>(z: &Coeff) -> Complex<T> {
    Complex::new(T::from_rational(&z.re), T::from_rational(&z.im))
}

/// Finitely supported vector in `l2(G)`. Exact over `BigRational`, floating over `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct L2Vector<T: Real = BigRational> {
    entries: BTreeMap<Element, Complex<T>>,
}

impl<T: Real> Default for L2Vector<T> {
    fn default() -> Self {
        L2Vector { entries: BTreeMap::new() }
    }
}

impl<T: Real> L2Vector<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn delta(g: Element) -> Self {
        Self::from_entries([(g, Complex::new(T::one(), T::zero()))])
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Element, Complex<T>)>) -> Self {
        let mut v = Self::zero();
        for (g, z) in entries {
            v.add_entry(g, z);
        }
        v
    }

    pub fn add_entry(&mut self, g: Element, z: Complex<T>) {
        if z.is_zero() {
            return;
        }
        let slot = self.entries.entry(g).or_insert_with(Complex::zero);
        *slot = slot.clone() + z;
        if slot.is_zero() {
            self.entries.retain(|_, z| !z.is_zero());
        }
    }

    pub fn get(&self, g: &Element) -> Complex<T> {
        self.entries.get(g).cloned().unwrap_or_else(Complex::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Element, &Complex<T>)> {
        self.entries.iter()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn norm_sqr(&self) -> T {
        self.entries.values().fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    pub fn scale(&self, c: &Complex<T>) -> Self {
        Self::from_entries(self.entries().map(|(g, z)| (g.clone(), z.clone() * c.clone())))
    }

    /// `<self | other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        let (small, large, flip) =
            if self.entries.len() <= other.entries.len() { (self, other, false) } else { (other, self, true) };
        let mut acc = Complex::zero();
        for (g, z) in small.entries() {
            if let Some(w) = large.entries.get(g) {
                acc = if flip { acc + w.conj() * z.clone() } else { acc + z.conj() * w.clone() };
            }
        }
        acc
    }

    /// `lambda(g) self`, i.e. `x -> self(g^-1 x)`.
    pub fn translate(&self, group: &Group, g: &Element) -> Self {
        Self { entries: self.entries().map(|(x, z)| (group.multiply(g, x), z.clone())).collect() }
    }

    pub fn to_f64(&self) -> L2Vector<f64> {
        L2Vector {
            entries: self.entries().map(|(g, z)| (g.clone(), Complex::new(z.re.to_f64(), z.im.to_f64()))).collect(),
        }
    }
}

impl L2Vector<f64> {
    /// Real-valued vector from floats, dropping zeros.
    pub fn from_real(entries: impl IntoIterator<Item = (Element, f64)>) -> Self {
        Self::from_entries(entries.into_iter().map(|(g, x)| (g, Complex::new(x, 0.0))))
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm_sqr().sqrt();
        if n == 0.0 {
            return self.clone();
        }
        self.scale(&Complex::new(1.0 / n, 0.0))
    }
}

/// `(X xi)(x) = sum_g z_g xi(g^-1 x)`.
pub fn apply<T: Real>(group: &Group, x: &AlgebraElement, xi: &L2Vector<T>) -> L2Vector<T> {
    let mut out = L2Vector::zero();
    for (g, z) in x.terms() {
        let z: Complex<T> = lift(z);
        for (y, w) in xi.entries() {
            out.add_entry(group.multiply(g, y), z.clone() * w.clone());
        }
    }
    out
}

/// `<xi | lambda(g) xi>`.
pub fn diag_coefficient<T: Real>(group: &Group, xi: &L2Vector<T>, g: &Element) -> Complex<T> {
    xi.inner(&xi.translate(group, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::algebra::{rational, real};

    #[test]
    fn apply_basis_elements() {
        let g = Group::free(2).unwrap();
        let w = |s| g.parse(s).unwrap();
        let e: L2Vector = L2Vector::delta(Element::identity());
        assert_eq!(apply(&g, &AlgebraElement::one(), &e), e);
        assert_eq!(apply(&g, &AlgebraElement::basis(w("a")), &e), L2Vector::delta(w("a")));
        let x = AlgebraElement::basis(w("a")).add(&AlgebraElement::basis(w("b")));
        let out = apply(&g, &x, &L2Vector::<BigRational>::delta(w("b")));
        let mut expect = L2Vector::delta(w("a*b"));
        expect.add_entry(w("b^2"), real(rational(1, 1)));
        assert_eq!(out, expect);
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_first_slot() {
        let g = Group::free(1).unwrap();
        let i = Complex::new(rational(0, 1), rational(1, 1));
        let u = L2Vector::<BigRational>::delta(Element::identity()).scale(&i);
        let v = L2Vector::delta(Element::identity());
        assert_eq!(u.inner(&v), i.conj());
        assert_eq!(v.inner(&u), i);
        assert_eq!(diag_coefficient(&g, &v, &Element::identity()), real(rational(1, 1)));
    }

    #[test]
    fn cancellation_in_add_entry() {
        let g = Group::free(1).unwrap();
        let mut v = L2Vector::<f64>::delta(g.parse("a").unwrap());
        v.add_entry(g.parse("a").unwrap(), Complex::new(-1.0, 0.0));
        assert!(v.is_zero());
    }
}
