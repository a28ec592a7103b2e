use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::complex::{Complex, Complex64};
use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{Element, Group};

/// Exact complex rational.
pub type Coeff = Complex<BigRational>;

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn coeff(re: BigRational, im: BigRational) -> Coeff {
    Complex::new(re, im)
}

pub fn real(q: BigRational) -> Coeff {
    Complex::new(q, BigRational::zero())
}

pub fn to_complex64(z: &Coeff) -> Complex64 {
    Complex64::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
}

/// Finitely supported element `sum z_g lambda(g)` of the complex group algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coeffs: BTreeMap<Element, Coeff>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Element::identity())
    }

    /// `lambda(g)`.
    pub fn basis(g: Element) -> Self {
        Self::from_terms([(g, Coeff::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Element, Coeff)>) -> Self {
        let mut x = Self::zero();
        for (g, z) in terms {
            x.add_term(g, z);
        }
        x
    }

    /// Markov operator `(1/|S|) sum_{s in S} lambda(s)` for `S` the generators and their inverses.
    pub fn markov(group: &Group) -> Self {
        let mut s: Vec<Element> = (0..group.factors().len())
            .flat_map(|i| {
                let g = group.generator(i);
                [group.invert(&g), g]
            })
            .collect();
        s.sort();
        s.dedup();
        let w = real(rational(1, s.len() as i64));
        Self::from_terms(s.into_iter().map(|g| (g, w.clone())))
    }

    pub fn add_term(&mut self, g: Element, z: Coeff) {
        if z.is_zero() {
            return;
        }
        match self.coeffs.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(z);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + z;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, g: &Element) -> Coeff {
        self.coeffs.get(g).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Element, &Coeff)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Element> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, z) in other.terms() {
            out.add_term(g.clone(), z.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&real(-BigRational::one())))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_terms(self.terms().map(|(g, z)| (g.clone(), z * c)))
    }

    /// Convolution product.
    pub fn mul(&self, group: &Group, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, z) in self.terms() {
            for (h, w) in other.terms() {
                out.add_term(group.multiply(g, h), z * w);
            }
        }
        out
    }

    /// `X*`, with coefficients `conj(z_{g^-1})` at `g`.
    pub fn adjoint(&self, group: &Group) -> Self {
        Self::from_terms(self.terms().map(|(g, z)| (group.invert(g), z.conj())))
    }

    /// Canonical trace: the coefficient at the identity.
    pub fn trace(&self) -> Coeff {
        self.coeff(&Element::identity())
    }

    /// `sum |z_g|`, an upper bound for the operator norm.
    pub fn l1_norm(&self) -> f64 {
        self.terms().map(|(_, z)| to_complex64(z).norm()).sum()
    }

    /// `sum |z_g|^2 = trace(X* X)`, exactly.
    pub fn l2_norm_sqr(&self) -> BigRational {
        self.terms().map(|(_, z)| z.norm_sqr()).sum()
    }

    pub fn to_float_terms(&self) -> Vec<(Element, Complex64)> {
        self.terms().map(|(g, z)| (g.clone(), to_complex64(z))).collect()
    }

    /// JSON form: word to `[re, im]` as rational strings.
    pub fn to_doc(&self) -> BTreeMap<String, [String; 2]> {
        self.terms().map(|(g, z)| (g.to_string(), [z.re.to_string(), z.im.to_string()])).collect()
    }

    pub fn from_doc(group: &Group, doc: &BTreeMap<String, [String; 2]>) -> Result<Self> {
        let q = |s: &str| BigRational::from_str(s.trim()).map_err(|_| Error::malformed(format!("bad rational {s:?}")));
        let mut x = Self::zero();
        for (w, [re, im]) in doc {
            x.add_term(group.parse(w)?, coeff(q(re)?, q(im)?));
        }
        Ok(x)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(group: &Group, text: &str) -> Result<Self> {
        Self::from_doc(group, &serde_json::from_str(text)?)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (g, z)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let c = if z.im.is_zero() {
                z.re.to_string()
            } else if z.re.is_zero() {
                format!("{}i", z.im)
            } else {
                format!("({}{}{}i)", z.re, if z.im.is_negative() { "" } else { "+" }, z.im)
            };
            write!(f, "{c}*L({g})")?;
        }
        Ok(())
    }
}
