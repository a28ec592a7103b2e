use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Atom, Element, Group};

/// An eventually periodic end of the group: the infinite reduced word
/// `prefix . period . period . ...`.
///
/// Canonical form: the period is primitive and the prefix is as short as
/// possible, so two points are equal iff their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPoint {
    prefix: Element,
    period: Vec<Atom>,
}

fn primitive_period(period: &[Atom]) -> usize {
    let n = period.len();
    (1..=n).find(|&d| n % d == 0 && (d..n).all(|i| period[i] == period[i - d])).unwrap_or(n)
}

impl BoundaryPoint {
    /// Builds `prefix . period^infinity`, checking that it is reduced.
    pub fn new(group: &Group, prefix: Element, period: &[Atom]) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::domain("boundary point needs a nonempty period"));
        }
        if !group.is_reduced(prefix.atoms()) || !group.is_reduced(period) {
            return Err(Error::malformed("boundary point words must be reduced"));
        }
        let (first, last) = (period[0], period[period.len() - 1]);
        if !group.compatible(last, first) || prefix.last().is_some_and(|p| !group.compatible(p, first)) {
            return Err(Error::malformed("boundary point word is not reduced at a junction"));
        }
        Ok(Self::canonical(prefix.into_atoms(), period.to_vec()))
    }

    fn canonical(mut prefix: Vec<Atom>, mut period: Vec<Atom>) -> Self {
        let d = primitive_period(&period);
        period.truncate(d);
        while let (Some(&p), Some(&q)) = (prefix.last(), period.last()) {
            if p != q {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        BoundaryPoint { prefix: Element::from_reduced(prefix), period }
    }

    pub fn prefix(&self) -> &Element {
        &self.prefix
    }

    pub fn period(&self) -> &[Atom] {
        &self.period
    }

    /// The `i`-th atom of the infinite word.
    pub fn atom(&self, i: usize) -> Atom {
        let p = self.prefix.len();
        if i < p {
            self.prefix.atoms()[i]
        } else {
            self.period[(i - p) % self.period.len()]
        }
    }

    /// First `n` atoms as a group element.
    pub fn truncate(&self, n: usize) -> Element {
        Element::from_reduced((0..n).map(|i| self.atom(i)).collect())
    }

    pub fn starts_with(&self, w: &Element) -> bool {
        w.atoms().iter().enumerate().all(|(i, &a)| self.atom(i) == a)
    }

    /// Length of the longest common prefix, or `None` if the points are equal.
    pub fn common_prefix_len(&self, other: &BoundaryPoint) -> Option<usize> {
        if self == other {
            return None;
        }
        // Distinct eventually periodic words differ within this many atoms.
        let bound = self.prefix.len().max(other.prefix.len()) + self.period.len() * other.period.len() + 1;
        (0..bound).find(|&i| self.atom(i) != other.atom(i))
    }

    /// Left action `g . self`.
    pub fn translate(&self, group: &Group, g: &Element) -> BoundaryPoint {
        // Unroll enough periods that reduction against g cannot reach the tail.
        let reps = (g.len() + 2).div_ceil(self.period.len()) + 1;
        let mut atoms = self.prefix.atoms().to_vec();
        for _ in 0..reps {
            atoms.extend_from_slice(&self.period);
        }
        let image = group.multiply(g, &Element::from_reduced(atoms));
        Self::canonical(image.into_atoms(), self.period.clone())
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let period = Element::from_reduced(self.period.clone());
        if self.prefix.is_identity() {
            write!(f, "({period})^inf")
        } else {
            write!(f, "{}*({period})^inf", self.prefix)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let g = Group::free(2).unwrap();
        let a = g.parse("a").unwrap().atoms()[0];
        let b = g.parse("b").unwrap().atoms()[0];
        // b*a*(b*a)^inf == (b*a)^inf; (ab ab) period reduces to ab
        let p = BoundaryPoint::new(&g, g.parse("b*a").unwrap(), &[b, a]).unwrap();
        let q = BoundaryPoint::new(&g, Element::identity(), &[b, a, b, a]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.prefix(), &Element::identity());
        assert_eq!(p.period(), &[b, a]);
        // a*b*(a*b)^inf is (a*b)^inf
        let r = BoundaryPoint::new(&g, g.parse("a*b").unwrap(), &[a, b]).unwrap();
        assert_eq!(r, BoundaryPoint::new(&g, Element::identity(), &[a, b]).unwrap());
    }

    #[test]
    fn rejects_unreduced_junctions() {
        let g = Group::free(2).unwrap();
        let a = g.parse("a").unwrap().atoms()[0];
        let ai = g.parse("a^-1").unwrap().atoms()[0];
        assert!(BoundaryPoint::new(&g, g.parse("a").unwrap(), &[ai]).is_err());
        assert!(BoundaryPoint::new(&g, Element::identity(), &[a, ai]).is_err());
        assert!(BoundaryPoint::new(&g, Element::identity(), &[]).is_err());
    }

    #[test]
    fn translate_through_the_prefix() {
        let g = Group::free(2).unwrap();
        let a = g.parse("a").unwrap().atoms()[0];
        let x = BoundaryPoint::new(&g, g.parse("b").unwrap(), &[a]).unwrap();
        let y = x.translate(&g, &g.parse("a^2*b^-1").unwrap());
        assert_eq!(y, BoundaryPoint::new(&g, Element::identity(), &[a]).unwrap());
        let z = x.translate(&g, &g.parse("a^-5*b^-1").unwrap());
        assert_eq!(z, x.translate(&g, &g.parse("b^-1").unwrap()));
        assert_eq!(z.to_string(), "(a)^inf");
    }
}
