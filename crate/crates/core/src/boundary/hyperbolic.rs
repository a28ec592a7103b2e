use serde::Serialize;

use super::point::BoundaryPoint;
use crate::error::{Error, Result};
use crate::group::{Element, Group, Order};

/// Repelling and attracting fixed points of a hyperbolic element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPoints {
    pub source: BoundaryPoint,
    pub range: BoundaryPoint,
}

impl FixedPoints {
    pub fn contains(&self, p: &BoundaryPoint) -> bool {
        &self.source == p || &self.range == p
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchBounds {
    /// Longest cylinder prefix tried when looking for a set moved off itself by F.
    pub max_prefix_len: usize,
    /// Largest exponent tried for conjugations; powers may go further by the
    /// depth of the target cylinders.
    pub max_exponent: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_prefix_len: 12, max_exponent: 12 }
    }
}

fn not_hyperbolic(g: &Element, reason: &str) -> Error {
    Error::NotHyperbolic { element: g.to_string(), reason: reason.to_string() }
}

/// Source `g^-inf` and range `g^+inf` of a hyperbolic element.
pub fn hyperbolic_data(group: &Group, g: &Element) -> Result<FixedPoints> {
    let (u, core) = group.cyclic_reduction(g);
    match core.atoms() {
        [] => return Err(not_hyperbolic(g, "identity")),
        [a] if group.order_of_factor(a.factor) != Order::Infinite => {
            return Err(not_hyperbolic(g, "finite order, conjugate into a finite factor"))
        }
        _ => {}
    }
    let inverse = group.invert(&core);
    let range = BoundaryPoint::new(group, Element::identity(), core.atoms())?.translate(group, &u);
    let source = BoundaryPoint::new(group, Element::identity(), inverse.atoms())?.translate(group, &u);
    Ok(FixedPoints { source, range })
}

pub fn is_hyperbolic(group: &Group, g: &Element) -> bool {
    hyperbolic_data(group, g).is_ok()
}

/// Writes `g = root^power` with `root` not a proper power.
pub fn primitive_root(group: &Group, g: &Element) -> Result<(Element, u64)> {
    if group.order_of(g).is_some() {
        return Err(Error::domain(format!("{g} has finite order, no primitive root")));
    }
    let (u, core) = group.cyclic_reduction(g);
    let atoms = core.atoms();
    let n = atoms.len();
    let d = (1..=n).find(|&d| n % d == 0 && (d..n).all(|i| atoms[i] == atoms[i - d])).unwrap_or(n);
    let root = Element::from_reduced(atoms[..d].to_vec());
    Ok((group.conjugate(&root, &u), (n / d) as u64))
}

/// Whether two hyperbolic elements have no common fixed point.
pub fn is_transverse(group: &Group, g: &Element, h: &Element) -> Result<bool> {
    let fg = hyperbolic_data(group, g)?;
    let fh = hyperbolic_data(group, h)?;
    Ok(!fh.contains(&fg.source) && !fh.contains(&fg.range))
}

/// `N` pairwise transverse hyperbolic elements `h1^j h2 h1^-j`, taking
/// exponents `j = 1, 2, ...` greedily.
pub fn make_transverse_family(
    group: &Group,
    h1: &Element,
    h2: &Element,
    n: usize,
    bounds: &SearchBounds,
) -> Result<Vec<Element>> {
    if !is_transverse(group, h1, h2)? {
        return Err(Error::domain(format!("{h1} and {h2} share a fixed point")));
    }
    let mut family: Vec<(Element, FixedPoints)> = Vec::with_capacity(n);
    let limit = n + bounds.max_exponent;
    let h1inv = group.invert(h1);
    let mut left = h1.clone();
    let mut right = h1inv.clone();
    for _ in 1..=limit {
        if family.len() == n {
            break;
        }
        let candidate = group.multiply(&group.multiply(&left, h2), &right);
        let fixed = hyperbolic_data(group, &candidate)?;
        let clash = family.iter().any(|(_, f)| f.contains(&fixed.source) || f.contains(&fixed.range));
        if !clash {
            family.push((candidate, fixed));
        }
        left = group.multiply(&left, h1);
        right = group.multiply(&right, &h1inv);
    }
    if family.len() < n {
        return Err(Error::ConstructionFailed {
            bound: limit,
            reason: format!("found only {} of {n} pairwise transverse conjugates", family.len()),
        });
    }
    Ok(family.into_iter().map(|(g, _)| g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_points_of_simple_words() {
        let g = Group::free(2).unwrap();
        let ab = g.parse("a*b").unwrap();
        let f = hyperbolic_data(&g, &ab).unwrap();
        assert_eq!(f.range.to_string(), "(a*b)^inf");
        assert_eq!(f.source.to_string(), "(b^-1*a^-1)^inf");
        let f = hyperbolic_data(&g, &g.parse("a").unwrap()).unwrap();
        assert_eq!(f.range.to_string(), "(a)^inf");
        assert_eq!(f.source.to_string(), "(a^-1)^inf");
    }

    #[test]
    fn torsion_is_not_hyperbolic() {
        let p = Group::cyclic_product(&[2, 3]).unwrap();
        assert!(matches!(hyperbolic_data(&p, &p.parse("a").unwrap()), Err(Error::NotHyperbolic { .. })));
        assert!(hyperbolic_data(&p, &p.parse("b*a*b^2").unwrap()).is_err());
        assert!(hyperbolic_data(&p, &p.parse("a*b").unwrap()).is_ok());
        assert!(hyperbolic_data(&p, &Element::identity()).is_err());
    }

    #[test]
    fn primitive_roots() {
        let g = Group::free(2).unwrap();
        let w = |s| g.parse(s).unwrap();
        assert_eq!(primitive_root(&g, &w("a^3")).unwrap(), (w("a"), 3));
        assert_eq!(primitive_root(&g, &w("a*b")).unwrap(), (w("a*b"), 1));
        assert_eq!(primitive_root(&g, &w("a*b*a*b")).unwrap(), (w("a*b"), 2));
        assert_eq!(primitive_root(&g, &w("b*a^2*b^-1")).unwrap(), (w("b*a*b^-1"), 2));
        let p = Group::cyclic_product(&[2, 3]).unwrap();
        assert!(primitive_root(&p, &p.parse("b").unwrap()).is_err());
    }

    #[test]
    fn transversality() {
        let g = Group::free(2).unwrap();
        let w = |s| g.parse(s).unwrap();
        assert!(is_transverse(&g, &w("a"), &w("b")).unwrap());
        assert!(!is_transverse(&g, &w("a"), &w("a^-1")).unwrap());
        assert!(is_transverse(&g, &w("a"), &w("b*a*b^-1")).unwrap());
        assert!(!is_transverse(&g, &w("a"), &w("a^2")).unwrap());
    }

    #[test]
    fn transverse_family() {
        let g = Group::free(2).unwrap();
        let w = |s| g.parse(s).unwrap();
        let fam = make_transverse_family(&g, &w("a"), &w("b"), 3, &SearchBounds::default()).unwrap();
        let names: Vec<String> = fam.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["a*b*a^-1", "a^2*b*a^-2", "a^3*b*a^-3"]);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(is_transverse(&g, &fam[i], &fam[j]).unwrap());
                }
            }
        }
        let one = make_transverse_family(&g, &w("a"), &w("b"), 1, &SearchBounds::default()).unwrap();
        assert_eq!(one, vec![w("a*b*a^-1")]);
        assert!(make_transverse_family(&g, &w("a"), &w("a^2"), 2, &SearchBounds::default()).is_err());
    }
}
