use std::collections::HashMap;

use super::arith::Group;
use super::spec::Order;
use super::word::{Atom, Element};
use crate::error::{Error, Result};

/// All elements of word length at most `radius`, in (length, lex) order.
#[derive(Clone, Debug)]
pub struct Ball {
    radius: usize,
    elements: Vec<Element>,
    /// `sphere_start[r]` is the index of the first element of length `r`.
    sphere_start: Vec<usize>,
}

impl Ball {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.elements.iter()
    }

    pub fn sphere(&self, r: usize) -> &[Element] {
        let start = self.sphere_start[r];
        let end = self.sphere_start.get(r + 1).copied().unwrap_or(self.elements.len());
        &self.elements[start..end]
    }

    pub fn index_map(&self) -> HashMap<&Element, usize> {
        self.elements.iter().enumerate().map(|(i, g)| (g, i)).collect()
    }

    pub fn into_elements(self) -> Vec<Element> {
        self.elements
    }
}

impl<'a> IntoIterator for &'a Ball {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl Group {
    /// Sphere sizes `|S(0)|, ..., |S(radius)|`, saturating at `u128::MAX`.
    pub fn sphere_sizes(&self, radius: usize) -> Vec<u128> {
        // Count reduced words by the class of their last atom: one class per
        // sign of an infinite generator, one class per finite factor.
        let mut classes: Vec<(u16, i32, u128)> = Vec::new();
        for (i, o) in self.factors().iter().enumerate() {
            match o {
                Order::Infinite => {
                    classes.push((i as u16, 1, 1));
                    classes.push((i as u16, -1, 1));
                }
                Order::Finite(n) => classes.push((i as u16, 0, (*n - 1) as u128)),
            }
        }
        let follows =
            |prev: &(u16, i32, u128), next: &(u16, i32, u128)| prev.0 != next.0 || (prev.1 != 0 && prev.1 == next.1);
        let mut sizes = vec![1u128];
        if radius == 0 {
            return sizes;
        }
        let mut counts: Vec<u128> = classes.iter().map(|c| c.2).collect();
        sizes.push(counts.iter().fold(0u128, |a, &b| a.saturating_add(b)));
        for _ in 2..=radius {
            let next: Vec<u128> = classes
                .iter()
                .map(|c| {
                    let s = classes
                        .iter()
                        .zip(&counts)
                        .filter(|(p, _)| follows(p, c))
                        .fold(0u128, |a, (_, &n)| a.saturating_add(n));
                    s.saturating_mul(c.2)
                })
                .collect();
            counts = next;
            sizes.push(counts.iter().fold(0u128, |a, &b| a.saturating_add(b)));
        }
        sizes
    }

    pub fn ball_size(&self, radius: usize) -> u128 {
        self.sphere_sizes(radius).into_iter().fold(0u128, |a, b| a.saturating_add(b))
    }

    /// Enumerates `B(radius)` in (length, lex) order, refusing when its size
    /// exceeds the ball cap.
    pub fn enumerate_ball(&self, radius: usize) -> Result<Ball> {
        let size = self.ball_size(radius);
        if size > self.ball_cap() as u128 {
            return Err(Error::ResourceCap {
                what: format!("ball of radius {radius} in {}", self.spec()),
                requested: size,
                cap: self.ball_cap(),
            });
        }
        let mut elements: Vec<Element> = Vec::with_capacity(size as usize);
        let mut sphere_start = vec![0usize];
        elements.push(Element::identity());
        let mut level = 0..1;
        for r in 1..=radius {
            sphere_start.push(elements.len());
            let start = elements.len();
            for i in level.clone() {
                let w = elements[i].clone();
                for &a in self.atoms() {
                    if w.last().is_none_or(|l| self.compatible(l, a)) {
                        let mut atoms: Vec<Atom> = Vec::with_capacity(r);
                        atoms.extend_from_slice(w.atoms());
                        atoms.push(a);
                        elements.push(Element::from_reduced(atoms));
                    }
                }
            }
            level = start..elements.len();
        }
        Ok(Ball { radius, elements, sphere_start })
    }
}

/// `|B(R)|` in the free group of rank `k`.
pub fn free_ball_size(k: u64, radius: u32) -> u128 {
    if radius == 0 {
        return 1;
    }
    if k == 1 {
        return 2 * radius as u128 + 1;
    }
    let d = 2 * k as u128;
    1 + d * ((d - 1).pow(radius) - 1) / (d - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_balls() {
        let g = Group::free(2).unwrap();
        assert_eq!(g.enumerate_ball(1).unwrap().len(), 5);
        assert_eq!(g.enumerate_ball(2).unwrap().len(), 17);

        let d = Group::cyclic_product(&[2, 2]).unwrap();
        let b = d.enumerate_ball(2).unwrap();
        let names: Vec<String> = b.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["e", "a", "b", "a*b", "b*a"]);
    }

    #[test]
    fn ball_is_sorted_and_spheres_partition() {
        let g = Group::cyclic_product(&[2, 3]).unwrap();
        let b = g.enumerate_ball(5).unwrap();
        assert!(b.elements().windows(2).all(|w| w[0] < w[1]));
        let sizes = g.sphere_sizes(5);
        for r in 0..=5 {
            assert_eq!(b.sphere(r).len() as u128, sizes[r]);
            assert!(b.sphere(r).iter().all(|x| x.len() == r));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Group::free(2).unwrap().with_ball_cap(100);
        match g.enumerate_ball(4) {
            Err(Error::ResourceCap { cap, requested, .. }) => {
                assert_eq!(cap, 100);
                assert_eq!(requested, 161);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
        assert!(g.enumerate_ball(3).is_ok());
    }

    #[test]
    fn infinite_factor_in_product() {
        // Z/2 * Z: atoms a, b, b^-1
        let g = Group::new(&crate::GroupSpec::free_product(vec![Order::Finite(2), Order::Infinite]).unwrap()).unwrap();
        assert_eq!(g.sphere_sizes(3), vec![1, 3, 6, 12]);
        assert_eq!(g.enumerate_ball(3).unwrap().len(), 22);
    }
}
