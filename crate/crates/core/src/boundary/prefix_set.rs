//! Subsets of a free product that are finite unions of cylinders plus finitely
//! many elements.
//!
//! A set is stored as a prefix tree over atoms. A node sitting at the word `w`
//! is `Full` (every reduced word beginning with `w`), `Empty`, or a `Split`
//! that says whether `w` itself belongs to the set and refines into children
//! `w x` for each atom `x` allowed after `w`. Trees are kept normalized, so
//! equal sets have equal trees. The class is closed under complement, the
//! Boolean operations and left translation, which is what makes exact
//! verification of partition conditions over the whole (infinite) group
//! possible.

use std::collections::{BTreeMap, VecDeque};

use crate::group::{Atom, Contact, Element, Group};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Empty,
    Full,
    Split { here: bool, children: BTreeMap<Atom, Node> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixSet {
    root: Node,
}

/// Piece of a decomposition: a whole cylinder or a single element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Piece {
    Cylinder(Element),
    Point(Element),
}

fn successors(group: &Group, last: Option<Atom>) -> impl Iterator<Item = Atom> + '_ {
    group.atoms().iter().copied().filter(move |&a| last.is_none_or(|l| group.compatible(l, a)))
}

fn normalize(group: &Group, last: Option<Atom>, node: Node) -> Node {
    let Node::Split { here, children } = node else { return node };
    let children: BTreeMap<Atom, Node> = children
        .into_iter()
        .map(|(a, c)| (a, normalize(group, Some(a), c)))
        .filter(|(_, c)| *c != Node::Empty)
        .collect();
    if !here && children.is_empty() {
        return Node::Empty;
    }
    if here && successors(group, last).all(|a| children.get(&a) == Some(&Node::Full)) {
        return Node::Full;
    }
    Node::Split { here, children }
}

fn combine(group: &Group, last: Option<Atom>, a: &Node, b: &Node, union: bool) -> Node {
    match (a, b, union) {
        (Node::Empty, x, true) | (x, Node::Empty, true) => x.clone(),
        (Node::Full, _, true) | (_, Node::Full, true) => Node::Full,
        (Node::Empty, _, false) | (_, Node::Empty, false) => Node::Empty,
        (Node::Full, x, false) | (x, Node::Full, false) => x.clone(),
        (Node::Split { here: h1, children: c1 }, Node::Split { here: h2, children: c2 }, _) => {
            let mut children = BTreeMap::new();
            for x in successors(group, last) {
                let l = c1.get(&x).unwrap_or(&Node::Empty);
                let r = c2.get(&x).unwrap_or(&Node::Empty);
                let c = combine(group, Some(x), l, r, union);
                if c != Node::Empty {
                    children.insert(x, c);
                }
            }
            let here = if union { *h1 || *h2 } else { *h1 && *h2 };
            normalize(group, last, Node::Split { here, children })
        }
    }
}

fn complement_node(group: &Group, last: Option<Atom>, node: &Node) -> Node {
    match node {
        Node::Empty => Node::Full,
        Node::Full => Node::Empty,
        Node::Split { here, children } => {
            let children = successors(group, last)
                .map(|x| (x, complement_node(group, Some(x), children.get(&x).unwrap_or(&Node::Empty))))
                .collect();
            normalize(group, last, Node::Split { here: !here, children })
        }
    }
}

impl PrefixSet {
    pub fn empty() -> Self {
        PrefixSet { root: Node::Empty }
    }

    pub fn full() -> Self {
        PrefixSet { root: Node::Full }
    }

    /// Union of the cylinders of the given (nonempty) prefixes.
    pub fn cylinders<'a>(group: &Group, prefixes: impl IntoIterator<Item = &'a Element>) -> Self {
        Self::from_pieces(group, prefixes.into_iter().map(|p| Piece::Cylinder(p.clone())))
    }

    pub fn points<'a>(group: &Group, points: impl IntoIterator<Item = &'a Element>) -> Self {
        Self::from_pieces(group, points.into_iter().map(|p| Piece::Point(p.clone())))
    }

    pub fn from_pieces(group: &Group, pieces: impl IntoIterator<Item = Piece>) -> Self {
        let mut root = Node::Empty;
        for piece in pieces {
            let (word, cylinder) = match &piece {
                Piece::Cylinder(w) => (w, true),
                Piece::Point(w) => (w, false),
            };
            let mut node = &mut root;
            for &a in word.atoms() {
                match node {
                    Node::Full => break,
                    Node::Empty => *node = Node::Split { here: false, children: BTreeMap::new() },
                    Node::Split { .. } => {}
                }
                let Node::Split { children, .. } = node else { unreachable!() };
                node = children.entry(a).or_insert(Node::Empty);
            }
            match (node, cylinder) {
                (Node::Full, _) => {}
                (n, true) => *n = Node::Full,
                (n @ Node::Empty, false) => *n = Node::Split { here: true, children: BTreeMap::new() },
                (Node::Split { here, .. }, false) => *here = true,
            }
        }
        PrefixSet { root: normalize(group, None, root) }
    }

    pub fn is_empty(&self) -> bool {
        self.root == Node::Empty
    }

    pub fn is_full(&self) -> bool {
        self.root == Node::Full
    }

    pub fn contains(&self, g: &Element) -> bool {
        let mut node = &self.root;
        for a in g.atoms() {
            match node {
                Node::Empty => return false,
                Node::Full => return true,
                Node::Split { children, .. } => match children.get(a) {
                    Some(c) => node = c,
                    None => return false,
                },
            }
        }
        match node {
            Node::Empty => false,
            Node::Full => true,
            Node::Split { here, .. } => *here,
        }
    }

    pub fn union(&self, group: &Group, other: &PrefixSet) -> PrefixSet {
        PrefixSet { root: combine(group, None, &self.root, &other.root, true) }
    }

    pub fn intersection(&self, group: &Group, other: &PrefixSet) -> PrefixSet {
        PrefixSet { root: combine(group, None, &self.root, &other.root, false) }
    }

    pub fn complement(&self, group: &Group) -> PrefixSet {
        PrefixSet { root: complement_node(group, None, &self.root) }
    }

    pub fn difference(&self, group: &Group, other: &PrefixSet) -> PrefixSet {
        self.intersection(group, &other.complement(group))
    }

    pub fn is_subset(&self, group: &Group, other: &PrefixSet) -> bool {
        self.difference(group, other).is_empty()
    }

    pub fn is_disjoint(&self, group: &Group, other: &PrefixSet) -> bool {
        self.intersection(group, other).is_empty()
    }

    /// Disjoint decomposition into maximal cylinders and isolated points.
    pub fn pieces(&self) -> Vec<Piece> {
        fn walk(node: &Node, word: &mut Vec<Atom>, out: &mut Vec<Piece>) {
            match node {
                Node::Empty => {}
                Node::Full => out.push(Piece::Cylinder(Element::from_reduced(word.clone()))),
                Node::Split { here, children } => {
                    if *here {
                        out.push(Piece::Point(Element::from_reduced(word.clone())));
                    }
                    for (&a, c) in children {
                        word.push(a);
                        walk(c, word, out);
                        word.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut Vec::new(), &mut out);
        out
    }

    /// Shortest member, ties broken by atom order.
    pub fn witness(&self) -> Option<Element> {
        let mut queue = VecDeque::from([(&self.root, Vec::<Atom>::new())]);
        while let Some((node, word)) = queue.pop_front() {
            match node {
                Node::Empty => {}
                Node::Full => return Some(Element::from_reduced(word)),
                Node::Split { here: true, .. } => return Some(Element::from_reduced(word)),
                Node::Split { children, .. } => {
                    for (&a, c) in children {
                        let mut w = word.clone();
                        w.push(a);
                        queue.push_back((c, w));
                    }
                }
            }
        }
        None
    }

    /// Left translate `x . S` by a single atom.
    pub fn translate_atom(&self, group: &Group, x: Atom) -> PrefixSet {
        let xe = Element::from_reduced(vec![x]);
        let mut out = Vec::new();
        for piece in self.pieces() {
            match piece {
                Piece::Point(w) => out.push(Piece::Point(group.multiply(&xe, &w))),
                Piece::Cylinder(w) if w.is_identity() => return PrefixSet::full(),
                Piece::Cylinder(w) if w.len() == 1 => {
                    // Cyl(w) = {w} + union of Cyl(w y); the two-letter cylinders keep their last atom.
                    let head = w.atoms()[0];
                    out.push(Piece::Point(group.multiply(&xe, &w)));
                    for y in successors(group, Some(head)) {
                        let image = match group.contact(x, head) {
                            Contact::Cancel => vec![y],
                            Contact::Merge(m) => vec![m, y],
                            Contact::Keep => vec![x, head, y],
                        };
                        out.push(Piece::Cylinder(Element::from_reduced(image)));
                    }
                }
                Piece::Cylinder(w) => out.push(Piece::Cylinder(group.multiply(&xe, &w))),
            }
        }
        PrefixSet::from_pieces(group, out)
    }

    /// Left translate `g . S`.
    pub fn translate(&self, group: &Group, g: &Element) -> PrefixSet {
        g.atoms().iter().rev().fold(self.clone(), |acc, &x| acc.translate_atom(group, x))
    }
}
