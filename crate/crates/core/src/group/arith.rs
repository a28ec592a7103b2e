use super::spec::{GroupSpec, Order};
use super::word::{generator_name, parse_letters, Atom, Element};
use crate::error::{Error, Result};

/// Default upper bound on the number of elements a ball or support may hold.
pub const DEFAULT_BALL_CAP: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BALL_CAP`].
pub const BALL_CAP_ENV: &str = "CSTAR_BALL_CAP";

pub fn ball_cap_from_env() -> u64 {
    std::env::var(BALL_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BALL_CAP)
}

/// How two adjacent atoms interact under reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contact {
    /// Reduced as written.
    Keep,
    /// The atoms multiply to the identity.
    Cancel,
    /// Two syllables of one finite factor fuse into a single atom.
    Merge(Atom),
}

/// Word arithmetic for a free product of cyclic groups; a free group of
/// rank `k` is the free product of `k` infinite cyclic factors.
#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    factors: Vec<Order>,
    atoms: Vec<Atom>,
    cap: u64,
}

impl Group {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let factors = match spec {
            GroupSpec::Free { rank } => vec![Order::Infinite; *rank],
            GroupSpec::FreeProduct { orders } => orders.clone(),
            GroupSpec::Coxeter { .. } => {
                return Err(Error::domain("word arithmetic is not provided for Coxeter systems"))
            }
        };
        if factors.len() > u16::MAX as usize {
            return Err(Error::malformed("too many factors"));
        }
        let mut atoms = Vec::new();
        for (i, order) in factors.iter().enumerate() {
            let f = i as u16;
            match order {
                Order::Infinite => {
                    atoms.push(Atom::new(f, 1));
                    atoms.push(Atom::new(f, -1));
                }
                Order::Finite(n) => atoms.extend((1..*n as i32).map(|e| Atom::new(f, e))),
            }
        }
        Ok(Group { spec: spec.clone(), factors, atoms, cap: ball_cap_from_env() })
    }

    pub fn free(rank: usize) -> Result<Self> {
        Self::new(&GroupSpec::free(rank)?)
    }

    pub fn cyclic_product(orders: &[u32]) -> Result<Self> {
        Self::new(&GroupSpec::cyclic_product(orders)?)
    }

    pub fn with_ball_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn ball_cap(&self) -> u64 {
        self.cap
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn factors(&self) -> &[Order] {
        &self.factors
    }

    /// Every atom, in enumeration order. This is also the symmetric generating
    /// set used for word length and for the Markov operator.
    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_free(&self) -> bool {
        self.factors.iter().all(|o| o.is_infinite())
    }

    pub fn order_of_factor(&self, factor: u16) -> Order {
        self.factors[factor as usize]
    }

    pub fn identity(&self) -> Element {
        Element::identity()
    }

    /// The generator `x_i` of factor `i`.
    pub fn generator(&self, i: usize) -> Element {
        assert!(i < self.factors.len(), "generator index {i} out of range");
        Element::from_reduced(vec![Atom::new(i as u16, 1)])
    }

    pub fn atom_inverse(&self, a: Atom) -> Atom {
        match self.order_of_factor(a.factor) {
            Order::Infinite => Atom::new(a.factor, -a.exp),
            Order::Finite(n) => Atom::new(a.factor, n as i32 - a.exp),
        }
    }

    pub fn contact(&self, left: Atom, right: Atom) -> Contact {
        if left.factor != right.factor {
            return Contact::Keep;
        }
        match self.order_of_factor(left.factor) {
            Order::Infinite if left.exp == -right.exp => Contact::Cancel,
            Order::Infinite => Contact::Keep,
            Order::Finite(n) => match (left.exp + right.exp).rem_euclid(n as i32) {
                0 => Contact::Cancel,
                e => Contact::Merge(Atom::new(left.factor, e)),
            },
        }
    }

    /// Whether `next` may directly follow `prev` in a reduced word.
    pub fn compatible(&self, prev: Atom, next: Atom) -> bool {
        self.contact(prev, next) == Contact::Keep
    }

    fn push(&self, out: &mut Vec<Atom>, a: Atom) {
        match out.last().map(|&last| self.contact(last, a)) {
            Some(Contact::Cancel) => {
                out.pop();
            }
            Some(Contact::Merge(m)) => *out.last_mut().unwrap() = m,
            _ => out.push(a),
        }
    }

    /// Normal form of a raw letter sequence `(generator, exponent)`.
    pub fn reduce(&self, raw: &[(usize, i64)]) -> Result<Element> {
        let mut out = Vec::with_capacity(raw.len());
        for &(g, k) in raw {
            let order = *self.factors.get(g).ok_or_else(|| {
                Error::malformed(format!(
                    "generator index {g} out of range for {} ({} factors)",
                    self.spec,
                    self.factors.len()
                ))
            })?;
            let f = g as u16;
            match order {
                Order::Infinite => {
                    let a = Atom::new(f, k.signum() as i32);
                    for _ in 0..k.unsigned_abs() {
                        self.push(&mut out, a);
                    }
                }
                Order::Finite(n) => {
                    let e = k.rem_euclid(n as i64) as i32;
                    if e != 0 {
                        self.push(&mut out, Atom::new(f, e));
                    }
                }
            }
        }
        Ok(Element::from_reduced(out))
    }

    /// Reduces an arbitrary atom sequence (atoms must be valid for this group).
    pub fn reduce_atoms(&self, atoms: impl IntoIterator<Item = Atom>) -> Element {
        let mut out = Vec::new();
        for a in atoms {
            self.push(&mut out, a);
        }
        Element::from_reduced(out)
    }

    pub fn is_valid_atom(&self, a: Atom) -> bool {
        match self.factors.get(a.factor as usize) {
            Some(Order::Infinite) => a.exp == 1 || a.exp == -1,
            Some(Order::Finite(n)) => a.exp >= 1 && a.exp < *n as i32,
            None => false,
        }
    }

    /// Checks that an atom sequence is a valid reduced word of this group.
    pub fn is_reduced(&self, atoms: &[Atom]) -> bool {
        atoms.iter().all(|&a| self.is_valid_atom(a)) && atoms.windows(2).all(|w| self.compatible(w[0], w[1]))
    }

    pub fn multiply(&self, g: &Element, h: &Element) -> Element {
        let rhs = h.atoms();
        let mut out = Vec::with_capacity(g.len() + rhs.len());
        out.extend_from_slice(g.atoms());
        let mut i = 0;
        while i < rhs.len() {
            let Some(&last) = out.last() else { break };
            match self.contact(last, rhs[i]) {
                Contact::Cancel => {
                    out.pop();
                    i += 1;
                }
                Contact::Merge(m) => {
                    *out.last_mut().unwrap() = m;
                    i += 1;
                    break;
                }
                Contact::Keep => break,
            }
        }
        out.extend_from_slice(&rhs[i..]);
        Element::from_reduced(out)
    }

    pub fn invert(&self, g: &Element) -> Element {
        Element::from_reduced(g.atoms().iter().rev().map(|&a| self.atom_inverse(a)).collect())
    }

    /// `t g t^-1`.
    pub fn conjugate(&self, g: &Element, t: &Element) -> Element {
        self.multiply(&self.multiply(t, g), &self.invert(t))
    }

    pub fn pow(&self, g: &Element, n: i64) -> Element {
        let base = if n < 0 { self.invert(g) } else { g.clone() };
        let mut acc = Element::identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a Element>) -> Element {
        factors.into_iter().fold(Element::identity(), |acc, g| self.multiply(&acc, g))
    }

    /// Parses `"a*b^-1"`-style words (generators `a, b, c, d, f, ...`; `e` is the identity).
    pub fn parse(&self, s: &str) -> Result<Element> {
        let letters = parse_letters(s).map_err(Error::malformed)?;
        self.reduce(&letters)
    }

    pub fn format(&self, g: &Element) -> String {
        g.to_string()
    }

    pub fn generator_names(&self) -> Vec<String> {
        (0..self.factors.len()).map(generator_name).collect()
    }

    /// Finite order of `g`, or `None` when `g` has infinite order.
    pub fn order_of(&self, g: &Element) -> Option<u64> {
        let core = self.cyclic_core(g);
        match core.atoms() {
            [] => Some(1),
            [a] => match self.order_of_factor(a.factor) {
                Order::Finite(n) => {
                    let n = n as u64;
                    Some(n / gcd(n, a.exp as u64))
                }
                Order::Infinite => None,
            },
            _ => None,
        }
    }

    /// Splits `g = u c u^-1` with `c` cyclically reduced, returning `(u, c)`.
    pub fn cyclic_reduction(&self, g: &Element) -> (Element, Element) {
        let mut prefix: Vec<Atom> = Vec::new();
        let mut core: std::collections::VecDeque<Atom> = g.atoms().iter().copied().collect();
        while core.len() >= 2 {
            let first = *core.front().unwrap();
            let last = *core.back().unwrap();
            match self.contact(last, first) {
                Contact::Keep => break,
                Contact::Cancel => {
                    core.pop_front();
                    core.pop_back();
                    prefix.push(first);
                }
                Contact::Merge(m) => {
                    // conjugate by `first`: (first) (rest * last * first) (first^-1)
                    core.pop_front();
                    *core.back_mut().unwrap() = m;
                    prefix.push(first);
                }
            }
        }
        (Element::from_reduced(prefix), Element::from_reduced(core.into_iter().collect()))
    }

    pub fn cyclic_core(&self, g: &Element) -> Element {
        self.cyclic_reduction(g).1
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
