use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// One letter of a normal-form word.
///
/// For an infinite cyclic factor the exponent is `+1` or `-1` and a power
/// `x^k` is spelled as `|k|` atoms. For a finite factor of order `n` the
/// exponent lies in `1..n` and a whole syllable is a single atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Atom {
    pub factor: u16,
    pub exp: i32,
}

impl Atom {
    pub const fn new(factor: u16, exp: i32) -> Self {
        Atom { factor, exp }
    }

    fn sort_key(&self) -> (u16, bool, u32) {
        (self.factor, self.exp < 0, self.exp.unsigned_abs())
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Name of the generator of factor `i`: `a`, `b`, `c`, `d`, `f`, ... (`e` is the identity),
/// then `x25`, `x26`, ... past the alphabet.
pub fn generator_name(i: usize) -> String {
    const LETTERS: &[u8] = b"abcdfghijklmnopqrstuvwxyz";
    match LETTERS.get(i) {
        Some(&c) => (c as char).to_string(),
        None => format!("x{i}"),
    }
}

pub(crate) fn generator_index(name: &str) -> Option<usize> {
    const LETTERS: &str = "abcdfghijklmnopqrstuvwxyz";
    if name.len() == 1 {
        return LETTERS.find(name);
    }
    name.strip_prefix('x')?.parse().ok()
}

/// A group element stored as its reduced atom sequence.
///
/// Ordering is by word length, then lexicographic in atom order, which is
/// the enumeration order of balls.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    atoms: Vec<Atom>,
}

impl Element {
    pub fn identity() -> Self {
        Element { atoms: Vec::new() }
    }

    /// Wraps an atom sequence that is already reduced.
    pub(crate) fn from_reduced(atoms: Vec<Atom>) -> Self {
        Element { atoms }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn into_atoms(self) -> Vec<Atom> {
        self.atoms
    }

    /// Word length: syllables of finite factors count once, powers of an
    /// infinite generator count by absolute exponent.
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_identity(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn first(&self) -> Option<Atom> {
        self.atoms.first().copied()
    }

    pub fn last(&self) -> Option<Atom> {
        self.atoms.last().copied()
    }

    pub fn starts_with(&self, prefix: &Element) -> bool {
        self.atoms.starts_with(&prefix.atoms)
    }

    pub fn prefix(&self, len: usize) -> Element {
        Element { atoms: self.atoms[..len.min(self.atoms.len())].to_vec() }
    }

    /// Syllable view: maximal runs of one factor as `(factor, exponent)`.
    /// Finite-factor exponents are reported in `1..n`.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for a in &self.atoms {
            match out.last_mut() {
                Some((f, e)) if *f == a.factor as usize => *e += a.exp as i64,
                _ => out.push((a.factor as usize, a.exp as i64)),
            }
        }
        out
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.atoms.len().cmp(&other.atoms.len()).then_with(|| self.atoms.cmp(&other.atoms))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("e");
        }
        for (i, (factor, exp)) in self.syllables().into_iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(&generator_name(factor))?;
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Splits `"a*b^-1*a^2"` into raw `(generator, exponent)` letters.
/// `e` and `1` denote the identity.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<(usize, i64)>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty word".into());
    }
    let mut out = Vec::new();
    for token in s.split('*').map(str::trim) {
        if token == "e" || token == "1" {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let e = e.trim().trim_start_matches('(').trim_end_matches(')');
                (n.trim(), e.parse::<i64>().map_err(|_| format!("bad exponent in {token:?}"))?)
            }
            None => (token, 1),
        };
        let g = generator_index(name).ok_or_else(|| format!("unknown generator {name:?}"))?;
        out.push((g, exp));
    }
    Ok(out)
}
