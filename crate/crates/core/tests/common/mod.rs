//! Free-group words as signed letters (`1` = a, `-1` = a^-1, `2` = b, ...),
//! with arithmetic written from scratch so tests do not trust the library's.
#![allow(dead_code)]

use std::collections::HashMap;

use cstar::Element;

pub type Word = Vec<i8>;

pub fn letters(g: &Element) -> Word {
    g.atoms()
        .iter()
        .map(|a| {
            let l = a.factor as i8 + 1;
            if a.exp > 0 {
                l
            } else {
                -l
            }
        })
        .collect()
}

pub fn reduce(w: impl IntoIterator<Item = i8>) -> Word {
    let mut out: Word = Vec::new();
    for l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn mul(a: &[i8], b: &[i8]) -> Word {
    reduce(a.iter().chain(b).copied())
}

pub fn inv(a: &[i8]) -> Word {
    a.iter().rev().map(|l| -l).collect()
}

pub fn in_cylinder(prefixes: &[Word], x: &[i8]) -> bool {
    prefixes.iter().any(|p| x.starts_with(p))
}

/// Reduced words of length at most `r` over `rank` generators.
pub fn free_ball(rank: i8, r: usize) -> Vec<Word> {
    let gens: Vec<i8> = (1..=rank).flat_map(|l| [l, -l]).collect();
    let mut all = vec![Vec::new()];
    let mut shell = vec![Vec::new()];
    for _ in 0..r {
        let mut next = Vec::new();
        for w in &shell {
            for &l in &gens {
                if w.last() != Some(&-l) {
                    let mut v: Word = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        all.extend(next.iter().cloned());
        shell = next;
    }
    all
}

pub fn index(words: &[Word]) -> HashMap<Word, usize> {
    words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()
}
