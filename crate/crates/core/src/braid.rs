//! The positive braid monoid `Br⁺`, generated by `T_w` (`w ∈ W`) subject to
//! `T_{w1} T_{w2} = T_{w1 w2}` whenever lengths add.
//!
//! Elements are kept in left-greedy normal form: a list of non-identity
//! Weyl group elements `x_1 | x_2 | … | x_k` such that every left descent of
//! `x_{j+1}` is a right descent of `x_j`. The normal form is unique, so
//! equality of braids is equality of factor lists.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::weyl::{format_word, Side, WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidElement {
    rank: usize,
    factors: Vec<WeylElement>,
}

impl BraidElement {
    pub fn identity(rank: usize) -> Self {
        BraidElement { rank, factors: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[WeylElement] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of factor lengths; equals the length of any word representing the braid.
    pub fn length(&self) -> usize {
        self.factors.iter().map(WeylElement::length).sum()
    }
}

/// `T_w`.
pub fn t_of(group: &WeylGroup, w: &WeylElement) -> Result<BraidElement> {
    if w.rank() != group.rank() {
        return Err(Error::RankMismatch { expected: group.rank(), found: w.rank() });
    }
    let factors = if w.is_identity() { Vec::new() } else { vec![w.clone()] };
    Ok(BraidElement { rank: group.rank(), factors })
}

/// Product `T_{s_{i_1}} ⋯ T_{s_{i_k}}`.
pub fn from_word(group: &WeylGroup, word: &[usize]) -> Result<BraidElement> {
    let factors = word.iter().map(|&i| group.simple_reflection(i)).collect::<Result<Vec<_>>>()?;
    Ok(normalize(group, factors))
}

pub fn braid_multiply(group: &WeylGroup, a: &BraidElement, b: &BraidElement) -> Result<BraidElement> {
    for x in [a, b] {
        if x.rank != group.rank() {
            return Err(Error::RankMismatch { expected: group.rank(), found: x.rank });
        }
    }
    let mut factors = a.factors.clone();
    factors.extend(b.factors.iter().cloned());
    Ok(normalize(group, factors))
}

/// A generator `s` that breaks left-weightedness of the pair `(u, v)`: a left
/// descent of `v` that is not a right descent of `u`. Smallest index first.
fn violation(group: &WeylGroup, u: &WeylElement, v: &WeylElement) -> Option<usize> {
    (1..=group.rank()).find(|&s| {
        group.is_descent(v, s, Side::Left).expect("same rank")
            && !group.is_descent(u, s, Side::Right).expect("same rank")
    })
}

/// Rewrites `(u, v) → (us, sv)` on the leftmost violating pair until none is
/// left. Each step moves one unit of length to the left, so this terminates.
fn normalize(group: &WeylGroup, mut factors: Vec<WeylElement>) -> BraidElement {
    factors.retain(|x| !x.is_identity());
    'outer: loop {
        for j in 0..factors.len().saturating_sub(1) {
            if let Some(s) = violation(group, &factors[j], &factors[j + 1]) {
                let gen = group.simple_reflection(s).expect("valid index");
                factors[j] = group.multiply(&factors[j], &gen).expect("same rank");
                factors[j + 1] = group.multiply(&gen, &factors[j + 1]).expect("same rank");
                if factors[j + 1].is_identity() {
                    factors.remove(j + 1);
                }
                continue 'outer;
            }
        }
        break;
    }
    BraidElement { rank: group.rank(), factors }
}

/// Whether the factor list satisfies the left-greedy condition.
pub fn is_normal(group: &WeylGroup, b: &BraidElement) -> bool {
    b.factors.iter().all(|x| !x.is_identity())
        && b.factors.windows(2).all(|pair| violation(group, &pair[0], &pair[1]).is_none())
}

/// `"w_1 | w_2 | …"`, each factor as its canonical reduced word; `e` for the identity.
pub fn format_braid(group: &WeylGroup, b: &BraidElement) -> Result<String> {
    if b.is_identity() {
        return Ok("e".to_string());
    }
    let mut out = String::new();
    for (k, x) in b.factors.iter().enumerate() {
        if k > 0 {
            out.push_str(" | ");
        }
        write!(out, "{}", format_word(&group.reduced_word(x)?)).expect("writing to a String");
    }
    Ok(out)
}
