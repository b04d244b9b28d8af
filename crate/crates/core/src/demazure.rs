//! Demazure operators on `Z[X]`, the Demazure product, and subword intervals.
//!
//! `D_i` acts on a monomial `e^λ` with `m = ⟨λ, α_i^∨⟩` by
//!
//! ```text
//! m ≥ 0:   e^λ + e^{λ−α_i} + … + e^{λ−mα_i}
//! m = −1:  0
//! m ≤ −2:  −(e^{λ+α_i} + … + e^{λ+(−m−1)α_i})
//! ```
//!
//! which is the closed form of `(f − e^{−α_i}·s_i f) / (1 − e^{−α_i})`.
//! [`oracle`] evaluates that quotient literally for cross-checking.
//!
//! Words compose like functions: `D_{[i_1,…,i_n]} = D_{i_1} ∘ ⋯ ∘ D_{i_n}`,
//! so `i_n` is applied first.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::charring::{accumulate, check_same_datum, CharacterOf};
use crate::error::{Error, Result};
use crate::rootdata::check_index;
use crate::scalar::Coefficient;
use crate::weyl::{WeylElement, WeylGroup};

/// Longest word accepted by [`subword_interval`].
pub const MAX_SUBWORD_LEN: usize = 20;

/// `D_i(f)`.
pub fn apply<C: Coefficient>(i: usize, f: &CharacterOf<C>) -> Result<CharacterOf<C>> {
    let rd = f.root_datum();
    check_index(i, rd.rank())?;
    let alpha = rd.simple_root_unchecked(i - 1);
    let mut out = BTreeMap::new();
    for (lambda, c) in f.terms() {
        let m = lambda[i - 1];
        if m >= 0 {
            for k in 0..=m {
                accumulate(&mut out, lambda.add_scaled(-k, &alpha), c.clone());
            }
        } else {
            for k in 1..=(-m - 1) {
                accumulate(&mut out, lambda.add_scaled(k, &alpha), -c.clone());
            }
        }
    }
    Ok(CharacterOf::from_map_unchecked(rd.clone(), out))
}

/// `D_i(f)` computed as `(f − e^{−α_i}·s_i(f)) / (1 − e^{−α_i})` with
/// [`CharacterOf::exact_divide`]. A `NotDivisible` error here is a bug.
pub fn oracle<C: Coefficient>(i: usize, f: &CharacterOf<C>) -> Result<CharacterOf<C>> {
    let rd = f.root_datum().clone();
    check_index(i, rd.rank())?;
    let neg_alpha = -&rd.simple_root(i)?;
    let numerator = f.sub(&f.reflect(i)?.shift_scale(&neg_alpha, &C::one())?)?;
    let denominator = CharacterOf::one(rd.clone()).sub(&CharacterOf::monomial(rd, neg_alpha)?)?;
    numerator.exact_divide(&denominator)
}

/// `D_{i_1} ∘ ⋯ ∘ D_{i_n}(f)`.
pub fn apply_word<C: Coefficient>(word: &[usize], f: &CharacterOf<C>) -> Result<CharacterOf<C>> {
    let rank = f.root_datum().rank();
    for &i in word {
        check_index(i, rank)?;
    }
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = apply(i, &g)?;
    }
    Ok(g)
}

/// `D_w(f)`, evaluated along the canonical reduced word of `w`.
pub fn apply_element<C: Coefficient>(group: &WeylGroup, w: &WeylElement, f: &CharacterOf<C>) -> Result<CharacterOf<C>> {
    check_same_datum(group.root_datum(), f.root_datum())?;
    apply_word(&group.reduced_word(w)?, f)
}

/// Left fold of `w ⋆ s = ws` if `ℓ(ws) > ℓ(w)`, else `w`.
pub fn demazure_product(group: &WeylGroup, word: &[usize]) -> Result<WeylElement> {
    let mut w = group.identity();
    for &i in word {
        let ws = group.multiply(&w, &group.simple_reflection(i)?)?;
        if ws.length() > w.length() {
            w = ws;
        }
    }
    Ok(w)
}

/// Products of all subwords of `word`, as a set of group elements.
pub fn subword_interval(group: &WeylGroup, word: &[usize]) -> Result<BTreeSet<WeylElement>> {
    if word.len() > MAX_SUBWORD_LEN {
        return Err(Error::WordTooLong { len: word.len(), max: MAX_SUBWORD_LEN });
    }
    let mut current: HashSet<WeylElement> = HashSet::from([group.identity()]);
    for &i in word {
        let s = group.simple_reflection(i)?;
        let extended: Vec<WeylElement> = current.iter().map(|x| group.multiply(x, &s)).collect::<Result<_>>()?;
        current.extend(extended);
    }
    Ok(current.into_iter().collect())
}

/// Indices `1..=rank` together with the alternating braid words `iji…` and
/// `jij…` of length `m_ij`, for every pair `i < j`.
pub fn braid_relation_words(group: &WeylGroup) -> Vec<(usize, usize, Vec<usize>, Vec<usize>)> {
    let rd = group.root_datum();
    let n = rd.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let product = rd.cartan()[i - 1][j - 1] * rd.cartan()[j - 1][i - 1];
            let m = match product {
                0 => 2,
                1 => 3,
                2 => 4,
                3 => 6,
                _ => unreachable!("finite type Cartan matrix"),
            };
            let left = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
            let right = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
            out.push((i, j, left, right));
        }
    }
    out
}
