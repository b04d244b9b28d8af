//! Weyl group elements as integer matrices on the weight lattice.
//!
//! An element is stored as its action on `X` in fundamental-weight
//! coordinates (column `j` is the image of `ω_j`). Matrices are a faithful,
//! canonical representation, so equality and hashing never depend on which
//! word was used to build an element.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::rootdata::{check_index, RootDatum, Weight};

/// Default bound on the number of elements [`WeylGroup::enumerate`] will produce.
pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_ENV: &str = "DEMAZURE_ENUM_CAP";

/// Default bound on the size of [`WeylGroup::all_reduced_words`] output.
pub const DEFAULT_WORD_LIMIT: usize = 100_000;

/// A word in the simple reflections, with 1-based node labels.
pub type Word = Vec<usize>;

/// The enumeration cap, honouring `DEMAZURE_ENUM_CAP` when it parses.
pub fn enumeration_cap() -> usize {
    std::env::var(ENUM_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ENUM_CAP)
}

/// Parses `"1,2,1"`. The empty string and `"e"` denote the empty word.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Format(format!("bad word entry {t:?} in {s:?}"))))
        .collect()
}

/// Formats a word as comma-separated labels; the empty word prints as `e`.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    /// Row-major.
    matrix: Box<[i64]>,
    length: usize,
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.matrix[row * self.rank + col]
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    /// `w(λ)`. Ranks are not checked; see [`WeylGroup::act`] for the checked form.
    pub fn apply(&self, lambda: &Weight) -> Weight {
        debug_assert_eq!(lambda.rank(), self.rank);
        Weight::new(self.apply_raw(lambda.coords()))
    }

    fn apply_raw(&self, coords: &[i64]) -> Vec<i64> {
        self.matrix.chunks(self.rank).map(|row| row.iter().zip(coords).map(|(a, b)| a * b).sum()).collect()
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

/// Graded order: by length, then by matrix entries.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length.cmp(&other.length).then_with(|| self.matrix.cmp(&other.matrix))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Bruhat comparisons keyed by the matrices of `(v, w)`.
type BruhatMemo = Mutex<HashMap<(Box<[i64]>, Box<[i64]>), bool>>;

/// The Weyl group of a root datum, with a shared Bruhat-order memo.
#[derive(Debug)]
pub struct WeylGroup {
    rd: Arc<RootDatum>,
    cap: usize,
    bruhat_memo: BruhatMemo,
}

impl WeylGroup {
    pub fn new(rd: Arc<RootDatum>) -> Self {
        Self::with_cap(rd, enumeration_cap())
    }

    pub fn with_cap(rd: Arc<RootDatum>, cap: usize) -> Self {
        WeylGroup { rd, cap, bruhat_memo: Mutex::new(HashMap::new()) }
    }

    pub fn root_datum(&self) -> &Arc<RootDatum> {
        &self.rd
    }

    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, w: &WeylElement) -> Result<()> {
        if w.rank != self.rank() {
            Err(Error::RankMismatch { expected: self.rank(), found: w.rank })
        } else {
            Ok(())
        }
    }

    fn element_of_matrix(&self, matrix: Box<[i64]>) -> WeylElement {
        let mut w = WeylElement { rank: self.rank(), matrix, length: 0 };
        w.length = self.inversion_count(&w);
        w
    }

    /// Number of positive roots sent to negative roots.
    fn inversion_count(&self, w: &WeylElement) -> usize {
        self.rd
            .positive_roots()
            .iter()
            .filter(|beta| {
                let image = Weight::new(w.apply_raw(beta.coords()));
                !self.rd.root_sign(&image).expect("Weyl group elements permute the roots")
            })
            .count()
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElement { rank: n, matrix: m.into_boxed_slice(), length: 0 }
    }

    /// `s_i : λ ↦ λ − λ_i·α_i`.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        check_index(i, self.rank())?;
        let n = self.rank();
        let alpha = self.rd.simple_root_unchecked(i - 1);
        let mut m = self.identity().matrix;
        for k in 0..n {
            m[k * n + (i - 1)] -= alpha[k];
        }
        Ok(WeylElement { rank: n, matrix: m, length: 1 })
    }

    pub fn act(&self, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
        self.check(w)?;
        self.rd.check_weight(lambda)?;
        Ok(Weight::new(w.apply_raw(lambda.coords())))
    }

    /// `a·b`, acting as `b` first.
    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
        self.check(a)?;
        self.check(b)?;
        let n = self.rank();
        let mut m = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = (0..n).map(|k| a.matrix[r * n + k] * b.matrix[k * n + c]).sum();
            }
        }
        Ok(self.element_of_matrix(m.into_boxed_slice()))
    }

    /// Product `s_{i_1} ⋯ s_{i_k}` of a word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word {
            w = self.multiply(&w, &self.simple_reflection(i)?)?;
        }
        Ok(w)
    }

    pub fn inverse(&self, w: &WeylElement) -> Result<WeylElement> {
        let word = self.reduced_word(w)?;
        let rev: Vec<usize> = word.into_iter().rev().collect();
        self.from_word(&rev)
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.length
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `w⁻¹(α_i) < 0`. Row `i` of the matrix holds the
    /// simple-coroot coordinates of `w⁻¹(α_i^∨)`, so it is enough to look for
    /// a negative entry there.
    fn is_left_descent(&self, w: &WeylElement, i0: usize) -> bool {
        let n = self.rank();
        w.matrix[i0 * n..(i0 + 1) * n].iter().any(|&c| c < 0)
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(α_i) < 0`.
    fn is_right_descent(&self, w: &WeylElement, i0: usize) -> bool {
        let image = Weight::new(w.apply_raw(self.rd.simple_root_unchecked(i0).coords()));
        !self.rd.root_sign(&image).expect("Weyl group elements permute the roots")
    }

    /// Descent set with 1-based labels, ascending.
    pub fn descents(&self, w: &WeylElement, side: Side) -> Result<Vec<usize>> {
        self.check(w)?;
        Ok((0..self.rank())
            .filter(|&i0| match side {
                Side::Left => self.is_left_descent(w, i0),
                Side::Right => self.is_right_descent(w, i0),
            })
            .map(|i0| i0 + 1)
            .collect())
    }

    pub fn is_descent(&self, w: &WeylElement, i: usize, side: Side) -> Result<bool> {
        self.check(w)?;
        check_index(i, self.rank())?;
        Ok(match side {
            Side::Left => self.is_left_descent(w, i - 1),
            Side::Right => self.is_right_descent(w, i - 1),
        })
    }

    /// The lexicographically smallest reduced word: peel off the smallest left
    /// descent until the identity is reached.
    pub fn reduced_word(&self, w: &WeylElement) -> Result<Word> {
        self.check(w)?;
        let mut word = Vec::with_capacity(w.length);
        let mut cur = w.clone();
        while !cur.is_identity() {
            let i0 = (0..self.rank())
                .find(|&i0| self.is_left_descent(&cur, i0))
                .expect("non-identity elements have a descent");
            word.push(i0 + 1);
            cur = self.multiply(&self.simple_reflection(i0 + 1)?, &cur)?;
        }
        Ok(word)
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.from_word(word)?.length == word.len())
    }

    /// Every reduced word of `w`, failing once more than `limit` exist.
    pub fn all_reduced_words(&self, w: &WeylElement, limit: usize) -> Result<BTreeSet<Word>> {
        self.check(w)?;
        let mut memo: HashMap<WeylElement, Arc<Vec<Word>>> = HashMap::new();
        let words = self.reduced_words_rec(w, limit, &mut memo)?;
        Ok(words.iter().cloned().collect())
    }

    fn reduced_words_rec(
        &self,
        w: &WeylElement,
        limit: usize,
        memo: &mut HashMap<WeylElement, Arc<Vec<Word>>>,
    ) -> Result<Arc<Vec<Word>>> {
        if let Some(hit) = memo.get(w) {
            return Ok(hit.clone());
        }
        let mut out = Vec::new();
        if w.is_identity() {
            out.push(Vec::new());
        }
        for i0 in 0..self.rank() {
            if !self.is_left_descent(w, i0) {
                continue;
            }
            let rest = self.multiply(&self.simple_reflection(i0 + 1)?, w)?;
            for tail in self.reduced_words_rec(&rest, limit, memo)?.iter() {
                let mut word = Vec::with_capacity(tail.len() + 1);
                word.push(i0 + 1);
                word.extend_from_slice(tail);
                out.push(word);
                if out.len() > limit {
                    return Err(Error::WordSpaceTooLarge { limit });
                }
            }
        }
        let out = Arc::new(out);
        memo.insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Greedy ascent: right-multiply by any length-increasing `s_i` until none is left.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        'ascend: loop {
            for i0 in 0..self.rank() {
                if !self.is_right_descent(&w, i0) {
                    w = self.multiply(&w, &self.simple_reflection(i0 + 1).expect("valid index")).expect("same rank");
                    continue 'ascend;
                }
            }
            return w;
        }
    }

    /// All elements, breadth-first from the identity (right multiplication by
    /// `s_1, …, s_n` in order).
    pub fn enumerate(&self) -> Result<Vec<WeylElement>> {
        let gens: Vec<WeylElement> = (1..=self.rank()).map(|i| self.simple_reflection(i)).collect::<Result<_>>()?;
        let id = self.identity();
        let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let ws = self.multiply(&w, s)?;
                if !seen.contains(&ws) {
                    if seen.len() >= self.cap {
                        return Err(Error::GroupTooLarge { cap: self.cap });
                    }
                    seen.insert(ws.clone());
                    order.push(ws.clone());
                    queue.push_back(ws);
                }
            }
        }
        Ok(order)
    }

    /// Bruhat order `v ≤ w`.
    ///
    /// For `s` a left descent of `w`, `v ≤ w ⟺ min(v, sv) ≤ sw`. Results
    /// are memoized on the group.
    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> Result<bool> {
        self.check(v)?;
        self.check(w)?;
        Ok(self.bruhat_rec(v, w))
    }

    fn bruhat_rec(&self, v: &WeylElement, w: &WeylElement) -> bool {
        if v.length > w.length {
            return false;
        }
        if v.length == w.length {
            return v == w;
        }
        if v.is_identity() {
            return true;
        }
        let key = (v.matrix.clone(), w.matrix.clone());
        if let Some(&hit) = self.bruhat_memo.lock().expect("memo lock").get(&key) {
            return hit;
        }
        let i0 = (0..self.rank()).find(|&i0| self.is_left_descent(w, i0)).expect("w is not the identity");
        let s = self.simple_reflection(i0 + 1).expect("valid index");
        let sw = self.multiply(&s, w).expect("same rank");
        let result = if self.is_left_descent(v, i0) {
            self.bruhat_rec(&self.multiply(&s, v).expect("same rank"), &sw)
        } else {
            self.bruhat_rec(v, &sw)
        };
        self.bruhat_memo.lock().expect("memo lock").insert(key, result);
        result
    }

    /// `{v : v ≤ w}`.
    pub fn bruhat_interval(&self, w: &WeylElement) -> Result<BTreeSet<WeylElement>> {
        self.check(w)?;
        let mut out = BTreeSet::new();
        for v in self.enumerate()? {
            if self.bruhat_rec(&v, w) {
                out.insert(v);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(tag: &str) -> WeylGroup {
        WeylGroup::new(Arc::new(tag.parse().unwrap()))
    }

    fn w(g: &WeylGroup, word: &[usize]) -> WeylElement {
        g.from_word(word).unwrap()
    }

    #[test]
    fn word_text_format() {
        assert_eq!(parse_word("1,2,1").unwrap(), vec![1, 2, 1]);
        assert_eq!(parse_word(" 3 , 1 ").unwrap(), vec![3, 1]);
        assert_eq!(parse_word("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        assert!(parse_word("1,x").is_err());
        assert_eq!(format_word(&[1, 2, 1]), "1,2,1");
        assert_eq!(format_word(&[]), "e");
    }

    #[test]
    fn reflections() {
        let a1 = group("A1");
        let s = a1.simple_reflection(1).unwrap();
        assert_eq!(a1.act(&s, &Weight::new(vec![5])).unwrap(), Weight::new(vec![-5]));

        let a2 = group("A2");
        let s1 = a2.simple_reflection(1).unwrap();
        assert_eq!(a2.act(&s1, &Weight::new(vec![1, 0])).unwrap(), Weight::new(vec![-1, 1]));
        assert_eq!(s1.length(), 1);
        assert!(matches!(a2.simple_reflection(3), Err(Error::IndexOutOfRange { .. })));

        for tag in ["B3", "G2", "F4"] {
            let g = group(tag);
            for i in 1..=g.rank() {
                let alpha = g.root_datum().simple_root(i).unwrap();
                let s = g.simple_reflection(i).unwrap();
                assert_eq!(g.act(&s, &alpha).unwrap(), -&alpha);
                assert!(g.multiply(&s, &s).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn action_composes() {
        let a2 = group("A2");
        let omega1 = Weight::new(vec![1, 0]);
        let s1s2 = w(&a2, &[1, 2]);
        // ⟨ω_1, α_2^∨⟩ = 0, so s_2 fixes ω_1
        let by_hand = a2.act(&w(&a2, &[1]), &a2.act(&w(&a2, &[2]), &omega1).unwrap()).unwrap();
        assert_eq!(a2.act(&s1s2, &omega1).unwrap(), by_hand);
        assert_eq!(by_hand, Weight::new(vec![-1, 1]));
        assert_eq!(a2.act(&a2.identity(), &omega1).unwrap(), omega1);
        assert!(matches!(a2.act(&s1s2, &Weight::zero(3)), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn braid_relations_in_the_group() {
        let a2 = group("A2");
        assert_eq!(w(&a2, &[1, 2, 1]), w(&a2, &[2, 1, 2]));
        let b2 = group("B2");
        assert!(w(&b2, &[1, 2, 1, 2, 1, 2, 1, 2]).is_identity());
        assert!(!w(&b2, &[1, 2, 1, 2]).is_identity());
        let g2 = group("G2");
        assert!(w(&g2, &[1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2]).is_identity());
    }

    #[test]
    fn longest_elements() {
        let a1 = group("A1");
        assert_eq!(a1.longest_element(), a1.simple_reflection(1).unwrap());
        assert_eq!(a1.act(&a1.longest_element(), &Weight::new(vec![1])).unwrap(), Weight::new(vec![-1]));

        let a2 = group("A2");
        let w0 = a2.longest_element();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0, w(&a2, &[1, 2, 1]));
        assert_eq!(a2.act(&w0, &Weight::new(vec![3, 5])).unwrap(), Weight::new(vec![-5, -3]));

        let g2 = group("G2");
        let w0 = g2.longest_element();
        assert_eq!(w0.length(), 6);
        assert_eq!(w0, w(&g2, &[1, 2, 1, 2, 1, 2]));
        assert_eq!(w0.matrix_rows(), vec![vec![-1, 0], vec![0, -1]]);
    }

    #[test]
    fn canonical_reduced_words() {
        let a2 = group("A2");
        assert_eq!(a2.reduced_word(&a2.identity()).unwrap(), Vec::<usize>::new());
        assert_eq!(a2.reduced_word(&a2.longest_element()).unwrap(), vec![1, 2, 1]);
        assert_eq!(a2.reduced_word(&w(&a2, &[2])).unwrap(), vec![2]);
        assert_eq!(a2.reduced_word(&w(&a2, &[2, 1, 2, 1])).unwrap(), vec![1, 2]);
    }

    #[test]
    fn reduced_word_sets() {
        let a2 = group("A2");
        let all = a2.all_reduced_words(&a2.longest_element(), DEFAULT_WORD_LIMIT).unwrap();
        assert_eq!(all, BTreeSet::from([vec![1, 2, 1], vec![2, 1, 2]]));
        assert_eq!(a2.all_reduced_words(&w(&a2, &[2]), 10).unwrap(), BTreeSet::from([vec![2]]));

        let a3 = group("A3");
        let w0 = a3.longest_element();
        let all = a3.all_reduced_words(&w0, DEFAULT_WORD_LIMIT).unwrap();
        assert_eq!(all.len(), 16);
        for word in &all {
            assert_eq!(a3.from_word(word).unwrap(), w0);
        }
        assert_eq!(a3.all_reduced_words(&w0, 10).unwrap_err(), Error::WordSpaceTooLarge { limit: 10 });
    }

    #[test]
    fn descent_sets() {
        let a2 = group("A2");
        assert!(a2.descents(&a2.identity(), Side::Left).unwrap().is_empty());
        assert_eq!(a2.descents(&a2.longest_element(), Side::Right).unwrap(), vec![1, 2]);
        let s1s2 = w(&a2, &[1, 2]);
        assert_eq!(a2.descents(&s1s2, Side::Left).unwrap(), vec![1]);
        assert_eq!(a2.descents(&s1s2, Side::Right).unwrap(), vec![2]);
    }

    #[test]
    fn descents_agree_with_lengths() {
        for tag in ["B3", "G2", "D4"] {
            let g = group(tag);
            for x in g.enumerate().unwrap() {
                for i in 1..=g.rank() {
                    let s = g.simple_reflection(i).unwrap();
                    let left = g.multiply(&s, &x).unwrap().length() < x.length();
                    let right = g.multiply(&x, &s).unwrap().length() < x.length();
                    assert_eq!(g.is_descent(&x, i, Side::Left).unwrap(), left);
                    assert_eq!(g.is_descent(&x, i, Side::Right).unwrap(), right);
                }
            }
        }
    }

    #[test]
    fn enumeration_and_cap() {
        assert_eq!(group("A1").enumerate().unwrap().len(), 2);
        assert_eq!(group("A2").enumerate().unwrap().len(), 6);
        assert_eq!(group("B3").enumerate().unwrap().len(), 48);
        let small = WeylGroup::with_cap(Arc::new("B3".parse().unwrap()), 47);
        assert_eq!(small.enumerate().unwrap_err(), Error::GroupTooLarge { cap: 47 });
        let exact = WeylGroup::with_cap(Arc::new("B3".parse().unwrap()), 48);
        assert_eq!(exact.enumerate().unwrap().len(), 48);
    }

    #[test]
    fn small_bruhat_facts() {
        let a2 = group("A2");
        let s1 = w(&a2, &[1]);
        let s2 = w(&a2, &[2]);
        let w0 = a2.longest_element();
        assert!(!a2.bruhat_leq(&s1, &s2).unwrap());
        assert!(a2.bruhat_leq(&w(&a2, &[1, 2]), &w0).unwrap());
        assert!(a2.bruhat_leq(&a2.identity(), &s2).unwrap());
        assert!(!a2.bruhat_leq(&w(&a2, &[1, 2]), &w(&a2, &[2, 1])).unwrap());
        assert_eq!(a2.bruhat_interval(&w0).unwrap().len(), 6);
        assert_eq!(a2.bruhat_interval(&s1).unwrap(), BTreeSet::from([a2.identity(), s1.clone()]));
        assert_eq!(a2.bruhat_interval(&a2.identity()).unwrap(), BTreeSet::from([a2.identity()]));
    }

    #[test]
    fn inverse_and_length_symmetry() {
        for tag in ["A3", "G2", "C3"] {
            let g = group(tag);
            for x in g.enumerate().unwrap() {
                let inv = g.inverse(&x).unwrap();
                assert!(g.multiply(&x, &inv).unwrap().is_identity());
                assert_eq!(inv.length(), x.length());
            }
        }
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let a2 = group("A2");
        let a3 = group("A3");
        let x = a3.simple_reflection(1).unwrap();
        assert_eq!(a2.multiply(&x, &x).unwrap_err(), Error::RankMismatch { expected: 2, found: 3 });
        assert!(a2.bruhat_leq(&x, &a2.identity()).is_err());
    }
}
