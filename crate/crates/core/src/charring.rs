//! The character ring `Z[X]`: finitely supported integer functions on the
//! weight lattice, with the Weyl group acting through its action on weights.
//!
//! Terms are kept in a sparse map with zero coefficients pruned, so two
//! characters are equal exactly when their maps are. The ring is generic over
//! the coefficient type; `BigInt` is the default through [`crate::Character`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootdata::{check_index, RootDatum, Weight};
use crate::scalar::Coefficient;
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterOf<C> {
    rd: Arc<RootDatum>,
    terms: BTreeMap<Weight, C>,
}

/// Term order: `⟨λ, 2ρ^∨⟩` first, then lexicographic on coordinates.
///
/// Adding a positive root raises the first key, so the leading term of a
/// W-invariant character is always dominant.
pub fn term_order(rd: &RootDatum, a: &Weight, b: &Weight) -> Ordering {
    rd.height(a).cmp(&rd.height(b)).then_with(|| a.cmp(b))
}

pub(crate) fn check_same_datum(a: &RootDatum, b: &RootDatum) -> Result<()> {
    if a.rank() != b.rank() {
        Err(Error::RankMismatch { expected: a.rank(), found: b.rank() })
    } else if a != b {
        Err(Error::DatumMismatch { left: a.tag(), right: b.tag() })
    } else {
        Ok(())
    }
}

pub(crate) fn accumulate<C: Coefficient>(terms: &mut BTreeMap<Weight, C>, weight: Weight, coeff: C) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(weight) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().clone() + coeff;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl<C: Coefficient> CharacterOf<C> {
    pub fn zero(rd: Arc<RootDatum>) -> Self {
        CharacterOf { rd, terms: BTreeMap::new() }
    }

    /// The trivial character `e^0`.
    pub fn one(rd: Arc<RootDatum>) -> Self {
        let zero = Weight::zero(rd.rank());
        Self::monomial(rd, zero).expect("zero weight has the right rank")
    }

    /// `e^λ`.
    pub fn monomial(rd: Arc<RootDatum>, lambda: Weight) -> Result<Self> {
        Self::term(rd, lambda, C::one())
    }

    /// `c·e^λ`.
    pub fn term(rd: Arc<RootDatum>, lambda: Weight, coeff: C) -> Result<Self> {
        rd.check_weight(&lambda)?;
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, lambda, coeff);
        Ok(CharacterOf { rd, terms })
    }

    /// Sums the given terms; repeated weights accumulate and zeros are dropped.
    pub fn from_terms<I>(rd: Arc<RootDatum>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, C)>,
    {
        let mut out = BTreeMap::new();
        for (lambda, c) in terms {
            rd.check_weight(&lambda)?;
            accumulate(&mut out, lambda, c);
        }
        Ok(CharacterOf { rd, terms: out })
    }

    pub(crate) fn from_map_unchecked(rd: Arc<RootDatum>, terms: BTreeMap<Weight, C>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        CharacterOf { rd, terms }
    }

    pub fn root_datum(&self) -> &Arc<RootDatum> {
        &self.rd
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Weight) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in lexicographic order of weights.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.terms.iter()
    }

    /// Terms from the leading term downwards in the term order.
    pub fn sorted_terms(&self) -> Vec<(&Weight, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| term_order(&self.rd, b.0, a.0));
        v
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        check_same_datum(&self.rd, &other.rd)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (lambda, c) in &other.terms {
            accumulate(&mut terms, lambda.clone(), c.clone());
        }
        Ok(CharacterOf { rd: self.rd.clone(), terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (lambda, c) in &other.terms {
            accumulate(&mut terms, lambda.clone(), -c.clone());
        }
        Ok(CharacterOf { rd: self.rd.clone(), terms })
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.rd.clone());
        }
        let terms = self.terms.iter().map(|(l, a)| (l.clone(), a.clone() * c.clone())).collect();
        CharacterOf { rd: self.rd.clone(), terms }
    }

    /// Product in `Z[X]`, i.e. tensor product of B-modules at the level of classes.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut terms = BTreeMap::new();
        for (l, a) in &self.terms {
            for (m, b) in &other.terms {
                accumulate(&mut terms, l + m, a.clone() * b.clone());
            }
        }
        Ok(CharacterOf { rd: self.rd.clone(), terms })
    }

    /// `c·e^shift·self`.
    pub fn shift_scale(&self, shift: &Weight, c: &C) -> Result<Self> {
        self.rd.check_weight(shift)?;
        if c.is_zero() {
            return Ok(Self::zero(self.rd.clone()));
        }
        let terms = self.terms.iter().map(|(l, a)| (l + shift, a.clone() * c.clone())).collect();
        Ok(CharacterOf { rd: self.rd.clone(), terms })
    }

    /// Pushforward of terms along `λ ↦ w(λ)`.
    pub fn weyl_act(&self, w: &WeylElement) -> Result<Self> {
        if w.rank() != self.rd.rank() {
            return Err(Error::RankMismatch { expected: self.rd.rank(), found: w.rank() });
        }
        let terms = self.terms.iter().map(|(l, a)| (w.apply(l), a.clone())).collect();
        Ok(CharacterOf { rd: self.rd.clone(), terms })
    }

    /// Action of the simple reflection `s_i`.
    pub fn reflect(&self, i: usize) -> Result<Self> {
        check_index(i, self.rd.rank())?;
        let alpha = self.rd.simple_root_unchecked(i - 1);
        let terms = self.terms.iter().map(|(l, a)| (l.add_scaled(-l[i - 1], &alpha), a.clone())).collect();
        Ok(CharacterOf { rd: self.rd.clone(), terms })
    }

    pub fn is_invariant(&self, w: &WeylElement) -> Result<bool> {
        Ok(self.weyl_act(w)? == *self)
    }

    /// Invariance under every simple reflection, hence under all of `W`.
    pub fn is_w_invariant(&self) -> bool {
        (1..=self.rd.rank()).all(|i| self.reflect(i).expect("valid index") == *self)
    }

    /// Virtual dimension: the sum of the coefficients.
    pub fn dimension(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// The largest term under [`term_order`].
    pub fn leading_term(&self) -> Option<(&Weight, &C)> {
        self.terms.iter().max_by(|a, b| term_order(&self.rd, a.0, b.0))
    }

    /// `q` with `q·divisor = self`, found by leading-term elimination.
    ///
    /// Every quotient exponent lies in the box bounded coordinatewise by
    /// `min(self) − min(divisor)` and `max(self) − max(divisor)`; leaving it
    /// means the division is not exact.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.compatible(divisor)?;
        let (lead_w, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(self.rd.clone()));
        }
        let n = self.rd.rank();
        let bounds = |t: &BTreeMap<Weight, C>| -> (Vec<i64>, Vec<i64>) {
            let lo = (0..n).map(|j| t.keys().map(|w| w[j]).min().expect("nonempty")).collect();
            let hi = (0..n).map(|j| t.keys().map(|w| w[j]).max().expect("nonempty")).collect();
            (lo, hi)
        };
        let (f_lo, f_hi) = bounds(&self.terms);
        let (g_lo, g_hi) = bounds(&divisor.terms);

        // remainder keyed by (height, weight) so its leading term is the last entry
        let mut remainder: BTreeMap<(i64, Weight), C> =
            self.terms.iter().map(|(w, c)| ((self.rd.height(w), w.clone()), c.clone())).collect();
        let mut quotient = BTreeMap::new();
        while let Some(((_, mu), c)) = remainder.last_key_value() {
            let q = c.checked_exact_div(lead_c).ok_or(Error::NotDivisible)?;
            let shift = mu - lead_w;
            let in_box = (0..n).all(|j| shift[j] >= f_lo[j] - g_lo[j] && shift[j] <= f_hi[j] - g_hi[j]);
            if !in_box {
                return Err(Error::NotDivisible);
            }
            for (w, g) in &divisor.terms {
                let key_w = &shift + w;
                let key = (self.rd.height(&key_w), key_w);
                let delta = -(q.clone() * g.clone());
                match remainder.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().clone() + delta;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
            accumulate(&mut quotient, shift, q);
        }
        Ok(CharacterOf { rd: self.rd.clone(), terms: quotient })
    }

    /// `Σ_{w∈W} (−1)^{ℓ(w)} e^{w(λ)}`.
    pub fn alternating_sum(group: &WeylGroup, lambda: &Weight) -> Result<Self> {
        let rd = group.root_datum().clone();
        rd.check_weight(lambda)?;
        let mut terms = BTreeMap::new();
        for w in group.enumerate()? {
            let sign = if w.length() % 2 == 0 { C::one() } else { -C::one() };
            accumulate(&mut terms, w.apply(lambda), sign);
        }
        Ok(CharacterOf { rd, terms })
    }

    /// `Σ_{w∈W} w(self)`.
    pub fn symmetrize(&self, group: &WeylGroup) -> Result<Self> {
        check_same_datum(&self.rd, group.root_datum())?;
        let mut terms = BTreeMap::new();
        for w in group.enumerate()? {
            for (l, a) in &self.terms {
                accumulate(&mut terms, w.apply(l), a.clone());
            }
        }
        Ok(CharacterOf { rd: self.rd.clone(), terms })
    }

    /// Converts coefficients to another ring.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> CharacterOf<D> {
        let mut terms = BTreeMap::new();
        for (l, a) in &self.terms {
            accumulate(&mut terms, l.clone(), f(a));
        }
        CharacterOf { rd: self.rd.clone(), terms }
    }
}

impl<C: Coefficient> fmt::Display for CharacterOf<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·e^{w}")?;
        }
        Ok(())
    }
}

// Operator forms panic when the root data differ; use the named methods to get a `Result`.

impl<C: Coefficient> Add for &CharacterOf<C> {
    type Output = CharacterOf<C>;

    fn add(self, rhs: Self) -> CharacterOf<C> {
        CharacterOf::add(self, rhs).expect("characters over different root data")
    }
}

impl<C: Coefficient> Sub for &CharacterOf<C> {
    type Output = CharacterOf<C>;

    fn sub(self, rhs: Self) -> CharacterOf<C> {
        CharacterOf::sub(self, rhs).expect("characters over different root data")
    }
}

impl<C: Coefficient> Mul for &CharacterOf<C> {
    type Output = CharacterOf<C>;

    fn mul(self, rhs: Self) -> CharacterOf<C> {
        self.multiply(rhs).expect("characters over different root data")
    }
}

impl<C: Coefficient> Neg for &CharacterOf<C> {
    type Output = CharacterOf<C>;

    fn neg(self) -> CharacterOf<C> {
        self.scale(&-C::one())
    }
}
