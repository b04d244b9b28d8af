//! The descent condition at the level of characters.
//!
//! A character `f ∈ Z[X]` lies in the descent category when every counit
//! defect `D_i(f) − f` vanishes. Such characters are exactly the
//! W-invariant ones, exactly the fixed points of `D_{w_0}`, and they are
//! integer combinations of Weyl characters `χ_λ = D_{w_0}(e^λ)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::charring::{check_same_datum, CharacterOf};
use crate::demazure;
use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, Weight};
use crate::scalar::Coefficient;
use crate::weyl::WeylGroup;

/// A virtual G-character in the basis of Weyl characters: dominant highest
/// weights with nonzero (possibly negative) multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GDecompositionOf<C> {
    rd: Arc<RootDatum>,
    entries: BTreeMap<Weight, C>,
}

impl<C: Coefficient> GDecompositionOf<C> {
    pub fn new(rd: Arc<RootDatum>) -> Self {
        GDecompositionOf { rd, entries: BTreeMap::new() }
    }

    /// Sums multiplicities of repeated weights and drops zeros. Every weight
    /// must be dominant.
    pub fn from_entries<I>(rd: Arc<RootDatum>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, C)>,
    {
        let mut dec = Self::new(rd);
        for (lambda, m) in entries {
            dec.add(lambda, m)?;
        }
        Ok(dec)
    }

    pub fn add(&mut self, lambda: Weight, mult: C) -> Result<()> {
        self.rd.check_weight(&lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda));
        }
        crate::charring::accumulate(&mut self.entries, lambda, mult);
        Ok(())
    }

    pub fn root_datum(&self) -> &Arc<RootDatum> {
        &self.rd
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.entries.iter()
    }

    pub fn multiplicity(&self, lambda: &Weight) -> C {
        self.entries.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Outcome of the three equivalent descent tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCheck {
    /// All counit defects vanish.
    pub descent: bool,
    /// `D_{w_0}(f) = f`.
    pub full: bool,
    /// `f` is W-invariant.
    pub invariant: bool,
}

impl TheoremCheck {
    pub fn consistent(&self) -> bool {
        self.descent == self.full && self.full == self.invariant
    }
}

/// `D_i(f) − f`.
pub fn counit_defect<C: Coefficient>(f: &CharacterOf<C>, i: usize) -> Result<CharacterOf<C>> {
    demazure::apply(i, f)?.sub(f)
}

/// The first node with a nonzero counit defect, with that defect.
pub fn first_defect<C: Coefficient>(f: &CharacterOf<C>) -> Option<(usize, CharacterOf<C>)> {
    (1..=f.root_datum().rank()).find_map(|i| {
        let d = counit_defect(f, i).expect("valid index");
        (!d.is_zero()).then_some((i, d))
    })
}

pub fn is_descent_object<C: Coefficient>(f: &CharacterOf<C>) -> bool {
    first_defect(f).is_none()
}

pub fn theorem_equivalences<C: Coefficient>(group: &WeylGroup, f: &CharacterOf<C>) -> Result<TheoremCheck> {
    check_same_datum(group.root_datum(), f.root_datum())?;
    let full = demazure::apply_element(group, &group.longest_element(), f)? == *f;
    Ok(TheoremCheck { descent: is_descent_object(f), full, invariant: f.is_w_invariant() })
}

/// `χ_λ = D_{w_0}(e^λ)` for dominant `λ`.
pub fn weyl_character<C: Coefficient>(group: &WeylGroup, lambda: &Weight) -> Result<CharacterOf<C>> {
    let rd = group.root_datum().clone();
    rd.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let e = CharacterOf::monomial(rd, lambda.clone())?;
    demazure::apply_element(group, &group.longest_element(), &e)
}

/// `χ_λ` from the quotient of alternating sums over `W`. Needs `W` enumerable.
pub fn weyl_character_formula<C: Coefficient>(group: &WeylGroup, lambda: &Weight) -> Result<CharacterOf<C>> {
    let rd = group.root_datum();
    rd.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let rho = rd.rho();
    let numerator = CharacterOf::<C>::alternating_sum(group, &(lambda + &rho))?;
    let denominator = CharacterOf::<C>::alternating_sum(group, &rho)?;
    numerator.exact_divide(&denominator)
}

/// Writes a descent-category character in the Weyl-character basis by
/// repeatedly peeling off the leading term.
pub fn decompose<C: Coefficient>(group: &WeylGroup, f: &CharacterOf<C>) -> Result<GDecompositionOf<C>> {
    check_same_datum(group.root_datum(), f.root_datum())?;
    if let Some((index, defect)) = first_defect(f) {
        let defect = defect
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| (w.clone(), c.to_bigint().expect("integer coefficients")))
            .collect();
        return Err(Error::NotInDescentCategory { index, defect });
    }
    let mut dec = GDecompositionOf::new(f.root_datum().clone());
    let mut rest = f.clone();
    while let Some((mu, c)) = rest.leading_term() {
        let (mu, c) = (mu.clone(), c.clone());
        assert!(mu.is_dominant(), "leading term {mu} of a W-invariant character is not dominant");
        let chi: CharacterOf<C> = weyl_character(group, &mu)?;
        rest = rest.sub(&chi.scale(&c))?;
        dec.add(mu, c)?;
    }
    Ok(dec)
}

/// `Σ m_λ χ_λ`.
pub fn restrict<C: Coefficient>(group: &WeylGroup, dec: &GDecompositionOf<C>) -> Result<CharacterOf<C>> {
    check_same_datum(group.root_datum(), dec.root_datum())?;
    let mut cache: HashMap<&Weight, CharacterOf<C>> = HashMap::new();
    let mut out = CharacterOf::zero(dec.root_datum().clone());
    for (lambda, m) in dec.entries() {
        let chi = match cache.get(lambda) {
            Some(chi) => chi.clone(),
            None => {
                let chi = weyl_character(group, lambda)?;
                cache.insert(lambda, chi.clone());
                chi
            }
        };
        out = out.add(&chi.scale(m))?;
    }
    Ok(out)
}
