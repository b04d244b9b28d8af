//! Seeded random inputs for property checks.
//!
//! The generator is ChaCha8 seeded with a `u64` through
//! `rand::SeedableRng::seed_from_u64`, so a seed reproduces the same inputs on
//! every platform.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charring::CharacterOf;
use crate::descent::GDecompositionOf;
use crate::rootdata::{RootDatum, Weight};
use crate::scalar::Coefficient;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of random characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterShape {
    pub max_terms: usize,
    /// Weight coordinates are drawn from `-coord_bound..=coord_bound`.
    pub coord_bound: i64,
    /// Coefficients are drawn from `-coeff_bound..=coeff_bound`, zero excluded.
    pub coeff_bound: i64,
}

impl Default for CharacterShape {
    fn default() -> Self {
        CharacterShape { max_terms: 12, coord_bound: 4, coeff_bound: 9 }
    }
}

fn nonzero(rng: &mut SampleRng, bound: i64) -> i64 {
    let v = rng.random_range(1..=bound);
    if rng.random_bool(0.5) {
        v
    } else {
        -v
    }
}

pub fn random_weight(rng: &mut SampleRng, rank: usize, bound: i64) -> Weight {
    Weight::new((0..rank).map(|_| rng.random_range(-bound..=bound)).collect())
}

pub fn random_dominant_weight(rng: &mut SampleRng, rank: usize, bound: i64) -> Weight {
    Weight::new((0..rank).map(|_| rng.random_range(0..=bound)).collect())
}

/// A character with between 1 and `max_terms` terms at distinct weights.
pub fn random_character<C: Coefficient>(
    rng: &mut SampleRng,
    rd: &Arc<RootDatum>,
    shape: CharacterShape,
) -> CharacterOf<C> {
    let lattice_points = (2 * shape.coord_bound as u64 + 1).saturating_pow(rd.rank() as u32);
    let n = rng.random_range(1..=shape.max_terms.max(1)).min(lattice_points as usize);
    let mut terms = BTreeMap::new();
    while terms.len() < n {
        let w = random_weight(rng, rd.rank(), shape.coord_bound);
        let c = nonzero(rng, shape.coeff_bound);
        terms.entry(w).or_insert(c);
    }
    CharacterOf::from_terms(rd.clone(), terms.into_iter().map(|(w, c)| (w, C::from_int(c))))
        .expect("weights have the datum's rank")
}

/// A virtual decomposition with up to `max_entries` distinct dominant weights
/// with coordinates in `0..=coord_bound` and multiplicities in
/// `-mult_bound..=mult_bound` without zero.
pub fn random_decomposition<C: Coefficient>(
    rng: &mut SampleRng,
    rd: &Arc<RootDatum>,
    max_entries: usize,
    coord_bound: i64,
    mult_bound: i64,
) -> GDecompositionOf<C> {
    let n = rng.random_range(0..=max_entries);
    let mut dec: GDecompositionOf<C> = GDecompositionOf::new(rd.clone());
    for _ in 0..n {
        let w = random_dominant_weight(rng, rd.rank(), coord_bound);
        let m = nonzero(rng, mult_bound);
        if dec.multiplicity(&w).is_zero() {
            dec.add(w, C::from_int(m)).expect("dominant weight of the right rank");
        }
    }
    dec
}
