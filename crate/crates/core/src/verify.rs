//! Self-check suite: runs the operator relations, the descent equivalences
//! and the oracle cross-checks on seeded random inputs for one root datum.
//!
//! Each suite draws from its own generator, seeded from the run seed and the
//! suite's position, so suites are reproducible independently of each other.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;

use crate::braid;
use crate::charring::CharacterOf;
use crate::demazure;
use crate::descent;
use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, Weight};
use crate::sample::{self, CharacterShape, SampleRng};
use crate::weyl::{Side, WeylElement, WeylGroup, Word};

type Ch = CharacterOf<BigInt>;

/// Groups up to this order are checked exhaustively where a suite allows it.
const EXHAUSTIVE_ORDER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, samples: 200 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub statement: &'static str,
    pub checks: usize,
    pub status: Status,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS  {:<26} {} ({} checks)", self.name, self.statement, self.checks),
            Status::Fail(why) => {
                write!(f, "FAIL  {:<26} {} ({} checks): {}", self.name, self.statement, self.checks, why)
            }
            Status::Skipped(why) => write!(f, "SKIP  {:<26} {}: {}", self.name, self.statement, why),
        }
    }
}

/// Running count of checks with the first failure recorded.
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failure: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

type Suite = fn(&Context, &mut SampleRng, &mut Tally) -> Result<()>;

struct Context<'a> {
    group: &'a WeylGroup,
    rd: Arc<RootDatum>,
    samples: usize,
}

impl Context<'_> {
    fn character(&self, rng: &mut SampleRng) -> Ch {
        sample::random_character(rng, &self.rd, CharacterShape::default())
    }

    fn w0(&self) -> WeylElement {
        self.group.longest_element()
    }

    /// All elements for small groups, otherwise `samples` random ones.
    fn elements(&self, rng: &mut SampleRng) -> Result<Vec<WeylElement>> {
        let order = self.rd.weyl_group_order();
        if order <= EXHAUSTIVE_ORDER as u128 {
            return self.group.enumerate();
        }
        let max_len = self.rd.positive_roots().len();
        (0..self.samples)
            .map(|_| {
                let len = rng.random_range(0..=max_len);
                let word: Word = (0..len).map(|_| rng.random_range(1..=self.rd.rank())).collect();
                self.group.from_word(&word)
            })
            .collect()
    }

    /// Every reduced word when there are few, otherwise the canonical word
    /// plus random descent walks.
    fn reduced_words(&self, w: &WeylElement, rng: &mut SampleRng) -> Result<Vec<Word>> {
        match self.group.all_reduced_words(w, 64) {
            Ok(all) => Ok(all.into_iter().collect()),
            Err(Error::WordSpaceTooLarge { .. }) => {
                let mut words = BTreeSet::from([self.group.reduced_word(w)?]);
                for _ in 0..8 {
                    words.insert(random_reduced_word(self.group, w, rng)?);
                }
                Ok(words.into_iter().collect())
            }
            Err(e) => Err(e),
        }
    }
}

fn random_reduced_word(group: &WeylGroup, w: &WeylElement, rng: &mut SampleRng) -> Result<Word> {
    let mut word = Vec::with_capacity(w.length());
    let mut cur = w.clone();
    while !cur.is_identity() {
        let descents = group.descents(&cur, Side::Left)?;
        let i = descents[rng.random_range(0..descents.len())];
        word.push(i);
        cur = group.multiply(&group.simple_reflection(i)?, &cur)?;
    }
    Ok(word)
}

const SUITES: &[(&str, &str, Suite)] = &[
    ("oracle", "D_i equals the divided-difference quotient", oracle),
    ("idempotence", "D_i ∘ D_i = D_i", idempotence),
    ("braid-relations", "D_i D_j D_i ⋯ = D_j D_i D_j ⋯ (m_ij factors)", braid_relations),
    ("reduced-word-independence", "D_w does not depend on the reduced word", reduced_word_independence),
    ("tensor-identity", "D_i(f·g) = D_i(f)·g for s_i-invariant g", tensor_identity),
    ("fixed-points", "D_i(f) = f exactly when s_i(f) = f", fixed_points),
    ("subword-interval", "subwords of a reduced word of w give [e, w]", subword_interval),
    ("longest-word-covers-w", "subwords of a reduced word of w_0 give all of W", longest_word_covers),
    ("descent-equivalence", "all defects vanish ⟺ D_{w0} f = f ⟺ f is W-invariant", descent_equivalence),
    ("comonad", "D_{w0} ∘ D_{w0} = D_{w0}", comonad),
    ("weyl-character", "D_{w0}(e^λ) equals the Weyl character formula", weyl_character),
    ("round-trip", "decompose ∘ restrict = id on virtual G-characters", round_trip),
    ("braid-monoid", "T_u T_v = T_{uv} exactly when lengths add", braid_monoid),
    ("matsumoto", "all reduced words give the same braid", matsumoto),
];

/// Runs every suite. Suites that need an enumeration the group cap forbids
/// are reported as skipped.
pub fn run(group: &WeylGroup, opts: &VerifyOptions) -> Vec<SuiteReport> {
    let ctx = Context { group, rd: group.root_datum().clone(), samples: opts.samples };
    SUITES
        .iter()
        .enumerate()
        .map(|(k, &(name, statement, suite))| {
            let mut rng = sample::rng(opts.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k as u64));
            let mut tally = Tally::new();
            let status = match suite(&ctx, &mut rng, &mut tally) {
                Ok(()) => match tally.failure {
                    None => Status::Pass,
                    Some(why) => Status::Fail(why),
                },
                Err(e @ (Error::GroupTooLarge { .. } | Error::WordTooLong { .. })) => Status::Skipped(e.to_string()),
                Err(e) => Status::Fail(format!("error: {e}")),
            };
            SuiteReport { name, statement, checks: tally.checks, status }
        })
        .collect()
}

fn oracle(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    for _ in 0..ctx.samples {
        let f = ctx.character(rng);
        for i in 1..=ctx.rd.rank() {
            let ok = demazure::apply(i, &f)? == demazure::oracle(i, &f)?;
            t.check(ok, || format!("D_{i} disagrees with the quotient on {f}"));
        }
    }
    Ok(())
}

fn idempotence(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    for _ in 0..ctx.samples {
        let f = ctx.character(rng);
        for i in 1..=ctx.rd.rank() {
            let once = demazure::apply(i, &f)?;
            t.check(demazure::apply(i, &once)? == once, || format!("D_{i}² ≠ D_{i} on {f}"));
        }
    }
    Ok(())
}

fn braid_relations(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let relations = demazure::braid_relation_words(ctx.group);
    for _ in 0..ctx.samples {
        let f = ctx.character(rng);
        for (i, j, left, right) in &relations {
            let ok = demazure::apply_word(left, &f)? == demazure::apply_word(right, &f)?;
            t.check(ok, || format!("braid relation ({i},{j}) fails on {f}"));
        }
    }
    Ok(())
}

fn reduced_word_independence(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let per_element = if ctx.rd.rank() <= 2 { ctx.samples.min(20) } else { ctx.samples.min(3) };
    for w in ctx.elements(rng)? {
        let words = ctx.reduced_words(&w, rng)?;
        for _ in 0..per_element {
            let f = ctx.character(rng);
            let reference = demazure::apply_word(&words[0], &f)?;
            for word in &words[1..] {
                t.check(demazure::apply_word(word, &f)? == reference, || {
                    format!("words {:?} and {:?} disagree on {f}", words[0], word)
                });
            }
        }
    }
    Ok(())
}

fn tensor_identity(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    for _ in 0..ctx.samples {
        let f = ctx.character(rng);
        let h = ctx.character(rng);
        for i in 1..=ctx.rd.rank() {
            let g = h.add(&h.reflect(i)?)?;
            let lhs = demazure::apply(i, &f.multiply(&g)?)?;
            let rhs = demazure::apply(i, &f)?.multiply(&g)?;
            t.check(lhs == rhs, || format!("D_{i}(f·g) ≠ D_{i}(f)·g for f = {f}, g = {g}"));
        }
    }
    Ok(())
}

fn fixed_points(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    for _ in 0..ctx.samples {
        let f = ctx.character(rng);
        for i in 1..=ctx.rd.rank() {
            for input in [f.clone(), f.add(&f.reflect(i)?)?] {
                let fixed = demazure::apply(i, &input)? == input;
                let invariant = input.reflect(i)? == input;
                t.check(fixed == invariant, || format!("fixed-point test at node {i} disagrees on {input}"));
            }
        }
    }
    Ok(())
}

fn subword_interval(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    for w in ctx.elements(rng)? {
        let word = ctx.group.reduced_word(&w)?;
        let interval = ctx.group.bruhat_interval(&w)?;
        t.check(demazure::subword_interval(ctx.group, &word)? == interval, || format!("mismatch for w = {word:?}"));
        t.check(demazure::demazure_product(ctx.group, &word)? == w, || format!("Demazure product of {word:?} ≠ w"));
    }
    Ok(())
}

fn longest_word_covers(ctx: &Context, _rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let word = ctx.group.reduced_word(&ctx.w0())?;
    let covered = demazure::subword_interval(ctx.group, &word)?;
    let all: BTreeSet<WeylElement> = ctx.group.enumerate()?.into_iter().collect();
    t.check(covered == all, || format!("{} of {} elements reached", covered.len(), all.len()));
    Ok(())
}

fn descent_equivalence(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let w0 = ctx.w0();
    for _ in 0..ctx.samples {
        let f = ctx.character(rng);
        let inputs = [
            (f.clone(), false),
            (f.symmetrize(ctx.group)?, true),
            (demazure::apply_element(ctx.group, &w0, &f)?, true),
        ];
        for (input, invariant) in inputs {
            let r = descent::theorem_equivalences(ctx.group, &input)?;
            t.check(r.consistent(), || format!("{r:?} on {input}"));
            if invariant {
                t.check(r.descent, || format!("constructed invariant {input} fails the descent test"));
            }
        }
    }
    Ok(())
}

fn comonad(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let w0 = ctx.w0();
    for _ in 0..ctx.samples {
        let f = ctx.character(rng);
        let once = demazure::apply_element(ctx.group, &w0, &f)?;
        t.check(demazure::apply_element(ctx.group, &w0, &once)? == once, || format!("D_w0² ≠ D_w0 on {f}"));
    }
    Ok(())
}

fn dominant_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = vec![Weight::new(Vec::new())];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=bound).map(move |c| {
                    let mut v = w.coords().to_vec();
                    v.push(c);
                    Weight::new(v)
                })
            })
            .collect();
    }
    out
}

fn weyl_character(ctx: &Context, _rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let bound = if ctx.rd.rank() <= 2 { 2 } else { 1 };
    for lambda in dominant_box(ctx.rd.rank(), bound) {
        let by_operators: Ch = descent::weyl_character(ctx.group, &lambda)?;
        let by_formula: Ch = descent::weyl_character_formula(ctx.group, &lambda)?;
        t.check(by_operators == by_formula, || format!("χ_{lambda} differs between the two routes"));
    }
    Ok(())
}

fn round_trip(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let bound = if ctx.rd.rank() <= 3 { 3 } else { 1 };
    for _ in 0..ctx.samples {
        let dec = sample::random_decomposition::<BigInt>(rng, &ctx.rd, 5, bound, 4);
        let back = descent::decompose(ctx.group, &descent::restrict(ctx.group, &dec)?)?;
        t.check(back == dec, || format!("round trip changed {dec:?}"));
    }
    Ok(())
}

fn braid_monoid(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    let elements = ctx.elements(rng)?;
    for u in &elements {
        for v in &elements {
            let uv = ctx.group.multiply(u, v)?;
            let product = braid::braid_multiply(ctx.group, &braid::t_of(ctx.group, u)?, &braid::t_of(ctx.group, v)?)?;
            let collapses = product == braid::t_of(ctx.group, &uv)?;
            let lengths_add = u.length() + v.length() == uv.length();
            t.check(collapses == lengths_add, || {
                format!("defining relation wrong for lengths {} and {}", u.length(), v.length())
            });
            if t.failed() {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn matsumoto(ctx: &Context, rng: &mut SampleRng, t: &mut Tally) -> Result<()> {
    for w in ctx.elements(rng)? {
        let words = ctx.reduced_words(&w, rng)?;
        let reference = braid::from_word(ctx.group, &words[0])?;
        t.check(reference == braid::t_of(ctx.group, &w)?, || format!("{:?} is not a single factor", words[0]));
        for word in &words[1..] {
            t.check(braid::from_word(ctx.group, word)? == reference, || format!("{word:?} and {:?} differ", words[0]));
        }
    }
    Ok(())
}
