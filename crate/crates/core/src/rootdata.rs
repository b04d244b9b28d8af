//! Simple root data of finite type.
//!
//! Weights live in the full weight lattice and are written in the basis of
//! fundamental weights, so coordinate `i` of a weight is its pairing with the
//! simple coroot `α_i^∨`. The Cartan matrix is stored as
//! `C[i][j] = ⟨α_j, α_i^∨⟩`: the simple root `α_j` is column `j`, and the
//! simple reflection `s_i` acts by `λ ↦ λ − λ_i·α_i`.
//!
//! Nodes are labelled `1..=rank` following Bourbaki:
//!
//! | type | diagram                                   | short roots      |
//! |------|-------------------------------------------|------------------|
//! | A_n  | 1 - 2 - … - n                             |                  |
//! | B_n  | 1 - … - (n-1) => n                        | α_n              |
//! | C_n  | 1 - … - (n-1) <= n                        | α_1 … α_{n-1}    |
//! | D_n  | 1 - … - (n-2) branching to n-1 and n      |                  |
//! | E_n  | 1 - 3 - 4 - 5 - … - n, with 2 attached to 4 |                |
//! | F_4  | 1 - 2 => 3 - 4                            | α_3, α_4         |
//! | G_2  | 1 <= 2 (triple bond)                      | α_1              |
//!
//! With this numbering the G2 Cartan matrix is `[[2,-3],[-1,2]]`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Lie type of an irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// An element of the weight lattice in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i` (1-based node label).
    pub fn fundamental(rank: usize, i: usize) -> Result<Self> {
        check_index(i, rank)?;
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Ok(Weight(v))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self + k·other`.
    pub fn add_scaled(&self, k: i64, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

impl Index<usize> for Weight {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(1, rhs)
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(-1, rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_index(i: usize, rank: usize) -> Result<()> {
    if i == 0 || i > rank {
        Err(Error::IndexOutOfRange { index: i, rank })
    } else {
        Ok(())
    }
}

/// A simple root datum, simply connected form.
///
/// Derived data (positive roots, heights) is computed on first use and then
/// frozen, so a `RootDatum` can be shared freely between threads.
#[derive(Debug)]
pub struct RootDatum {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive: OnceLock<PositiveRoots>,
    height_weights: OnceLock<Vec<i64>>,
}

#[derive(Debug)]
struct PositiveRoots {
    /// Coefficients on the simple roots.
    root_coords: Vec<Vec<i64>>,
    weights: Vec<Weight>,
    /// Every root of Φ, mapped to whether it is positive.
    sign: HashMap<Weight, bool>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.series == other.series && self.rank == other.rank
    }
}

impl Eq for RootDatum {}

impl RootDatum {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let valid = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !valid {
            return Err(Error::InvalidType { series: series.letter(), rank });
        }
        Ok(RootDatum {
            series,
            rank,
            cartan: cartan_matrix(series, rank),
            positive: OnceLock::new(),
            height_weights: OnceLock::new(),
        })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The type tag, e.g. `"G2"`.
    pub fn tag(&self) -> String {
        format!("{}{}", self.series.letter(), self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `C[i][j]` with 1-based node labels.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Result<i64> {
        check_index(i, self.rank)?;
        check_index(j, self.rank)?;
        Ok(self.cartan[i - 1][j - 1])
    }

    /// `α_i` in fundamental-weight coordinates: column `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        check_index(i, self.rank)?;
        Ok(self.simple_root_unchecked(i - 1))
    }

    pub(crate) fn simple_root_unchecked(&self, i0: usize) -> Weight {
        Weight((0..self.rank).map(|k| self.cartan[k][i0]).collect())
    }

    /// `⟨λ, α_i^∨⟩`.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        self.check_weight(lambda)?;
        check_index(i, self.rank)?;
        Ok(lambda[i - 1])
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank {
            Err(Error::RankMismatch { expected: self.rank, found: lambda.rank() })
        } else {
            Ok(())
        }
    }

    /// Positive roots in fundamental-weight coordinates, sorted by height and
    /// then by simple-root coefficients in decreasing lexicographic order
    /// (so `α_1, α_2, …` come first, in node order).
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive().weights
    }

    /// Positive roots as coefficient vectors on the simple roots, in the same
    /// order as [`positive_roots`](Self::positive_roots).
    pub fn positive_roots_in_root_basis(&self) -> &[Vec<i64>] {
        &self.positive().root_coords
    }

    /// `Some(true)` for a positive root, `Some(false)` for a negative one,
    /// `None` if the weight is not a root.
    pub fn root_sign(&self, beta: &Weight) -> Option<bool> {
        self.positive().sign.get(beta).copied()
    }

    /// Coefficients `k_i` of `2ρ^∨ = Σ k_i α_i^∨`.
    ///
    /// `⟨λ, 2ρ^∨⟩ = Σ k_i λ_i` drops by exactly 2 along each simple root, so
    /// it strictly decreases down the dominance order.
    pub fn height_weights(&self) -> &[i64] {
        self.height_weights.get_or_init(|| {
            let transposed: Vec<Vec<i64>> =
                (0..self.rank).map(|i| (0..self.rank).map(|j| self.cartan[j][i]).collect()).collect();
            let mut k = vec![0; self.rank];
            for beta in positive_root_closure(&transposed) {
                for (acc, c) in k.iter_mut().zip(beta) {
                    *acc += c;
                }
            }
            k
        })
    }

    /// `⟨λ, 2ρ^∨⟩`.
    pub fn height(&self, lambda: &Weight) -> i64 {
        self.height_weights().iter().zip(lambda.coords()).map(|(k, c)| k * c).sum()
    }

    /// Order of the Weyl group from the exponents, which are read off the
    /// height distribution of the positive roots.
    pub fn weyl_group_order(&self) -> u128 {
        let coords = self.positive_roots_in_root_basis();
        let max_height = coords.iter().map(|c| c.iter().sum::<i64>()).max().unwrap_or(0) as usize;
        let mut per_height = vec![0u32; max_height + 2];
        for c in coords {
            per_height[c.iter().sum::<i64>() as usize] += 1;
        }
        let mut order: u128 = 1;
        for h in 1..=max_height {
            let exponents_equal_h = per_height[h] - per_height[h + 1];
            order *= (h as u128 + 1).pow(exponents_equal_h);
        }
        order
    }

    fn positive(&self) -> &PositiveRoots {
        self.positive.get_or_init(|| {
            let root_coords = positive_root_closure(&self.cartan);
            let weights: Vec<Weight> = root_coords
                .iter()
                .map(|beta| {
                    Weight((0..self.rank).map(|k| (0..self.rank).map(|j| beta[j] * self.cartan[k][j]).sum()).collect())
                })
                .collect();
            let mut sign = HashMap::with_capacity(2 * weights.len());
            for w in &weights {
                sign.insert(w.clone(), true);
                sign.insert(-w, false);
            }
            PositiveRoots { root_coords, weights, sign }
        })
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for RootDatum {
    type Err = Error;

    /// Parses tags like `"A2"`, `"g2"`, `"E8"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars.next().and_then(Series::from_letter).ok_or_else(|| Error::BadTypeTag(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::BadTypeTag(s.to_string()))?;
        RootDatum::new(series, rank)
    }
}

/// Breadth-first closure of the simple roots under simple reflections,
/// in simple-root coordinates. Reflecting a positive root other than `α_i`
/// by `s_i` always yields a positive root, so the closure is exactly `Φ⁺`.
fn positive_root_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let e = unit(i);
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            if beta == unit(i) {
                continue;
            }
            let p: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            if p == 0 {
                continue;
            }
            let mut gamma = beta.clone();
            gamma[i] -= p;
            if seen.insert(gamma.clone()) {
                queue.push_back(gamma);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| b.cmp(a)));
    roots
}

fn cartan_matrix(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    // 0-based simple bonds
    let mut bond = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match series {
        Series::A | Series::B | Series::C => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
        }
        Series::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
        }
        Series::E => {
            bond(0, 2);
            bond(1, 3);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
        }
        Series::F => {
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
        }
        Series::G => bond(0, 1),
    }
    match series {
        Series::B => c[n - 1][n - 2] = -2,
        Series::C => c[n - 2][n - 1] = -2,
        Series::F => c[2][1] = -2,
        Series::G => c[0][1] = -3,
        _ => {}
    }
    c
}
