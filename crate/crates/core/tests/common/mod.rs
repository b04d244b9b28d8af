//! Reference computations that share no code with the library beyond reading
//! a Cartan matrix or a character's terms. Roots are built from explicit
//! Euclidean realisations, group elements are tracked by matrices built here,
//! and character identities are checked by multiplying out instead of dividing.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use demazure::{CharacterOf, Coefficient, RootDatum, Series};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub const SMALL_TYPES: [&str; 6] = ["A1", "A2", "A3", "B2", "B3", "G2"];

/// Every type the library accepts up to rank 8.
pub fn all_types() -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(format!("A{n}"));
    }
    for n in 2..=8 {
        out.push(format!("B{n}"));
    }
    for n in 3..=8 {
        out.push(format!("C{n}"));
    }
    for n in 4..=8 {
        out.push(format!("D{n}"));
    }
    out.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    out
}

fn e(dim: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

fn lin(a: &[i64], ka: i64, b: &[i64], kb: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| ka * x + kb * y).collect()
}

/// Simple roots in Euclidean space, Bourbaki numbering, every coordinate doubled
/// so that E8 and F4 stay integral.
pub fn euclidean_simple_roots(series: Series, n: usize) -> Vec<Vec<i64>> {
    let diff = |dim: usize, i: usize, j: usize| lin(&e(dim, i, 2), 1, &e(dim, j, 2), -1);
    match series {
        Series::A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        Series::B | Series::C | Series::D => {
            let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            roots.push(match series {
                Series::B => e(n, n - 1, 2),
                Series::C => e(n, n - 1, 4),
                _ => lin(&e(n, n - 2, 2), 1, &e(n, n - 1, 2), 1),
            });
            roots
        }
        Series::E => {
            let mut roots = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], lin(&e(8, 0, 2), 1, &e(8, 1, 2), 1)];
            for k in 0..6 {
                roots.push(diff(8, k + 1, k));
            }
            roots.truncate(n);
            roots
        }
        Series::F => vec![diff(4, 1, 2), diff(4, 2, 3), e(4, 3, 2), vec![1, -1, -1, -1]],
        Series::G => vec![diff(3, 0, 1), vec![-4, 2, 2]],
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `C[i][j] = 2(α_j, α_i)/(α_i, α_i)`.
pub fn euclidean_cartan(series: Series, n: usize) -> Vec<Vec<i64>> {
    let s = euclidean_simple_roots(series, n);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let num = 2 * dot(&s[j], &s[i]);
                    let den = dot(&s[i], &s[i]);
                    assert_eq!(num % den, 0, "non-integral Cartan entry");
                    num / den
                })
                .collect()
        })
        .collect()
}

/// Positive roots as (Euclidean vector, simple-root coordinates), from closing
/// the simple roots under all simple reflections.
pub fn euclidean_positive_roots(series: Series, n: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
    let simple = euclidean_simple_roots(series, n);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
    for (i, a) in simple.iter().enumerate() {
        seen.insert(a.clone());
        queue.push_back((a.clone(), e(n, i, 1)));
    }
    let mut roots = Vec::new();
    while let Some((v, c)) = queue.pop_front() {
        for (i, a) in simple.iter().enumerate() {
            let k = 2 * dot(&v, a) / dot(a, a);
            let w = lin(&v, 1, a, -k);
            if seen.insert(w.clone()) {
                let mut cw = c.clone();
                cw[i] -= k;
                queue.push_back((w, cw));
            }
        }
        roots.push((v, c));
    }
    let positive: Vec<_> = roots.into_iter().filter(|(_, c)| c.iter().all(|&x| x >= 0)).collect();
    assert_eq!(positive.len() * 2, seen.len(), "roots split evenly into positive and negative");
    positive
}

/// Weyl dimension formula `∏ (λ+ρ, β)/(ρ, β)` over positive roots, evaluated
/// with rationals from the Euclidean realisation.
pub fn weyl_dimension(series: Series, n: usize, lambda: &[i64]) -> BigInt {
    let simple = euclidean_simple_roots(series, n);
    let sq: Vec<i64> = simple.iter().map(|a| dot(a, a)).collect();
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for (_, c) in euclidean_positive_roots(series, n) {
        // ⟨ω_j, β^∨⟩ = c_j |α_j|² / |β|²; the common factor |β|² cancels in the ratio.
        let pair = |shift: &dyn Fn(usize) -> i64| -> BigRational {
            let s: i64 = (0..n).map(|j| shift(j) * c[j] * sq[j]).sum();
            BigRational::from_integer(s.into())
        };
        num *= pair(&|j| lambda[j] + 1);
        den *= pair(&|_| 1);
    }
    let d = num / den;
    assert!(d.is_integer(), "dimension formula returned a fraction");
    d.to_integer()
}

/// Matrix of `s_i` acting on fundamental-weight coordinates: `λ ↦ λ − λ_i α_i`.
fn reflection_matrix(cartan: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
    let n = cartan.len();
    (0..n).map(|r| (0..n).map(|c| i64::from(r == c) - if c == i { cartan[r][i] } else { 0 }).collect()).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect()).collect()
}

pub fn mat_apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// All Weyl group elements as (matrix, sign), by breadth-first search.
pub fn weyl_matrices(cartan: &[Vec<i64>]) -> Vec<(Vec<Vec<i64>>, i64)> {
    let n = cartan.len();
    let gens: Vec<_> = (0..n).map(|i| reflection_matrix(cartan, i)).collect();
    let id: Vec<Vec<i64>> = (0..n).map(|r| e(n, r, 1)).collect();
    let mut seen = HashMap::from([(id.clone(), 1i64)]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        let sign = seen[&m];
        for g in &gens {
            let next = mat_mul(g, &m);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), -sign);
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// `ρ` images under the product of a word, rightmost letter applied first.
pub fn word_action(cartan: &[Vec<i64>], word: &[usize], v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    for &i in word.iter().rev() {
        let vi = v[i - 1];
        for (r, x) in v.iter_mut().enumerate() {
            *x -= vi * cartan[r][i - 1];
        }
    }
    v
}

pub fn rho(n: usize) -> Vec<i64> {
    vec![1; n]
}

/// Every element obtained as a product of a subword, keyed by its image of `ρ`.
pub fn subword_products(cartan: &[Vec<i64>], word: &[usize]) -> BTreeSet<Vec<i64>> {
    let n = cartan.len();
    (0u32..1 << word.len())
        .map(|mask| {
            let sub: Vec<usize> =
                word.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &i)| i).collect();
            word_action(cartan, &sub, &rho(n))
        })
        .collect()
}

pub type Poly = BTreeMap<Vec<i64>, BigInt>;

pub fn poly_of<C: Coefficient>(f: &CharacterOf<C>) -> Poly {
    f.terms().map(|(w, c)| (w.coords().to_vec(), c.to_bigint().unwrap())).collect()
}

fn poly_add_term(p: &mut Poly, w: Vec<i64>, c: BigInt) {
    let slot = p.entry(w.clone()).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        p.remove(&w);
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            poly_add_term(&mut out, lin(wa, 1, wb, 1), ca * cb);
        }
    }
    out
}

pub fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (w, c) in b {
        poly_add_term(&mut out, w.clone(), -c.clone());
    }
    out
}

/// `Σ_w sign(w) e^{w(μ)}`.
pub fn alternant(cartan: &[Vec<i64>], mu: &[i64]) -> Poly {
    let mut out = Poly::new();
    for (m, sign) in weyl_matrices(cartan) {
        poly_add_term(&mut out, mat_apply(&m, mu), BigInt::from(sign));
    }
    out
}

/// Whether `χ · A_ρ = A_{λ+ρ}`, which pins `χ` down uniquely.
pub fn satisfies_weyl_formula(rd: &RootDatum, lambda: &[i64], chi: &Poly) -> bool {
    let n = rd.rank();
    let r = rho(n);
    let shifted: Vec<i64> = lambda.iter().zip(&r).map(|(a, b)| a + b).collect();
    poly_mul(chi, &alternant(rd.cartan(), &r)) == alternant(rd.cartan(), &shifted)
}

/// Whether `g · (1 − e^{−α_i}) = f − e^{−α_i} s_i(f)`.
pub fn satisfies_divided_difference(rd: &RootDatum, i: usize, f: &Poly, g: &Poly) -> bool {
    let n = rd.rank();
    let alpha: Vec<i64> = (0..n).map(|r| rd.cartan()[r][i - 1]).collect();
    let neg_alpha: Vec<i64> = alpha.iter().map(|x| -x).collect();
    let one_minus = Poly::from([(vec![0; n], BigInt::one()), (neg_alpha.clone(), -BigInt::one())]);
    let reflected: Poly = f.iter().map(|(w, c)| (word_action(rd.cartan(), &[i], w), c.clone())).collect();
    let shifted = poly_mul(&Poly::from([(neg_alpha, BigInt::one())]), &reflected);
    poly_mul(g, &one_minus) == poly_sub(f, &shifted)
}
