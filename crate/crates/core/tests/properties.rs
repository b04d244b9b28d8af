use std::sync::Arc;

use demazure::{braid, demazure as dem, Character, RootDatum, Weight, WeylGroup};
use num_bigint::BigInt;
use proptest::prelude::*;

const TYPES: [&str; 6] = ["A1", "A2", "A3", "B2", "B3", "G2"];

fn datum(tag: &str) -> Arc<RootDatum> {
    Arc::new(tag.parse().unwrap())
}

/// Characters with up to `max_terms` terms, coordinates in [-4, 4] and
/// coefficients in [-9, 9].
fn character(rd: Arc<RootDatum>, max_terms: usize) -> impl Strategy<Value = Character> {
    let n = rd.rank();
    prop::collection::vec((prop::collection::vec(-4i64..=4, n), -9i64..=9), 0..=max_terms).prop_map(move |terms| {
        Character::from_terms(rd.clone(), terms.into_iter().map(|(w, c)| (Weight::new(w), BigInt::from(c)))).unwrap()
    })
}

fn typed<S: Strategy + 'static>(
    build: impl Fn(Arc<RootDatum>) -> S + 'static,
) -> impl Strategy<Value = (Arc<RootDatum>, S::Value)> {
    prop::sample::select(&TYPES[..]).prop_flat_map(move |tag| {
        let rd = datum(tag);
        (Just(rd.clone()), build(rd))
    })
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=rank, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((_, (f, g, h)) in typed(|rd| (character(rd.clone(), 20), character(rd.clone(), 20), character(rd, 20)))) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.multiply(&g).unwrap(), g.multiply(&f).unwrap());
        prop_assert_eq!(f.add(&g).unwrap().add(&h).unwrap(), f.add(&g.add(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.multiply(&g).unwrap().multiply(&h).unwrap(),
            f.multiply(&g.multiply(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.multiply(&g.add(&h).unwrap()).unwrap(),
            f.multiply(&g).unwrap().add(&f.multiply(&h).unwrap()).unwrap()
        );
        let one = Character::one(f.root_datum().clone());
        prop_assert_eq!(f.multiply(&one).unwrap(), f.clone());
        prop_assert!(f.sub(&f).unwrap().is_zero());
        prop_assert!(f.terms().all(|(_, c)| c != &BigInt::from(0)));
    }

    #[test]
    fn weyl_action_is_a_ring_automorphism_and_an_action(
        (rd, (f, g, u, v)) in typed(|rd| (character(rd.clone(), 12), character(rd.clone(), 12), word(rd.rank(), 10), word(rd.rank(), 10)))
    ) {
        let group = WeylGroup::new(rd);
        let u = group.from_word(&u).unwrap();
        let v = group.from_word(&v).unwrap();
        prop_assert_eq!(f.multiply(&g).unwrap().weyl_act(&u).unwrap(), f.weyl_act(&u).unwrap().multiply(&g.weyl_act(&u).unwrap()).unwrap());
        prop_assert_eq!(f.add(&g).unwrap().weyl_act(&u).unwrap(), f.weyl_act(&u).unwrap().add(&g.weyl_act(&u).unwrap()).unwrap());
        let uv = group.multiply(&u, &v).unwrap();
        prop_assert_eq!(f.weyl_act(&v).unwrap().weyl_act(&u).unwrap(), f.weyl_act(&uv).unwrap());
        prop_assert_eq!(f.weyl_act(&group.identity()).unwrap(), f.clone());
        prop_assert_eq!(f.dimension(), f.weyl_act(&u).unwrap().dimension());
    }

    #[test]
    fn exact_division_inverts_multiplication((_, (f, g)) in typed(|rd| (character(rd.clone(), 8), character(rd, 6)))) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.multiply(&g).unwrap().exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn alternating_sums_are_anti_invariant((rd, lambda) in typed(|rd| prop::collection::vec(-3i64..=3, rd.rank()))) {
        let group = WeylGroup::new(rd.clone());
        let a = Character::alternating_sum(&group, &Weight::new(lambda)).unwrap();
        for i in 1..=rd.rank() {
            prop_assert_eq!(a.reflect(i).unwrap(), a.scale(&BigInt::from(-1)));
        }
    }

    #[test]
    fn demazure_operators_are_linear_idempotent_and_fix_invariants(
        (rd, (f, g)) in typed(|rd| (character(rd.clone(), 12), character(rd, 12)))
    ) {
        for i in 1..=rd.rank() {
            let df = dem::apply(i, &f).unwrap();
            prop_assert_eq!(dem::apply(i, &f.add(&g).unwrap()).unwrap(), df.add(&dem::apply(i, &g).unwrap()).unwrap());
            prop_assert_eq!(dem::apply(i, &df).unwrap(), df.clone());
            prop_assert_eq!(df.reflect(i).unwrap(), df.clone());
            prop_assert_eq!(df.clone(), dem::oracle(i, &f).unwrap());
        }
    }

    #[test]
    fn lengths_are_subadditive_and_inverse_invariant((rd, (u, v)) in typed(|rd| (word(rd.rank(), 12), word(rd.rank(), 12)))) {
        let group = WeylGroup::new(rd);
        let x = group.from_word(&u).unwrap();
        let y = group.from_word(&v).unwrap();
        let xy = group.multiply(&x, &y).unwrap();
        prop_assert!(xy.length() <= x.length() + y.length());
        prop_assert_eq!(group.inverse(&x).unwrap().length(), x.length());
        prop_assert!(x.length() <= u.len());
        prop_assert_eq!(x.length() % 2, u.len() % 2);
        let reduced = group.reduced_word(&x).unwrap();
        prop_assert_eq!(group.from_word(&reduced).unwrap(), x);
        prop_assert!(group.bruhat_leq(&group.identity(), &xy).unwrap());
    }

    #[test]
    fn braid_products_are_associative_and_normal(
        (rd, (a, b, c)) in typed(|rd| (word(rd.rank(), 8), word(rd.rank(), 8), word(rd.rank(), 8)))
    ) {
        let group = WeylGroup::new(rd);
        let (x, y, z) = (
            braid::from_word(&group, &a).unwrap(),
            braid::from_word(&group, &b).unwrap(),
            braid::from_word(&group, &c).unwrap(),
        );
        let left = braid::braid_multiply(&group, &braid::braid_multiply(&group, &x, &y).unwrap(), &z).unwrap();
        let right = braid::braid_multiply(&group, &x, &braid::braid_multiply(&group, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert!(braid::is_normal(&group, &left));
        prop_assert_eq!(left.length(), a.len() + b.len() + c.len());
        let concatenated: Vec<usize> = [a, b, c].concat();
        prop_assert_eq!(braid::from_word(&group, &concatenated).unwrap(), left);
    }

    #[test]
    fn demazure_word_matches_demazure_product((rd, (f, w)) in typed(|rd| (character(rd.clone(), 6), word(rd.rank(), 8)))) {
        let group = WeylGroup::new(rd);
        let product = dem::demazure_product(&group, &w).unwrap();
        let canonical = group.reduced_word(&product).unwrap();
        prop_assert_eq!(dem::apply_word(&w, &f).unwrap(), dem::apply_word(&canonical, &f).unwrap());
    }
}
