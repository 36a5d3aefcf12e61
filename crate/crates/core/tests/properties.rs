use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crystal_minors::bruhat::{MinorSpec, WordSpec};
use crystal_minors::cluster::{is_sign_skew_symmetric, mutate, seed_matrix};
use crystal_minors::crystal::{apply_e, apply_f, demazure, node_stats, CrystalConfig, DemazureSpec, DEFAULT_CAP};
use crystal_minors::laurent::Assignment;
use crystal_minors::verify::{minor_demazure_spec, random_sign_skew};
use crystal_minors::{LaurentPoly, Monomial, Rational, VarId};

fn var() -> impl Strategy<Value = VarId> {
    (-1i32..=3, 1u32..=4).prop_map(|(s, i)| VarId::new(s, i))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var(), -2i32..=2), 0..4).prop_map(Monomial::from_factors)
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, monomial()), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, m)| LaurentPoly::from_term(c.into(), m))
            .sum()
    })
}

fn point() -> impl Strategy<Value = Assignment> {
    let value = (1i64..=7, 1i64..=7, any::<bool>()).prop_map(|(p, q, neg)| Rational::new(if neg { -p } else { p }, q));
    prop::collection::vec(value, 20).prop_map(|values| {
        (-1i32..=3)
            .flat_map(|s| (1u32..=4).map(move |i| VarId::new(s, i)))
            .zip(values)
            .collect()
    })
}

// Monomials in the variables of rank 4.
fn rank4_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(((-1i32..=3, 1u32..=4), -2i32..=2), 0..6)
        .prop_map(|f| Monomial::from_factors(f.into_iter().map(|((s, i), e)| (VarId::new(s, i), e))))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), t in point()) {
        let (x, y) = (a.eval(&t).unwrap(), b.eval(&t).unwrap());
        prop_assert_eq!((&a * &b).eval(&t).unwrap(), &x * &y);
        prop_assert_eq!((&a + &b).eval(&t).unwrap(), &x + &y);
        prop_assert_eq!((&a - &b).eval(&t).unwrap(), &x - &y);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn monomial_inverse(m in monomial()) {
        prop_assert!((&m * &m.inv()).is_one());
        let p = LaurentPoly::from_monomial(m.clone());
        prop_assert!((&p * &p.try_inv().unwrap()).is_one());
    }

    #[test]
    fn kashiwara_operators(m in rank4_monomial(), i in 1u32..=4) {
        let cfg = CrystalConfig::new(4).unwrap();
        let node = node_stats(&cfg, &m);
        prop_assert!(node.phi(i) >= 0 && node.eps(i) >= 0);
        prop_assert_eq!(node.phi(i) - node.eps(i), node.wt.pairing(i));
        if let Some(up) = apply_e(&cfg, &m, i).unwrap() {
            prop_assert_eq!(apply_f(&cfg, &up, i).unwrap(), Some(m.clone()));
            prop_assert_eq!(node_stats(&cfg, &up).eps(i), node.eps(i) - 1);
        } else {
            prop_assert_eq!(node.eps(i), 0);
        }
        if let Some(down) = apply_f(&cfg, &m, i).unwrap() {
            prop_assert_eq!(apply_e(&cfg, &down, i).unwrap(), Some(m.clone()));
            prop_assert_eq!(node_stats(&cfg, &down).phi(i), node.phi(i) - 1);
        } else {
            prop_assert_eq!(node.phi(i), 0);
        }
    }

    #[test]
    fn operators_only_read_their_color(m in rank4_monomial(), i in 1u32..=4) {
        let cfg = CrystalConfig::new(4).unwrap();
        let own = m.restrict(|v| v.i == i);
        let step = |x: &Monomial, up: bool| {
            let y = if up { apply_e(&cfg, x, i) } else { apply_f(&cfg, x, i) };
            y.unwrap().map(|y| &y / x)
        };
        prop_assert_eq!(step(&m, true), step(&own, true));
        prop_assert_eq!(step(&m, false), step(&own, false));
    }

    #[test]
    fn mutation_is_an_involution(seed in any::<u64>(), size in 1usize..=12, k in 0usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_sign_skew(size, &mut rng);
        let k = k % size;
        let b = mutate(&a, k).unwrap();
        prop_assert!(is_sign_skew_symmetric(&b));
        prop_assert_eq!(mutate(&b, k).unwrap(), a);
    }

    #[test]
    fn seed_mutation_sequences(r in 1u32..=4, pick in any::<prop::sample::Index>(), steps in prop::collection::vec(any::<prop::sample::Index>(), 0..20)) {
        let words: Vec<WordSpec> = WordSpec::all(r).collect();
        let mut b = seed_matrix(pick.get(&words));
        for s in steps {
            let k = *s.get(b.cols());
            b = b.mutate(k).unwrap();
            prop_assert!(is_sign_skew_symmetric(&b.principal()));
        }
    }
}

fn demazure_set(cfg: &CrystalConfig, spec: &DemazureSpec, len: usize) -> BTreeSet<Monomial> {
    let shorter = DemazureSpec::new(cfg, spec.word()[spec.word().len() - len..].to_vec(), spec.sign(), spec.seed().clone())
        .unwrap();
    demazure(cfg, &shorter, DEFAULT_CAP).unwrap().into_iter().collect()
}

// Letters are applied right to left, so growing the word on the left
// grows the crystal.
#[test]
fn demazure_crystals_grow_with_the_word() {
    for r in 2..=4 {
        let cfg = CrystalConfig::new(r).unwrap();
        for w in WordSpec::all(r) {
            for spec in MinorSpec::with_last_color(w) {
                let ds = minor_demazure_spec(&spec).unwrap();
                let sets: Vec<_> = (0..=ds.word().len()).map(|len| demazure_set(&cfg, &ds, len)).collect();
                for pair in sets.windows(2) {
                    assert!(pair[0].is_subset(&pair[1]), "{spec}");
                }
                assert_eq!(sets[0], BTreeSet::from([ds.seed().clone()]));
            }
        }
    }
}
