//! Structural laws on random small algebras and rule logics.

mod common;

use std::collections::BTreeMap;

use common::*;
use edcf_core::algebra::direct_product;
use edcf_core::candidate::{raw_eq, raw_leq, CandidateSource, RawEquation, Template};
use edcf_core::checks::{check_edcf, Focus, Testbed};
use edcf_core::congruence::{all_congruences, leibniz_congruence};
use edcf_core::filters::fg_relative;
use edcf_core::hom::enumerate_homomorphisms;
use edcf_core::{Candidate, ElemSet, Limits, Partition, Variant};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn mask(n: usize, m: u64) -> ElemSet {
    ElemSet::from_mask(n, m & ((1u64 << n) - 1))
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fg_is_a_closure_operator(a in arb_algebra(5), l in arb_logic(), x in any::<u64>(), y in any::<u64>()) {
        let on = l.bind(&a, &budget()).unwrap();
        let (x, y) = (mask(a.size(), x), mask(a.size(), y));
        let fx = on.fg(&x);
        prop_assert!(x.is_subset(&fx));
        prop_assert_eq!(on.fg(&fx), fx.clone());
        prop_assert!(on.is_filter(&fx));
        prop_assert!(fx.is_subset(&on.fg(&x.union(&y))));
    }

    #[test]
    fn filters_are_closed_under_intersection(a in arb_algebra(4), l in arb_logic()) {
        let on = l.bind(&a, &budget()).unwrap();
        let fs = on.all_filters(&Limits::default(), &budget()).unwrap();
        for f in &fs {
            for g in &fs {
                prop_assert!(on.is_filter(&f.intersection(g)));
            }
        }
        prop_assert!(fs.contains(&a.carrier()));
    }

    #[test]
    fn homomorphic_preimages_of_filters_are_filters(a in arb_algebra(3), b in arb_algebra(3), l in arb_logic()) {
        let on_a = l.bind(&a, &budget()).unwrap();
        let on_b = l.bind(&b, &budget()).unwrap();
        let fs = on_b.all_filters(&Limits::default(), &budget()).unwrap();
        for h in enumerate_homomorphisms(&a, &b, &budget()).unwrap() {
            for f in &fs {
                prop_assert!(on_a.is_filter(&f.preimage(&h)));
            }
        }
    }

    #[test]
    fn fg_on_a_product_lies_in_the_product_of_fgs(
        a in arb_algebra(3),
        b in arb_algebra(3),
        l in arb_logic(),
        x in any::<u64>(),
    ) {
        let p = direct_product(&[&a, &b], a.signature(), &budget()).unwrap();
        let x = mask(p.algebra.size(), x);
        let on_p = l.bind(&p.algebra, &budget()).unwrap();
        let on_a = l.bind(&a, &budget()).unwrap();
        let on_b = l.bind(&b, &budget()).unwrap();
        let (pa, pb) = (p.projection(0), p.projection(1));
        let fa = on_a.fg(&x.image(&pa, a.size()));
        let fb = on_b.fg(&x.image(&pb, b.size()));
        for e in on_p.fg(&x).iter() {
            prop_assert!(fa.contains(pa[e]) && fb.contains(pb[e]));
        }
        // Projections are homomorphisms, so product filters pull back.
        prop_assert!(on_p.is_filter(&fa.preimage(&pa)));
    }

    #[test]
    fn relative_fg_commutes_with_the_quotient(a in arb_algebra(4), l in arb_logic(), x in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let congs: Vec<Partition> = all_congruences(&a, &Limits::default(), &budget()).unwrap().iter().cloned().collect();
        let theta = pick.get(&congs);
        let x = mask(a.size(), x);
        let rel = fg_relative(&a, theta, &x, &l, &budget()).unwrap();
        let (q, proj) = a.quotient(theta).unwrap();
        let on_q = l.bind(&q, &budget()).unwrap();
        prop_assert_eq!(rel.image(&proj, q.size()), on_q.fg(&x.image(&proj, q.size())));
        let on_a = l.bind(&a, &budget()).unwrap();
        prop_assert!(on_a.fg(&x).is_subset(&rel));
        prop_assert!(on_a.is_filter(&rel));
        // Larger congruences give larger relative closures.
        for t in &congs {
            if theta.leq(t) {
                prop_assert!(rel.is_subset(&fg_relative(&a, t, &x, &l, &budget()).unwrap()));
            }
        }
    }

    #[test]
    fn isomorphic_copies_agree(
        (a, perm) in arb_algebra(5).prop_flat_map(|a| { let n = a.size(); (Just(a), arb_perm(n)) }),
        l in arb_logic(),
        x in any::<u64>(),
    ) {
        let n = a.size();
        let b = a.permuted(&perm).unwrap();
        prop_assert!(a.is_homomorphism(&perm, &b).unwrap());
        let x = mask(n, x);
        let fa = l.bind(&a, &budget()).unwrap().fg(&x);
        let fb = l.bind(&b, &budget()).unwrap().fg(&x.image(&perm, n));
        prop_assert_eq!(fa.image(&perm, n), fb.clone());
        let oa = leibniz_congruence(&a, &fa, &budget()).unwrap();
        let ob = leibniz_congruence(&b, &fb, &budget()).unwrap();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(oa.related(u, v), ob.related(perm[u], perm[v]));
            }
        }
        let ca = all_congruences(&a, &Limits::default(), &budget()).unwrap().len();
        let cb = all_congruences(&b, &Limits::default(), &budget()).unwrap().len();
        prop_assert_eq!(ca, cb);
    }

    #[test]
    fn partition_meet_and_join_are_bounds(a in arb_algebra(5), p in any::<prop::sample::Index>(), q in any::<prop::sample::Index>()) {
        let congs: Vec<Partition> = all_congruences(&a, &Limits::default(), &budget()).unwrap().iter().cloned().collect();
        let (s, t) = (p.get(&congs), q.get(&congs));
        let (m, j) = (s.meet(t), s.join(t));
        prop_assert!(m.leq(s) && m.leq(t) && s.leq(&j) && t.leq(&j));
        prop_assert!(congs.contains(&m) && congs.contains(&j));
    }

    #[test]
    fn variants_are_monotone(
        algs in proptest::collection::vec(arb_algebra(3), 1..3),
        l in arb_logic(),
        body in subsequence(BODIES.to_vec(), 1..=2),
    ) {
        let tb = Testbed::from_algebras(algs.iter().enumerate().map(|(i, a)| a.clone().with_name(&format!("R{i}"))).collect());
        let limits = Limits { n_max: 2, ..Limits::default() };
        let one_set = candidate(Variant::Global, vec![body.clone()]);
        let outcome = |c: &Candidate, v: Variant| {
            check_edcf(&l, &tb, c, v, &limits, &budget(), &Focus::none()).unwrap().outcome
        };
        let global = outcome(&one_set, Variant::Global);
        // One equation set per arity reads the same under every variant.
        for v in [Variant::Local, Variant::Parametrized, Variant::ParametrizedLocal] {
            prop_assert_eq!(outcome(&one_set, v), global);
        }
        // Unused parameters change nothing.
        let mut with_param = one_set.clone();
        with_param.params = 1;
        prop_assert_eq!(outcome(&with_param, Variant::Parametrized), global);
        prop_assert_eq!(outcome(&one_set.as_local(), Variant::Local), global);
    }
}

const BODIES: &[(&str, &str, bool)] = &[
    ("(f %X y)", "y", false),
    ("(g y)", "y", false),
    ("%X", "y", true),
    ("y", "c", false),
    ("(f y %X)", "%X", false),
];

fn candidate(variant: Variant, sets: Vec<Vec<(&str, &str, bool)>>) -> Candidate {
    let raw: Vec<Vec<RawEquation>> = sets
        .into_iter()
        .map(|set| {
            set.into_iter()
                .map(|(l, r, leq)| if leq { raw_leq(l, r) } else { raw_eq(l, r) })
                .collect()
        })
        .collect();
    let mut families = BTreeMap::new();
    families.insert("*".to_string(), raw);
    CandidateSource {
        name: "random".into(),
        variant,
        n_max: 2,
        params: 0,
        families,
        template: Template {
            fold: Some("f".into()),
            leq: edcf_core::candidate::Leq::Join("f".into()),
            ..Template::default()
        },
    }
    .materialize()
    .unwrap()
}
