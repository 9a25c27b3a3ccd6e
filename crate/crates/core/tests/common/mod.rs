//! Random small algebras and rule logics for the integration suites.

#![allow(dead_code)]

use edcf_core::algebra::for_each_tuple;
use edcf_core::{Algebra, Budget, ElemSet, LogicSpec, Rule, Signature, Symbol};
use proptest::prelude::*;

/// A binary `f`, a unary `g` and a constant `c`.
pub fn signature() -> Signature {
    Signature::new(vec![Symbol::new("f", 2), Symbol::new("g", 1), Symbol::new("c", 0)]).unwrap()
}

pub fn algebra_from(name: &str, n: usize, f: Vec<usize>, g: Vec<usize>, c: usize) -> Algebra {
    Algebra::new(name, n, signature(), vec![f, g, vec![c]], None).unwrap()
}

/// Algebras with 1 to `max` elements and arbitrary tables.
pub fn arb_algebra(max: usize) -> impl Strategy<Value = Algebra> {
    (1..=max).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..n, n * n),
            proptest::collection::vec(0..n, n),
            0..n,
        )
            .prop_map(move |(f, g, c)| algebra_from("R", n, f, g, c))
    })
}

pub const RULE_POOL: &[(&[&str], &str)] = &[
    (&[], "c"),
    (&[], "(f x (g x))"),
    (&["x"], "(g x)"),
    (&["x"], "(f x y)"),
    (&["x", "y"], "(f x y)"),
    (&["(f x y)"], "x"),
    (&["(g x)", "x"], "(f y x)"),
    (&["x", "(f x y)"], "y"),
];

pub fn logic_from(mask: u8) -> LogicSpec {
    let rules = RULE_POOL
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, (p, c))| Rule::parse(p, c).unwrap())
        .collect();
    LogicSpec::rules(&format!("R{mask:02x}"), rules)
}

pub fn arb_logic() -> impl Strategy<Value = LogicSpec> {
    any::<u8>().prop_map(logic_from)
}

pub fn arb_subset(n: usize) -> impl Strategy<Value = ElemSet> {
    (0u64..(1u64 << n)).prop_map(move |m| ElemSet::from_mask(n, m))
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    (0u64..(1u64 << n)).map(move |m| ElemSet::from_mask(n, m))
}

/// Every map `a → b`, checked one by one.
pub fn brute_force_homs(a: &Algebra, b: &Algebra) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_tuple(b.size(), a.size(), |h| {
        if a.is_homomorphism(h, b).unwrap() {
            out.push(h.to_vec());
        }
    });
    out
}

pub fn budget() -> Budget {
    Budget::new(50_000_000)
}
