//! Small algebras and logics shared by the unit tests.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{for_each_tuple, Algebra, Signature, Symbol};
use crate::{LogicSpec, Rule};

pub fn table(n: usize, k: usize, f: impl Fn(&[usize]) -> usize) -> Vec<usize> {
    let mut out = Vec::new();
    for_each_tuple(n, k, |t| out.push(f(t)));
    out
}

fn labels(ls: &[&str]) -> Option<Vec<String>> {
    Some(ls.iter().map(|s| String::from(*s)).collect())
}

/// A bounded lattice on `0..n` given by its join, with 0 bottom and n-1 top.
pub fn lattice(name: &str, n: usize, join: impl Fn(usize, usize) -> usize, meet: impl Fn(usize, usize) -> usize) -> Algebra {
    let sig = Signature::new(alloc::vec![
        Symbol::new("and", 2),
        Symbol::new("or", 2),
        Symbol::new("one", 0),
    ])
    .unwrap();
    Algebra::new(
        name,
        n,
        sig,
        alloc::vec![table(n, 2, |t| meet(t[0], t[1])), table(n, 2, |t| join(t[0], t[1])), alloc::vec![n - 1]],
        None,
    )
    .unwrap()
}

/// M3 with atoms 1, 2, 3.
pub fn m3() -> Algebra {
    let join = |a: usize, b: usize| match (a, b) {
        _ if a == b => a,
        (0, x) | (x, 0) => x,
        _ => 4,
    };
    let meet = |a: usize, b: usize| match (a, b) {
        _ if a == b => a,
        (4, x) | (x, 4) => x,
        _ => 0,
    };
    lattice("M3", 5, join, meet)
}

/// The four-element Boolean lattice as bitmasks.
pub fn b4() -> Algebra {
    lattice("B4", 4, |a, b| a | b, |a, b| a & b)
}

pub fn order_logic() -> LogicSpec {
    LogicSpec::rules(
        "ORDER",
        alloc::vec![
            Rule::parse(&[], "one").unwrap(),
            Rule::parse(&["x", "y"], "(and x y)").unwrap(),
            Rule::parse(&["x"], "(or x y)").unwrap(),
        ],
    )
}

/// WK3 over labels 0, 1, ½ with `or` the join of 0 < 1 < ½.
pub fn wk3() -> Algebra {
    let sig = Signature::new(alloc::vec![Symbol::new("neg", 1), Symbol::new("or", 2)]).unwrap();
    Algebra::new(
        "WK3",
        3,
        sig,
        alloc::vec![alloc::vec![1, 0, 2], table(3, 2, |t| t[0].max(t[1]))],
        labels(&["0", "1", "½"]),
    )
    .unwrap()
}

pub fn pwk() -> LogicSpec {
    LogicSpec::rules(
        "PWK",
        alloc::vec![
            Rule::parse(&[], "(or x (neg x))").unwrap(),
            Rule::parse(&["x"], "(or x y)").unwrap(),
            Rule::parse(&["x", "y"], "(neg (or (neg x) (neg y)))").unwrap(),
        ],
    )
}

/// Elements 0, 1, a1, a2, b with `□_n(x̄, y) = 1` iff y is among x̄.
pub fn box5() -> Algebra {
    let sig = Signature::new(alloc::vec![
        Symbol::new("one", 0),
        Symbol::new("box1", 2),
        Symbol::new("box2", 3),
    ])
    .unwrap();
    Algebra::new(
        "box5",
        5,
        sig,
        alloc::vec![
            alloc::vec![1],
            table(5, 2, |t| usize::from(t[1] == t[0])),
            table(5, 3, |t| usize::from(t[2] == t[0] || t[2] == t[1])),
        ],
        labels(&["0", "1", "a1", "a2", "b"]),
    )
    .unwrap()
}

pub fn one_logic() -> LogicSpec {
    LogicSpec::rules("ONE", alloc::vec![Rule::parse(&[], "one").unwrap()])
}
