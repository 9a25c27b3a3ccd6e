use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Testbed, Verdict, Witness};
use crate::algebra::{Algebra, Elem};
use crate::filters::BoundLogic;
use crate::hom::find_homomorphism;
use crate::{Budget, ElemSet, LogicSpec, Result};

/// A candidate n-test algebra: an algebra with test elements p̄ and q.
#[derive(Debug, Clone)]
pub struct TestCandidate {
    pub algebra: Algebra,
    pub p: Vec<Elem>,
    pub q: Elem,
}

/// Every `(A, ā, b)` with `b ∈ Fg^A(ā)`, grouped per testbed member.
struct Targets {
    cases: Vec<(usize, Vec<Elem>, Elem)>,
}

fn targets(tb: &Testbed, bound: &[BoundLogic], n: usize) -> Targets {
    let mut cases = Vec::new();
    for (i, (a, l)) in tb.algebras().zip(bound).enumerate() {
        let mut cache: BTreeMap<ElemSet, ElemSet> = BTreeMap::new();
        crate::algebra::for_each_tuple(a.size(), n, |t| {
            let gens = ElemSet::from_elems(a.size(), t.iter().copied());
            let f = cache.entry(gens.clone()).or_insert_with(|| l.fg(&gens)).clone();
            for b in f.iter() {
                cases.push((i, t.to_vec(), b));
            }
        });
    }
    Targets { cases }
}

/// The first target with no homomorphism `h` sending p̄ to ā and q to b.
fn first_unmatched(
    cand: &TestCandidate,
    tb: &Testbed,
    t: &Targets,
    budget: &Budget,
    cells: &mut u64,
) -> Result<Option<Witness>> {
    let members: Vec<&Algebra> = tb.algebras().collect();
    for (i, tuple, b) in &t.cases {
        *cells += 1;
        let mut fixed: Vec<(Elem, Elem)> = cand.p.iter().copied().zip(tuple.iter().copied()).collect();
        fixed.push((cand.q, *b));
        if find_homomorphism(&cand.algebra, members[*i], &fixed, budget)?.is_none() {
            let mut w = Witness::at(members[*i], "b ∈ Fg(ā) but no homomorphism sends (p̄, q) to (ā, b)");
            w.tuple = tuple.clone();
            w.element = Some(*b);
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Checks one candidate test algebra against the testbed.
pub fn test_algebra_check(
    logic: &LogicSpec,
    tb: &Testbed,
    cand: &TestCandidate,
    budget: &Budget,
) -> Result<Verdict> {
    let mut v = Verdict::new("test-algebra");
    let own = logic.bind(&cand.algebra, budget)?;
    if !own.fg_elems(&cand.p).contains(cand.q) {
        let mut w = Witness::at(&cand.algebra, "q ∉ Fg(p̄) in the candidate itself");
        w.tuple = cand.p.clone();
        w.element = Some(cand.q);
        return Ok(v.fail(w));
    }
    let bound: Vec<BoundLogic> = tb.algebras().map(|a| logic.bind(a, budget)).collect::<Result<_>>()?;
    let t = targets(tb, &bound, cand.p.len());
    if let Some(w) = first_unmatched(cand, tb, &t, budget, &mut v.cells)? {
        return Ok(v.fail(w));
    }
    Ok(v)
}

/// Tries every testbed member with every choice of p̄ and q ∈ Fg(p̄) as an
/// n-test algebra. Passes with the first candidate that works; fails when
/// none does, reporting the first candidate's counterexample.
pub fn test_algebra_sweep(
    logic: &LogicSpec,
    tb: &Testbed,
    n: usize,
    budget: &Budget,
) -> Result<Verdict> {
    let mut v = Verdict::new("test-algebra-sweep");
    let bound: Vec<BoundLogic> = tb.algebras().map(|a| logic.bind(a, budget)).collect::<Result<_>>()?;
    let t = targets(tb, &bound, n);
    let mut first_fail: Option<Witness> = None;
    let mut tried = 0u64;
    for (a, l) in tb.algebras().zip(&bound) {
        let mut found = None;
        let mut err = None;
        crate::algebra::for_each_tuple(a.size(), n, |p| {
            if found.is_some() || err.is_some() {
                return;
            }
            for q in l.fg_elems(p).iter() {
                tried += 1;
                let cand = TestCandidate {
                    algebra: a.clone(),
                    p: p.to_vec(),
                    q,
                };
                match first_unmatched(&cand, tb, &t, budget, &mut v.cells) {
                    Ok(None) => {
                        found = Some(cand);
                        return;
                    }
                    Ok(Some(mut w)) => {
                        if first_fail.is_none() {
                            w.notes.push(format!(
                                "candidate `{}` with p̄ = {:?}, q = {}",
                                a.name(),
                                p,
                                a.label(q)
                            ));
                            first_fail = Some(w);
                        }
                    }
                    Err(e) => {
                        err = Some(e);
                        return;
                    }
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if let Some(c) = found {
            let labels: Vec<String> = c.p.iter().map(|&e| c.algebra.label(e)).collect();
            v.note(format!(
                "`{}` with p̄ = ({}) and q = {} is a {n}-test algebra for the testbed",
                c.algebra.name(),
                labels.join(","),
                c.algebra.label(c.q)
            ));
            return Ok(v);
        }
    }
    v.note(format!("{tried} candidates tried, none is a {n}-test algebra"));
    Ok(v.fail(first_fail.unwrap_or_default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b4, order_logic};

    #[test]
    fn three_element_chain_tests_the_order_logic() {
        let c3 = crate::fixtures::lattice("C3", 3, |a, b| a.max(b), |a, b| a.min(b));
        let tb = Testbed::from_algebras(alloc::vec![b4()]);
        let budget = Budget::default();
        // Monotone maps c0 ↦ a, c1 ↦ b, c2 ↦ 1 exist exactly when a ≤ b.
        let good = TestCandidate { algebra: c3.clone(), p: alloc::vec![0], q: 1 };
        assert!(test_algebra_check(&order_logic(), &tb, &good, &budget).unwrap().passed());
        // q = 2 forces b = 1, which misses b = a < 1.
        let top = TestCandidate { algebra: c3.clone(), p: alloc::vec![0], q: 2 };
        let v = test_algebra_check(&order_logic(), &tb, &top, &budget).unwrap();
        assert!(v.failed());
        let w = v.witness.unwrap();
        assert_eq!((w.tuple, w.element), (alloc::vec![0], Some(0)));
        // q = 0 is not in Fg(c1), so the candidate is rejected up front.
        let bad = TestCandidate { algebra: c3, p: alloc::vec![1], q: 0 };
        assert!(test_algebra_check(&order_logic(), &tb, &bad, &budget).unwrap().failed());
    }
}
