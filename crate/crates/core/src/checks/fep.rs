use alloc::format;
use alloc::vec;

use super::{Focus, Testbed, Verdict, Witness};
use crate::algebra::{for_each_tuple, Elem};
use crate::{Budget, ElemSet, Limits, LogicSpec, Result};

/// Maps a filter on the subalgebra back into the parent's carrier.
fn lift(s: &ElemSet, emb: &[Elem], parent: usize) -> ElemSet {
    s.image(emb, parent)
}

/// For every B in the testbed, every subalgebra A and every tuple ā from A
/// (up to `n_max`): `Fg^A(ā) = A ∩ Fg^B(ā)`. Afterwards the same identity
/// is checked for every filter of A as generator set, which covers
/// generator sets beyond the arity cap.
pub fn absolute_fep_check(
    logic: &LogicSpec,
    tb: &Testbed,
    limits: &Limits,
    budget: &Budget,
    focus: &Focus,
) -> Result<Verdict> {
    let mut v = Verdict::new("absolute-fep");
    for b_alg in tb.algebras().filter(|a| focus.wants_algebra(a.name())) {
        let on_b = logic.bind(b_alg, budget)?;
        for sub in b_alg.subuniverses(budget)? {
            let (a, emb) = b_alg.subalgebra(&sub)?;
            let on_a = logic.bind(&a, budget)?;
            let mut bad = None;
            for n in 0..=limits.n_max {
                for_each_tuple(a.size(), n, |t| {
                    if bad.is_some() {
                        return;
                    }
                    v.cells += 1;
                    let in_a = on_a.fg_elems(t);
                    let gens: alloc::vec::Vec<Elem> = t.iter().map(|&x| emb[x]).collect();
                    let trace = on_b.fg_elems(&gens).intersection(&sub);
                    if lift(&in_a, &emb, b_alg.size()) != trace {
                        bad = Some((gens, in_a, trace));
                    }
                });
                if bad.is_some() {
                    break;
                }
            }
            if bad.is_none() {
                for f in on_a.filter_lattice(budget)? {
                    v.cells += 1;
                    let gens = lift(&f, &emb, b_alg.size());
                    let trace = on_b.fg(&gens).intersection(&sub);
                    if gens != trace {
                        bad = Some((gens.to_vec(), f, trace));
                        break;
                    }
                }
            }
            if let Some((gens, in_a, trace)) = bad {
                let mut w = Witness::at(b_alg, "Fg in the subalgebra differs from the trace of Fg in the extension");
                w.tuple = gens;
                w.filters = vec![lift(&in_a, &emb, b_alg.size()), trace];
                w.notes.push(format!("subalgebra {}", b_alg.format_set(&sub)));
                return Ok(v.fail(w));
            }
        }
    }
    Ok(v)
}

/// For every B in the testbed, every filter G of B, every subalgebra A and
/// every filter F' of A containing `F = A ∩ G`: some filter G' ⊇ G of B has
/// `A ∩ G' = F'`. The least candidate `Fg^B(G ∪ F')` decides it.
pub fn fep_check(
    logic: &LogicSpec,
    tb: &Testbed,
    budget: &Budget,
    focus: &Focus,
) -> Result<Verdict> {
    let mut v = Verdict::new("fep");
    for b_alg in tb.algebras().filter(|a| focus.wants_algebra(a.name())) {
        let on_b = logic.bind(b_alg, budget)?;
        let b_filters = on_b.filter_lattice(budget)?;
        for sub in b_alg.subuniverses(budget)? {
            let (a, emb) = b_alg.subalgebra(&sub)?;
            let on_a = logic.bind(&a, budget)?;
            let a_filters = on_a.filter_lattice(budget)?;
            for g in &b_filters {
                let f = g.intersection(&sub);
                for f2 in &a_filters {
                    let f2_up = lift(f2, &emb, b_alg.size());
                    if !f.is_subset(&f2_up) {
                        continue;
                    }
                    v.cells += 1;
                    budget.spend(b_alg.size() as u64, "fep sweep")?;
                    let g2 = on_b.fg(&g.union(&f2_up));
                    let trace = g2.intersection(&sub);
                    if trace != f2_up {
                        let mut w = Witness::at(b_alg, "no extension of G restricts to F'");
                        w.filters = vec![g.clone(), f2_up, g2];
                        w.notes.push(format!("subalgebra {}", b_alg.format_set(&sub)));
                        return Ok(v.fail(w));
                    }
                }
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Signature, Symbol};
    use crate::fixtures::{pwk, wk3};
    use crate::Rule;

    /// `{0, 1}` is a subalgebra; `(s y) ⊢ (d y)` reaches 0 from 1 through
    /// y = 2 in the whole algebra only.
    fn fepfail() -> (Algebra, LogicSpec) {
        let sig = Signature::new(vec![Symbol::new("s", 1), Symbol::new("d", 1)]).unwrap();
        let a = Algebra::new("F3", 3, sig, vec![vec![0, 1, 1], vec![0, 1, 0]], None).unwrap();
        let l = LogicSpec::rules("FEPFAIL", vec![Rule::parse(&["(s y)"], "(d y)").unwrap()]);
        (a, l)
    }

    #[test]
    fn trace_mismatch_is_caught() {
        let (a, l) = fepfail();
        let tb = Testbed::from_algebras(vec![a]);
        let budget = Budget::default();
        let v = absolute_fep_check(&l, &tb, &Limits::default(), &budget, &Focus::none()).unwrap();
        assert!(v.failed());
        assert_eq!(v.witness.unwrap().tuple, vec![1]);
        assert!(fep_check(&l, &tb, &budget, &Focus::none()).unwrap().failed());
    }

    #[test]
    fn wk3_alone_has_the_property() {
        let tb = Testbed::from_algebras(vec![wk3()]);
        let v = absolute_fep_check(&pwk(), &tb, &Limits::default(), &Budget::default(), &Focus::none()).unwrap();
        assert!(v.passed());
    }
}
