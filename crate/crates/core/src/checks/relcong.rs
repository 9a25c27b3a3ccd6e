use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Focus, Verdict, Witness};
use crate::algebra::Algebra;
use crate::class::{k_congruences, ClassSpec};
use crate::congruence::Partition;
use crate::filters::RelativeFg;
use crate::{Budget, ElemSet, Limits, LogicSpec, Result};

/// Members of `s` with no other member strictly below them.
fn minimal(s: &[&Partition]) -> Vec<Partition> {
    s.iter()
        .filter(|t| !s.iter().any(|u| u != *t && u.leq(t)))
        .map(|t| (*t).clone())
        .collect()
}

/// For each ā (up to `limits.n_max`) and b, the K-congruences θ with
/// `b ∈ Fg^{A,θ}(ā)` must be empty or have a least member.
pub fn smallest_relcong_check(
    logic: &LogicSpec,
    a: &Algebra,
    k: &ClassSpec,
    limits: &Limits,
    budget: &Budget,
    focus: &Focus,
) -> Result<Verdict> {
    let mut v = Verdict::new("minrelcong");
    let ks = k_congruences(a, k, limits, budget)?;
    v.note(format!("{} K-congruences on `{}`", ks.len(), a.name()));
    let rel: Vec<RelativeFg> = ks
        .iter()
        .map(|t| RelativeFg::new(a, t, logic, budget))
        .collect::<Result<_>>()?;
    let mut cache: BTreeMap<ElemSet, Vec<ElemSet>> = BTreeMap::new();
    for n in focus.arities(limits.n_max) {
        for tuple in focus.tuples(a.size(), n) {
            let gens = ElemSet::from_elems(a.size(), tuple.iter().copied());
            let per_theta = cache
                .entry(gens.clone())
                .or_insert_with(|| rel.iter().map(|r| r.fg(&gens)).collect())
                .clone();
            for b in (0..a.size()).filter(|&b| focus.wants_element(b)) {
                budget.spend(rel.len() as u64, "relative congruence sweep")?;
                v.cells += 1;
                let s: Vec<&Partition> = ks
                    .iter()
                    .zip(&per_theta)
                    .filter(|(_, f)| f.contains(b))
                    .map(|(t, _)| t)
                    .collect();
                let Some(first) = s.first() else { continue };
                let meet = s.iter().skip(1).fold((*first).clone(), |m, t| m.meet(t));
                if s.contains(&&meet) {
                    continue;
                }
                let mut w = Witness::at(a, "no smallest K-congruence θ with b ∈ Fg^{A,θ}(ā)");
                w.tuple = tuple.clone();
                w.element = Some(b);
                w.congruences = minimal(&s);
                w.notes.push(format!(
                    "minimal members: {}",
                    w.congruences
                        .iter()
                        .map(|t| format!("[{}]", t.format_with(a)))
                        .collect::<Vec<String>>()
                        .join("; ")
                ));
                w.notes.push(format!(
                    "their intersection [{}] is not in the set",
                    meet.format_with(a)
                ));
                return Ok(v.fail(w));
            }
        }
    }
    Ok(v)
}
