use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Focus, Outcome, Testbed, Verdict, Witness};
use crate::algebra::{for_each_tuple, Algebra, Elem};
use crate::candidate::{Candidate, CompiledCandidate, Variant};
use crate::class::{theta_k, ClassSpec};
use crate::congruence::Partition;
use crate::filters::BoundLogic;
use crate::{Budget, ElemSet, Error, Limits, LogicSpec, Result};

pub(crate) const IN_FILTER_UNDEFINED: &str = "b ∈ Fg(ā) but no equation set holds";
pub(crate) const DEFINED_NOT_IN_FILTER: &str = "an equation set holds but b ∉ Fg(ā)";

fn prepare(cand: &Candidate, variant: Variant, limits: &Limits) -> Result<Candidate> {
    let mut c = cand.clone();
    c.variant = variant;
    c.validate()?;
    if c.params > limits.max_params {
        return Err(Error::SizeBudgetExceeded(format!(
            "{} parameters requested, cap is {}",
            c.params, limits.max_params
        )));
    }
    Ok(c)
}

/// Compares membership in Fg(ā) with the candidate on one algebra.
/// `rel = None` tests equations as equalities; otherwise each equation's
/// two sides must be related by `rel`.
#[allow(clippy::too_many_arguments)]
fn sweep(
    a: &Algebra,
    logic: &BoundLogic,
    cc: &CompiledCandidate,
    cand: &Candidate,
    rel: Option<&Partition>,
    focus: &Focus,
    budget: &Budget,
    cells: &mut u64,
) -> Result<Option<Witness>> {
    let mut cache: BTreeMap<ElemSet, ElemSet> = BTreeMap::new();
    let param_space = (a.size() as u64).saturating_pow(cand.params as u32);
    for n in focus.arities(cand.n_max) {
        if !cand.families.contains_key(&n) {
            continue;
        }
        for tuple in focus.tuples(a.size(), n) {
            let gens = ElemSet::from_elems(a.size(), tuple.iter().copied());
            let f = match cache.get(&gens) {
                Some(f) => f.clone(),
                None => {
                    budget.spend(a.size() as u64, "filter generation")?;
                    let f = logic.fg(&gens);
                    cache.insert(gens, f.clone());
                    f
                }
            };
            for b in (0..a.size()).filter(|&b| focus.wants_element(b)) {
                budget.spend(1 + param_space * cc.set_count(n) as u64, "definability sweep")?;
                *cells += 1;
                let inside = f.contains(b);
                let sat = cc.satisfied(a, &tuple, b, rel);
                if inside != sat.is_some() {
                    let side = if inside { IN_FILTER_UNDEFINED } else { DEFINED_NOT_IN_FILTER };
                    let mut w = Witness::at(a, side);
                    w.tuple = tuple.clone();
                    w.element = Some(b);
                    w.filters = alloc::vec![f];
                    if let Some(s) = sat {
                        w.set_index = Some(s.set_index);
                        w.params = s.params;
                    }
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

fn finish(mut v: Verdict, inexact: bool, cand: &Candidate) -> Verdict {
    if !cand.families.contains_key(&0) {
        v.note(String::from(
            "no Θ_0 supplied: arity 0 skipped, so a pass only covers non-empty generator sets",
        ));
    }
    if inexact {
        if let Some(w) = &v.witness {
            if w.side == DEFINED_NOT_IN_FILTER {
                v.outcome = Outcome::Inconclusive;
                v.note(String::from(
                    "filters were computed under a variable bound, so b ∉ Fg(ā) is not definitive",
                ));
                return v;
            }
        }
        v.inconclusive_unless_fail(String::from(
            "matrix filters computed under a variable bound below the generator count",
        ));
    }
    v
}

/// For every algebra, arity, tuple ā and element b: `b ∈ Fg(ā)` iff some
/// equation set of Ψ_n holds at `(ā, b, c̄)` for some parameters `c̄`.
pub fn check_edcf(
    logic: &LogicSpec,
    tb: &Testbed,
    cand: &Candidate,
    variant: Variant,
    limits: &Limits,
    budget: &Budget,
    focus: &Focus,
) -> Result<Verdict> {
    let cand = prepare(cand, variant, limits)?;
    let mut v = Verdict::new("edcf");
    v.note(format!(
        "{} candidate `{}` for {} on {} algebras, arities ≤ {}",
        variant.as_str(),
        cand.name,
        logic.name,
        tb.len(),
        cand.n_max
    ));
    let mut inexact = false;
    for a in tb.algebras().filter(|a| focus.wants_algebra(a.name())) {
        let bound = logic.bind(a, budget)?;
        inexact |= !bound.is_exact();
        let cc = cand.compile(a)?;
        if let Some(w) = sweep(a, &bound, &cc, &cand, None, focus, budget, &mut v.cells)? {
            v = v.fail(w);
            break;
        }
    }
    Ok(finish(v, inexact, &cand))
}

/// As [`check_edcf`], but an equation set holds when its pairs lie in the
/// least K-congruence θ_K of the algebra; the algebras need not be in K.
#[allow(clippy::too_many_arguments)]
pub fn check_edcf_theta_form(
    logic: &LogicSpec,
    algebras: &[Algebra],
    k: &ClassSpec,
    cand: &Candidate,
    variant: Variant,
    limits: &Limits,
    budget: &Budget,
    focus: &Focus,
) -> Result<Verdict> {
    let cand = prepare(cand, variant, limits)?;
    let mut v = Verdict::new("edcf-theta");
    let mut inexact = false;
    for a in algebras.iter().filter(|a| focus.wants_algebra(a.name())) {
        let theta = theta_k(a, k, limits, budget)?;
        v.note(format!("θ_K on `{}` is {}", a.name(), theta.format_with(a)));
        let bound = logic.bind(a, budget)?;
        inexact |= !bound.is_exact();
        let cc = cand.compile(a)?;
        if let Some(mut w) = sweep(a, &bound, &cc, &cand, Some(&theta), focus, budget, &mut v.cells)? {
            w.congruences.push(theta);
            v = v.fail(w);
            break;
        }
    }
    Ok(finish(v, inexact, &cand))
}

/// The `(ā, b)` pairs at which set `i` of Ψ_n holds on `a`.
fn extension(a: &Algebra, cc: &CompiledCandidate, n: usize, i: usize) -> Vec<(Vec<Elem>, Elem)> {
    let mut out = Vec::new();
    for_each_tuple(a.size(), n, |t| {
        for b in 0..a.size() {
            if cc.set_satisfied(a, i, t, b) {
                out.push((t.to_vec(), b));
            }
        }
    });
    out
}

/// Every set of one candidate must imply some set of the other on every
/// algebra of the testbed, in both directions.
pub fn compare_candidates(
    c1: &Candidate,
    c2: &Candidate,
    tb: &Testbed,
    budget: &Budget,
) -> Result<Verdict> {
    let mut v = Verdict::new("compare");
    let compiled: Vec<(CompiledCandidate, CompiledCandidate)> = tb
        .algebras()
        .map(|a| Ok((c1.compile(a)?, c2.compile(a)?)))
        .collect::<Result<_>>()?;
    let arities: Vec<usize> = c1
        .families
        .keys()
        .chain(c2.families.keys())
        .copied()
        .filter(|n| c1.families.contains_key(n) != c2.families.contains_key(n))
        .collect();
    if let Some(&n) = arities.first() {
        let w = Witness {
            side: format!("only one candidate defines Ψ_{n}"),
            ..Witness::default()
        };
        return Ok(v.fail(w));
    }
    for (dir, (lhs, rhs)) in [(0, (c1, c2)), (1, (c2, c1))] {
        for (&n, sets) in &lhs.families {
            let others = rhs.families[&n].len();
            for i in 0..sets.len() {
                let mut matched = false;
                let mut first_gap: Option<Witness> = None;
                for j in 0..others {
                    let mut gap = None;
                    'algs: for (a, (k1, k2)) in tb.algebras().zip(&compiled) {
                        let (kl, kr) = if dir == 0 { (k1, k2) } else { (k2, k1) };
                        budget.spend((a.size() as u64).pow(n as u32 + 1), "candidate comparison")?;
                        for (t, b) in extension(a, kl, n, i) {
                            v.cells += 1;
                            if !kr.set_satisfied(a, j, &t, b) {
                                let mut w = Witness::at(a, "");
                                w.tuple = t;
                                w.element = Some(b);
                                gap = Some(w);
                                break 'algs;
                            }
                        }
                    }
                    match gap {
                        None => {
                            matched = true;
                            break;
                        }
                        Some(w) => {
                            if first_gap.is_none() {
                                first_gap = Some(w);
                            }
                        }
                    }
                }
                if !matched {
                    let (a_name, b_name) = if dir == 0 { (&c1.name, &c2.name) } else { (&c2.name, &c1.name) };
                    let mut w = first_gap.unwrap_or_default();
                    w.set_index = Some(i);
                    w.side = format!(
                        "set {i} of Ψ_{n} in `{a_name}` implies no set of `{b_name}`"
                    );
                    w.notes.push(format!(
                        "the witness satisfies set {i} of `{a_name}` but not set 0 of `{b_name}`"
                    ));
                    return Ok(v.fail(w));
                }
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::candidate::{raw_eq, raw_leq, CandidateSource, Template};
    use crate::fixtures::{b4, m3, order_logic};

    /// `x1 ∧ … ∧ xn ≤ y`, with `1 ≈ y` at n = 0.
    fn below(variant: Variant) -> Candidate {
        meet_candidate(variant, raw_leq("%X", "y"))
    }

    fn meet_candidate(variant: Variant, body: crate::candidate::RawEquation) -> Candidate {
        let mut families = BTreeMap::new();
        families.insert(String::from("0"), alloc::vec![alloc::vec![raw_eq("y", "one")]]);
        families.insert(String::from("*"), alloc::vec![alloc::vec![body]]);
        CandidateSource {
            name: String::from("below"),
            variant,
            n_max: 2,
            params: 0,
            families,
            template: Template {
                fold: Some(String::from("and")),
                ..Template::default()
            },
        }
        .materialize()
        .unwrap()
    }

    #[test]
    fn order_logic_meet_below() {
        let tb = Testbed::from_algebras(alloc::vec![b4(), m3()]);
        let budget = Budget::default();
        for variant in [Variant::Global, Variant::Local, Variant::Parametrized, Variant::ParametrizedLocal] {
            let v = check_edcf(&order_logic(), &tb, &below(variant), variant, &Limits::default(), &budget, &Focus::none())
                .unwrap();
            assert!(v.passed(), "{variant:?}: {v:?}");
        }
    }

    #[test]
    fn wrong_direction_is_refuted() {
        let c = meet_candidate(Variant::Global, raw_leq("y", "%X"));
        let tb = Testbed::from_algebras(alloc::vec![b4()]);
        let v = check_edcf(&order_logic(), &tb, &c, Variant::Global, &Limits::default(), &Budget::default(), &Focus::none())
            .unwrap();
        assert!(v.failed());
        assert!(compare_candidates(&c, &below(Variant::Global), &tb, &Budget::default()).unwrap().failed());
    }
}
