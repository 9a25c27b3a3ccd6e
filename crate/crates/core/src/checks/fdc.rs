use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::testbed::multisets;
use super::{Focus, Outcome, Testbed, Verdict, Witness};
use crate::algebra::{direct_product, Algebra, Elem, Product};
use crate::filters::BoundLogic;
use crate::hom::for_each_homomorphism;
use crate::{Budget, ElemSet, Limits, LogicSpec, Result};

/// `∏ S_i` inside the product's carrier.
fn product_set(p: &Product, parts: &[ElemSet]) -> ElemSet {
    let n = p.algebra.size();
    ElemSet::from_elems(
        n,
        (0..n).filter(|&e| p.decode(e).iter().zip(parts).all(|(&c, s)| s.contains(c))),
    )
}

/// Looks for a homomorphism into a testbed member and a filter there whose
/// preimage contains the generators but not `missing`. Such a preimage is a
/// filter separating `missing` from Fg of the generators.
fn separating_hom(
    p: &Algebra,
    gens: &[Elem],
    missing: Elem,
    tb: &Testbed,
    logic: &LogicSpec,
    budget: &Budget,
) -> Result<Option<(String, Vec<Elem>, ElemSet)>> {
    for c in tb.algebras() {
        let on_c = logic.bind(c, budget)?;
        let filters = on_c.filter_lattice(budget)?;
        let mut found = None;
        for_each_homomorphism(p, c, &[], false, budget, |h| {
            for g in &filters {
                if gens.iter().all(|&x| g.contains(h[x])) && !g.contains(h[missing]) {
                    found = Some((h.to_vec(), g.clone()));
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })?;
        if let Some((h, g)) = found {
            return Ok(Some((c.name().into(), h, g)));
        }
    }
    Ok(None)
}

struct Factors<'a> {
    product: Product,
    logic: BoundLogic,
    parts: Vec<&'a BoundLogic>,
}

/// Compares Fg on products of testbed members (2 to `max_arity` factors)
/// with the product of the factorwise Fg's, for every generator tuple up to
/// `limits.n_max`. In the relative form every factor is additionally seeded
/// with each of its filters `F_i` and the product with `∏ F_i`.
#[allow(clippy::too_many_arguments)]
pub fn factor_determined_check(
    logic: &LogicSpec,
    tb: &Testbed,
    absolute: bool,
    max_arity: usize,
    limits: &Limits,
    budget: &Budget,
    focus: &Focus,
) -> Result<Verdict> {
    let mut v = Verdict::new(if absolute { "fdc-absolute" } else { "fdc" });
    v.note(String::from(
        "only finite products of testbed members are covered; arbitrary index sets are not",
    ));
    let members: Vec<&Algebra> = tb.algebras().collect();
    let bound: Vec<BoundLogic> = members
        .iter()
        .map(|a| logic.bind(a, budget))
        .collect::<Result<_>>()?;
    let mut inexact = bound.iter().any(|b| !b.is_exact());
    for k in 2..=max_arity {
        for combo in multisets(members.len(), k) {
            let facs: Vec<&Algebra> = combo.iter().map(|&i| members[i]).collect();
            let product = direct_product(&facs, members[0].signature(), budget)?;
            if !focus.wants_algebra(product.algebra.name()) {
                continue;
            }
            let on_p = logic.bind(&product.algebra, budget)?;
            inexact |= !on_p.is_exact();
            let f = Factors {
                parts: combo.iter().map(|&i| &bound[i]).collect(),
                logic: on_p,
                product,
            };
            let seeds: Vec<Vec<ElemSet>> = if absolute {
                vec![facs.iter().map(|a| ElemSet::empty(a.size())).collect()]
            } else {
                let lattices = f
                    .parts
                    .iter()
                    .map(|b| b.filter_lattice(budget))
                    .collect::<Result<Vec<_>>>()?;
                let mut out = Vec::new();
                let sizes: Vec<usize> = lattices.iter().map(Vec::len).collect();
                let mut idx = vec![0; sizes.len()];
                loop {
                    out.push(idx.iter().zip(&lattices).map(|(&i, l)| l[i].clone()).collect());
                    let Some(p) = (0..idx.len()).rev().find(|&p| idx[p] + 1 < sizes[p]) else {
                        break;
                    };
                    idx[p] += 1;
                    idx[p + 1..].fill(0);
                }
                out
            };
            if let Some(w) = sweep_product(&f, &seeds, limits, budget, focus, &mut v.cells)? {
                let mut w = w;
                if let (Some(missing), true) = (w.element, absolute && w.side.starts_with("b ∈ ∏")) {
                    if let Some((target, h, g)) =
                        separating_hom(&f.product.algebra, &w.tuple, missing, tb, logic, budget)?
                    {
                        w.homomorphism = Some(h);
                        w.notes.push(format!(
                            "the preimage of {} under a homomorphism into `{target}` is a filter containing the generators but not b",
                            tb.get(&target).map_or(String::new(), |c| c.format_set(&g))
                        ));
                    }
                }
                v = v.fail(w);
                if inexact && v.witness.as_ref().is_some_and(|w| w.side.starts_with("b ∈ ∏")) {
                    v.outcome = Outcome::Inconclusive;
                    v.note(String::from("product filters computed under a variable bound"));
                }
                return Ok(v);
            }
        }
    }
    if inexact {
        v.inconclusive_unless_fail(String::from("filters computed under a variable bound"));
    }
    Ok(v)
}

fn sweep_product(
    f: &Factors<'_>,
    seeds: &[Vec<ElemSet>],
    limits: &Limits,
    budget: &Budget,
    focus: &Focus,
    cells: &mut u64,
) -> Result<Option<Witness>> {
    let p = &f.product;
    let size = p.algebra.size();
    for seed in seeds {
        let base = product_set(p, seed);
        for n in focus.arities(limits.n_max) {
            for tuple in focus.tuples(size, n) {
                budget.spend(size as u64, "factor sweep")?;
                *cells += 1;
                let mut gens = base.clone();
                for &t in &tuple {
                    gens.insert(t);
                }
                let whole = f.logic.fg(&gens);
                let parts: Vec<ElemSet> = f
                    .parts
                    .iter()
                    .enumerate()
                    .map(|(i, b)| {
                        let mut g = seed[i].clone();
                        for &t in &tuple {
                            g.insert(p.decode(t)[i]);
                        }
                        b.fg(&g)
                    })
                    .collect();
                let prod = product_set(p, &parts);
                if whole == prod {
                    continue;
                }
                let (side, b) = match prod.iter().find(|&e| !whole.contains(e)) {
                    Some(b) => ("b ∈ ∏ Fg(π_i ā) but b ∉ Fg(ā) on the product", b),
                    None => (
                        "b ∈ Fg(ā) on the product but outside ∏ Fg(π_i ā)",
                        whole.iter().find(|&e| !prod.contains(e)).unwrap(),
                    ),
                };
                let mut w = Witness::at(&p.algebra, side);
                w.tuple = tuple.clone();
                w.element = Some(b);
                w.filters = vec![whole, prod];
                if seed.iter().any(|s| !s.is_empty()) {
                    let seeds: Vec<String> = seed.iter().map(|s| format!("{s:?}")).collect();
                    w.notes.push(format!("factor base filters {}", seeds.join(" × ")));
                }
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b4, order_logic, pwk, wk3};

    #[test]
    fn pwk_fails_on_the_square() {
        let tb = Testbed::from_algebras(alloc::vec![wk3()]);
        let v = factor_determined_check(&pwk(), &tb, true, 2, &Limits::default(), &Budget::default(), &Focus::none())
            .unwrap();
        assert!(v.failed());
        let w = v.witness.unwrap();
        // ⟨½,0⟩ = 2 and ⟨1,0⟩ = 1 under the little-endian codec.
        assert_eq!((w.tuple, w.element), (alloc::vec![2], Some(1)));
    }

    #[test]
    fn order_logic_on_b4_is_factor_determined() {
        let tb = Testbed::from_algebras(alloc::vec![b4()]);
        let limits = Limits { n_max: 2, ..Limits::default() };
        let v = factor_determined_check(&order_logic(), &tb, true, 2, &limits, &Budget::default(), &Focus::none())
            .unwrap();
        assert!(v.passed(), "{v:?}");
    }
}
