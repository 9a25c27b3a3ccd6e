use alloc::vec::Vec;

use super::{Verdict, Witness};
use crate::algebra::Algebra;
use crate::{Budget, ElemSet, LogicSpec, Result};

/// On a finite algebra every filter is compact. For all filters F, G the
/// set `{H : G ⊆ F ∨ H}` must have a least element.
pub fn dually_brouwerian_check(logic: &LogicSpec, a: &Algebra, budget: &Budget) -> Result<Verdict> {
    let mut v = Verdict::new("dually-brouwerian");
    let on_a = logic.bind(a, budget)?;
    let filters = on_a.filter_lattice(budget)?;
    for f in &filters {
        for g in &filters {
            budget.spend(filters.len() as u64, "filter pair sweep")?;
            v.cells += 1;
            let good: Vec<&ElemSet> = filters
                .iter()
                .filter(|h| g.is_subset(&on_a.fg(&f.union(h))))
                .collect();
            let least = good.iter().find(|h| good.iter().all(|x| h.is_subset(x)));
            if least.is_none() {
                let minimal: Vec<ElemSet> = good
                    .iter()
                    .filter(|h| !good.iter().any(|x| x != *h && x.is_subset(h)))
                    .map(|h| (*h).clone())
                    .collect();
                let mut w = Witness::at(a, "no least H with G ⊆ F ∨ H");
                w.filters = alloc::vec![f.clone(), g.clone()];
                w.filters.extend(minimal);
                w.notes.push(alloc::string::String::from(
                    "filters listed as F, G, then the minimal H's",
                ));
                return Ok(v.fail(w));
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b4, m3, order_logic};

    #[test]
    fn m3_has_no_least_complement_filter() {
        let budget = Budget::default();
        let v = dually_brouwerian_check(&order_logic(), &m3(), &budget).unwrap();
        assert!(v.failed());
        let w = v.witness.unwrap();
        let on = order_logic().bind(&m3(), &budget).unwrap();
        let (f, g, hs) = (&w.filters[0], &w.filters[1], &w.filters[2..]);
        assert_eq!(hs.len(), 2);
        assert!(!hs[0].is_subset(&hs[1]) && !hs[1].is_subset(&hs[0]));
        assert!(hs.iter().all(|h| g.is_subset(&on.fg(&f.union(h)))));
    }

    #[test]
    fn boolean_lattice_passes() {
        let v = dually_brouwerian_check(&order_logic(), &b4(), &Budget::default()).unwrap();
        assert!(v.passed());
        assert_eq!(v.cells, 16);
    }
}
