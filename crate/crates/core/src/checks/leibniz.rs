use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Testbed, Verdict, Witness};
use crate::congruence::{leibniz_congruence, Partition};
use crate::{Budget, LogicSpec, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeMode {
    /// F ⊆ G must give Ω F ⊆ Ω G.
    Monotone,
    /// F ≠ G must give Ω F ≠ Ω G.
    Injective,
}

/// Sweeps pairs of filters on each testbed member looking for a violation.
/// A pass only says that none was found here.
pub fn leibniz_probe(logic: &LogicSpec, tb: &Testbed, mode: ProbeMode, budget: &Budget) -> Result<Verdict> {
    let mut v = Verdict::new(match mode {
        ProbeMode::Monotone => "leibniz-monotone",
        ProbeMode::Injective => "leibniz-injective",
    });
    for a in tb.algebras() {
        let filters = logic.bind(a, budget)?.filter_lattice(budget)?;
        let omegas: Vec<Partition> = filters
            .iter()
            .map(|f| leibniz_congruence(a, f, budget))
            .collect::<Result<_>>()?;
        for (i, f) in filters.iter().enumerate() {
            for (j, g) in filters.iter().enumerate() {
                v.cells += 1;
                let bad = match mode {
                    ProbeMode::Monotone => f.is_subset(g) && !omegas[i].leq(&omegas[j]),
                    ProbeMode::Injective => i < j && omegas[i] == omegas[j],
                };
                if bad {
                    let side = match mode {
                        ProbeMode::Monotone => "F ⊆ G but Ω F ⊄ Ω G",
                        ProbeMode::Injective => "F ≠ G but Ω F = Ω G",
                    };
                    let mut w = Witness::at(a, side);
                    w.filters = alloc::vec![f.clone(), g.clone()];
                    w.congruences = alloc::vec![omegas[i].clone(), omegas[j].clone()];
                    w.notes.push(format!(
                        "Ω {} = [{}], Ω {} = [{}]",
                        a.format_set(f),
                        omegas[i].format_with(a),
                        a.format_set(g),
                        omegas[j].format_with(a)
                    ));
                    return Ok(v.fail(w));
                }
            }
        }
    }
    v.note(String::from("refuter only: a pass does not establish the property"));
    Ok(v)
}
