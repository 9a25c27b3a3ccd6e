use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{direct_product, Algebra};
use crate::hom::find_isomorphism;
use crate::{Budget, Error, Result};

/// How a testbed member was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Generator,
    Product(Vec<String>),
    Subalgebra(String),
}

#[derive(Debug, Clone)]
pub struct TestbedEntry {
    pub algebra: Algebra,
    pub provenance: Provenance,
}

/// A finite stand-in for a class of algebras.
#[derive(Debug, Clone, Default)]
pub struct Testbed {
    pub entries: Vec<TestbedEntry>,
}

impl Testbed {
    pub fn from_algebras(algebras: Vec<Algebra>) -> Self {
        Testbed {
            entries: algebras
                .into_iter()
                .map(|algebra| TestbedEntry {
                    algebra,
                    provenance: Provenance::Generator,
                })
                .collect(),
        }
    }

    pub fn algebras(&self) -> impl Iterator<Item = &Algebra> {
        self.entries.iter().map(|e| &e.algebra)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Algebra> {
        self.algebras().find(|a| a.name() == name)
    }

    /// Adds `a` unless an isomorphic member is already present. Returns
    /// whether it was added. When the isomorphism test runs out of budget
    /// the algebra is kept.
    fn push_unique(&mut self, a: Algebra, provenance: Provenance, budget: &Budget) -> Result<bool> {
        for e in &self.entries {
            if e.algebra.size() != a.size() {
                continue;
            }
            let probe = Budget::new(budget.limit().saturating_sub(budget.used()).min(200_000));
            match find_isomorphism(&e.algebra, &a, &probe) {
                Ok(Some(_)) => return Ok(false),
                Ok(None) => {}
                Err(Error::SizeBudgetExceeded(_)) => {}
                Err(e) => return Err(e),
            }
            budget.spend(probe.used(), "isomorphism test")?;
        }
        self.entries.push(TestbedEntry { algebra: a, provenance });
        Ok(true)
    }
}

/// Multisets of `0..n` of size `k`, as non-decreasing index lists.
pub(crate) fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut c = vec![0; k];
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] + 1 < n) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[i];
        }
    }
}

/// Generators, their products up to `max_arity` factors, and optionally all
/// their subalgebras, keeping one representative per isomorphism type.
pub fn generate_testbed(
    generators: &[Algebra],
    max_arity: usize,
    include_subalgebras: bool,
    budget: &Budget,
) -> Result<Testbed> {
    let mut tb = Testbed::default();
    for g in generators {
        tb.push_unique(g.clone(), Provenance::Generator, budget)?;
    }
    for k in 2..=max_arity {
        for combo in multisets(generators.len(), k) {
            let factors: Vec<&Algebra> = combo.iter().map(|&i| &generators[i]).collect();
            let p = direct_product(&factors, generators[0].signature(), budget)?;
            let names = factors.iter().map(|f| f.name().into()).collect();
            tb.push_unique(p.algebra, Provenance::Product(names), budget)?;
        }
    }
    if include_subalgebras {
        let parents: Vec<Algebra> = tb.algebras().cloned().collect();
        for parent in &parents {
            for s in parent.subuniverses(budget)? {
                if s.len() == parent.size() {
                    continue;
                }
                let (sub, _) = parent.subalgebra(&s)?;
                tb.push_unique(sub, Provenance::Subalgebra(parent.name().into()), budget)?;
            }
        }
    }
    Ok(tb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(multisets(3, 2).len(), 6);
        assert!(multisets(0, 2).is_empty());
    }
}
