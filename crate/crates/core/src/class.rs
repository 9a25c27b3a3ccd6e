//! Classes of algebras and relative (K-)congruences.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::algebra::{Algebra, Elem};
use crate::congruence::{all_congruences, CongruenceSet, Partition};
use crate::hom::for_each_homomorphism;
use crate::term::{Equation, QuasiEquation};
use crate::{Budget, Error, Limits, Result};

/// A class K given either by (quasi-)equations or as the quasivariety
/// generated by finitely many finite algebras.
#[derive(Debug, Clone)]
pub enum ClassSpec {
    Axiomatic {
        equations: Vec<Equation>,
        quasi: Vec<QuasiEquation>,
    },
    Generated {
        algebras: Vec<Algebra>,
    },
}

impl ClassSpec {
    /// The class of all algebras.
    pub fn everything() -> Self {
        ClassSpec::Axiomatic {
            equations: Vec::new(),
            quasi: Vec::new(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            ClassSpec::Axiomatic { equations, quasi } => {
                format!("axioms ({} equations, {} quasi-equations)", equations.len(), quasi.len())
            }
            ClassSpec::Generated { algebras } => {
                let names: Vec<&str> = algebras.iter().map(|a| a.name()).collect();
                format!("ISP({})", names.join(", "))
            }
        }
    }
}

/// Decides `b ∈ K`.
///
/// For a generated quasivariety this is the separating-homomorphism test:
/// every pair of distinct elements must be told apart by a homomorphism into
/// some generator. The one-element algebra passes vacuously.
pub fn member(b: &Algebra, k: &ClassSpec, budget: &Budget) -> Result<bool> {
    match k {
        ClassSpec::Axiomatic { equations, quasi } => {
            for e in equations {
                if !b.holds_universally(e)? {
                    return Ok(false);
                }
            }
            for q in quasi {
                if !b.holds_quasi_universally(q)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ClassSpec::Generated { algebras } => {
            let n = b.size();
            let mut apart = alloc::vec![alloc::vec![false; n]; n];
            let mut remaining = n * n.saturating_sub(1) / 2;
            for c in algebras {
                if remaining == 0 {
                    break;
                }
                for_each_homomorphism(b, c, &[], false, budget, |h| {
                    for x in 0..n {
                        for y in x + 1..n {
                            if !apart[x][y] && h[x] != h[y] {
                                apart[x][y] = true;
                                remaining -= 1;
                            }
                        }
                    }
                    if remaining == 0 {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                })?;
            }
            Ok(remaining == 0)
        }
    }
}

/// Congruences θ with `A/θ ∈ K`.
pub fn k_congruences(
    a: &Algebra,
    k: &ClassSpec,
    limits: &Limits,
    budget: &Budget,
) -> Result<CongruenceSet> {
    let all = all_congruences(a, limits, budget)?;
    let mut keep = Vec::new();
    for theta in all.iter() {
        let (q, _) = a.quotient(theta)?;
        if member(&q, k, budget)? {
            keep.push(theta.clone());
        }
    }
    Ok(CongruenceSet::new(keep))
}

/// The meet of `set`, checked to lie in `set` again.
fn least_of(a: &Algebra, set: &[&Partition]) -> Result<Partition> {
    let first = set.first().ok_or(Error::EmptyRelativeCongruenceSet)?;
    let meet = set.iter().skip(1).fold((*first).clone(), |m, t| m.meet(t));
    if !set.contains(&&meet) {
        return Err(Error::NotIntersectionClosed(a.name().into()));
    }
    Ok(meet)
}

/// θ_K^A, the least K-congruence.
pub fn theta_k(a: &Algebra, k: &ClassSpec, limits: &Limits, budget: &Budget) -> Result<Partition> {
    cg_k(a, k, &[], limits, budget)
}

/// Cg_K^A(pairs), the least K-congruence containing `pairs`.
pub fn cg_k(
    a: &Algebra,
    k: &ClassSpec,
    pairs: &[(Elem, Elem)],
    limits: &Limits,
    budget: &Budget,
) -> Result<Partition> {
    let ks = k_congruences(a, k, limits, budget)?;
    let over: Vec<&Partition> = ks
        .iter()
        .filter(|t| pairs.iter().all(|&(x, y)| t.related(x, y)))
        .collect();
    least_of(a, &over)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b4, lattice, m3};

    #[test]
    fn generated_membership_separates_points() {
        let c2 = lattice("C2", 2, |a, b| a.max(b), |a, b| a.min(b));
        let k = ClassSpec::Generated { algebras: alloc::vec![c2] };
        let budget = Budget::default();
        assert!(member(&b4(), &k, &budget).unwrap());
        assert!(!member(&m3(), &k, &budget).unwrap());
    }

    #[test]
    fn axiomatic_membership_binds_constants() {
        let k = ClassSpec::Axiomatic {
            equations: alloc::vec![crate::Equation::parse("(or x one)", "one").unwrap()],
            quasi: Vec::new(),
        };
        assert!(member(&m3(), &k, &Budget::default()).unwrap());
        let tk = theta_k(&m3(), &k, &Limits::default(), &Budget::default()).unwrap();
        assert!(tk.is_identity());
    }
}
