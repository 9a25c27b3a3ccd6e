use alloc::format;
use alloc::string::String;

use super::{
    absolute_fep_check, check_edcf, dually_brouwerian_check, factor_determined_check, generate_testbed,
    leibniz_probe, Focus, Outcome, ProbeMode, Testbed, Verdict,
};
use crate::algebra::Algebra;
use crate::candidate::Candidate;
use crate::{Budget, Error, Limits, LogicSpec, Result};

/// Properties the search driver can hunt counterexamples for.
#[derive(Debug, Clone)]
pub enum Property {
    FactorDetermined { absolute: bool },
    Edcf(Candidate),
    AbsoluteFep,
    LeibnizMonotone,
    DuallyBrouwerian,
}

fn run(p: &Property, logic: &LogicSpec, tb: &Testbed, arity: usize, limits: &Limits, budget: &Budget) -> Result<Verdict> {
    let focus = Focus::none();
    match p {
        Property::FactorDetermined { absolute } => {
            factor_determined_check(logic, tb, *absolute, arity, limits, budget, &focus)
        }
        Property::Edcf(c) => check_edcf(logic, tb, c, c.variant, limits, budget, &focus),
        Property::AbsoluteFep => absolute_fep_check(logic, tb, limits, budget, &focus),
        Property::LeibnizMonotone => leibniz_probe(logic, tb, ProbeMode::Monotone, budget),
        Property::DuallyBrouwerian => {
            let mut last = Verdict::new("dually-brouwerian");
            for a in tb.algebras() {
                last = dually_brouwerian_check(logic, a, budget)?;
                if last.failed() {
                    break;
                }
            }
            Ok(last)
        }
    }
}

/// Grows the testbed one product arity at a time (with subalgebras when
/// `subalgebras` is set) and runs the property until it fails. Running out
/// of budget or arities yields an inconclusive verdict.
pub fn search_counterexample(
    logic: &LogicSpec,
    property: &Property,
    generators: &[Algebra],
    max_arity: usize,
    subalgebras: bool,
    limits: &Limits,
    budget: &Budget,
) -> Result<Verdict> {
    let mut v = Verdict::new("search");
    if generators.is_empty() {
        v.outcome = Outcome::Inconclusive;
        v.note(String::from("no generators supplied"));
        return Ok(v);
    }
    for arity in 1..=max_arity.max(1) {
        // Products are formed by the checker itself for factor-determinedness.
        let tb_arity = match property {
            Property::FactorDetermined { .. } => 1,
            _ => arity,
        };
        let tb = match generate_testbed(generators, tb_arity, subalgebras, budget) {
            Ok(tb) => tb,
            Err(Error::SizeBudgetExceeded(m)) => {
                v.outcome = Outcome::Inconclusive;
                v.note(format!("stopped at arity {arity}: {m}"));
                return Ok(v);
            }
            Err(e) => return Err(e),
        };
        let check_arity = match property {
            Property::FactorDetermined { .. } => arity,
            _ => 1,
        };
        if matches!(property, Property::FactorDetermined { .. }) && arity < 2 {
            continue;
        }
        match run(property, logic, &tb, check_arity, limits, budget) {
            Ok(r) if r.failed() => {
                let mut r = r;
                r.note(format!("found at product arity {arity}"));
                return Ok(r);
            }
            Ok(r) => v.cells += r.cells,
            Err(Error::SizeBudgetExceeded(m)) => {
                v.outcome = Outcome::Inconclusive;
                v.note(format!("stopped at arity {arity}: {m}"));
                return Ok(v);
            }
            Err(e) => return Err(e),
        }
    }
    v.outcome = Outcome::Inconclusive;
    v.note(format!("no counterexample up to product arity {max_arity}"));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pwk, wk3};

    #[test]
    fn finds_pwk_product_failure_at_arity_two() {
        let v = search_counterexample(
            &pwk(),
            &Property::FactorDetermined { absolute: true },
            &[wk3()],
            2,
            false,
            &Limits::default(),
            &Budget::default(),
        )
        .unwrap();
        assert!(v.failed());
        assert!(v.notes.iter().any(|n| n.contains("arity 2")));
    }

    #[test]
    fn no_generators_is_inconclusive() {
        let v = search_counterexample(
            &pwk(),
            &Property::AbsoluteFep,
            &[],
            2,
            true,
            &Limits::default(),
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Inconclusive);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let v = search_counterexample(
            &pwk(),
            &Property::AbsoluteFep,
            &[wk3()],
            3,
            true,
            &Limits::default(),
            &Budget::new(50),
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Inconclusive);
    }
}
