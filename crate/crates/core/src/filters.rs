//! Logics, L-filters and filter generation on finite algebras.
//!
//! A logic is either a finite list of rules or the logic of a finite set of
//! finite matrices. Binding a logic to an algebra ([`LogicSpec::bind`])
//! prepares a one-step consequence operator `C` on subsets of the carrier:
//! filters are its fixpoints and `Fg(X)` is the limit of `X, C(X), C(C(X)), …`.
//!
//! For matrix logics `C` comes from a finite clone of term functions. Let
//! `g1 … gm` generate A. Every valuation into A is the canonical one
//! (`vi ↦ gi`) composed with a substitution, so by structurality the rules in
//! the variables `v1 … vm` already decide which sets are filters. A term `t`
//! in those variables is recorded by its value in A at the canonical
//! valuation together with its values in every matrix algebra at every
//! valuation. Given F, let U be the set of matrix points at which every
//! recorded term with A-value in F is designated; then `C(F)` adds the
//! A-value of each recorded term designated throughout U.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{for_each_tuple, next_tuple, Algebra, Compiled, Elem};
use crate::congruence::Partition;
use crate::term::Rule;
use crate::{Budget, ElemSet, Error, Limits, Result};

/// A logical matrix ⟨B, D⟩.
#[derive(Debug, Clone)]
pub struct Matrix {
    pub algebra: Algebra,
    pub designated: ElemSet,
}

impl Matrix {
    pub fn new(algebra: Algebra, designated: ElemSet) -> Result<Self> {
        if designated.universe() != algebra.size() {
            return Err(Error::Invalid(format!(
                "designated set over {} elements for `{}`",
                designated.universe(),
                algebra.name()
            )));
        }
        Ok(Matrix { algebra, designated })
    }
}

#[derive(Debug, Clone)]
pub enum Presentation {
    Rules(Vec<Rule>),
    Matrices {
        matrices: Vec<Matrix>,
        variable_bound: Option<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct LogicSpec {
    pub name: String,
    pub presentation: Presentation,
}

impl LogicSpec {
    pub fn rules(name: &str, rules: Vec<Rule>) -> Self {
        LogicSpec {
            name: name.into(),
            presentation: Presentation::Rules(rules),
        }
    }

    pub fn matrices(name: &str, matrices: Vec<Matrix>, variable_bound: Option<usize>) -> Self {
        LogicSpec {
            name: name.into(),
            presentation: Presentation::Matrices {
                matrices,
                variable_bound,
            },
        }
    }

    pub fn is_rule_presented(&self) -> bool {
        matches!(self.presentation, Presentation::Rules(_))
    }

    /// Whether the logic's symbols all exist in `a`'s signature.
    pub fn applies_to(&self, a: &Algebra) -> bool {
        match &self.presentation {
            Presentation::Rules(rules) => rules.iter().all(|r| {
                let Ok(r) = r.bind(a.signature()) else {
                    return false;
                };
                let vars = r.vars();
                r.premises
                    .iter()
                    .chain(core::iter::once(&r.conclusion))
                    .all(|t| Compiled::new(t, a.signature(), &vars).is_ok())
            }),
            Presentation::Matrices { matrices, .. } => matrices
                .iter()
                .all(|m| m.algebra.signature().same_symbols(a.signature())),
        }
    }

    /// Prepares the consequence operator of the logic on `a`.
    pub fn bind(&self, a: &Algebra, budget: &Budget) -> Result<BoundLogic> {
        let engine = match &self.presentation {
            Presentation::Rules(rules) => Engine::Rules(RuleEngine::new(a, rules).map_err(|e| {
                Error::LogicNotApplicable {
                    algebra: a.name().into(),
                    msg: format!("{e}"),
                }
            })?),
            Presentation::Matrices {
                matrices,
                variable_bound,
            } => Engine::Matrices(MatrixEngine::new(a, matrices, *variable_bound, budget)?),
        };
        let exact = match &engine {
            Engine::Rules(_) => true,
            Engine::Matrices(m) => m.exact,
        };
        Ok(BoundLogic {
            algebra: a.clone(),
            engine,
            exact,
        })
    }
}

/// A logic bound to one algebra.
#[derive(Debug, Clone)]
pub struct BoundLogic {
    algebra: Algebra,
    engine: Engine,
    exact: bool,
}

#[derive(Debug, Clone)]
enum Engine {
    Rules(RuleEngine),
    Matrices(MatrixEngine),
}

/// A generated filter with the stages `C_0 = X, C_1, …` of its iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgResult {
    pub filter: ElemSet,
    pub trace: Vec<ElemSet>,
}

impl BoundLogic {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// False when a variable bound below the generator count was imposed;
    /// filters are then only checked against rules in that many variables.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// One application of the consequence operator (always contains `x`).
    pub fn step(&self, x: &ElemSet) -> ElemSet {
        match &self.engine {
            Engine::Rules(r) => r.step(&self.algebra, x),
            Engine::Matrices(m) => m.step(x),
        }
    }

    pub fn is_filter(&self, f: &ElemSet) -> bool {
        self.step(f) == *f
    }

    pub fn fg(&self, x: &ElemSet) -> ElemSet {
        let mut cur = x.clone();
        loop {
            let next = self.step(&cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn fg_elems(&self, gens: &[Elem]) -> ElemSet {
        self.fg(&ElemSet::from_elems(self.algebra.size(), gens.iter().copied()))
    }

    pub fn fg_traced(&self, x: &ElemSet) -> FgResult {
        let mut trace = vec![x.clone()];
        loop {
            let next = self.step(trace.last().unwrap());
            if next == *trace.last().unwrap() {
                return FgResult {
                    filter: next,
                    trace,
                };
            }
            trace.push(next);
        }
    }

    /// Every filter, found by testing each subset; smallest first.
    pub fn all_filters(&self, limits: &Limits, budget: &Budget) -> Result<Vec<ElemSet>> {
        let n = self.algebra.size();
        if n > limits.max_subset_sweep || n >= 64 {
            return Err(Error::SizeBudgetExceeded(format!(
                "subset sweep on `{}` ({n} elements, cap {})",
                self.algebra.name(),
                limits.max_subset_sweep
            )));
        }
        budget.check_size(1u128 << n, "filter subset sweep")?;
        let mut out = Vec::new();
        for mask in 0..(1u64 << n) {
            budget.spend(1, "filter subset sweep")?;
            let f = ElemSet::from_mask(n, mask);
            if self.is_filter(&f) {
                out.push(f);
            }
        }
        out.sort_by(|a, b| a.cmp_card_lex(b));
        Ok(out)
    }

    /// Every filter, found by closing `Fg(∅)` under `F ↦ Fg(F ∪ {a})`.
    pub fn filter_lattice(&self, budget: &Budget) -> Result<Vec<ElemSet>> {
        let n = self.algebra.size();
        let bottom = self.fg(&ElemSet::empty(n));
        let mut seen = alloc::collections::BTreeSet::new();
        seen.insert(bottom.clone());
        let mut queue = vec![bottom];
        while let Some(f) = queue.pop() {
            for a in 0..n {
                if f.contains(a) {
                    continue;
                }
                budget.spend(n as u64, "filter lattice")?;
                let mut g = f.clone();
                g.insert(a);
                let g = self.fg(&g);
                if seen.insert(g.clone()) {
                    queue.push(g);
                }
            }
        }
        let mut out: Vec<ElemSet> = seen.into_iter().collect();
        out.sort_by(|a, b| a.cmp_card_lex(b));
        Ok(out)
    }
}

#[derive(Debug, Clone)]
struct CompiledRule {
    n_vars: usize,
    premises: Vec<Compiled>,
    conclusion: Compiled,
}

#[derive(Debug, Clone)]
struct RuleEngine {
    /// Conclusions of premise-free rules under every valuation.
    theorems: ElemSet,
    rules: Vec<CompiledRule>,
}

impl RuleEngine {
    fn new(a: &Algebra, rules: &[Rule]) -> Result<Self> {
        let mut theorems = ElemSet::empty(a.size());
        let mut compiled = Vec::new();
        let mut stack = Vec::new();
        for r in rules {
            let r = r.bind(a.signature())?;
            let vars = r.vars();
            let c = CompiledRule {
                n_vars: vars.len(),
                premises: r
                    .premises
                    .iter()
                    .map(|p| Compiled::new(p, a.signature(), &vars))
                    .collect::<Result<_>>()?,
                conclusion: Compiled::new(&r.conclusion, a.signature(), &vars)?,
            };
            if c.premises.is_empty() {
                for_each_tuple(a.size(), c.n_vars, |t| {
                    theorems.insert(c.conclusion.eval_with(a, t, &mut stack));
                });
            } else {
                compiled.push(c);
            }
        }
        Ok(RuleEngine {
            theorems,
            rules: compiled,
        })
    }

    fn step(&self, a: &Algebra, x: &ElemSet) -> ElemSet {
        let mut out = x.union(&self.theorems);
        let mut stack = Vec::new();
        for r in &self.rules {
            for_each_tuple(a.size(), r.n_vars, |t| {
                if r.premises.iter().all(|p| x.contains(p.eval_with(a, t, &mut stack))) {
                    out.insert(r.conclusion.eval_with(a, t, &mut stack));
                }
            });
        }
        out
    }
}

#[derive(Debug, Clone)]
struct MatrixEngine {
    exact: bool,
    /// Canonical valuations into A (one in exact mode).
    a_points: usize,
    /// Per clone element: A-value at each canonical valuation.
    a_vals: Vec<Vec<Elem>>,
    /// Per clone element: matrix points at which it is designated.
    desig: Vec<ElemSet>,
    points: usize,
}

impl MatrixEngine {
    fn new(a: &Algebra, matrices: &[Matrix], bound: Option<usize>, budget: &Budget) -> Result<Self> {
        let not_applicable = |msg: String| Error::LogicNotApplicable {
            algebra: a.name().into(),
            msg,
        };
        let mut aligns = Vec::new();
        for m in matrices {
            aligns.push(
                a.signature()
                    .alignment(m.algebra.signature())
                    .map_err(|e| not_applicable(format!("{e}")))?,
            );
        }
        let gens = a.minimal_generating_set(budget)?;
        let (nv, a_valuations, exact) = match bound {
            Some(b) if b < gens.len() => {
                let mut vals = Vec::new();
                for_each_tuple(a.size(), b, |t| vals.push(t.to_vec()));
                (b, vals, false)
            }
            _ => (gens.len(), vec![gens.clone()], true),
        };

        // Points are the A-valuations followed by every valuation into each
        // matrix algebra; a clone element stores its value at each point.
        let mut point_alg: Vec<usize> = Vec::new();
        let mut point_vals: Vec<Vec<Elem>> = Vec::new();
        for v in &a_valuations {
            point_alg.push(usize::MAX);
            point_vals.push(v.clone());
        }
        for (j, m) in matrices.iter().enumerate() {
            for_each_tuple(m.algebra.size(), nv, |t| {
                point_alg.push(j);
                point_vals.push(t.to_vec());
            });
        }
        let width = point_vals.len();
        budget.spend(width as u64, "term clone points")?;

        let mut index: BTreeMap<Vec<Elem>, usize> = BTreeMap::new();
        let mut elems: Vec<Vec<Elem>> = Vec::new();
        let mut push = |v: Vec<Elem>, elems: &mut Vec<Vec<Elem>>| {
            if !index.contains_key(&v) {
                index.insert(v.clone(), elems.len());
                elems.push(v);
            }
        };
        for i in 0..nv {
            push(point_vals.iter().map(|p| p[i]).collect(), &mut elems);
        }
        let apply_at = |op: usize, point: usize, args: &[Elem]| -> Elem {
            match point_alg[point] {
                usize::MAX => a.apply(op, args),
                j => matrices[j].algebra.apply(aligns[j][op], args),
            }
        };
        // Constants.
        for (op, s) in a.signature().symbols().iter().enumerate() {
            if s.arity == 0 {
                push((0..width).map(|p| apply_at(op, p, &[])).collect(), &mut elems);
            }
        }
        // Semi-naive closure: each round only combines tuples touching the
        // elements added in the previous round.
        let mut frontier = 0;
        let mut args = Vec::new();
        loop {
            let end = elems.len();
            if frontier == end {
                break;
            }
            for (op, s) in a.signature().symbols().iter().enumerate() {
                if s.arity == 0 {
                    continue;
                }
                let mut idx = vec![0usize; s.arity];
                loop {
                    if idx.iter().any(|&i| i >= frontier) {
                        budget.spend(width as u64, "term clone")?;
                        let v: Vec<Elem> = (0..width)
                            .map(|p| {
                                args.clear();
                                args.extend(idx.iter().map(|&i| elems[i][p]));
                                apply_at(op, p, &args)
                            })
                            .collect();
                        push(v, &mut elems);
                    }
                    if !next_tuple(&mut idx, end) {
                        break;
                    }
                }
            }
            frontier = end;
        }

        let a_points = a_valuations.len();
        let b_points = width - a_points;
        let mut seen = alloc::collections::BTreeSet::new();
        let mut a_vals = Vec::new();
        let mut desig = Vec::new();
        for e in &elems {
            let av = e[..a_points].to_vec();
            let d = ElemSet::from_elems(
                b_points,
                (0..b_points).filter(|&p| {
                    let j = point_alg[a_points + p];
                    matrices[j].designated.contains(e[a_points + p])
                }),
            );
            if seen.insert((av.clone(), d.clone())) {
                a_vals.push(av);
                desig.push(d);
            }
        }
        Ok(MatrixEngine {
            exact,
            a_points,
            a_vals,
            desig,
            points: b_points,
        })
    }

    fn step(&self, x: &ElemSet) -> ElemSet {
        let mut out = x.clone();
        for t in 0..self.a_points {
            let mut u = ElemSet::full(self.points);
            for (av, d) in self.a_vals.iter().zip(&self.desig) {
                if x.contains(av[t]) {
                    u.intersect_with(d);
                }
            }
            for (av, d) in self.a_vals.iter().zip(&self.desig) {
                if u.is_subset(d) {
                    out.insert(av[t]);
                }
            }
        }
        out
    }
}

/// Whether `r` holds in `m`: every valuation designating all premises
/// designates the conclusion.
pub fn rule_valid_in_matrix(r: &Rule, m: &Matrix) -> Result<bool> {
    let sig = m.algebra.signature();
    let r = &r.bind(sig)?;
    let vars = r.vars();
    let prem = r
        .premises
        .iter()
        .map(|p| Compiled::new(p, sig, &vars))
        .collect::<Result<Vec<_>>>()?;
    let concl = Compiled::new(&r.conclusion, sig, &vars)?;
    let mut ok = true;
    let mut stack = Vec::new();
    let alg = &m.algebra;
    for_each_tuple(alg.size(), vars.len(), |t| {
        if ok
            && prem.iter().all(|p| m.designated.contains(p.eval_with(alg, t, &mut stack)))
            && !m.designated.contains(concl.eval_with(alg, t, &mut stack))
        {
            ok = false;
        }
    });
    Ok(ok)
}

pub fn is_filter(a: &Algebra, f: &ElemSet, l: &LogicSpec, budget: &Budget) -> Result<bool> {
    Ok(l.bind(a, budget)?.is_filter(f))
}

pub fn fg(a: &Algebra, x: &ElemSet, l: &LogicSpec, budget: &Budget) -> Result<FgResult> {
    Ok(l.bind(a, budget)?.fg_traced(x))
}

pub fn all_filters(a: &Algebra, l: &LogicSpec, limits: &Limits, budget: &Budget) -> Result<Vec<ElemSet>> {
    l.bind(a, budget)?.all_filters(limits, budget)
}

/// Fg^{A,θ}(X) = π⁻¹[Fg^{A/θ}(π[X])].
pub fn fg_relative(
    a: &Algebra,
    theta: &Partition,
    x: &ElemSet,
    l: &LogicSpec,
    budget: &Budget,
) -> Result<ElemSet> {
    let (q, proj) = a.quotient(theta)?;
    let bound = l.bind(&q, budget)?;
    let g = bound.fg(&x.image(&proj, q.size()));
    Ok(g.preimage(&proj))
}

/// A quotient with its bound logic, for repeated relative generation.
#[derive(Debug, Clone)]
pub struct RelativeFg {
    pub theta: Partition,
    pub proj: Vec<Elem>,
    pub logic: BoundLogic,
}

impl RelativeFg {
    pub fn new(a: &Algebra, theta: &Partition, l: &LogicSpec, budget: &Budget) -> Result<Self> {
        let (q, proj) = a.quotient(theta)?;
        Ok(RelativeFg {
            theta: theta.clone(),
            logic: l.bind(&q, budget)?,
            proj,
        })
    }

    pub fn fg(&self, x: &ElemSet) -> ElemSet {
        let q = self.logic.algebra().size();
        self.logic.fg(&x.image(&self.proj, q)).preimage(&self.proj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b4, m3, order_logic, pwk, wk3};

    #[test]
    fn constant_conclusion_is_a_theorem_not_a_variable() {
        let budget = Budget::default();
        let on = order_logic().bind(&m3(), &budget).unwrap();
        assert_eq!(on.fg(&ElemSet::empty(5)).to_vec(), alloc::vec![4]);
        assert_eq!(on.filter_lattice(&budget).unwrap().len(), 5);
    }

    #[test]
    fn pwk_theorems_on_wk3() {
        let on = pwk().bind(&wk3(), &Budget::default()).unwrap();
        assert_eq!(on.fg(&ElemSet::empty(3)).to_vec(), alloc::vec![1, 2]);
        assert!(on.fg_elems(&[0]).is_full());
    }

    #[test]
    fn relative_fg_matches_the_quotient() {
        let a = b4();
        let theta = Partition::from_labels(&[0, 0, 1, 1]);
        let budget = Budget::default();
        let rel = RelativeFg::new(&a, &theta, &order_logic(), &budget).unwrap();
        let x = ElemSet::singleton(4, 2);
        assert_eq!(rel.fg(&x), fg_relative(&a, &theta, &x, &order_logic(), &budget).unwrap());
        assert_eq!(rel.fg(&x).to_vec(), alloc::vec![2, 3]);
        assert_eq!(rel.fg(&ElemSet::singleton(4, 1)).to_vec(), alloc::vec![0, 1, 2, 3]);
    }
}
