//! Candidate equational definitions and their template language.
//!
//! A candidate assigns to each arity `n` a family Ψ_n of finite equation
//! sets Θ_n(x1, …, xn, y, z1, …, zk). Families are written as S-expression
//! equations, either per arity (`"2"`) or once for every `n ≥ 1` (`"*"`),
//! using these placeholders:
//!
//! * `%X` expands to the generators folded with the template's fold symbol.
//! * `(%fold SYM ITEM …)` folds the items with `SYM`, right-associated;
//!   an item mentioning `%x` is repeated once per generator.
//! * `(%iter K INIT BASE STEP)` starts from `INIT` and applies `STEP` `K`
//!   times, where `STEP` refers to the previous value as `%prev` and to
//!   `BASE` as `%base`. `K` is a literal or `%k`.
//!
//! With `subsets` on, generator placeholders range over each non-empty
//! subset of the generators in turn, one equation set per subset. With a
//! `k` range, one equation set is produced per value of `%k`. An equation
//! `[l, "<=", r]` is shorthand for `(join l r) ≈ r` or `(meet l r) ≈ l`.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{next_tuple, Algebra, Compiled, Elem};
use crate::congruence::Partition;
use crate::term::{Equation, Term};
use crate::{Error, Result};

pub type EqSet = Vec<Equation>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Global,
    Local,
    Parametrized,
    ParametrizedLocal,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Variant> {
        match s {
            "global" => Ok(Variant::Global),
            "local" => Ok(Variant::Local),
            "parametrized" => Ok(Variant::Parametrized),
            "parametrized_local" => Ok(Variant::ParametrizedLocal),
            _ => Err(Error::InvalidCandidate(format!("unknown variant `{s}`"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Global => "global",
            Variant::Local => "local",
            Variant::Parametrized => "parametrized",
            Variant::ParametrizedLocal => "parametrized_local",
        }
    }

    pub fn is_local(self) -> bool {
        matches!(self, Variant::Local | Variant::ParametrizedLocal)
    }

    pub fn is_parametrized(self) -> bool {
        matches!(self, Variant::Parametrized | Variant::ParametrizedLocal)
    }
}

/// How `<=` is unfolded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Leq {
    Join(String),
    Meet(String),
}

impl Default for Leq {
    fn default() -> Self {
        Leq::Join("or".into())
    }
}

/// One equation as written: `l ≈ r` or `l ≤ r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawEquation {
    Eq(String, String),
    Leq(String, String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Template {
    pub fold: Option<String>,
    pub leq: Leq,
    pub subsets: bool,
    pub k: Option<(usize, usize)>,
}

/// A candidate as written, before expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSource {
    pub name: String,
    pub variant: Variant,
    pub n_max: usize,
    pub params: usize,
    /// Keys are arities in decimal or `*`.
    pub families: BTreeMap<String, Vec<Vec<RawEquation>>>,
    pub template: Template,
}

/// A candidate expanded up to `n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub name: String,
    pub variant: Variant,
    pub n_max: usize,
    pub params: usize,
    /// Ψ_n for each arity that has one; a missing arity is not checked.
    pub families: BTreeMap<usize, Vec<EqSet>>,
}

pub fn x_var(i: usize) -> String {
    format!("x{}", i + 1)
}

pub fn z_var(i: usize) -> String {
    format!("z{}", i + 1)
}

/// Whether an atom has the shape of a variable (`y`, `x<i>` or `z<i>`).
/// Any other atom is read as a constant once a signature is known.
pub fn is_variable_name(s: &str) -> bool {
    let indexed = |p: &str| {
        s.strip_prefix(p)
            .is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
    };
    s == "y" || indexed("x") || indexed("z")
}

/// Variable order used for compiled equation sets: x1…xn, y, z1…zk.
pub fn slot_names(n: usize, params: usize) -> Vec<String> {
    let mut v: Vec<String> = (0..n).map(x_var).collect();
    v.push("y".into());
    v.extend((0..params).map(z_var));
    v
}

struct Ctx<'a> {
    gens: &'a [String],
    fold: Option<&'a str>,
    k: Option<usize>,
    base: Option<&'a Term>,
    prev: Option<&'a Term>,
}

fn mentions(t: &Term, atom: &str) -> bool {
    match t {
        Term::Var(v) => v == atom,
        Term::App(_, args) => args.iter().any(|a| mentions(a, atom)),
    }
}

fn replace_atom(t: &Term, atom: &str, with: &Term) -> Term {
    match t {
        Term::Var(v) if v == atom => with.clone(),
        Term::Var(_) => t.clone(),
        Term::App(f, args) => Term::App(
            f.clone(),
            args.iter().map(|a| replace_atom(a, atom, with)).collect(),
        ),
    }
}

fn bad(msg: String) -> Error {
    Error::InvalidCandidate(msg)
}

fn expand(t: &Term, ctx: &Ctx<'_>) -> Result<Term> {
    match t {
        Term::Var(v) => match v.as_str() {
            "%X" => {
                let sym = ctx.fold.ok_or_else(|| bad("`%X` needs a fold symbol".into()))?;
                Term::fold_right(sym, ctx.gens.iter().map(|g| Term::var(g)).collect())
                    .ok_or_else(|| bad("`%X` over no generators".into()))
            }
            "%base" => ctx.base.cloned().ok_or_else(|| bad("`%base` outside `%iter`".into())),
            "%prev" => ctx.prev.cloned().ok_or_else(|| bad("`%prev` outside `%iter`".into())),
            s if s.starts_with('%') => Err(bad(format!("placeholder `{s}` out of place"))),
            _ => Ok(t.clone()),
        },
        Term::App(f, args) if f == "%fold" => {
            let (sym, items) = match args.split_first() {
                Some((Term::Var(sym), items)) => (sym, items),
                _ => return Err(bad("`%fold` needs a symbol".into())),
            };
            let mut parts = Vec::new();
            for item in items {
                if mentions(item, "%x") {
                    for g in ctx.gens {
                        parts.push(expand(&replace_atom(item, "%x", &Term::var(g)), ctx)?);
                    }
                } else {
                    parts.push(expand(item, ctx)?);
                }
            }
            Term::fold_right(sym, parts).ok_or_else(|| bad("empty `%fold`".into()))
        }
        Term::App(f, args) if f == "%iter" => {
            let [k, init, base, step] = args.as_slice() else {
                return Err(bad("`%iter` takes K INIT BASE STEP".into()));
            };
            let k = match k {
                Term::Var(s) if s == "%k" => ctx.k.ok_or_else(|| bad("`%k` without a k range".into()))?,
                Term::Var(s) => s.parse().map_err(|_| bad(format!("bad iteration count `{s}`")))?,
                _ => return Err(bad("bad iteration count".into())),
            };
            let base = expand(base, ctx)?;
            let mut cur = expand(init, ctx)?;
            for _ in 0..k {
                let inner = Ctx {
                    gens: ctx.gens,
                    fold: ctx.fold,
                    k: ctx.k,
                    base: Some(&base),
                    prev: Some(&cur),
                };
                cur = expand(step, &inner)?;
            }
            Ok(cur)
        }
        Term::App(f, args) => Ok(Term::App(
            f.clone(),
            args.iter().map(|a| expand(a, ctx)).collect::<Result<_>>()?,
        )),
    }
}

fn expand_equation(raw: &RawEquation, ctx: &Ctx<'_>, leq: &Leq) -> Result<Equation> {
    let parse = |s: &str| -> Result<Term> { expand(&Term::parse(s)?, ctx) };
    Ok(match raw {
        RawEquation::Eq(l, r) => Equation::new(parse(l)?, parse(r)?),
        RawEquation::Leq(l, r) => {
            let (l, r) = (parse(l)?, parse(r)?);
            match leq {
                Leq::Join(j) => Equation::new(Term::app(j, vec![l, r.clone()]), r),
                Leq::Meet(m) => Equation::new(Term::app(m, vec![l.clone(), r]), l),
            }
        }
    })
}

/// Non-empty subsets of `0..n`, by size and then lexicographically.
fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=n {
        let mut c: Vec<usize> = (0..k).collect();
        loop {
            out.push(c.clone());
            if !crate::algebra::next_combination(&mut c, n) {
                break;
            }
        }
    }
    out
}

impl CandidateSource {
    /// Expands every family up to `n_max` and validates the result.
    pub fn materialize(&self) -> Result<Candidate> {
        let mut families = BTreeMap::new();
        let ks: Vec<Option<usize>> = match self.template.k {
            Some((lo, hi)) if lo <= hi => (lo..=hi).map(Some).collect(),
            Some(_) => return Err(bad("empty k range".into())),
            None => vec![None],
        };
        for key in self.families.keys() {
            if key != "*" && key.parse::<usize>().is_err() {
                return Err(bad(format!("family key `{key}` is neither an arity nor `*`")));
            }
        }
        for n in 0..=self.n_max {
            let src = match self.families.get(&n.to_string()) {
                Some(s) => s,
                None if n >= 1 => match self.families.get("*") {
                    Some(s) => s,
                    None => continue,
                },
                None => continue,
            };
            let all: Vec<String> = (0..n).map(x_var).collect();
            let gen_sets: Vec<Vec<String>> = if self.template.subsets && n >= 1 {
                nonempty_subsets(n)
                    .into_iter()
                    .map(|s| s.into_iter().map(x_var).collect())
                    .collect()
            } else {
                vec![all]
            };
            let mut sets: Vec<EqSet> = Vec::new();
            for raw_set in src {
                for &k in &ks {
                    for gens in &gen_sets {
                        let ctx = Ctx {
                            gens,
                            fold: self.template.fold.as_deref(),
                            k,
                            base: None,
                            prev: None,
                        };
                        let set = raw_set
                            .iter()
                            .map(|r| expand_equation(r, &ctx, &self.template.leq))
                            .collect::<Result<EqSet>>()?;
                        if !sets.contains(&set) {
                            sets.push(set);
                        }
                    }
                }
            }
            families.insert(n, sets);
        }
        let c = Candidate {
            name: self.name.clone(),
            variant: self.variant,
            n_max: self.n_max,
            params: self.params,
            families,
        };
        c.validate()?;
        Ok(c)
    }
}

impl Candidate {
    pub fn validate(&self) -> Result<()> {
        if !self.variant.is_parametrized() && self.params > 0 {
            return Err(bad(format!(
                "variant {} takes no parameters",
                self.variant.as_str()
            )));
        }
        for (&n, sets) in &self.families {
            if !self.variant.is_local() && sets.len() != 1 {
                return Err(bad(format!(
                    "{} candidate needs exactly one equation set for n = {n}, found {}",
                    self.variant.as_str(),
                    sets.len()
                )));
            }
            let allowed = slot_names(n, self.params);
            for set in sets {
                for eq in set {
                    let stray = eq
                        .vars()
                        .into_iter()
                        .find(|v| is_variable_name(v) && !allowed.contains(v));
                    if let Some(v) = stray {
                        return Err(bad(format!("variable `{v}` not allowed at n = {n} in {eq}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Arities checked by the sweeps.
    pub fn arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.families.keys().copied().filter(move |&n| n <= self.n_max)
    }

    /// The same family viewed as a local candidate (one set per arity is a
    /// special case of a family).
    pub fn as_local(&self) -> Candidate {
        let mut c = self.clone();
        c.variant = if self.variant.is_parametrized() {
            Variant::ParametrizedLocal
        } else {
            Variant::Local
        };
        c
    }

    pub fn compile(&self, a: &Algebra) -> Result<CompiledCandidate> {
        let mut per_n = BTreeMap::new();
        for (&n, sets) in &self.families {
            let slots = slot_names(n, self.params);
            let mut csets = Vec::new();
            for set in sets {
                let mut eqs = Vec::new();
                for eq in set {
                    eqs.push((
                        Compiled::new(&eq.lhs, a.signature(), &slots)?,
                        Compiled::new(&eq.rhs, a.signature(), &slots)?,
                    ));
                }
                csets.push(eqs);
            }
            per_n.insert(n, csets);
        }
        Ok(CompiledCandidate {
            params: self.params,
            per_n,
        })
    }
}

/// A candidate compiled against one algebra.
#[derive(Debug, Clone)]
pub struct CompiledCandidate {
    params: usize,
    per_n: BTreeMap<usize, Vec<Vec<(Compiled, Compiled)>>>,
}

/// Which set and which parameters made a definition hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Satisfier {
    pub set_index: usize,
    pub params: Vec<Elem>,
}

impl CompiledCandidate {
    pub fn params(&self) -> usize {
        self.params
    }

    pub fn set_count(&self, n: usize) -> usize {
        self.per_n.get(&n).map_or(0, Vec::len)
    }

    /// The first set (and lexicographically first parameter tuple) whose
    /// equation pairs all lie in `rel` at `(ā, b, c̄)`; plain satisfaction
    /// uses `rel = None` (equality).
    pub fn satisfied(
        &self,
        a: &Algebra,
        tuple: &[Elem],
        b: Elem,
        rel: Option<&Partition>,
    ) -> Option<Satisfier> {
        let sets = self.per_n.get(&tuple.len())?;
        let mut vals: Vec<Elem> = tuple.to_vec();
        vals.push(b);
        let fixed = vals.len();
        vals.resize(fixed + self.params, 0);
        let mut stack = Vec::new();
        for (i, set) in sets.iter().enumerate() {
            for v in &mut vals[fixed..] {
                *v = 0;
            }
            loop {
                let ok = set.iter().all(|(l, r)| {
                    let (x, y) = (l.eval_with(a, &vals, &mut stack), r.eval_with(a, &vals, &mut stack));
                    match rel {
                        None => x == y,
                        Some(p) => p.related(x, y),
                    }
                });
                if ok {
                    return Some(Satisfier {
                        set_index: i,
                        params: vals[fixed..].to_vec(),
                    });
                }
                if !next_tuple(&mut vals[fixed..], a.size()) {
                    break;
                }
            }
        }
        None
    }

    /// Whether set `i` of Ψ_n holds at `(ā, b)` for some parameters.
    pub fn set_satisfied(&self, a: &Algebra, i: usize, tuple: &[Elem], b: Elem) -> bool {
        let Some(set) = self.per_n.get(&tuple.len()).and_then(|s| s.get(i)) else {
            return false;
        };
        let mut vals: Vec<Elem> = tuple.to_vec();
        vals.push(b);
        let fixed = vals.len();
        vals.resize(fixed + self.params, 0);
        let mut stack = Vec::new();
        loop {
            if set
                .iter()
                .all(|(l, r)| l.eval_with(a, &vals, &mut stack) == r.eval_with(a, &vals, &mut stack))
            {
                return true;
            }
            if !next_tuple(&mut vals[fixed..], a.size()) {
                return false;
            }
        }
    }
}

/// Convenience for building a source in code.
pub fn raw_eq(l: &str, r: &str) -> RawEquation {
    RawEquation::Eq(l.to_owned(), r.to_owned())
}

pub fn raw_leq(l: &str, r: &str) -> RawEquation {
    RawEquation::Leq(l.to_owned(), r.to_owned())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn source(families: Vec<(&str, Vec<Vec<RawEquation>>)>, template: Template, variant: Variant) -> CandidateSource {
        CandidateSource {
            name: "t".into(),
            variant,
            n_max: 2,
            params: 0,
            families: families.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            template,
        }
    }

    #[test]
    fn kleene_shape() {
        let src = source(
            vec![("*", vec![vec![raw_leq("%X", "(%fold or (neg %x) y)")]])],
            Template {
                fold: Some("and".into()),
                ..Template::default()
            },
            Variant::Global,
        );
        let c = src.materialize().unwrap();
        assert!(!c.families.contains_key(&0));
        let eq = &c.families[&2][0][0];
        assert_eq!(
            format!("{eq}"),
            "(or (and x1 x2) (or (neg x1) (or (neg x2) y))) ≈ (or (neg x1) (or (neg x2) y))"
        );
    }

    #[test]
    fn subsets_and_dedup() {
        let src = source(
            vec![(
                "*",
                vec![vec![raw_eq("y", "(or y (neg y))")], vec![raw_leq("%X", "y")]],
            )],
            Template {
                fold: Some("and".into()),
                subsets: true,
                ..Template::default()
            },
            Variant::Local,
        );
        let c = src.materialize().unwrap();
        assert_eq!(c.families[&1].len(), 2);
        assert_eq!(c.families[&2].len(), 4);
    }

    #[test]
    fn iteration_counts() {
        let src = source(
            vec![("*", vec![vec![raw_leq("(%iter %k %X %X (and %base (box %prev)))", "y")]])],
            Template {
                fold: Some("and".into()),
                leq: Leq::Meet("and".into()),
                k: Some((0, 2)),
                ..Template::default()
            },
            Variant::Local,
        );
        let c = src.materialize().unwrap();
        let sets = &c.families[&1];
        assert_eq!(sets.len(), 3);
        assert_eq!(format!("{}", sets[1][0].lhs), "(and (and x1 (box x1)) y)");
    }

    #[test]
    fn global_needs_one_set() {
        let src = source(
            vec![("1", vec![vec![raw_eq("x1", "y")], vec![raw_eq("y", "y")]])],
            Template::default(),
            Variant::Global,
        );
        assert!(matches!(src.materialize(), Err(Error::InvalidCandidate(_))));
    }

    #[test]
    fn stray_variables_rejected() {
        let src = source(vec![("1", vec![vec![raw_eq("x2", "y")]])], Template::default(), Variant::Local);
        assert!(src.materialize().is_err());
    }

    #[test]
    fn constants_pass_validation() {
        assert!(is_variable_name("y") && is_variable_name("x12") && is_variable_name("z1"));
        assert!(!is_variable_name("one") && !is_variable_name("x") && !is_variable_name("zero"));
        let src = source(vec![("0", vec![vec![raw_eq("(or one y)", "y")]])], Template::default(), Variant::Global);
        assert!(src.materialize().is_ok());
    }
}
