//! Command-line definitions and dispatch.

use std::io::Write;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use edcf_core::budget::DEFAULT_STEPS;
use edcf_core::checks::{
    absolute_fep_check, check_edcf, check_edcf_theta_form, compare_candidates,
    dually_brouwerian_check, factor_determined_check, fep_check, leibniz_probe,
    search_counterexample, smallest_relcong_check, test_algebra_check, test_algebra_sweep, Focus,
    Outcome, ProbeMode, Property, TestCandidate, Testbed, Verdict, Witness,
};
use edcf_core::class::member;
use edcf_core::congruence::all_congruences;
use edcf_core::{Algebra, Budget, ElemSet, Error, Limits, Variant};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::json;

use crate::io::{parse_elements, resolve_element};
use crate::report::Report;
use crate::reproduce;
use crate::workspace::Workspace;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "edcf",
    version,
    about = "Filters, congruences and equational definability checks on finite algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Elementary step budget for every exponential computation.
    #[arg(long, global = true, default_value_t = DEFAULT_STEPS)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Relabel loaded algebras by a random permutation drawn from this seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a filter and show the closure iteration.
    Fg(FgArgs),
    /// List every filter of a logic on an algebra.
    Filters(AlgebraLogic),
    /// List every congruence of an algebra.
    Congruences {
        #[arg(long)]
        algebra: String,
    },
    /// Run one of the property checkers.
    Check(Box<CheckArgs>),
    /// Re-run a pinned example from the built-in catalog (`all` for every one).
    Reproduce { id: String },
    /// List built-in algebras, logics, classes, candidates, testbeds or examples.
    List { kind: Option<String> },
    /// Re-run a JSON report and compare the verdict.
    Replay { report: String },
}

#[derive(Debug, Args)]
pub struct FgArgs {
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub logic: String,
    /// Comma-separated labels or indices; empty for none, `carrier` for all.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub gen: String,
}

#[derive(Debug, Args)]
pub struct AlgebraLogic {
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub logic: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Checker {
    Edcf,
    EdcfTheta,
    Compare,
    Afep,
    Fep,
    Fdc,
    Testalg,
    Minrelcong,
    Brouwerian,
    Leibniz,
    Member,
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchProperty {
    Fdc,
    FdcRelative,
    Edcf,
    Afep,
    Leibniz,
    Brouwerian,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub checker: Checker,
    /// Algebras by name or JSON path (repeatable or comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub algebra: Vec<String>,
    #[arg(long)]
    pub logic: Option<String>,
    #[arg(long)]
    pub class: Option<String>,
    /// Candidate(s); `compare` takes two.
    #[arg(long, value_delimiter = ',')]
    pub candidate: Vec<String>,
    #[arg(long)]
    pub testbed: Option<String>,
    /// Generators of a testbed built on the fly.
    #[arg(long, value_delimiter = ',')]
    pub generators: Vec<String>,
    /// Product arity: of the generated testbed, or of the products checked by `fdc`.
    #[arg(long)]
    pub arity: Option<usize>,
    /// Add all subalgebras to a generated testbed.
    #[arg(long)]
    pub subalgebras: bool,
    /// Override the candidate's variant.
    #[arg(long)]
    pub variant: Option<String>,
    /// Largest generator count swept.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub max_params: Option<usize>,
    /// Relative (base-filter) form of `fdc`.
    #[arg(long)]
    pub relative: bool,
    /// `leibniz` mode.
    #[arg(long, default_value = "monotone")]
    pub mode: String,
    /// Property hunted by `search`.
    #[arg(long, value_enum)]
    pub property: Option<SearchProperty>,
    /// Restrict the sweep to these generator tuples (repeatable; comma-separated elements).
    #[arg(long)]
    pub tuple: Vec<String>,
    /// Restrict the sweep to these elements b.
    #[arg(long, value_delimiter = ',')]
    pub element: Vec<String>,
    /// Restrict the sweep to these algebras.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Candidate test algebra for `testalg`.
    #[arg(long)]
    pub test_algebra: Option<String>,
    /// Test elements p̄ of the candidate test algebra.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub p: String,
    /// Test element q of the candidate test algebra.
    #[arg(long)]
    pub q: Option<String>,
    /// Arity n of the test algebras tried by the `testalg` sweep.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
}

/// Maps an error to its exit code.
pub fn exit_code_for(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::SizeBudgetExceeded(_)) => EXIT_BUDGET,
        _ => EXIT_CONFIG,
    }
}

pub fn exit_code_for_outcome(o: Outcome) -> i32 {
    match o {
        Outcome::Pass => EXIT_PASS,
        Outcome::Fail => EXIT_FAIL,
        Outcome::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Runs a parsed command line. `args` are the raw arguments after the
/// program name, recorded in reports for replay.
pub fn execute(cli: &Cli, args: &[String], out: &mut dyn Write) -> Result<i32> {
    let mut ws = Workspace::builtin()?;
    let budget = Budget::new(cli.budget);
    let ctx = Ctx {
        format: cli.format,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Fg(a) => cmd_fg(&mut ws, a, &ctx, &budget, out),
        Command::Filters(a) => cmd_filters(&mut ws, a, &ctx, &budget, out),
        Command::Congruences { algebra } => cmd_congruences(&mut ws, algebra, &ctx, &budget, out),
        Command::Check(c) => {
            let (report, code) = cmd_check(&mut ws, c, &ctx, &budget, args)?;
            emit(&ctx, out, &report)?;
            Ok(code)
        }
        Command::Reproduce { id } => cmd_reproduce(id, &ctx, out),
        Command::List { kind } => cmd_list(&ws, kind.as_deref(), out),
        Command::Replay { report } => cmd_replay(report, cli, out),
    }
}

/// Parses `args` (without the program name) and runs them.
pub fn run(args: &[String], out: &mut dyn Write) -> Result<i32> {
    let mut full = vec![String::from("edcf")];
    full.extend_from_slice(args);
    let cli = Cli::try_parse_from(&full)?;
    execute(&cli, args, out)
}

pub(crate) struct Ctx {
    pub format: Format,
    pub seed: Option<u64>,
}

fn emit(ctx: &Ctx, out: &mut dyn Write, r: &Report) -> Result<()> {
    match ctx.format {
        Format::Text => write!(out, "{}", r.to_text())?,
        Format::Json => writeln!(out, "{}", r.to_json())?,
    }
    Ok(())
}

fn load_algebra(ws: &mut Workspace, name: &str, ctx: &Ctx) -> Result<Algebra> {
    let a = ws.algebra(name)?;
    match ctx.seed {
        None => Ok(a),
        Some(seed) => {
            let mut perm: Vec<usize> = (0..a.size()).collect();
            perm.shuffle(&mut StdRng::seed_from_u64(seed));
            Ok(a.permuted(&perm)?)
        }
    }
}

fn cmd_fg(ws: &mut Workspace, a: &FgArgs, ctx: &Ctx, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let alg = load_algebra(ws, &a.algebra, ctx)?;
    let logic = ws.logic(&a.logic)?;
    let gens = parse_elements(&alg, &a.gen)?;
    let bound = logic.bind(&alg, budget)?;
    let x = ElemSet::from_elems(alg.size(), gens.iter().copied());
    let r = bound.fg_traced(&x);
    match ctx.format {
        Format::Text => {
            writeln!(out, "Fg^{}_{}({}) = {}", alg.name(), logic.name, alg.format_set(&x), alg.format_set(&r.filter))?;
            for (i, c) in r.trace.iter().enumerate() {
                writeln!(out, "  C_{i} = {}", alg.format_set(c))?;
            }
            if !bound.is_exact() {
                writeln!(out, "  (matrix filters computed under a variable bound: inconclusive)")?;
            }
        }
        Format::Json => {
            let labels = |s: &ElemSet| s.iter().map(|e| alg.label(e)).collect::<Vec<_>>();
            let doc = json!({
                "algebra": alg.name(),
                "logic": logic.name,
                "generators": x.to_vec(),
                "filter": r.filter.to_vec(),
                "filter_labels": labels(&r.filter),
                "trace": r.trace.iter().map(ElemSet::to_vec).collect::<Vec<_>>(),
                "exact": bound.is_exact(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_filters(ws: &mut Workspace, a: &AlgebraLogic, ctx: &Ctx, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let alg = load_algebra(ws, &a.algebra, ctx)?;
    let logic = ws.logic(&a.logic)?;
    let bound = logic.bind(&alg, budget)?;
    let fs = bound.all_filters(&Limits::default(), budget)?;
    match ctx.format {
        Format::Text => {
            for f in &fs {
                writeln!(out, "{}", alg.format_set(f))?;
            }
            if !bound.is_exact() {
                writeln!(out, "(matrix filters computed under a variable bound: inconclusive)")?;
            }
        }
        Format::Json => {
            let doc = json!({
                "algebra": alg.name(),
                "logic": logic.name,
                "filters": fs.iter().map(ElemSet::to_vec).collect::<Vec<_>>(),
                "exact": bound.is_exact(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(if bound.is_exact() { EXIT_PASS } else { EXIT_INCONCLUSIVE })
}

fn cmd_congruences(ws: &mut Workspace, name: &str, ctx: &Ctx, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let alg = load_algebra(ws, name, ctx)?;
    let cs = all_congruences(&alg, &Limits::default(), budget)?;
    match ctx.format {
        Format::Text => {
            for c in cs.iter() {
                writeln!(out, "{c}  {}", c.format_with(&alg))?;
            }
        }
        Format::Json => {
            let blocks: Vec<Vec<Vec<usize>>> = cs.iter().map(|c| c.blocks()).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "algebra": alg.name(), "congruences": blocks }))?)?;
        }
    }
    Ok(EXIT_PASS)
}

fn limits_of(c: &CheckArgs) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = c.n_max {
        l.n_max = n;
    }
    if let Some(p) = c.max_params {
        l.max_params = p;
    }
    l
}

fn need<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref().with_context(|| format!("this checker needs --{flag}"))
}

fn testbed_of(ws: &mut Workspace, c: &CheckArgs, ctx: &Ctx, budget: &Budget, arity: Option<usize>) -> Result<Testbed> {
    if let Some(t) = &c.testbed {
        if ctx.seed.is_some() {
            let doc = ws.testbed_doc(t)?;
            let gens = doc
                .generators
                .iter()
                .map(|g| load_algebra(ws, g, ctx))
                .collect::<Result<Vec<_>>>()?;
            return Ok(edcf_core::checks::generate_testbed(&gens, doc.arity, doc.subalgebras, budget)?);
        }
        return ws.testbed(t, budget);
    }
    if !c.generators.is_empty() {
        let gens = c
            .generators
            .iter()
            .map(|g| load_algebra(ws, g, ctx))
            .collect::<Result<Vec<_>>>()?;
        let arity = arity.or(c.arity).unwrap_or(1);
        return Ok(edcf_core::checks::generate_testbed(&gens, arity, c.subalgebras, budget)?);
    }
    if !c.algebra.is_empty() {
        let algs = c
            .algebra
            .iter()
            .map(|g| load_algebra(ws, g, ctx))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Testbed::from_algebras(algs));
    }
    bail!("no testbed: give --testbed, --generators or --algebra")
}

/// Focus from `--tuple`, `--element` and `--only`. Labels are resolved
/// against the first `--algebra`, when one is given.
fn focus_of(ws: &mut Workspace, c: &CheckArgs, ctx: &Ctx) -> Result<Focus> {
    let reference = match c.algebra.first() {
        Some(a) => Some(load_algebra(ws, a, ctx)?),
        None => None,
    };
    let elem = |s: &str| -> Result<usize> {
        match &reference {
            Some(a) => resolve_element(a, s),
            None => s
                .trim()
                .parse()
                .with_context(|| format!("`{s}` is not an element index (give --algebra to use labels)")),
        }
    };
    let mut f = Focus::none();
    if !c.tuple.is_empty() {
        let mut ts = Vec::new();
        for t in &c.tuple {
            let t = t.trim();
            let tuple = if t.is_empty() {
                Vec::new()
            } else {
                t.split(',').map(elem).collect::<Result<Vec<_>>>()?
            };
            ts.push(tuple);
        }
        f.tuples = Some(ts);
    }
    if !c.element.is_empty() {
        f.elements = Some(c.element.iter().map(|s| elem(s)).collect::<Result<_>>()?);
    }
    if !c.only.is_empty() {
        f.algebras = Some(c.only.clone());
    }
    Ok(f)
}

fn verdict(check: &str, outcome: Outcome, witness: Option<Witness>, notes: Vec<String>) -> Verdict {
    Verdict {
        check: check.to_owned(),
        outcome,
        witness,
        notes,
        cells: 0,
    }
}

pub(crate) fn cmd_check(
    ws: &mut Workspace,
    c: &CheckArgs,
    ctx: &Ctx,
    budget: &Budget,
    args: &[String],
) -> Result<(Report, i32)> {
    let limits = limits_of(c);
    let focus = focus_of(ws, c, ctx)?;
    let mut lookup_pool: Vec<Algebra> = Vec::new();
    let v = match c.checker {
        Checker::Edcf => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let cand = ws.candidate(c.candidate.first().context("edcf needs --candidate")?)?;
            let variant = match &c.variant {
                Some(s) => Variant::parse(s)?,
                None => cand.variant,
            };
            let tb = testbed_of(ws, c, ctx, budget, None)?;
            lookup_pool.extend(tb.algebras().cloned());
            check_edcf(&logic, &tb, &cand, variant, &limits, budget, &focus)?
        }
        Checker::EdcfTheta => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let k = ws.class(need(&c.class, "class")?)?;
            let cand = ws.candidate(c.candidate.first().context("edcf-theta needs --candidate")?)?;
            let variant = match &c.variant {
                Some(s) => Variant::parse(s)?,
                None => cand.variant,
            };
            let algs = c
                .algebra
                .iter()
                .map(|a| load_algebra(ws, a, ctx))
                .collect::<Result<Vec<_>>>()?;
            lookup_pool.extend(algs.iter().cloned());
            check_edcf_theta_form(&logic, &algs, &k, &cand, variant, &limits, budget, &focus)?
        }
        Checker::Compare => {
            let [c1, c2] = c.candidate.as_slice() else {
                bail!("compare needs exactly two candidates");
            };
            let (c1, c2) = (ws.candidate(c1)?, ws.candidate(c2)?);
            let tb = testbed_of(ws, c, ctx, budget, None)?;
            lookup_pool.extend(tb.algebras().cloned());
            compare_candidates(&c1, &c2, &tb, budget)?
        }
        Checker::Afep => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let tb = testbed_of(ws, c, ctx, budget, None)?;
            lookup_pool.extend(tb.algebras().cloned());
            absolute_fep_check(&logic, &tb, &limits, budget, &focus)?
        }
        Checker::Fep => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let tb = testbed_of(ws, c, ctx, budget, None)?;
            lookup_pool.extend(tb.algebras().cloned());
            fep_check(&logic, &tb, budget, &focus)?
        }
        Checker::Fdc => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let tb = testbed_of(ws, c, ctx, budget, Some(1))?;
            lookup_pool.extend(tb.algebras().cloned());
            let arity = c.arity.unwrap_or(2);
            let v = factor_determined_check(&logic, &tb, !c.relative, arity, &limits, budget, &focus)?;
            // The witness usually sits on a product the checker built itself.
            if let Some(w) = &v.witness {
                if lookup_pool.iter().all(|a| a.name() != w.algebra) {
                    let members: Vec<Algebra> = tb.algebras().cloned().collect();
                    if let Ok(products) =
                        edcf_core::checks::generate_testbed(&members, arity, false, &Budget::new(budget.limit()))
                    {
                        lookup_pool.extend(products.algebras().cloned());
                    }
                }
            }
            v
        }
        Checker::Testalg => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let tb = testbed_of(ws, c, ctx, budget, None)?;
            lookup_pool.extend(tb.algebras().cloned());
            match &c.test_algebra {
                Some(name) => {
                    let a = load_algebra(ws, name, ctx)?;
                    let p = parse_elements(&a, &c.p)?;
                    let q = resolve_element(&a, need(&c.q, "q")?)?;
                    lookup_pool.push(a.clone());
                    test_algebra_check(&logic, &tb, &TestCandidate { algebra: a, p, q }, budget)?
                }
                None => test_algebra_sweep(&logic, &tb, c.n, budget)?,
            }
        }
        Checker::Minrelcong => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let k = ws.class(need(&c.class, "class")?)?;
            let a = load_algebra(ws, c.algebra.first().context("minrelcong needs --algebra")?, ctx)?;
            lookup_pool.push(a.clone());
            smallest_relcong_check(&logic, &a, &k, &limits, budget, &focus)?
        }
        Checker::Brouwerian => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let tb = testbed_of(ws, c, ctx, budget, None)?;
            lookup_pool.extend(tb.algebras().cloned());
            let mut last = verdict("dually-brouwerian", Outcome::Pass, None, Vec::new());
            for a in tb.algebras() {
                let v = dually_brouwerian_check(&logic, a, budget)?;
                let failed = v.failed();
                last = Verdict {
                    cells: last.cells + v.cells,
                    ..v
                };
                if failed {
                    break;
                }
            }
            last
        }
        Checker::Leibniz => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let mode = match c.mode.as_str() {
                "monotone" => ProbeMode::Monotone,
                "injective" => ProbeMode::Injective,
                m => bail!("--mode is monotone or injective, not `{m}`"),
            };
            let tb = testbed_of(ws, c, ctx, budget, None)?;
            lookup_pool.extend(tb.algebras().cloned());
            leibniz_probe(&logic, &tb, mode, budget)?
        }
        Checker::Member => {
            let k = ws.class(need(&c.class, "class")?)?;
            let tb = testbed_of(ws, c, ctx, budget, None)?;
            lookup_pool.extend(tb.algebras().cloned());
            let mut v = verdict("member", Outcome::Pass, None, vec![k.describe()]);
            for a in tb.algebras() {
                v.cells += 1;
                if !member(a, &k, budget)? {
                    v.outcome = Outcome::Fail;
                    v.witness = Some(Witness {
                        algebra: a.name().to_owned(),
                        side: String::from("not a member of the class"),
                        ..Witness::default()
                    });
                    break;
                }
            }
            v
        }
        Checker::Search => {
            let logic = ws.logic(need(&c.logic, "logic")?)?;
            let prop = match c.property.context("search needs --property")? {
                SearchProperty::Fdc => Property::FactorDetermined { absolute: true },
                SearchProperty::FdcRelative => Property::FactorDetermined { absolute: false },
                SearchProperty::Edcf => {
                    let mut cand = ws.candidate(c.candidate.first().context("edcf search needs --candidate")?)?;
                    if let Some(s) = &c.variant {
                        cand.variant = Variant::parse(s)?;
                    }
                    Property::Edcf(cand)
                }
                SearchProperty::Afep => Property::AbsoluteFep,
                SearchProperty::Leibniz => Property::LeibnizMonotone,
                SearchProperty::Brouwerian => Property::DuallyBrouwerian,
            };
            let gens = c
                .generators
                .iter()
                .map(|g| load_algebra(ws, g, ctx))
                .collect::<Result<Vec<_>>>()?;
            lookup_pool.extend(gens.iter().cloned());
            let v = search_counterexample(&logic, &prop, &gens, c.arity.unwrap_or(2), c.subalgebras, &limits, budget)?;
            // Products and subalgebras the search built are rebuilt for labelling.
            if let Some(w) = &v.witness {
                if lookup_pool.iter().all(|a| a.name() != w.algebra) && !gens.is_empty() {
                    let max = c.arity.unwrap_or(2);
                    if let Ok(tb) = edcf_core::checks::generate_testbed(&gens, max, true, &Budget::new(budget.limit())) {
                        lookup_pool.extend(tb.algebras().cloned());
                    }
                }
            }
            v
        }
    };
    let report = Report::new(&v, |n| lookup_pool.iter().find(|a| a.name() == n), args);
    let code = exit_code_for_outcome(v.outcome);
    Ok((report, code))
}

fn cmd_reproduce(id: &str, ctx: &Ctx, out: &mut dyn Write) -> Result<i32> {
    let ids: Vec<&str> = if id == "all" {
        reproduce::CATALOG.iter().map(|e| e.id).collect()
    } else {
        vec![id]
    };
    let mut all_ok = true;
    let mut docs = Vec::new();
    for id in ids {
        let r = reproduce::run(id)?;
        all_ok &= r.ok;
        match ctx.format {
            Format::Text => write!(out, "{}", r.to_text())?,
            Format::Json => docs.push(r.to_json()),
        }
    }
    if ctx.format == Format::Json {
        writeln!(out, "{}", serde_json::to_string_pretty(&docs)?)?;
    }
    Ok(if all_ok { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_list(ws: &Workspace, kind: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let show = |k: &str| kind.is_none_or(|x| x == k);
    if show("algebras") {
        writeln!(out, "algebras:")?;
        for (n, d) in &ws.algebras {
            let sig: Vec<String> = d.signature.iter().map(|s| format!("{}/{}", s.name, s.arity)).collect();
            writeln!(out, "  {n} (size {}; {})", d.size, sig.join(" "))?;
        }
    }
    for (k, names) in [
        ("logics", ws.logics.keys().cloned().collect::<Vec<_>>()),
        ("classes", ws.classes.keys().cloned().collect()),
        ("candidates", ws.candidates.keys().cloned().collect()),
        ("testbeds", ws.testbeds.keys().cloned().collect()),
    ] {
        if show(k) {
            writeln!(out, "{k}:")?;
            for n in names {
                writeln!(out, "  {n}")?;
            }
        }
    }
    if show("examples") {
        writeln!(out, "examples:")?;
        for e in reproduce::CATALOG {
            writeln!(out, "  {}: {}", e.id, e.summary)?;
        }
    }
    if let Some(k) = kind {
        if !["algebras", "logics", "classes", "candidates", "testbeds", "examples"].contains(&k) {
            bail!("unknown list kind `{k}`");
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_replay(path: &str, cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading `{path}`"))?;
    let old: Report = serde_json::from_str(&text).with_context(|| format!("parsing `{path}`"))?;
    let mut full = vec![String::from("edcf")];
    full.extend(old.args.iter().cloned());
    let replayed_cli = Cli::try_parse_from(&full)?;
    let Command::Check(c) = &replayed_cli.command else {
        bail!("only `check` reports can be replayed");
    };
    let mut ws = Workspace::builtin()?;
    let ctx = Ctx {
        format: cli.format,
        seed: replayed_cli.seed,
    };
    let budget = Budget::new(replayed_cli.budget);
    let (new, _) = cmd_check(&mut ws, c, &ctx, &budget, &old.args)?;
    if new.same_verdict(&old) {
        writeln!(out, "replay: identical verdict ({})", new.outcome)?;
        Ok(EXIT_PASS)
    } else {
        writeln!(out, "replay: verdict differs")?;
        writeln!(out, "--- recorded\n{}", old.to_text())?;
        writeln!(out, "+++ replayed\n{}", new.to_text())?;
        Ok(EXIT_FAIL)
    }
}
