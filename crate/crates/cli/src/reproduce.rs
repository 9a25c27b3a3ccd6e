//! Pinned configurations for the finite examples shipped with the corpus.
//!
//! Each example runs one or more checks and compares every outcome with the
//! expected one. Extra assertions pin the exact witnesses where the example
//! names them.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use edcf_core::algebra::direct_product;
use edcf_core::budget::DEFAULT_STEPS;
use edcf_core::checks::{
    absolute_fep_check, check_edcf, compare_candidates, dually_brouwerian_check,
    factor_determined_check, smallest_relcong_check, Focus, Outcome, Testbed, Verdict,
};
use edcf_core::class::{cg_k, k_congruences, theta_k};
use edcf_core::hom::enumerate_homomorphisms;
use edcf_core::{Algebra, Budget, ElemSet, Limits, Partition, Variant};
use serde::Serialize;

use crate::report::Report;
use crate::workspace::Workspace;

#[derive(Debug, Clone, Copy)]
pub struct Example {
    pub id: &'static str,
    pub summary: &'static str,
}

pub const CATALOG: &[Example] = &[
    Example {
        id: "kleene-edcf",
        summary: "KL has the global EDCF x1∧…∧xn ≤ ¬x1∨…∨¬xn∨y on {K3, K3², subalgebras}",
    },
    Example {
        id: "lp-edcf",
        summary: "LP has the global EDCF x1∧…∧xn∧¬y ≤ y on {K3, K3², subalgebras}",
    },
    Example {
        id: "pwk-local-edcf",
        summary: "PWK has a local EDCF and the absolute FEP on {WK3, WK3², subalgebras}",
    },
    Example {
        id: "pwk-no-pedcf",
        summary: "PWK compact filters are not factor determined on WK3×WK3 (⟨½,0⟩, ⟨1,0⟩)",
    },
    Example {
        id: "box5-no-min",
        summary: "no smallest K-congruence on the 5-element □-algebra (□1, □2 truncation)",
    },
    Example {
        id: "m3-not-brouwerian",
        summary: "order-logic filters: M3 is not dually Brouwerian, B4 is",
    },
    Example {
        id: "modal-local-only",
        summary: "□_k(x1∧…∧xn) ≤ y works locally on chain frames; each fixed k fails",
    },
    Example {
        id: "luk-local-only",
        summary: "(x1∧…∧xn)^k ≤ y works locally on Ł3–Ł5; each fixed k fails on Ł_{k+2}",
    },
    Example {
        id: "kl-only-filter",
        summary: "the KL-filters on K3 are exactly {1} and K3",
    },
];

#[derive(Debug, Clone, Serialize)]
pub struct Step {
    pub what: String,
    pub expected: String,
    pub got: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Reproduction {
    pub id: String,
    pub ok: bool,
    pub steps: Vec<Step>,
}

impl Reproduction {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "[{}] {}", self.id, if self.ok { "OK" } else { "MISMATCH" });
        for st in &self.steps {
            let mark = if st.ok { "✓" } else { "✗" };
            let _ = writeln!(s, "  {mark} {}: expected {}, got {}", st.what, st.expected, st.got);
            for d in &st.details {
                let _ = writeln!(s, "      {d}");
            }
            if !st.ok {
                let _ = writeln!(s, "      - expected: {}", st.expected);
                let _ = writeln!(s, "      + got:      {}", st.got);
                if let Some(r) = &st.report {
                    for line in r.to_text().lines() {
                        let _ = writeln!(s, "      | {line}");
                    }
                }
            }
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reproductions serialize")
    }
}

/// Runs one catalog entry.
pub fn run(id: &str) -> Result<Reproduction> {
    let mut ws = Workspace::builtin()?;
    let budget = Budget::new(DEFAULT_STEPS * 20);
    let steps = match id {
        "kleene-edcf" => global_edcf(&mut ws, &budget, "KL", "kl-global")?,
        "lp-edcf" => global_edcf(&mut ws, &budget, "LP", "lp-global")?,
        "pwk-local-edcf" => pwk_local(&mut ws, &budget)?,
        "pwk-no-pedcf" => pwk_no_pedcf(&mut ws, &budget)?,
        "box5-no-min" => box5_no_min(&mut ws, &budget)?,
        "m3-not-brouwerian" => m3_not_brouwerian(&mut ws, &budget)?,
        "modal-local-only" => modal_local_only(&mut ws, &budget)?,
        "luk-local-only" => luk_local_only(&mut ws, &budget)?,
        "kl-only-filter" => kl_only_filter(&mut ws, &budget)?,
        _ => {
            let ids: Vec<&str> = CATALOG.iter().map(|e| e.id).collect();
            bail!("unknown example `{id}` (known: {})", ids.join(", "))
        }
    };
    Ok(Reproduction {
        id: id.to_owned(),
        ok: steps.iter().all(|s| s.ok),
        steps,
    })
}

fn verdict_step(what: String, expected: Outcome, v: &Verdict, pool: &[&Algebra]) -> Step {
    let report = Report::new(v, |n| pool.iter().copied().find(|a| a.name() == n), &[]);
    let mut details = Vec::new();
    if let Some(w) = &report.witness {
        let mut line = format!("witness on {}: ā = ({})", w.algebra, w.tuple_labels.join(", "));
        if let Some(b) = &w.element_label {
            let _ = write!(line, ", b = {b}");
        }
        details.push(line);
        details.push(format!("side: {}", w.side));
    }
    Step {
        what,
        expected: expected.as_str().to_owned(),
        got: v.outcome.as_str().to_owned(),
        ok: v.outcome == expected,
        details,
        report: Some(report),
    }
}

fn fact(what: impl Into<String>, ok: bool, got: impl Into<String>) -> Step {
    Step {
        what: what.into(),
        expected: String::from("holds"),
        got: got.into(),
        ok,
        details: Vec::new(),
        report: None,
    }
}

fn global_edcf(ws: &mut Workspace, budget: &Budget, logic: &str, cand: &str) -> Result<Vec<Step>> {
    let l = ws.logic(logic)?;
    let c = ws.candidate(cand)?;
    let tb = ws.testbed("k3-isp", budget)?;
    let limits = Limits {
        n_max: 3,
        ..Limits::default()
    };
    let v = check_edcf(&l, &tb, &c, Variant::Global, &limits, budget, &Focus::none())?;
    let pool: Vec<&Algebra> = tb.algebras().collect();
    let names: Vec<&str> = pool.iter().map(|a| a.name()).collect();
    let mut s = verdict_step(
        format!("global {cand} for {logic} on {{{}}}, n ≤ 3", names.join(", ")),
        Outcome::Pass,
        &v,
        &pool,
    );
    s.details.push(format!("{} cells compared", v.cells));
    Ok(vec![s])
}

fn pwk_local(ws: &mut Workspace, budget: &Budget) -> Result<Vec<Step>> {
    let l = ws.logic("PWK")?;
    let c = ws.candidate("pwk-local")?;
    let tb = ws.testbed("wk3-isp", budget)?;
    let limits = Limits::default();
    let pool: Vec<&Algebra> = tb.algebras().collect();
    let names: Vec<&str> = pool.iter().map(|a| a.name()).collect();
    let v1 = check_edcf(&l, &tb, &c, Variant::Local, &limits, budget, &Focus::none())?;
    let v2 = absolute_fep_check(&l, &tb, &limits, budget, &Focus::none())?;
    Ok(vec![
        verdict_step(
            format!("local pwk-local on {{{}}}", names.join(", ")),
            Outcome::Pass,
            &v1,
            &pool,
        ),
        verdict_step("absolute FEP on the same testbed".into(), Outcome::Pass, &v2, &pool),
    ])
}

/// `h(⟨a,b⟩) = ½` if either coordinate is ½, otherwise `b`.
pub fn paper_homomorphism(wk3: &Algebra, decode: impl Fn(usize) -> Vec<usize>, size: usize) -> Vec<usize> {
    let half = wk3.element_by_label("½").expect("WK3 has ½");
    (0..size)
        .map(|e| {
            let ab = decode(e);
            if ab[0] == half || ab[1] == half {
                half
            } else {
                ab[1]
            }
        })
        .collect()
}

fn pwk_no_pedcf(ws: &mut Workspace, budget: &Budget) -> Result<Vec<Step>> {
    let l = ws.logic("PWK")?;
    let wk3 = ws.algebra("WK3")?;
    let tb = Testbed::from_algebras(vec![wk3.clone()]);
    let v = factor_determined_check(&l, &tb, true, 2, &Limits::default(), budget, &Focus::none())?;
    let prod = direct_product(&[&wk3, &wk3], wk3.signature(), budget)?;
    let p = &prod.algebra;
    let mut steps = vec![verdict_step(
        "absolute factor determinedness of PWK on WK3×WK3".into(),
        Outcome::Fail,
        &v,
        &[p],
    )];

    let label = |e: usize| p.label(e);
    let w = v.witness.clone().unwrap_or_default();
    let got = format!(
        "ā = ({}), b = {}",
        w.tuple.iter().map(|&e| label(e)).collect::<Vec<_>>().join(", "),
        w.element.map_or_else(|| "-".into(), label)
    );
    let want_a = p.element_by_label("⟨½,0⟩").context("product label ⟨½,0⟩")?;
    let want_b = p.element_by_label("⟨1,0⟩").context("product label ⟨1,0⟩")?;
    steps.push(fact(
        "first witness is ā = (⟨½,0⟩), b = ⟨1,0⟩",
        w.tuple == vec![want_a] && w.element == Some(want_b),
        got,
    ));

    let h = paper_homomorphism(&wk3, |e| prod.decode(e), p.size());
    let homs = enumerate_homomorphisms(p, &wk3, budget)?;
    let table: Vec<String> = (0..p.size())
        .map(|e| format!("{}↦{}", p.label(e), wk3.label(h[e])))
        .collect();
    let mut s = fact(
        "h(⟨a,b⟩) = ½ if a = ½ or b = ½, else b, is among the homomorphisms WK3² → WK3",
        homs.contains(&h),
        format!("{} homomorphisms enumerated; h is {}", homs.len(), if homs.contains(&h) { "present" } else { "absent" }),
    );
    s.details.push(format!("h = {}", table.join(", ")));
    steps.push(s);

    let designated = ElemSet::from_elems(wk3.size(), [wk3.element_by_label("1").unwrap(), wk3.element_by_label("½").unwrap()]);
    let f = designated.preimage(&h);
    let on_p = l.bind(p, budget)?;
    steps.push(fact(
        "F = h⁻¹[{1,½}] is a PWK filter with ⟨½,0⟩ ∈ F and ⟨1,0⟩ ∉ F",
        on_p.is_filter(&f) && f.contains(want_a) && !f.contains(want_b),
        format!("F = {}", p.format_set(&f)),
    ));
    Ok(steps)
}

fn box5_no_min(ws: &mut Workspace, budget: &Budget) -> Result<Vec<Step>> {
    let l = ws.logic("ONE")?;
    let k = ws.class("alpha12")?;
    let a = ws.algebra("box5")?;
    let limits = Limits::default();
    let e = |s: &str| a.element_by_label(s).expect("box5 label");
    let (a1, a2, b) = (e("a1"), e("a2"), e("b"));
    let theta1 = Partition::from_blocks(5, &[vec![e("0"), e("1")], vec![a1, b], vec![a2]])?;
    let theta2 = Partition::from_blocks(5, &[vec![e("0"), e("1")], vec![a2, b], vec![a1]])?;
    let meet = theta1.meet(&theta2);

    let mut steps = Vec::new();
    let ks = k_congruences(&a, &k, &limits, budget)?;
    steps.push(fact(
        "θ1, θ2 and θ1∩θ2 are K-congruences",
        ks.contains(&theta1) && ks.contains(&theta2) && ks.contains(&meet),
        format!("{} K-congruences", ks.len()),
    ));
    let tk = theta_k(&a, &k, &limits, budget)?;
    steps.push(fact("θ_K = Δ (box5 satisfies α1, α2)", tk.is_identity(), tk.format_with(&a)));
    let cg = cg_k(&a, &k, &[(a1, b)], &limits, budget)?;
    steps.push(fact("Cg_K(a1, b) = θ1", cg == theta1, cg.format_with(&a)));

    let focus = Focus {
        tuples: Some(vec![vec![a1, a2]]),
        elements: Some(vec![b]),
        ..Focus::none()
    };
    let v = smallest_relcong_check(&l, &a, &k, &limits, budget, &focus)?;
    steps.push(verdict_step(
        "smallest K-congruence with b ∈ Fg^{A,θ}(a1, a2)".into(),
        Outcome::Fail,
        &v,
        &[&a],
    ));
    let minimal = v.witness.as_ref().map(|w| w.congruences.clone()).unwrap_or_default();
    let mut s = fact(
        "θ1 and θ2 are incomparable minimal members; θ1∩θ2 collapses only {0,1}",
        minimal.contains(&theta1)
            && minimal.contains(&theta2)
            && !theta1.leq(&theta2)
            && !theta2.leq(&theta1)
            && meet.blocks().iter().filter(|bl| bl.len() > 1).eq([&vec![e("0"), e("1")]]),
        format!("θ1∩θ2 = {}", meet.format_with(&a)),
    );
    for m in &minimal {
        s.details.push(format!("minimal: {}", m.format_with(&a)));
    }
    steps.push(s);

    let full = smallest_relcong_check(&l, &a, &k, &limits, budget, &Focus::none())?;
    steps.push(verdict_step("unrestricted sweep (n ≤ 3)".into(), Outcome::Fail, &full, &[&a]));
    Ok(steps)
}

fn m3_not_brouwerian(ws: &mut Workspace, budget: &Budget) -> Result<Vec<Step>> {
    let l = ws.logic("ORDER")?;
    let m3 = ws.algebra("M3")?;
    let b4 = ws.algebra("B4")?;
    let v1 = dually_brouwerian_check(&l, &m3, budget)?;
    let v2 = dually_brouwerian_check(&l, &b4, budget)?;
    let mut s1 = verdict_step("dually Brouwerian filters on M3".into(), Outcome::Fail, &v1, &[&m3]);
    if let Some(w) = &v1.witness {
        let names = ["F", "G"];
        for (i, f) in w.filters.iter().enumerate() {
            let tag = names.get(i).copied().unwrap_or("minimal H");
            s1.details.push(format!("{tag} = {}", m3.format_set(f)));
        }
    }
    Ok(vec![
        s1,
        verdict_step("dually Brouwerian filters on B4".into(), Outcome::Pass, &v2, &[&b4]),
    ])
}

fn modal_local_only(ws: &mut Workspace, budget: &Budget) -> Result<Vec<Step>> {
    let l = ws.logic("MODAL")?;
    let tb = ws.testbed("modal-chains", budget)?;
    let c = ws.candidate("modal-local")?;
    let limits = Limits::default();
    let pool: Vec<&Algebra> = tb.algebras().collect();
    let v = check_edcf(&l, &tb, &c, Variant::Local, &limits, budget, &Focus::none())?;
    let mut steps = vec![verdict_step(
        "local □_k(x1∧…∧xn) ≤ y, k ≤ 4, on chain frames with 1–4 worlds".into(),
        Outcome::Pass,
        &v,
        &pool,
    )];
    for k in 0..=3 {
        let a = ws.algebra(&format!("modal-chain{}", k + 2))?;
        let c = ws.candidate(&format!("modal-global-k{k}"))?;
        let tb = Testbed::from_algebras(vec![a.clone()]);
        let v = check_edcf(&l, &tb, &c, Variant::Global, &limits, budget, &Focus::none())?;
        steps.push(verdict_step(
            format!("global □_{k}(x1∧…∧xn) ≤ y on the {}-world chain", k + 2),
            Outcome::Fail,
            &v,
            &[&a],
        ));
    }
    Ok(steps)
}

fn luk_local_only(ws: &mut Workspace, budget: &Budget) -> Result<Vec<Step>> {
    let l = ws.logic("LUK")?;
    let tb = ws.testbed("mv-chains", budget)?;
    let c_and = ws.candidate("luk-local-and")?;
    let c_fus = ws.candidate("luk-local-fus")?;
    let limits = Limits::default();
    let pool: Vec<&Algebra> = tb.algebras().collect();
    let v = check_edcf(&l, &tb, &c_and, Variant::Local, &limits, budget, &Focus::none())?;
    let cmp = compare_candidates(&c_and, &c_fus, &tb, budget)?;
    let mut steps = vec![
        verdict_step("local (x1∧…∧xn)^k ≤ y, k ≤ 4, on Ł3, Ł4, Ł5".into(), Outcome::Pass, &v, &pool),
        verdict_step("∧-fold and ⊙-fold families define the same sets".into(), Outcome::Pass, &cmp, &pool),
    ];
    for k in 0..=3 {
        let a = ws.algebra(&format!("L{}", k + 2))?;
        let c = ws.candidate(&format!("luk-global-k{k}"))?;
        let tb = Testbed::from_algebras(vec![a.clone()]);
        let v = check_edcf(&l, &tb, &c, Variant::Global, &limits, budget, &Focus::none())?;
        steps.push(verdict_step(
            format!("global (x1∧…∧xn)^{k} ≤ y on Ł{}", k + 2),
            Outcome::Fail,
            &v,
            &[&a],
        ));
    }
    Ok(steps)
}

fn kl_only_filter(ws: &mut Workspace, budget: &Budget) -> Result<Vec<Step>> {
    let l = ws.logic("KL")?;
    let k3 = ws.algebra("K3")?;
    let bound = l.bind(&k3, budget)?;
    let fs = bound.all_filters(&Limits::default(), budget)?;
    let one = k3.element_by_label("1").context("K3 has 1")?;
    let want = vec![ElemSet::singleton(k3.size(), one), k3.carrier()];
    let shown: Vec<String> = fs.iter().map(|f| k3.format_set(f)).collect();
    Ok(vec![
        fact("matrix filters on K3 are computed exactly", bound.is_exact(), format!("exact = {}", bound.is_exact())),
        fact("KL-filters on K3 are exactly {1} and K3", fs == want, shown.join(", ")),
    ])
}
