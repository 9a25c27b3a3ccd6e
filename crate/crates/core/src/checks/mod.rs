//! Property checkers over finite testbeds.
//!
//! A `Pass` only ever means that no violation exists on the inputs given. A
//! `Fail` carries a witness that can be replayed with the primitives in
//! [`crate::filters`], [`crate::algebra`] and [`crate::class`].

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};
use crate::congruence::Partition;
use crate::ElemSet;

mod brouwerian;
mod edcf;
mod fdc;
mod fep;
mod leibniz;
mod relcong;
mod search;
mod testalg;
mod testbed;

pub use brouwerian::dually_brouwerian_check;
pub use edcf::{check_edcf, check_edcf_theta_form, compare_candidates};
pub use fdc::factor_determined_check;
pub use fep::{absolute_fep_check, fep_check};
pub use leibniz::{leibniz_probe, ProbeMode};
pub use relcong::smallest_relcong_check;
pub use search::{search_counterexample, Property};
pub use testalg::{test_algebra_check, test_algebra_sweep, TestCandidate};
pub use testbed::{generate_testbed, Provenance, Testbed, TestbedEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

/// What went wrong, and where.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub algebra: String,
    pub tuple: Vec<Elem>,
    pub element: Option<Elem>,
    pub params: Vec<Elem>,
    pub set_index: Option<usize>,
    pub side: String,
    pub congruences: Vec<Partition>,
    pub filters: Vec<ElemSet>,
    pub homomorphism: Option<Vec<Elem>>,
    pub notes: Vec<String>,
}

impl Witness {
    pub(crate) fn at(a: &Algebra, side: &str) -> Self {
        Witness {
            algebra: a.name().to_owned(),
            side: side.to_owned(),
            ..Witness::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
    /// Number of elementary comparisons made.
    pub cells: u64,
}

impl Verdict {
    pub(crate) fn new(check: &str) -> Self {
        Verdict {
            check: check.to_owned(),
            outcome: Outcome::Pass,
            witness: None,
            notes: Vec::new(),
            cells: 0,
        }
    }

    pub(crate) fn fail(mut self, w: Witness) -> Self {
        self.outcome = Outcome::Fail;
        self.witness = Some(w);
        self
    }

    pub(crate) fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    /// Downgrades a pass to inconclusive.
    pub(crate) fn inconclusive_unless_fail(&mut self, why: String) {
        if self.outcome == Outcome::Pass {
            self.outcome = Outcome::Inconclusive;
        }
        self.notes.push(why);
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

/// Restricts a sweep to chosen algebras, generator tuples or elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Focus {
    pub algebras: Option<Vec<String>>,
    pub tuples: Option<Vec<Vec<Elem>>>,
    pub elements: Option<Vec<Elem>>,
}

impl Focus {
    pub fn none() -> Self {
        Focus::default()
    }

    pub(crate) fn wants_algebra(&self, name: &str) -> bool {
        self.algebras.as_ref().is_none_or(|v| v.iter().any(|n| n == name))
    }

    pub(crate) fn wants_element(&self, e: Elem) -> bool {
        self.elements.as_ref().is_none_or(|v| v.contains(&e))
    }

    /// Tuples to sweep at arity `n`: the focused ones of that length, or
    /// all of `A^n` in lexicographic order.
    pub(crate) fn tuples(&self, size: usize, n: usize) -> Vec<Vec<Elem>> {
        match &self.tuples {
            Some(ts) => ts.iter().filter(|t| t.len() == n).cloned().collect(),
            None => {
                let mut out = Vec::new();
                crate::algebra::for_each_tuple(size, n, |t| out.push(t.to_vec()));
                out
            }
        }
    }

    pub(crate) fn arities(&self, n_max: usize) -> Vec<usize> {
        match &self.tuples {
            Some(ts) => {
                let mut v: Vec<usize> = ts.iter().map(Vec::len).filter(|&n| n <= n_max).collect();
                v.sort_unstable();
                v.dedup();
                v
            }
            None => (0..=n_max).collect(),
        }
    }
}
