//! Verdict reports in text and JSON form.

use std::fmt::Write as _;

use edcf_core::checks::{Outcome, Verdict, Witness};
use edcf_core::Algebra;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub algebra: String,
    pub side: String,
    pub tuple: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tuple_labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_label: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub congruences: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub filters: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homomorphism: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl WitnessDoc {
    pub fn new(w: &Witness, algebra: Option<&Algebra>) -> Self {
        let label = |e: usize| algebra.map_or_else(|| e.to_string(), |a| a.label(e));
        WitnessDoc {
            algebra: w.algebra.clone(),
            side: w.side.clone(),
            tuple: w.tuple.clone(),
            tuple_labels: w.tuple.iter().map(|&e| label(e)).collect(),
            element: w.element,
            element_label: w.element.map(label),
            params: w.params.clone(),
            set_index: w.set_index,
            congruences: w.congruences.iter().map(|p| p.blocks()).collect(),
            filters: w.filters.iter().map(|f| f.to_vec()).collect(),
            homomorphism: w.homomorphism.clone(),
            notes: w.notes.clone(),
        }
    }

    /// Equality on the replayable content, ignoring display labels.
    pub fn same_as(&self, other: &WitnessDoc) -> bool {
        self.algebra == other.algebra
            && self.side == other.side
            && self.tuple == other.tuple
            && self.element == other.element
            && self.params == other.params
            && self.set_index == other.set_index
            && self.congruences == other.congruences
            && self.filters == other.filters
            && self.homomorphism == other.homomorphism
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default)]
    pub cells: u64,
    /// Arguments after the program name that reproduce this report.
    #[serde(default)]
    pub args: Vec<String>,
    #[serde(default)]
    pub replay: String,
}

pub fn shell_quote(s: &str) -> String {
    if !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || "-_./=,:".contains(c))
    {
        s.to_owned()
    } else {
        format!("'{}'", s.replace('\'', r"'\''"))
    }
}

impl Report {
    pub fn new<'a>(
        v: &Verdict,
        lookup: impl Fn(&str) -> Option<&'a Algebra>,
        args: &[String],
    ) -> Self {
        let witness = v
            .witness
            .as_ref()
            .map(|w| WitnessDoc::new(w, lookup(&w.algebra)));
        let mut replay = String::from("edcf");
        for a in args {
            replay.push(' ');
            replay.push_str(&shell_quote(a));
        }
        Report {
            check: v.check.clone(),
            outcome: v.outcome.as_str().to_owned(),
            witness,
            notes: v.notes.clone(),
            cells: v.cells,
            args: args.to_vec(),
            replay,
        }
    }

    pub fn outcome(&self) -> Option<Outcome> {
        match self.outcome.as_str() {
            "pass" => Some(Outcome::Pass),
            "fail" => Some(Outcome::Fail),
            "inconclusive" => Some(Outcome::Inconclusive),
            _ => None,
        }
    }

    /// Same outcome and same witness.
    pub fn same_verdict(&self, other: &Report) -> bool {
        self.outcome == other.outcome
            && match (&self.witness, &other.witness) {
                (None, None) => true,
                (Some(a), Some(b)) => a.same_as(b),
                _ => false,
            }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "check: {}", self.check);
        let _ = writeln!(s, "outcome: {}", self.outcome.to_uppercase());
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness:");
            let _ = writeln!(s, "  algebra: {}", w.algebra);
            let _ = writeln!(s, "  side: {}", w.side);
            let _ = writeln!(s, "  tuple: ({})", w.tuple_labels.join(", "));
            if let Some(b) = &w.element_label {
                let _ = writeln!(s, "  element: {b}");
            }
            if !w.params.is_empty() {
                let _ = writeln!(s, "  params: {:?}", w.params);
            }
            if let Some(i) = w.set_index {
                let _ = writeln!(s, "  equation set: #{i}");
            }
            for c in &w.congruences {
                let _ = writeln!(s, "  congruence: {c:?}");
            }
            for f in &w.filters {
                let _ = writeln!(s, "  filter: {f:?}");
            }
            if let Some(h) = &w.homomorphism {
                let _ = writeln!(s, "  homomorphism: {h:?}");
            }
            for n in &w.notes {
                let _ = writeln!(s, "  note: {n}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let _ = writeln!(s, "cells: {}", self.cells);
        if !self.replay.is_empty() {
            let _ = writeln!(s, "replay: {}", self.replay);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoting() {
        assert_eq!(shell_quote("a1,a2"), "a1,a2");
        assert_eq!(shell_quote("⟨½,0⟩"), "'⟨½,0⟩'");
        assert_eq!(shell_quote("it's"), r"'it'\''s'");
        assert_eq!(shell_quote(""), "''");
    }

    #[test]
    fn json_round_trip_keeps_the_verdict() {
        let v = Verdict {
            check: "edcf".into(),
            outcome: Outcome::Fail,
            witness: Some(Witness {
                algebra: "K3".into(),
                tuple: vec![1],
                element: Some(0),
                side: "s".into(),
                ..Witness::default()
            }),
            notes: vec!["n".into()],
            cells: 3,
        };
        let r = Report::new(&v, |_| None, &["check".into(), "edcf".into()]);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(back.same_verdict(&r));
        assert_eq!(back.outcome(), Some(Outcome::Fail));
        assert_eq!(r.replay, "edcf check edcf");
    }
}
