//! Named algebras, logics, classes, candidates and testbeds.
//!
//! The built-in corpus is always loaded. Any name that ends in `.json` is
//! read from disk instead and added under the name recorded in the file.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use edcf_core::checks::{generate_testbed, Testbed};
use edcf_core::filters::Matrix;
use edcf_core::{Algebra, Budget, Candidate, ClassSpec, ElemSet, LogicSpec};
use serde::de::DeserializeOwned;

use crate::corpus;
use crate::io::{
    AlgebraDoc, CandidateDoc, ClassBody, ClassDoc, EquationDoc, LogicBody, LogicDoc, QuasiDoc,
    TestbedDoc,
};

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub algebras: BTreeMap<String, AlgebraDoc>,
    pub logics: BTreeMap<String, LogicDoc>,
    pub classes: BTreeMap<String, ClassDoc>,
    pub candidates: BTreeMap<String, CandidateDoc>,
    pub testbeds: BTreeMap<String, TestbedDoc>,
}

fn parse_all<T: DeserializeOwned>(
    files: &[(&str, &str)],
    name_of: impl Fn(&T) -> &str,
) -> Result<BTreeMap<String, T>> {
    let mut out = BTreeMap::new();
    for (stem, text) in files {
        let doc: T = serde_json::from_str(text).with_context(|| format!("built-in `{stem}`"))?;
        if name_of(&doc) != *stem {
            bail!("built-in file `{stem}` declares name `{}`", name_of(&doc));
        }
        out.insert((*stem).to_owned(), doc);
    }
    Ok(out)
}

fn read_doc<T: DeserializeOwned>(path: &str) -> Result<T> {
    let text = std::fs::read_to_string(Path::new(path)).with_context(|| format!("reading `{path}`"))?;
    serde_json::from_str(&text).with_context(|| format!("parsing `{path}`"))
}

fn is_path(name: &str) -> bool {
    name.ends_with(".json")
}

impl Workspace {
    /// The built-in corpus.
    pub fn builtin() -> Result<Self> {
        Ok(Workspace {
            algebras: parse_all(corpus::ALGEBRAS, |d: &AlgebraDoc| &d.name)?,
            logics: parse_all(corpus::LOGICS, |d: &LogicDoc| &d.name)?,
            classes: parse_all(corpus::CLASSES, |d: &ClassDoc| &d.name)?,
            candidates: parse_all(corpus::CANDIDATES, |d: &CandidateDoc| &d.name)?,
            testbeds: parse_all(corpus::TESTBEDS, |d: &TestbedDoc| &d.name)?,
        })
    }

    fn unknown(kind: &str, name: &str, known: impl Iterator<Item = impl AsRef<str>>) -> anyhow::Error {
        let known: Vec<String> = known.map(|s| s.as_ref().to_owned()).collect();
        anyhow!("unknown {kind} `{name}` (known: {})", known.join(", "))
    }

    pub fn algebra_doc(&mut self, name: &str) -> Result<&AlgebraDoc> {
        let key = if is_path(name) {
            let doc: AlgebraDoc = read_doc(name)?;
            let key = doc.name.clone();
            self.algebras.insert(key.clone(), doc);
            key
        } else {
            name.to_owned()
        };
        let known = self.algebras.keys().cloned().collect::<Vec<_>>();
        self.algebras
            .get(&key)
            .ok_or_else(|| Self::unknown("algebra", name, known.iter()))
    }

    pub fn algebra(&mut self, name: &str) -> Result<Algebra> {
        self.algebra_doc(name)?.to_algebra()
    }

    pub fn logic(&mut self, name: &str) -> Result<LogicSpec> {
        let doc = if is_path(name) {
            read_doc::<LogicDoc>(name)?
        } else {
            self.logics
                .get(name)
                .cloned()
                .ok_or_else(|| Self::unknown("logic", name, self.logics.keys()))?
        };
        match &doc.body {
            LogicBody::Rules { rules } => Ok(LogicSpec::rules(
                &doc.name,
                rules.iter().map(|r| r.to_rule()).collect::<Result<_>>()?,
            )),
            LogicBody::Matrices {
                matrices,
                variable_bound,
            } => {
                let mut ms = Vec::new();
                for m in matrices {
                    let a = self.algebra(&m.algebra)?;
                    let d = m
                        .designated
                        .iter()
                        .map(|e| e.resolve(&a))
                        .collect::<Result<Vec<_>>>()?;
                    let designated = ElemSet::from_elems(a.size(), d);
                    ms.push(Matrix::new(a, designated)?);
                }
                Ok(LogicSpec::matrices(&doc.name, ms, *variable_bound))
            }
        }
    }

    pub fn class(&mut self, name: &str) -> Result<ClassSpec> {
        let doc = if is_path(name) {
            read_doc::<ClassDoc>(name)?
        } else {
            self.classes
                .get(name)
                .cloned()
                .ok_or_else(|| Self::unknown("class", name, self.classes.keys()))?
        };
        match &doc.body {
            ClassBody::Axioms { equations, quasi } => Ok(ClassSpec::Axiomatic {
                equations: equations
                    .iter()
                    .map(EquationDoc::to_equation)
                    .collect::<Result<_>>()?,
                quasi: quasi.iter().map(QuasiDoc::to_quasi).collect::<Result<_>>()?,
            }),
            ClassBody::Generators { algebras } => Ok(ClassSpec::Generated {
                algebras: algebras
                    .iter()
                    .map(|a| self.algebra(a))
                    .collect::<Result<_>>()?,
            }),
        }
    }

    pub fn candidate(&mut self, name: &str) -> Result<Candidate> {
        let doc = if is_path(name) {
            read_doc::<CandidateDoc>(name)?
        } else {
            self.candidates
                .get(name)
                .cloned()
                .ok_or_else(|| Self::unknown("candidate", name, self.candidates.keys()))?
        };
        Ok(doc.to_source()?.materialize()?)
    }

    pub fn testbed_doc(&self, name: &str) -> Result<TestbedDoc> {
        if is_path(name) {
            return read_doc(name);
        }
        self.testbeds
            .get(name)
            .cloned()
            .ok_or_else(|| Self::unknown("testbed", name, self.testbeds.keys()))
    }

    /// Builds a testbed from generators, a product arity and the
    /// subalgebra flag.
    pub fn build_testbed(
        &mut self,
        generators: &[String],
        arity: usize,
        subalgebras: bool,
        budget: &Budget,
    ) -> Result<Testbed> {
        let gens: Vec<Algebra> = generators
            .iter()
            .map(|g| self.algebra(g))
            .collect::<Result<_>>()?;
        if gens.is_empty() {
            return Ok(Testbed::default());
        }
        Ok(generate_testbed(&gens, arity, subalgebras, budget)?)
    }

    pub fn testbed(&mut self, name: &str, budget: &Budget) -> Result<Testbed> {
        let doc = self.testbed_doc(name)?;
        self.build_testbed(&doc.generators, doc.arity, doc.subalgebras, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_loads() {
        let mut ws = Workspace::builtin().unwrap();
        let budget = Budget::default();
        for n in ws.logics.keys().cloned().collect::<Vec<_>>() {
            ws.logic(&n).unwrap();
        }
        for n in ws.classes.keys().cloned().collect::<Vec<_>>() {
            ws.class(&n).unwrap();
        }
        for n in ws.candidates.keys().cloned().collect::<Vec<_>>() {
            ws.candidate(&n).unwrap();
        }
        for n in ws.testbeds.keys().cloned().collect::<Vec<_>>() {
            assert!(!ws.testbed(&n, &budget).unwrap().is_empty());
        }
    }

    #[test]
    fn unknown_names_list_the_known_ones() {
        let mut ws = Workspace::builtin().unwrap();
        let e = ws.algebra("nope").unwrap_err().to_string();
        assert!(e.contains("WK3") && e.contains("nope"));
    }
}
