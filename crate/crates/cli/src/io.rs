//! JSON document formats and their conversion into core values.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use edcf_core::candidate::{CandidateSource, Leq, RawEquation, Template};
use edcf_core::term::QuasiEquation;
use edcf_core::{Algebra, ElemSet, Equation, Rule, Signature, Symbol, Variant};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymbolDoc {
    pub name: String,
    pub arity: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_labels: Option<Vec<String>>,
    pub signature: Vec<SymbolDoc>,
    pub operations: BTreeMap<String, Vec<usize>>,
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<Algebra> {
        let sig = Signature::new(
            self.signature
                .iter()
                .map(|s| Symbol::new(&s.name, s.arity))
                .collect(),
        )?;
        let mut tables = Vec::with_capacity(sig.len());
        for s in sig.symbols() {
            let t = self
                .operations
                .get(&s.name)
                .with_context(|| format!("algebra `{}` has no table for `{}`", self.name, s.name))?;
            tables.push(t.clone());
        }
        if let Some(extra) = self.operations.keys().find(|k| sig.index_of(k).is_none()) {
            bail!("algebra `{}` has a table for undeclared symbol `{extra}`", self.name);
        }
        Ok(Algebra::new(
            &self.name,
            self.size,
            sig,
            tables,
            self.element_labels.clone(),
        )?)
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraDoc {
            name: a.name().to_owned(),
            size: a.size(),
            element_labels: a.labels().map(<[String]>::to_vec),
            signature: a
                .signature()
                .symbols()
                .iter()
                .map(|s| SymbolDoc {
                    name: s.name.clone(),
                    arity: s.arity,
                })
                .collect(),
            operations: a
                .signature()
                .symbols()
                .iter()
                .enumerate()
                .map(|(i, s)| (s.name.clone(), a.table(i).to_vec()))
                .collect(),
        }
    }
}

/// An element written either as its index or as its label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRef {
    Index(usize),
    Label(String),
}

impl ElemRef {
    pub fn resolve(&self, a: &Algebra) -> Result<usize> {
        match self {
            ElemRef::Index(i) if *i < a.size() => Ok(*i),
            ElemRef::Index(i) => bail!("element {i} is outside `{}`", a.name()),
            ElemRef::Label(s) => resolve_element(a, s),
        }
    }
}

/// Looks an element up by label first, then as a decimal index.
pub fn resolve_element(a: &Algebra, s: &str) -> Result<usize> {
    let s = s.trim();
    if let Some(e) = a.element_by_label(s) {
        return Ok(e);
    }
    match s.parse::<usize>() {
        Ok(i) if i < a.size() => Ok(i),
        _ => Err(anyhow!("`{s}` is neither a label nor an index of `{}`", a.name())),
    }
}

/// Parses a comma-separated element list. The empty string is the empty
/// list and `carrier` is every element.
pub fn parse_elements(a: &Algebra, s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s == "carrier" {
        return Ok((0..a.size()).collect());
    }
    s.split(',').map(|p| resolve_element(a, p)).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuleDoc {
    #[serde(default)]
    pub premises: Vec<String>,
    pub conclusion: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub algebra: String,
    pub designated: Vec<ElemRef>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LogicBody {
    Rules {
        rules: Vec<RuleDoc>,
    },
    Matrices {
        matrices: Vec<MatrixDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        variable_bound: Option<usize>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LogicDoc {
    pub name: String,
    #[serde(flatten)]
    pub body: LogicBody,
}

impl RuleDoc {
    pub fn to_rule(&self) -> Result<Rule> {
        let premises: Vec<&str> = self.premises.iter().map(String::as_str).collect();
        Rule::parse(&premises, &self.conclusion)
            .with_context(|| format!("rule with conclusion `{}`", self.conclusion))
    }
}

/// `[l, r]` or `[l, "<=", r]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EquationDoc(pub Vec<String>);

impl EquationDoc {
    pub fn to_raw(&self) -> Result<RawEquation> {
        match self.0.as_slice() {
            [l, r] => Ok(RawEquation::Eq(l.clone(), r.clone())),
            [l, op, r] if op == "<=" => Ok(RawEquation::Leq(l.clone(), r.clone())),
            other => bail!("an equation is [l, r] or [l, \"<=\", r], found {other:?}"),
        }
    }

    pub fn to_equation(&self) -> Result<Equation> {
        match self.to_raw()? {
            RawEquation::Eq(l, r) => Ok(Equation::parse(&l, &r)?),
            RawEquation::Leq(..) => bail!("`<=` is only available inside candidates"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuasiDoc {
    #[serde(rename = "if")]
    pub premises: Vec<EquationDoc>,
    #[serde(rename = "then")]
    pub conclusion: EquationDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClassBody {
    Axioms {
        #[serde(default)]
        equations: Vec<EquationDoc>,
        #[serde(default)]
        quasi: Vec<QuasiDoc>,
    },
    Generators {
        algebras: Vec<String>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassDoc {
    pub name: String,
    #[serde(flatten)]
    pub body: ClassBody,
}

impl QuasiDoc {
    pub fn to_quasi(&self) -> Result<QuasiEquation> {
        Ok(QuasiEquation {
            premises: self
                .premises
                .iter()
                .map(EquationDoc::to_equation)
                .collect::<Result<_>>()?,
            conclusion: self.conclusion.to_equation()?,
        })
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct TemplateDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fold: Option<String>,
    /// `join` (default) or `meet`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<String>,
    /// Symbol used by `leq`; defaults to `or` for join and `and` for meet.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq_symbol: Option<String>,
    #[serde(default)]
    pub subsets: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub name: String,
    pub variant: String,
    pub n_max: usize,
    #[serde(default)]
    pub params: usize,
    pub families: BTreeMap<String, Vec<Vec<EquationDoc>>>,
    #[serde(default)]
    pub template: TemplateDoc,
}

impl CandidateDoc {
    pub fn to_source(&self) -> Result<CandidateSource> {
        let t = &self.template;
        let leq = match t.leq.as_deref().unwrap_or("join") {
            "join" => Leq::Join(t.leq_symbol.clone().unwrap_or_else(|| "or".into())),
            "meet" => Leq::Meet(t.leq_symbol.clone().unwrap_or_else(|| "and".into())),
            other => bail!("`leq` must be join or meet, found `{other}`"),
        };
        let families = self
            .families
            .iter()
            .map(|(k, sets)| {
                let sets = sets
                    .iter()
                    .map(|s| s.iter().map(EquationDoc::to_raw).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok((k.clone(), sets))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(CandidateSource {
            name: self.name.clone(),
            variant: Variant::parse(&self.variant)?,
            n_max: self.n_max,
            params: self.params,
            families,
            template: Template {
                fold: t.fold.clone(),
                leq,
                subsets: t.subsets,
                k: t.k.map(|[lo, hi]| (lo, hi)),
            },
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TestbedDoc {
    pub name: String,
    pub generators: Vec<String>,
    #[serde(default = "one")]
    pub arity: usize,
    #[serde(default)]
    pub subalgebras: bool,
}

fn one() -> usize {
    1
}

/// Block-list form of a partition, e.g. `[[0,1],[2,4],[3]]`.
pub fn blocks_json(p: &edcf_core::Partition) -> Vec<Vec<usize>> {
    p.blocks()
}

pub fn set_json(s: &ElemSet) -> Vec<usize> {
    s.to_vec()
}
