//! Terms, equations and rules, with an S-expression reader.
//!
//! The reader knows nothing about signatures: every bare atom comes out as a
//! [`Term::Var`]. [`Term::bind`] later turns atoms naming a constant of a
//! signature into nullary applications and checks arities, so one parsed rule
//! can be used over algebras whose signatures differ in their constants.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Signature;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_owned())
    }

    pub fn app(symbol: &str, args: Vec<Term>) -> Term {
        Term::App(symbol.to_owned(), args)
    }

    pub fn constant(symbol: &str) -> Term {
        Term::App(symbol.to_owned(), Vec::new())
    }

    /// Reads one S-expression such as `(or x1 (neg x1))`.
    pub fn parse(src: &str) -> Result<Term> {
        let mut p = Reader { src, pos: 0 };
        let t = p.term()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }

    /// Resolves atoms naming constants of `sig` and checks every arity.
    pub fn bind(&self, sig: &Signature) -> Result<Term> {
        match self {
            Term::Var(name) => match sig.arity_of(name) {
                Some(0) => Ok(Term::constant(name)),
                Some(k) => Err(Error::ArityMismatch {
                    symbol: name.clone(),
                    expected: k,
                    found: 0,
                }),
                None => Ok(self.clone()),
            },
            Term::App(f, args) => {
                let k = sig
                    .arity_of(f)
                    .ok_or_else(|| Error::UnknownSymbol(f.clone()))?;
                if k != args.len() {
                    return Err(Error::ArityMismatch {
                        symbol: f.clone(),
                        expected: k,
                        found: args.len(),
                    });
                }
                let args = args.iter().map(|a| a.bind(sig)).collect::<Result<_>>()?;
                Ok(Term::App(f.clone(), args))
            }
        }
    }

    /// Variables in order of first occurrence.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Symbols applied anywhere in the term, with the arity they are used at.
    pub fn symbols(&self, out: &mut BTreeMap<String, usize>) {
        if let Term::App(f, args) = self {
            out.insert(f.clone(), args.len());
            args.iter().for_each(|a| a.symbols(out));
        }
    }

    pub fn substitute(&self, map: &BTreeMap<String, Term>) -> Term {
        match self {
            Term::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| a.substitute(map)).collect())
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    /// Folds `items` with a binary symbol, associating to the right.
    pub fn fold_right(symbol: &str, mut items: Vec<Term>) -> Option<Term> {
        let mut acc = items.pop()?;
        while let Some(t) = items.pop() {
            acc = Term::app(symbol, alloc::vec![t, acc]);
        }
        Some(acc)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::App(s, args) if args.is_empty() => f.write_str(s),
            Term::App(s, args) => {
                write!(f, "({s}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Reader<'a> {
    src: &'a str,
    pos: usize,
}

impl Reader<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn atom(&mut self) -> Result<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let end = rest
            .find(|c: char| c.is_whitespace() || c == '(' || c == ')')
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.err("expected a name"));
        }
        self.pos += end;
        Ok(rest[..end].to_owned())
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        match self.src[self.pos..].chars().next() {
            None => Err(self.err("unexpected end of input")),
            Some(')') => Err(self.err("unexpected `)`")),
            Some('(') => {
                self.pos += 1;
                let head = self.atom()?;
                let mut args = Vec::new();
                loop {
                    self.skip_ws();
                    match self.src[self.pos..].chars().next() {
                        None => return Err(self.err("unclosed `(`")),
                        Some(')') => {
                            self.pos += 1;
                            return Ok(Term::App(head, args));
                        }
                        Some(_) => args.push(self.term()?),
                    }
                }
            }
            Some(_) => Ok(Term::Var(self.atom()?)),
        }
    }
}

/// `lhs ≈ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    pub fn parse(lhs: &str, rhs: &str) -> Result<Self> {
        Ok(Equation::new(Term::parse(lhs)?, Term::parse(rhs)?))
    }

    pub fn vars(&self) -> Vec<String> {
        let mut out = self.lhs.vars();
        self.rhs.collect_vars(&mut out);
        out
    }

    pub fn bind(&self, sig: &Signature) -> Result<Equation> {
        Ok(Equation::new(self.lhs.bind(sig)?, self.rhs.bind(sig)?))
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ≈ {}", self.lhs, self.rhs)
    }
}

/// A quasi-equation `e1 & … & ek ⟹ e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiEquation {
    pub premises: Vec<Equation>,
    pub conclusion: Equation,
}

impl QuasiEquation {
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        for e in self.premises.iter().chain(core::iter::once(&self.conclusion)) {
            e.lhs.collect_vars(&mut out);
            e.rhs.collect_vars(&mut out);
        }
        out
    }

    pub fn bind(&self, sig: &Signature) -> Result<QuasiEquation> {
        Ok(QuasiEquation {
            premises: self.premises.iter().map(|e| e.bind(sig)).collect::<Result<_>>()?,
            conclusion: self.conclusion.bind(sig)?,
        })
    }
}

/// `premises ⊢ conclusion`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub premises: Vec<Term>,
    pub conclusion: Term,
}

impl Rule {
    pub fn parse(premises: &[&str], conclusion: &str) -> Result<Rule> {
        Ok(Rule {
            premises: premises.iter().map(|p| Term::parse(p)).collect::<Result<_>>()?,
            conclusion: Term::parse(conclusion)?,
        })
    }

    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        for t in &self.premises {
            t.collect_vars(&mut out);
        }
        self.conclusion.collect_vars(&mut out);
        out
    }

    pub fn bind(&self, sig: &Signature) -> Result<Rule> {
        Ok(Rule {
            premises: self.premises.iter().map(|p| p.bind(sig)).collect::<Result<_>>()?,
            conclusion: self.conclusion.bind(sig)?,
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        if !self.premises.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "⊢ {}", self.conclusion)
    }
}

/// Formats a list of terms as `t1, t2, …` (used in reports).
pub fn join_terms(ts: &[Term]) -> String {
    let parts: Vec<String> = ts.iter().map(|t| format!("{t}")).collect();
    parts.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parse_round_trip() {
        let src = "(or x1 (neg (and x1 y)))";
        let t = Term::parse(src).unwrap();
        assert_eq!(format!("{t}"), src);
        assert_eq!(t.vars(), vec!["x1".to_string(), "y".to_string()]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Term::parse("(or x"), Err(Error::Parse { .. })));
        assert!(matches!(Term::parse("x)"), Err(Error::Parse { .. })));
        assert!(matches!(Term::parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn fold_right_shapes() {
        let xs = vec![Term::var("a"), Term::var("b"), Term::var("c")];
        let t = Term::fold_right("and", xs).unwrap();
        assert_eq!(format!("{t}"), "(and a (and b c))");
        assert!(Term::fold_right("and", Vec::new()).is_none());
    }
}
