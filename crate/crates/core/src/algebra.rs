//! Finite algebras given by operation tables, term evaluation, and the
//! structural constructions: products, subalgebras and quotients.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::Partition;
use crate::term::{Equation, QuasiEquation, Term};
use crate::{Budget, ElemSet, Error, Result};

/// Carrier elements are indices `0..size`.
pub type Elem = usize;

/// A valuation of named variables.
pub type Valuation = BTreeMap<String, Elem>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

impl Symbol {
    pub fn new(name: &str, arity: usize) -> Self {
        Symbol {
            name: name.to_owned(),
            arity,
        }
    }
}

/// An ordered list of operation symbols with unique names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for s in &symbols {
            if !seen.insert(s.name.as_str()) {
                return Err(Error::Invalid(format!("duplicate symbol `{}`", s.name)));
            }
        }
        Ok(Signature { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn arity_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().find(|s| s.name == name).map(|s| s.arity)
    }

    /// Same symbols with the same arities, in any order.
    pub fn same_symbols(&self, other: &Signature) -> bool {
        self.len() == other.len()
            && self
                .symbols
                .iter()
                .all(|s| other.arity_of(&s.name) == Some(s.arity))
    }

    /// For each symbol of `self`, its index in `other`.
    pub(crate) fn alignment(&self, other: &Signature) -> Result<Vec<usize>> {
        if !self.same_symbols(other) {
            return Err(Error::SignatureMismatch(format!(
                "{} vs {}",
                self.describe(),
                other.describe()
            )));
        }
        Ok(self
            .symbols
            .iter()
            .map(|s| other.index_of(&s.name).expect("checked above"))
            .collect())
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .symbols
            .iter()
            .map(|s| format!("{}/{}", s.name, s.arity))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Steps the odometer `t` over `{0..n}^len` in lexicographic order.
/// Returns `false` once every tuple has been visited.
#[inline]
pub fn next_tuple(t: &mut [Elem], n: usize) -> bool {
    for i in (0..t.len()).rev() {
        t[i] += 1;
        if t[i] < n {
            return true;
        }
        t[i] = 0;
    }
    false
}

/// Calls `f` on every tuple of `{0..n}^k` in lexicographic order.
pub fn for_each_tuple(n: usize, k: usize, mut f: impl FnMut(&[Elem])) {
    if n == 0 && k > 0 {
        return;
    }
    let mut t = vec![0; k];
    loop {
        f(&t);
        if !next_tuple(&mut t, n) {
            break;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    size: usize,
    labels: Option<Vec<String>>,
    sig: Signature,
    tables: Vec<Vec<Elem>>,
}

impl Algebra {
    /// Builds an algebra, checking table shapes and entries.
    pub fn new(
        name: &str,
        size: usize,
        sig: Signature,
        tables: Vec<Vec<Elem>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let bad = |msg: String| Error::InvalidAlgebra {
            name: name.to_owned(),
            msg,
        };
        if size == 0 {
            return Err(bad("carrier must be non-empty".into()));
        }
        if tables.len() != sig.len() {
            return Err(bad(format!(
                "{} tables for {} symbols",
                tables.len(),
                sig.len()
            )));
        }
        for (s, t) in sig.symbols().iter().zip(&tables) {
            let want = size
                .checked_pow(s.arity as u32)
                .ok_or_else(|| bad(format!("table for `{}` is too large", s.name)))?;
            if t.len() != want {
                return Err(bad(format!(
                    "table for `{}` has {} entries, expected {want}",
                    s.name,
                    t.len()
                )));
            }
            if let Some(&e) = t.iter().find(|&&e| e >= size) {
                return Err(bad(format!("table for `{}` contains {e} ≥ {size}", s.name)));
            }
        }
        if let Some(l) = &labels {
            if l.len() != size {
                return Err(bad(format!("{} labels for {size} elements", l.len())));
            }
        }
        Ok(Algebra {
            name: name.to_owned(),
            size,
            labels,
            sig,
            tables,
        })
    }

    /// The one-element algebra over `sig` (the empty product).
    pub fn trivial(sig: &Signature) -> Self {
        let tables = sig.symbols().iter().map(|_| vec![0]).collect();
        Algebra {
            name: "1".into(),
            size: 1,
            labels: Some(vec!["*".into()]),
            sig: sig.clone(),
            tables,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_owned();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn table(&self, op: usize) -> &[Elem] {
        &self.tables[op]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, e: Elem) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    /// Looks an element up by label, falling back to its decimal index.
    pub fn element_by_label(&self, s: &str) -> Option<Elem> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|x| x == s) {
                return Some(i);
            }
        }
        s.parse::<Elem>().ok().filter(|&e| e < self.size)
    }

    pub fn format_set(&self, s: &ElemSet) -> String {
        let parts: Vec<String> = s.iter().map(|e| self.label(e)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.size)
    }

    #[inline]
    pub fn apply(&self, op: usize, args: &[Elem]) -> Elem {
        let mut idx = 0;
        for &a in args {
            idx = idx * self.size + a;
        }
        self.tables[op][idx]
    }

    pub fn apply_named(&self, symbol: &str, args: &[Elem]) -> Result<Elem> {
        let op = self
            .sig
            .index_of(symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_owned()))?;
        let k = self.sig.symbols()[op].arity;
        if k != args.len() {
            return Err(Error::ArityMismatch {
                symbol: symbol.to_owned(),
                expected: k,
                found: args.len(),
            });
        }
        Ok(self.apply(op, args))
    }

    /// Evaluates `t` under `v`.
    pub fn eval(&self, t: &Term, v: &Valuation) -> Result<Elem> {
        let t = &t.bind(&self.sig)?;
        let vars = t.vars();
        let c = Compiled::new(t, &self.sig, &vars)?;
        let vals = vars
            .iter()
            .map(|x| v.get(x).copied().ok_or_else(|| Error::UnboundVariable(x.clone())))
            .collect::<Result<Vec<_>>>()?;
        if let Some(&e) = vals.iter().find(|&&e| e >= self.size) {
            return Err(Error::Invalid(format!("value {e} outside `{}`", self.name)));
        }
        Ok(c.eval(self, &vals))
    }

    pub fn holds_equation(&self, eq: &Equation, v: &Valuation) -> Result<bool> {
        Ok(self.eval(&eq.lhs, v)? == self.eval(&eq.rhs, v)?)
    }

    /// The first valuation (lexicographic in the variables' order of
    /// occurrence) falsifying `eq`, if any.
    pub fn equation_counterexample(&self, eq: &Equation) -> Result<Option<Valuation>> {
        let eq = &eq.bind(&self.sig)?;
        let vars = eq.vars();
        let l = Compiled::new(&eq.lhs, &self.sig, &vars)?;
        let r = Compiled::new(&eq.rhs, &self.sig, &vars)?;
        let mut stack = Vec::new();
        let mut found = None;
        for_each_tuple(self.size, vars.len(), |t| {
            if found.is_none() && l.eval_with(self, t, &mut stack) != r.eval_with(self, t, &mut stack)
            {
                found = Some(t.to_vec());
            }
        });
        Ok(found.map(|t| vars.into_iter().zip(t).collect()))
    }

    pub fn holds_universally(&self, eq: &Equation) -> Result<bool> {
        Ok(self.equation_counterexample(eq)?.is_none())
    }

    pub fn holds_quasi_universally(&self, q: &QuasiEquation) -> Result<bool> {
        let q = &q.bind(&self.sig)?;
        let vars = q.vars();
        let compile = |e: &Equation| -> Result<(Compiled, Compiled)> {
            Ok((
                Compiled::new(&e.lhs, &self.sig, &vars)?,
                Compiled::new(&e.rhs, &self.sig, &vars)?,
            ))
        };
        let prem = q.premises.iter().map(compile).collect::<Result<Vec<_>>>()?;
        let (cl, cr) = compile(&q.conclusion)?;
        let mut stack = Vec::new();
        let mut ok = true;
        for_each_tuple(self.size, vars.len(), |t| {
            if ok
                && prem
                    .iter()
                    .all(|(l, r)| l.eval_with(self, t, &mut stack) == r.eval_with(self, t, &mut stack))
                && cl.eval_with(self, t, &mut stack) != cr.eval_with(self, t, &mut stack)
            {
                ok = false;
            }
        });
        Ok(ok)
    }

    /// Least subuniverse containing `x` (and every constant).
    pub fn subuniverse(&self, x: &ElemSet) -> ElemSet {
        let mut set = x.clone();
        let mut members: Vec<Elem> = set.to_vec();
        let mut args = Vec::new();
        loop {
            let before = members.len();
            for (op, s) in self.sig.symbols().iter().enumerate() {
                let m = members.len();
                if m == 0 && s.arity > 0 {
                    continue;
                }
                let mut idx = vec![0; s.arity];
                loop {
                    args.clear();
                    args.extend(idx.iter().map(|&i| members[i]));
                    let r = self.apply(op, &args);
                    if set.insert(r) {
                        members.push(r);
                    }
                    if !next_tuple(&mut idx, m) {
                        break;
                    }
                }
            }
            if members.len() == before {
                return set;
            }
        }
    }

    /// Every non-empty subuniverse, smallest first.
    pub fn subuniverses(&self, budget: &Budget) -> Result<Vec<ElemSet>> {
        let mut found: BTreeSet<ElemSet> = BTreeSet::new();
        let mut queue = Vec::new();
        let bottom = self.subuniverse(&ElemSet::empty(self.size));
        if !bottom.is_empty() {
            found.insert(bottom.clone());
            queue.push(bottom);
        }
        for a in 0..self.size {
            let s = self.subuniverse(&ElemSet::singleton(self.size, a));
            if found.insert(s.clone()) {
                queue.push(s);
            }
        }
        while let Some(s) = queue.pop() {
            for a in 0..self.size {
                if s.contains(a) {
                    continue;
                }
                budget.spend(self.size as u64, "subuniverse enumeration")?;
                let mut t = s.clone();
                t.insert(a);
                let t = self.subuniverse(&t);
                if found.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        let mut out: Vec<ElemSet> = found.into_iter().collect();
        out.sort_by(|a, b| a.cmp_card_lex(b));
        Ok(out)
    }

    /// The subalgebra on a subuniverse, with its embedding into `self`.
    pub fn subalgebra(&self, s: &ElemSet) -> Result<(Algebra, Vec<Elem>)> {
        if s.is_empty() {
            return Err(Error::Invalid("empty subuniverse".into()));
        }
        if self.subuniverse(s) != *s {
            return Err(Error::Invalid(format!(
                "{} is not a subuniverse of `{}`",
                self.format_set(s),
                self.name
            )));
        }
        let emb = s.to_vec();
        let mut back = vec![usize::MAX; self.size];
        for (i, &e) in emb.iter().enumerate() {
            back[e] = i;
        }
        let m = emb.len();
        let mut tables = Vec::with_capacity(self.sig.len());
        for (op, sym) in self.sig.symbols().iter().enumerate() {
            let mut t = Vec::with_capacity(m.pow(sym.arity as u32));
            let mut args = Vec::new();
            for_each_tuple(m, sym.arity, |idx| {
                args.clear();
                args.extend(idx.iter().map(|&i| emb[i]));
                t.push(back[self.apply(op, &args)]);
            });
            tables.push(t);
        }
        let labels = Some(emb.iter().map(|&e| self.label(e)).collect());
        let ids: Vec<String> = emb.iter().map(|e| e.to_string()).collect();
        let name = format!("{}.sub[{}]", self.name, ids.join(","));
        Ok((Algebra::new(&name, m, self.sig.clone(), tables, labels)?, emb))
    }

    /// The quotient by `theta`; element `i` of the result is the block with
    /// the `i`-th smallest least member. Also returns the projection.
    pub fn quotient(&self, theta: &Partition) -> Result<(Algebra, Vec<Elem>)> {
        if theta.size() != self.size {
            return Err(Error::NotACongruence(format!(
                "partition of {} elements on `{}`",
                theta.size(),
                self.name
            )));
        }
        let proj = theta.block_ids().to_vec();
        let blocks = theta.blocks();
        let m = blocks.len();
        let mut tables = Vec::with_capacity(self.sig.len());
        let mut args = Vec::new();
        for (op, sym) in self.sig.symbols().iter().enumerate() {
            let mut t = vec![usize::MAX; m.pow(sym.arity as u32)];
            let mut failure = None;
            for_each_tuple(self.size, sym.arity, |tuple| {
                if failure.is_some() {
                    return;
                }
                let mut idx = 0;
                for &a in tuple {
                    idx = idx * m + proj[a];
                }
                let r = proj[self.apply(op, tuple)];
                if t[idx] == usize::MAX {
                    t[idx] = r;
                } else if t[idx] != r {
                    args.clear();
                    args.extend_from_slice(tuple);
                    failure = Some(format!("`{}` is not well defined at {:?}", sym.name, args));
                }
            });
            if let Some(msg) = failure {
                return Err(Error::NotACongruence(msg));
            }
            tables.push(t);
        }
        let labels = blocks
            .iter()
            .map(|b| {
                if b.len() == 1 {
                    self.label(b[0])
                } else {
                    let ls: Vec<String> = b.iter().map(|&e| self.label(e)).collect();
                    format!("[{}]", ls.join(","))
                }
            })
            .collect();
        let name = format!("{}/{}", self.name, theta);
        Ok((Algebra::new(&name, m, self.sig.clone(), tables, Some(labels))?, proj))
    }

    /// Whether `f` (one image per element) commutes with every operation.
    pub fn is_homomorphism(&self, f: &[Elem], target: &Algebra) -> Result<bool> {
        let align = self.sig.alignment(&target.sig)?;
        if f.len() != self.size || f.iter().any(|&e| e >= target.size) {
            return Ok(false);
        }
        let mut mapped = Vec::new();
        for (op, sym) in self.sig.symbols().iter().enumerate() {
            let mut ok = true;
            for_each_tuple(self.size, sym.arity, |t| {
                if ok {
                    mapped.clear();
                    mapped.extend(t.iter().map(|&a| f[a]));
                    ok = f[self.apply(op, t)] == target.apply(align[op], &mapped);
                }
            });
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The isomorphic copy in which old element `e` becomes `perm[e]`.
    pub fn permuted(&self, perm: &[Elem]) -> Result<Algebra> {
        let n = self.size;
        let mut inv = vec![usize::MAX; n];
        for (e, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::Invalid("not a permutation".into()));
            }
            inv[p] = e;
        }
        let mut tables = Vec::new();
        let mut old = Vec::new();
        for (op, sym) in self.sig.symbols().iter().enumerate() {
            let mut t = Vec::with_capacity(n.pow(sym.arity as u32));
            for_each_tuple(n, sym.arity, |new_args| {
                old.clear();
                old.extend(new_args.iter().map(|&a| inv[a]));
                t.push(perm[self.apply(op, &old)]);
            });
            tables.push(t);
        }
        let labels = (0..n).map(|p| self.label(inv[p])).collect();
        Algebra::new(&self.name, n, self.sig.clone(), tables, Some(labels))
    }

    /// A smallest set of elements generating the whole algebra, preferring
    /// lexicographically first sets among those of equal size.
    pub fn minimal_generating_set(&self, budget: &Budget) -> Result<Vec<Elem>> {
        let full = self.carrier();
        for k in 0..=self.size {
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                budget.spend(self.size as u64, "generating set search")?;
                let s = ElemSet::from_elems(self.size, idx.iter().copied());
                if self.subuniverse(&s) == full {
                    return Ok(idx);
                }
                if !next_combination(&mut idx, self.size) {
                    break;
                }
            }
        }
        unreachable!("the carrier generates itself")
    }
}

/// Steps `c` (strictly increasing, values < n) to the next k-combination.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A term compiled against a signature and a fixed variable order.
///
/// Evaluation runs a postfix program on a small value stack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compiled {
    code: Vec<Instr>,
    n_vars: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Instr {
    Var(usize),
    Op(usize, usize),
}

impl Compiled {
    /// Compiles `t`; atoms listed in `vars` are variables (index = position)
    /// and other atoms must be constants of `sig`.
    pub fn new(t: &Term, sig: &Signature, vars: &[String]) -> Result<Self> {
        let mut code = Vec::new();
        Self::emit(t, sig, vars, &mut code)?;
        Ok(Compiled {
            code,
            n_vars: vars.len(),
        })
    }

    fn emit(t: &Term, sig: &Signature, vars: &[String], code: &mut Vec<Instr>) -> Result<()> {
        match t {
            Term::Var(x) => {
                if let Some(i) = vars.iter().position(|v| v == x) {
                    code.push(Instr::Var(i));
                } else {
                    match sig.arity_of(x) {
                        Some(0) => code.push(Instr::Op(sig.index_of(x).unwrap(), 0)),
                        _ => return Err(Error::UnboundVariable(x.clone())),
                    }
                }
            }
            Term::App(f, args) => {
                let op = sig.index_of(f).ok_or_else(|| Error::UnknownSymbol(f.clone()))?;
                let k = sig.symbols()[op].arity;
                if k != args.len() {
                    return Err(Error::ArityMismatch {
                        symbol: f.clone(),
                        expected: k,
                        found: args.len(),
                    });
                }
                for a in args {
                    Self::emit(a, sig, vars, code)?;
                }
                code.push(Instr::Op(op, k));
            }
        }
        Ok(())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn eval(&self, a: &Algebra, vals: &[Elem]) -> Elem {
        let mut stack = Vec::new();
        self.eval_with(a, vals, &mut stack)
    }

    /// Evaluates with a caller-provided scratch stack.
    #[inline]
    pub fn eval_with(&self, a: &Algebra, vals: &[Elem], stack: &mut Vec<Elem>) -> Elem {
        stack.clear();
        for ins in &self.code {
            match *ins {
                Instr::Var(i) => stack.push(vals[i]),
                Instr::Op(op, k) => {
                    let base = stack.len() - k;
                    let r = a.apply(op, &stack[base..]);
                    stack.truncate(base);
                    stack.push(r);
                }
            }
        }
        stack[0]
    }

    /// Evaluates pointwise over vectors of values (one vector per variable).
    pub fn eval_vectors(&self, a: &Algebra, vals: &[&[Elem]], len: usize) -> Vec<Elem> {
        let mut out = Vec::with_capacity(len);
        let mut stack = Vec::new();
        let mut point = vec![0; vals.len()];
        for i in 0..len {
            for (p, v) in point.iter_mut().zip(vals) {
                *p = v[i];
            }
            out.push(self.eval_with(a, &point, &mut stack));
        }
        out
    }
}

/// A direct product with its coordinate codec.
///
/// Element index `Σ t_i · (n_0 ⋯ n_{i-1})` encodes the tuple `t`, so the
/// first coordinate varies fastest.
#[derive(Debug, Clone)]
pub struct Product {
    pub algebra: Algebra,
    pub factor_sizes: Vec<usize>,
}

impl Product {
    pub fn encode(&self, t: &[Elem]) -> Elem {
        encode(&self.factor_sizes, t)
    }

    pub fn decode(&self, e: Elem) -> Vec<Elem> {
        decode(&self.factor_sizes, e)
    }

    /// The `i`-th projection as a map on element indices.
    pub fn projection(&self, i: usize) -> Vec<Elem> {
        (0..self.algebra.size()).map(|e| self.decode(e)[i]).collect()
    }
}

pub(crate) fn encode(sizes: &[usize], t: &[Elem]) -> Elem {
    let mut e = 0;
    for i in (0..sizes.len()).rev() {
        e = e * sizes[i] + t[i];
    }
    e
}

pub(crate) fn decode(sizes: &[usize], mut e: Elem) -> Vec<Elem> {
    let mut t = Vec::with_capacity(sizes.len());
    for &n in sizes {
        t.push(e % n);
        e /= n;
    }
    t
}

/// The direct product of `factors` (all over the same symbols).
///
/// The empty list gives the one-element algebra over `sig`.
pub fn direct_product(factors: &[&Algebra], sig: &Signature, budget: &Budget) -> Result<Product> {
    if factors.is_empty() {
        return Ok(Product {
            algebra: Algebra::trivial(sig),
            factor_sizes: Vec::new(),
        });
    }
    let sig = factors[0].signature().clone();
    let aligns = factors
        .iter()
        .map(|f| sig.alignment(f.signature()))
        .collect::<Result<Vec<_>>>()?;
    let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let size = sizes
        .iter()
        .try_fold(1usize, |acc, &n| acc.checked_mul(n))
        .ok_or_else(|| Error::SizeBudgetExceeded("product carrier overflows".into()))?;
    let mut entries: u128 = 0;
    for s in sig.symbols() {
        entries += (size as u128).pow(s.arity as u32) * factors.len() as u128;
    }
    budget.check_size(entries, "direct product")?;
    budget.spend(entries as u64, "direct product")?;

    let coords: Vec<Vec<Elem>> = (0..size).map(|e| decode(&sizes, e)).collect();
    let mut tables = Vec::with_capacity(sig.len());
    let mut fargs = Vec::new();
    let mut out = vec![0; factors.len()];
    for (op, s) in sig.symbols().iter().enumerate() {
        let mut t = Vec::with_capacity(size.pow(s.arity as u32));
        for_each_tuple(size, s.arity, |args| {
            for (i, f) in factors.iter().enumerate() {
                fargs.clear();
                fargs.extend(args.iter().map(|&a| coords[a][i]));
                out[i] = f.apply(aligns[i][op], &fargs);
            }
            t.push(encode(&sizes, &out));
        });
        tables.push(t);
    }
    let labels = coords
        .iter()
        .map(|c| {
            let parts: Vec<String> = c
                .iter()
                .zip(factors)
                .map(|(&x, f)| f.label(x))
                .collect();
            format!("⟨{}⟩", parts.join(","))
        })
        .collect();
    let name = product_name(factors);
    Ok(Product {
        algebra: Algebra::new(&name, size, sig, tables, Some(labels))?,
        factor_sizes: sizes,
    })
}

fn product_name(factors: &[&Algebra]) -> String {
    let first = factors[0].name();
    if factors.len() > 1 && factors.iter().all(|f| f.name() == first) {
        format!("{first}^{}", factors.len())
    } else {
        let names: Vec<&str> = factors.iter().map(|f| f.name()).collect();
        names.join("×")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> Algebra {
        let sig = Signature::new(vec![Symbol::new("neg", 1), Symbol::new("one", 0)]).unwrap();
        Algebra::new("B2", 2, sig, vec![vec![1, 0], vec![1]], None).unwrap()
    }

    #[test]
    fn rejects_malformed_tables() {
        let sig = Signature::new(vec![Symbol::new("neg", 1)]).unwrap();
        assert!(Algebra::new("x", 2, sig.clone(), vec![vec![1]], None).is_err());
        assert!(Algebra::new("x", 2, sig, vec![vec![1, 2]], None).is_err());
    }

    #[test]
    fn codec_is_little_endian() {
        let sizes = [3, 3];
        assert_eq!(encode(&sizes, &[2, 0]), 2);
        assert_eq!(encode(&sizes, &[0, 1]), 3);
        for e in 0..9 {
            assert_eq!(encode(&sizes, &decode(&sizes, e)), e);
        }
    }

    #[test]
    fn constants_generate() {
        let a = chain2();
        assert_eq!(a.subuniverse(&ElemSet::empty(2)).to_vec(), vec![0, 1]);
        assert_eq!(a.minimal_generating_set(&Budget::default()).unwrap(), Vec::<Elem>::new());
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }

    #[test]
    fn unbound_variable_is_reported() {
        let a = chain2();
        let t = Term::parse("(neg x)").unwrap();
        assert_eq!(a.eval(&t, &Valuation::new()), Err(Error::UnboundVariable("x".into())));
    }

    #[test]
    fn constant_atoms_in_equations() {
        let a = chain2();
        let eq = Equation::parse("(neg (neg x))", "x").unwrap();
        assert!(a.holds_universally(&eq).unwrap());
        let one = Equation::parse("(neg x)", "one").unwrap();
        let cx = a.equation_counterexample(&one).unwrap().unwrap();
        assert_eq!(cx.get("x"), Some(&1));
        assert!(!cx.contains_key("one"));
    }
}
