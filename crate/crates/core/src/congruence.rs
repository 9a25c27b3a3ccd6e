//! Congruences as canonical partitions: generation, the full lattice,
//! unary polynomials and the Leibniz congruence.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{for_each_tuple, Algebra, Elem};
use crate::{Budget, ElemSet, Error, Limits, Result};

/// A partition of `{0..n}` stored as block ids in first-occurrence order.
///
/// Canonical: two partitions are equal exactly when their arrays are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    ids: Vec<usize>,
}

impl Partition {
    /// Normalises any labelling of blocks.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let ids = labels
            .iter()
            .map(|&l| match map.iter().find(|(k, _)| *k == l) {
                Some(&(_, v)) => v,
                None => {
                    let v = map.len();
                    map.push((l, v));
                    v
                }
            })
            .collect();
        Partition { ids }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<Elem>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &e in block {
                if e >= n || labels[e] != usize::MAX {
                    return Err(Error::Invalid("blocks do not partition the carrier".into()));
                }
                labels[e] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::Invalid("blocks do not cover the carrier".into()));
        }
        Ok(Partition::from_labels(&labels))
    }

    /// Δ.
    pub fn identity(n: usize) -> Self {
        Partition {
            ids: (0..n).collect(),
        }
    }

    /// ∇.
    pub fn total(n: usize) -> Self {
        Partition { ids: vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.ids.len()
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn block_of(&self, e: Elem) -> usize {
        self.ids[e]
    }

    pub fn num_blocks(&self) -> usize {
        self.ids.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks ordered by least member, each sorted.
    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (e, &b) in self.ids.iter().enumerate() {
            out[b].push(e);
        }
        out
    }

    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.ids[a] == self.ids[b]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Inclusion as relations.
    pub fn leq(&self, other: &Partition) -> bool {
        let mut rep = vec![usize::MAX; self.num_blocks()];
        for (e, &b) in self.ids.iter().enumerate() {
            if rep[b] == usize::MAX {
                rep[b] = e;
            } else if !other.related(rep[b], e) {
                return false;
            }
        }
        true
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let pairs: Vec<(usize, usize)> = self.ids.iter().copied().zip(other.ids.iter().copied()).collect();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let labels: Vec<usize> = pairs
            .iter()
            .map(|p| match seen.iter().position(|q| q == p) {
                Some(i) => i,
                None => {
                    seen.push(*p);
                    seen.len() - 1
                }
            })
            .collect();
        Partition::from_labels(&labels)
    }

    /// Join as equivalence relations.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.size());
        for p in [self, other] {
            let mut rep = vec![usize::MAX; p.num_blocks()];
            for (e, &b) in p.ids.iter().enumerate() {
                if rep[b] == usize::MAX {
                    rep[b] = e;
                } else {
                    uf.union(rep[b], e);
                }
            }
        }
        uf.partition()
    }

    /// Pairs `(a, b)` with `a < b` in the same block.
    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            for b in a + 1..self.size() {
                if self.related(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether the partition is compatible with every operation of `a`.
    pub fn is_congruence_of(&self, a: &Algebra) -> bool {
        let mut ok = true;
        let mut moved = Vec::new();
        let rep: Vec<Elem> = self.blocks().iter().map(|b| b[0]).collect();
        for (op, s) in a.signature().symbols().iter().enumerate() {
            for_each_tuple(a.size(), s.arity, |t| {
                if !ok {
                    return;
                }
                let v = a.apply(op, t);
                for i in 0..t.len() {
                    moved.clear();
                    moved.extend_from_slice(t);
                    moved[i] = rep[self.ids[t[i]]];
                    if !self.related(v, a.apply(op, &moved)) {
                        ok = false;
                        return;
                    }
                }
            });
        }
        ok
    }

    /// Display with element labels of `a`, e.g. `{0,1},{a1,b},{a2}`.
    pub fn format_with(&self, a: &Algebra) -> String {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| a.format_set(&ElemSet::from_elems(a.size(), b.iter().copied())))
            .collect();
        parts.join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Disjoint sets with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns whether they were apart.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn partition(&mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|e| self.find(e)).collect();
        Partition::from_labels(&labels)
    }
}

/// Cg^A(pairs): the least congruence containing `pairs`.
pub fn cg_generated(a: &Algebra, pairs: &[(Elem, Elem)]) -> Partition {
    let mut uf = UnionFind::new(a.size());
    for &(x, y) in pairs {
        uf.union(x, y);
    }
    close_under_operations(a, &mut uf);
    uf.partition()
}

/// Saturates `uf` until it is compatible with every operation.
///
/// Each round replaces one argument of every tuple by its class
/// representative and merges the two results.
fn close_under_operations(a: &Algebra, uf: &mut UnionFind) {
    let mut moved = Vec::new();
    loop {
        let mut changed = false;
        for (op, s) in a.signature().symbols().iter().enumerate() {
            if s.arity == 0 {
                continue;
            }
            for_each_tuple(a.size(), s.arity, |t| {
                let v = a.apply(op, t);
                for i in 0..t.len() {
                    let r = uf.find(t[i]);
                    if r == t[i] {
                        continue;
                    }
                    moved.clear();
                    moved.extend_from_slice(t);
                    moved[i] = r;
                    let w = a.apply(op, &moved);
                    changed |= uf.union(v, w);
                }
            });
        }
        if !changed {
            return;
        }
    }
}

/// The congruence lattice of an algebra, finest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSet {
    pub congruences: Vec<Partition>,
    pub closed_under_meet: bool,
}

impl CongruenceSet {
    pub fn new(mut congruences: Vec<Partition>) -> Self {
        congruences.sort_by(|a, b| b.num_blocks().cmp(&a.num_blocks()).then_with(|| a.cmp(b)));
        congruences.dedup();
        let set: BTreeSet<&Partition> = congruences.iter().collect();
        let closed_under_meet = congruences
            .iter()
            .all(|x| congruences.iter().all(|y| set.contains(&x.meet(y))));
        CongruenceSet {
            congruences,
            closed_under_meet,
        }
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Partition> {
        self.congruences.iter()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.congruences.contains(p)
    }
}

/// Every congruence: principal congruences closed under joins, plus Δ.
pub fn all_congruences(a: &Algebra, limits: &Limits, budget: &Budget) -> Result<CongruenceSet> {
    if a.size() > limits.max_congruence_size {
        return Err(Error::SizeBudgetExceeded(alloc::format!(
            "congruence enumeration on `{}` ({} elements, cap {})",
            a.name(),
            a.size(),
            limits.max_congruence_size
        )));
    }
    let n = a.size();
    let mut principal: Vec<Partition> = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            budget.spend((n * n) as u64, "principal congruences")?;
            let p = cg_generated(a, &[(x, y)]);
            if !principal.contains(&p) {
                principal.push(p);
            }
        }
    }
    let mut found: BTreeSet<Partition> = BTreeSet::new();
    found.insert(Partition::identity(n));
    let mut queue: Vec<Partition> = Vec::new();
    for p in &principal {
        if found.insert(p.clone()) {
            queue.push(p.clone());
        }
    }
    while let Some(c) = queue.pop() {
        for p in &principal {
            budget.spend(n as u64, "congruence joins")?;
            let j = c.join(p);
            if found.insert(j.clone()) {
                queue.push(j);
            }
        }
    }
    Ok(CongruenceSet::new(found.into_iter().collect()))
}

/// F is a union of θ-blocks.
pub fn is_compatible(theta: &Partition, f: &ElemSet) -> bool {
    let blocks = theta.num_blocks();
    let mut seen_in = vec![false; blocks];
    let mut seen_out = vec![false; blocks];
    for e in 0..theta.size() {
        let b = theta.block_of(e);
        if f.contains(e) {
            seen_in[b] = true;
        } else {
            seen_out[b] = true;
        }
    }
    seen_in.iter().zip(&seen_out).all(|(i, o)| !(i & o))
}

/// The monoid of unary polynomial maps generated from the identity by
/// basic translations `x ↦ f(c1, …, p(x), …, ck)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryPolynomials {
    pub functions: Vec<Vec<Elem>>,
}

pub fn unary_polynomials(a: &Algebra, budget: &Budget) -> Result<UnaryPolynomials> {
    let n = a.size();
    let translations = basic_translations(a);
    let id: Vec<Elem> = (0..n).collect();
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for t in &translations {
            budget.spend(n as u64, "unary polynomial clone")?;
            let q: Vec<Elem> = p.iter().map(|&v| t[v]).collect();
            if seen.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    Ok(UnaryPolynomials {
        functions: seen.into_iter().collect(),
    })
}

/// Distinct maps `x ↦ f(c1, …, x, …, ck)` over all symbols, positions and
/// constant tuples.
fn basic_translations(a: &Algebra) -> Vec<Vec<Elem>> {
    let n = a.size();
    let mut out: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut args = Vec::new();
    for (op, s) in a.signature().symbols().iter().enumerate() {
        if s.arity == 0 {
            continue;
        }
        for pos in 0..s.arity {
            for_each_tuple(n, s.arity - 1, |cs| {
                let map = (0..n)
                    .map(|x| {
                        args.clear();
                        args.extend_from_slice(&cs[..pos]);
                        args.push(x);
                        args.extend_from_slice(&cs[pos..]);
                        a.apply(op, &args)
                    })
                    .collect();
                out.insert(map);
            });
        }
    }
    out.into_iter().collect()
}

/// Ω^A(F): `a ~ b` iff every unary polynomial keeps them on the same side
/// of F.
pub fn leibniz_congruence(a: &Algebra, f: &ElemSet, budget: &Budget) -> Result<Partition> {
    let polys = unary_polynomials(a, budget)?;
    let n = a.size();
    let signatures: Vec<Vec<bool>> = (0..n)
        .map(|x| polys.functions.iter().map(|p| f.contains(p[x])).collect())
        .collect();
    let labels: Vec<usize> = (0..n)
        .map(|x| (0..=x).find(|&y| signatures[y] == signatures[x]).unwrap())
        .collect();
    Ok(Partition::from_labels(&labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_labels() {
        let p = Partition::from_labels(&[7, 7, 3, 9, 3]);
        assert_eq!(p.block_ids(), &[0, 0, 1, 2, 1]);
        assert_eq!(p.blocks(), vec![vec![0, 1], vec![2, 4], vec![3]]);
        assert_eq!(alloc::format!("{p}"), "[[0,1],[2,4],[3]]");
    }

    #[test]
    fn lattice_ops() {
        let a = Partition::from_labels(&[0, 0, 1, 1]);
        let b = Partition::from_labels(&[0, 1, 1, 2]);
        assert_eq!(a.join(&b), Partition::total(4));
        assert_eq!(a.meet(&b), Partition::from_labels(&[0, 1, 2, 3]));
        assert!(a.meet(&b).leq(&a) && a.leq(&a.join(&b)));
        assert!(!a.leq(&b));
    }

    #[test]
    fn compatibility_with_blocks() {
        let t = Partition::from_labels(&[0, 0, 1]);
        assert!(is_compatible(&t, &ElemSet::from_elems(3, [0, 1])));
        assert!(!is_compatible(&t, &ElemSet::from_elems(3, [0])));
        assert!(is_compatible(&Partition::identity(3), &ElemSet::from_elems(3, [2])));
    }

    #[test]
    fn refinement_is_not_lexicographic() {
        let fine = Partition::from_labels(&[0, 1, 2]);
        let coarse = Partition::from_labels(&[0, 0, 1]);
        let other = Partition::from_labels(&[0, 1, 1]);
        assert!(fine.leq(&coarse));
        assert!(!coarse.leq(&other) && !other.leq(&coarse));
        let refs = [&coarse, &other];
        assert!(refs.iter().all(|p| !p.leq(&fine)));
    }
}
