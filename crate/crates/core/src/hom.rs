//! Homomorphism search by backtracking with forward propagation.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::algebra::{for_each_tuple, Algebra, Elem};
use crate::{Budget, Error, Result};

const UNSET: usize = usize::MAX;

struct Search<'a, F> {
    a: &'a Algebra,
    b: &'a Algebra,
    align: Vec<usize>,
    injective: bool,
    budget: &'a Budget,
    h: Vec<Elem>,
    used: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&[Elem]) -> ControlFlow<()>> Search<'_, F> {
    fn assign(&mut self, x: Elem, v: Elem, trail: &mut Vec<Elem>) -> bool {
        if self.h[x] != UNSET {
            return self.h[x] == v;
        }
        if self.injective {
            if self.used[v] {
                return false;
            }
            self.used[v] = true;
        }
        self.h[x] = v;
        trail.push(x);
        true
    }

    fn undo(&mut self, trail: &[Elem]) {
        for &x in trail {
            if self.injective {
                self.used[self.h[x]] = false;
            }
            self.h[x] = UNSET;
        }
    }

    /// Forces images of operation results whose arguments are all mapped.
    fn propagate(&mut self, trail: &mut Vec<Elem>) -> Result<bool> {
        let mut mapped = Vec::new();
        loop {
            let mut changed = false;
            let mut conflict = false;
            let mut steps = 0u64;
            for (op, s) in self.a.signature().symbols().iter().enumerate() {
                let mut pending: Vec<(Elem, Elem)> = Vec::new();
                let h = &self.h;
                for_each_tuple(self.a.size(), s.arity, |t| {
                    if conflict || t.iter().any(|&x| h[x] == UNSET) {
                        return;
                    }
                    steps += 1;
                    mapped.clear();
                    mapped.extend(t.iter().map(|&x| h[x]));
                    let want = self.b.apply(self.align[op], &mapped);
                    let r = self.a.apply(op, t);
                    if h[r] == UNSET {
                        pending.push((r, want));
                    } else if h[r] != want {
                        conflict = true;
                    }
                });
                self.budget.spend(steps, "homomorphism search")?;
                steps = 0;
                if conflict {
                    return Ok(false);
                }
                for (r, want) in pending {
                    if !self.assign(r, want, trail) {
                        return Ok(false);
                    }
                    changed = true;
                }
            }
            if !changed {
                return Ok(true);
            }
        }
    }

    fn run(&mut self) -> Result<ControlFlow<()>> {
        self.budget.spend(1, "homomorphism search")?;
        let mut trail = Vec::new();
        if !self.propagate(&mut trail)? {
            self.undo(&trail);
            return Ok(ControlFlow::Continue(()));
        }
        let next = self.h.iter().position(|&v| v == UNSET);
        let flow = match next {
            None => (self.visit)(&self.h),
            Some(x) => {
                let mut flow = ControlFlow::Continue(());
                for v in 0..self.b.size() {
                    let mut local = Vec::new();
                    if self.assign(x, v, &mut local) {
                        flow = self.run()?;
                    }
                    self.undo(&local);
                    if flow.is_break() {
                        break;
                    }
                }
                flow
            }
        };
        self.undo(&trail);
        Ok(flow)
    }
}

/// Visits every homomorphism `a → b` extending `fixed`, in lexicographic
/// order of image vectors. `visit` can stop the search early.
pub fn for_each_homomorphism(
    a: &Algebra,
    b: &Algebra,
    fixed: &[(Elem, Elem)],
    injective: bool,
    budget: &Budget,
    visit: impl FnMut(&[Elem]) -> ControlFlow<()>,
) -> Result<()> {
    let align = a.signature().alignment(b.signature())?;
    let mut s = Search {
        a,
        b,
        align,
        injective,
        budget,
        h: vec![UNSET; a.size()],
        used: vec![false; b.size()],
        visit,
    };
    let mut trail = Vec::new();
    for &(x, v) in fixed {
        if x >= a.size() || v >= b.size() {
            return Err(Error::Invalid("partial map outside the carriers".into()));
        }
        if !s.assign(x, v, &mut trail) {
            return Ok(());
        }
    }
    let _ = s.run()?;
    Ok(())
}

/// All homomorphisms `a → b`, lexicographically ordered.
pub fn enumerate_homomorphisms(a: &Algebra, b: &Algebra, budget: &Budget) -> Result<Vec<Vec<Elem>>> {
    let mut out = Vec::new();
    for_each_homomorphism(a, b, &[], false, budget, |h| {
        out.push(h.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The first homomorphism extending `fixed`, if one exists.
pub fn find_homomorphism(
    a: &Algebra,
    b: &Algebra,
    fixed: &[(Elem, Elem)],
    budget: &Budget,
) -> Result<Option<Vec<Elem>>> {
    let mut found = None;
    for_each_homomorphism(a, b, fixed, false, budget, |h| {
        found = Some(h.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// An isomorphism `a → b`, if the two are isomorphic.
pub fn find_isomorphism(a: &Algebra, b: &Algebra, budget: &Budget) -> Result<Option<Vec<Elem>>> {
    if a.size() != b.size() || !a.signature().same_symbols(b.signature()) {
        return Ok(None);
    }
    let mut found = None;
    for_each_homomorphism(a, b, &[], true, budget, |h| {
        found = Some(h.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}
