//! Candidate-set search for the hereditary variants (mutual, outer, total).
//!
//! A node holds a feasible set `x` and the candidates `c` (later in the
//! branching order) for which `x ∪ {c}` is still feasible. By heredity any
//! feasible superset of `x` draws its new vertices from those candidates, so
//! both the candidate count and the convex-path bound over `x ∪ candidates`
//! are valid upper bounds for the subtree.

use std::sync::atomic::{AtomicUsize, Ordering};

use super::budget::{Abort, Budget, Counter, Incumbent};
use super::engine::{bit, Engine, Mask};
use crate::visibility::Variant;

struct Ctx<'a> {
    eng: &'a Engine,
    variant: Variant,
}

impl Ctx<'_> {
    fn extend(&self, x: Mask, cands: &[usize]) -> Vec<usize> {
        cands
            .iter()
            .copied()
            .filter(|&d| self.eng.can_add(x, d, self.variant))
            .collect()
    }

    fn expand(
        &self,
        x: Mask,
        cands: &[usize],
        inc: &Incumbent,
        ctr: &mut Counter<'_>,
    ) -> Result<(), Abort> {
        ctr.node()?;
        inc.offer(x);
        let mut rest: Mask = cands.iter().fold(0, |m, &c| m | bit(c));
        for (i, &c) in cands.iter().enumerate() {
            if self.eng.upper_bound(x, rest) <= inc.size() {
                ctr.prune();
                return Ok(());
            }
            rest &= !bit(c);
            let x2 = x | bit(c);
            let next = self.extend(x2, &cands[i + 1..]);
            self.expand(x2, &next, inc, ctr)?;
        }
        Ok(())
    }

    /// Lexicographic search for a set of exactly `k` vertices.
    fn find(&self, x: Mask, cands: &[usize], k: usize, ctr: &mut Counter<'_>) -> Result<Option<Mask>, Abort> {
        ctr.node()?;
        if x.count_ones() as usize == k {
            return Ok(Some(x));
        }
        let mut rest: Mask = cands.iter().fold(0, |m, &c| m | bit(c));
        for (i, &c) in cands.iter().enumerate() {
            if self.eng.upper_bound(x, rest) < k {
                ctr.prune();
                return Ok(None);
            }
            rest &= !bit(c);
            let x2 = x | bit(c);
            let next = self.extend(x2, &cands[i + 1..]);
            if let Some(found) = self.find(x2, &next, k, ctr)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Raises `inc` to the optimum over sets drawn from `order`. Root branches
/// are handed out to `workers` threads in order.
pub(crate) fn maximize(
    eng: &Engine,
    variant: Variant,
    order: &[usize],
    budget: &Budget,
    inc: &Incumbent,
    workers: usize,
) -> Result<(), Abort> {
    let ctx = Ctx { eng, variant };
    let roots = ctx.extend(0, order);
    let next_root = AtomicUsize::new(0);

    let work = || -> Result<(), Abort> {
        let mut ctr = budget.counter();
        loop {
            let i = next_root.fetch_add(1, Ordering::Relaxed);
            let Some(&c) = roots.get(i) else {
                return ctr.sync();
            };
            let rest: Mask = roots[i..].iter().fold(0, |m, &r| m | bit(r));
            if eng.upper_bound(0, rest) <= inc.size() {
                ctr.prune();
                continue;
            }
            let x = bit(c);
            let cands = ctx.extend(x, &roots[i + 1..]);
            ctx.expand(x, &cands, inc, &mut ctr)?;
        }
    };

    if workers <= 1 {
        return work();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers).map(|_| scope.spawn(work)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect::<Result<Vec<()>, Abort>>()
            .map(|_| ())
    })
}

/// Lexicographically least feasible set of size `k`, scanning `ascending`.
pub(crate) fn lex_least(
    eng: &Engine,
    variant: Variant,
    ascending: &[usize],
    k: usize,
    budget: &Budget,
) -> Option<Mask> {
    let ctx = Ctx { eng, variant };
    let roots = ctx.extend(0, ascending);
    let mut ctr = budget.counter();
    ctx.find(0, &roots, k, &mut ctr).ok().flatten()
}
