//! Include/exclude search for the dual variant.
//!
//! Dual sets are not closed under subsets, so the search decides every
//! vertex explicitly. Only two prunes are sound, both because adding
//! vertices to X can only remove geodesics:
//!
//! * two decided members are not visible w.r.t. the decided members;
//! * two decided non-members are not visible w.r.t. the decided members.
//!
//! Surviving leaves are re-checked in full.

use std::sync::atomic::{AtomicUsize, Ordering};

use super::budget::{Abort, Budget, Counter, Incumbent};
use super::engine::{bit, ones, Engine, Mask};
use crate::visibility::Variant;

/// Depth at which the tree is cut into independent tasks for workers.
const SPLIT_DEPTH: usize = 10;

struct Ctx<'a> {
    eng: &'a Engine,
    order: &'a [usize],
    /// `suffix[d]`: vertices `order[d..]`, still undecided at depth `d`.
    suffix: Vec<Mask>,
}

#[derive(Clone, Copy)]
struct State {
    depth: usize,
    inside: Mask,
    outside: Mask,
}

impl<'a> Ctx<'a> {
    fn new(eng: &'a Engine, order: &'a [usize]) -> Self {
        let mut suffix = vec![0; order.len() + 1];
        for d in (0..order.len()).rev() {
            suffix[d] = suffix[d + 1] | bit(order[d]);
        }
        Ctx { eng, order, suffix }
    }

    /// Children of `s` that survive the two prunes, include-branch first.
    fn children(&self, s: State) -> impl Iterator<Item = State> + '_ {
        let v = self.order[s.depth];
        let inc = self
            .eng
            .dual_include_ok(s.inside, s.outside, v)
            .then_some(State {
                depth: s.depth + 1,
                inside: s.inside | bit(v),
                outside: s.outside,
            });
        let exc = self
            .eng
            .dual_exclude_ok(s.inside, s.outside, v)
            .then_some(State {
                depth: s.depth + 1,
                inside: s.inside,
                outside: s.outside | bit(v),
            });
        inc.into_iter().chain(exc)
    }

    fn maximize(&self, s: State, inc: &Incumbent, ctr: &mut Counter<'_>) -> Result<(), Abort> {
        ctr.node()?;
        if self.eng.upper_bound(s.inside, self.suffix[s.depth]) <= inc.size() {
            ctr.prune();
            return Ok(());
        }
        if s.depth == self.order.len() {
            if self.eng.is_feasible(s.inside, Variant::Dual) {
                inc.offer(s.inside);
            }
            return Ok(());
        }
        for child in self.children(s) {
            self.maximize(child, inc, ctr)?;
        }
        Ok(())
    }

    /// States at depth `SPLIT_DEPTH` (or leaves above it) in DFS order.
    fn frontier(&self, s: State, out: &mut Vec<State>) {
        if s.depth == self.order.len().min(SPLIT_DEPTH) {
            out.push(s);
            return;
        }
        for child in self.children(s) {
            self.frontier(child, out);
        }
    }

    fn find(&self, s: State, k: usize, ctr: &mut Counter<'_>) -> Result<Option<Mask>, Abort> {
        ctr.node()?;
        if ones(s.inside) > k || self.eng.upper_bound(s.inside, self.suffix[s.depth]) < k {
            ctr.prune();
            return Ok(None);
        }
        if s.depth == self.order.len() {
            let ok = ones(s.inside) == k && self.eng.is_feasible(s.inside, Variant::Dual);
            return Ok(ok.then_some(s.inside));
        }
        for child in self.children(s) {
            if let Some(found) = self.find(child, k, ctr)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

const ROOT: State = State {
    depth: 0,
    inside: 0,
    outside: 0,
};

pub(crate) fn maximize(
    eng: &Engine,
    order: &[usize],
    budget: &Budget,
    inc: &Incumbent,
    workers: usize,
) -> Result<(), Abort> {
    let ctx = Ctx::new(eng, order);
    if workers <= 1 {
        let mut ctr = budget.counter();
        ctx.maximize(ROOT, inc, &mut ctr)?;
        return ctr.sync();
    }
    let mut tasks = Vec::new();
    ctx.frontier(ROOT, &mut tasks);
    let next = AtomicUsize::new(0);
    let work = || -> Result<(), Abort> {
        let mut ctr = budget.counter();
        while let Some(&s) = tasks.get(next.fetch_add(1, Ordering::Relaxed)) {
            ctx.maximize(s, inc, &mut ctr)?;
        }
        ctr.sync()
    };
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers).map(|_| scope.spawn(work)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect::<Result<Vec<()>, Abort>>()
            .map(|_| ())
    })
}

/// Lexicographically least dual set of size `k`, deciding vertices in the
/// given ascending order with the include branch first.
pub(crate) fn lex_least(eng: &Engine, ascending: &[usize], k: usize, budget: &Budget) -> Option<Mask> {
    let ctx = Ctx::new(eng, ascending);
    let mut ctr = budget.counter();
    ctx.find(ROOT, k, &mut ctr).ok().flatten()
}
