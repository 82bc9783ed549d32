use std::time::Instant;

use super::budget::{Abort, Budget, Counter, Incumbent};
use super::engine::{bit, ones, Mask};
use super::{check_size, mask_to_set, IndependenceResult, SolveError, SolveOptions, SolveStats};
use crate::graph::Graph;

struct Mis {
    adj: Vec<Mask>,
}

impl Mis {
    /// Branches on the lowest candidate: take it (dropping its neighbors),
    /// then skip it.
    fn maximize(&self, cur: Mask, cands: Mask, inc: &Incumbent, ctr: &mut Counter<'_>) -> Result<(), Abort> {
        ctr.node()?;
        if cands == 0 {
            inc.offer(cur);
            return Ok(());
        }
        if ones(cur) + ones(cands) <= inc.size() {
            ctr.prune();
            return Ok(());
        }
        let v = cands.trailing_zeros() as usize;
        let rest = cands & !bit(v);
        self.maximize(cur | bit(v), rest & !self.adj[v], inc, ctr)?;
        self.maximize(cur, rest, inc, ctr)
    }

    fn find(&self, cur: Mask, cands: Mask, k: usize, ctr: &mut Counter<'_>) -> Result<Option<Mask>, Abort> {
        ctr.node()?;
        if ones(cur) == k {
            return Ok(Some(cur));
        }
        if ones(cur) + ones(cands) < k {
            return Ok(None);
        }
        let v = cands.trailing_zeros() as usize;
        let rest = cands & !bit(v);
        if let Some(s) = self.find(cur | bit(v), rest & !self.adj[v], k, ctr)? {
            return Ok(Some(s));
        }
        self.find(cur, rest, k, ctr)
    }
}

/// Exact independence number α(G) with the lexicographically least maximum
/// independent set.
pub fn solve_independence(g: &Graph, opts: &SolveOptions) -> Result<IndependenceResult, SolveError> {
    let start = Instant::now();
    check_size(g)?;
    let n = g.n();
    let mis = Mis {
        adj: (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
            .collect(),
    };
    let all: Mask = (0..n).fold(0, |m, v| m | bit(v));
    let budget = Budget::new(opts.node_budget, opts.time_budget_ms, start);
    let inc = Incumbent::new(0);
    let outcome = {
        let mut ctr = budget.counter();
        mis.maximize(0, all, &inc, &mut ctr).and_then(|_| ctr.sync())
    };
    let (best, value) = inc.get();
    let stats = |b: &Budget| SolveStats {
        nodes_explored: b.nodes(),
        prunes: b.prunes(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    if outcome.is_err() {
        return Err(SolveError::IncompleteIndependence(Box::new(IndependenceResult {
            value,
            witness: mask_to_set(n, best),
            stats: stats(&budget),
        })));
    }
    let unlimited = Budget::new(0, 0, start);
    let witness = {
        let mut ctr = unlimited.counter();
        mis.find(0, all, value, &mut ctr).ok().flatten().unwrap_or(best)
    };
    let mut st = stats(&budget);
    st.nodes_explored += unlimited.nodes();
    Ok(IndependenceResult {
        value,
        witness: mask_to_set(n, witness),
        stats: st,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn alpha(n: usize, edges: &[(usize, usize)]) -> IndependenceResult {
        solve_independence(&build_graph(n, edges).unwrap(), &SolveOptions::default()).unwrap()
    }

    #[test]
    fn small_graphs() {
        let p5 = alpha(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(p5.value, 3);
        assert_eq!(p5.witness.to_vec(), vec![0, 2, 4]);
        assert_eq!(alpha(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).value, 2);
        let k6: Vec<_> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        assert_eq!(alpha(6, &k6).value, 1);
    }
}
