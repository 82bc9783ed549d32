//! Exact computation of the four mutual-visibility numbers and of the
//! independence number.
//!
//! Every search runs in two phases. The first finds the optimum value with
//! a shared incumbent (optionally across worker threads). The second, always
//! sequential, enumerates sets of exactly that size in lexicographic order
//! and stops at the first valid one, so the reported witness is the
//! lexicographically least maximum set regardless of scheduling.

mod budget;
mod dual;
pub(crate) mod engine;
mod hereditary;
mod independence;
mod zero;

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};
use crate::visibility::{satisfies, Variant};

use budget::{Abort, Budget, Incumbent};
use engine::{Bits, Engine, Mask, MAX_VERTICES};

pub use independence::solve_independence;
pub use zero::{dual_zero_by_cover, dual_zero_sufficient, total_is_zero, DualZeroVerdict};

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Maximum number of search nodes; 0 means unlimited.
    pub node_budget: u64,
    /// Wall-clock limit in milliseconds; 0 means unlimited.
    pub time_budget_ms: u64,
    /// Restrict total-variant candidates to bypass vertices up front.
    pub candidate_filter: bool,
    /// Answer zero values from structural characterizations when they apply
    /// (total: every vertex is the middle of a convex P₃; dual: the convex-P₄
    /// and girth conditions), skipping the search.
    pub shortcuts: bool,
    /// Worker threads for the optimization phase.
    pub parallel: usize,
    /// A known valid set used as the initial incumbent.
    pub seed_witness: Option<VertexSet>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: 0,
            time_budget_ms: 0,
            candidate_filter: true,
            shortcuts: true,
            parallel: 1,
            seed_witness: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes_explored: u64,
    pub prunes: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Search,
    Characterization,
    /// The search confirmed a supplied seed witness as optimal.
    OracleAssisted,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub variant: Variant,
    pub value: usize,
    pub witness: VertexSet,
    pub stats: SolveStats,
    pub method: Method,
    /// False only for best-so-far results carried by [`SolveError::Incomplete`].
    pub exact: bool,
}

/// Result of [`solve_independence`].
#[derive(Debug, Clone, Serialize)]
pub struct IndependenceResult {
    pub value: usize,
    pub witness: VertexSet,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, Error)]
pub enum SolveError {
    #[error("search budget exhausted after {} nodes; best lower bound {}", .0.stats.nodes_explored, .0.value)]
    Incomplete(Box<SolveResult>),
    #[error("independence search budget exhausted; best lower bound {}", .0.value)]
    IncompleteIndependence(Box<IndependenceResult>),
    #[error("exact search supports at most {MAX_VERTICES} vertices, graph has {n}")]
    TooLarge { n: usize },
    #[error("graph needs at least 2 vertices, has {n}")]
    TooSmall { n: usize },
    #[error("cover misses vertex {uncovered}")]
    IncompleteCover { uncovered: usize },
    #[error("seed witness is not a valid {0} set")]
    InvalidSeed(Variant),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl SolveError {
    /// The best-so-far lower bound carried by an incomplete search.
    pub fn partial(&self) -> Option<&SolveResult> {
        match self {
            SolveError::Incomplete(r) => Some(r),
            _ => None,
        }
    }
}

pub(crate) fn mask_to_set(n: usize, m: Mask) -> VertexSet {
    VertexSet::from_vertices(n, Bits(m)).expect("mask within universe")
}

pub(crate) fn set_to_mask(s: &VertexSet) -> Mask {
    s.iter().fold(0, |m, v| m | engine::bit(v))
}

pub(crate) fn check_size(g: &Graph) -> Result<(), SolveError> {
    if g.n() > MAX_VERTICES {
        Err(SolveError::TooLarge { n: g.n() })
    } else {
        Ok(())
    }
}

/// Branching order: descending degree, ties by vertex id.
pub(crate) fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Computes the exact value of `variant` on `g` with a lexicographically
/// least maximum witness.
pub fn solve(g: &Graph, variant: Variant, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    check_size(g)?;
    let n = g.n();

    if opts.shortcuts {
        let zero = match variant {
            Variant::Total => n >= 2 && total_is_zero(g)?,
            Variant::Dual => dual_zero_sufficient(g) == DualZeroVerdict::ProvenZero,
            _ => false,
        };
        if zero {
            return Ok(SolveResult {
                variant,
                value: 0,
                witness: g.empty_set(),
                stats: SolveStats {
                    elapsed_ms: elapsed_ms(start),
                    ..SolveStats::default()
                },
                method: Method::Characterization,
                exact: true,
            });
        }
    }

    let seed = match &opts.seed_witness {
        Some(s) if s.capacity() != n || !satisfies(g, s, variant) => {
            return Err(SolveError::InvalidSeed(variant))
        }
        Some(s) => set_to_mask(s),
        None => 0,
    };

    let eng = Engine::new(g);
    let budget = Budget::new(opts.node_budget, opts.time_budget_ms, start);
    let incumbent = Incumbent::new(seed);
    let order = branching_order(g);
    let workers = opts.parallel.max(1);

    let phase1 = if variant.is_hereditary() {
        let mut cands = order.clone();
        if variant == Variant::Total && opts.candidate_filter {
            cands.retain(|&v| crate::visibility::is_bypass_candidate(g, v));
        }
        hereditary::maximize(&eng, variant, &cands, &budget, &incumbent, workers)
    } else {
        dual::maximize(&eng, &order, &budget, &incumbent, workers)
    };

    let (best, value) = incumbent.get();
    let stats = |budget: &Budget| SolveStats {
        nodes_explored: budget.nodes(),
        prunes: budget.prunes(),
        elapsed_ms: elapsed_ms(start),
    };

    if let Err(Abort) = phase1 {
        return Err(SolveError::Incomplete(Box::new(SolveResult {
            variant,
            value,
            witness: mask_to_set(n, best),
            stats: stats(&budget),
            method: Method::Search,
            exact: false,
        })));
    }

    // The second phase is a feasibility search at a size known to be
    // attainable, so it is run without the budget.
    let unlimited = Budget::new(0, 0, start);
    let ascending: Vec<usize> = (0..n).collect();
    let found = if value == 0 {
        Some(0)
    } else if variant.is_hereditary() {
        let mut cands = ascending;
        if variant == Variant::Total && opts.candidate_filter {
            cands.retain(|&v| crate::visibility::is_bypass_candidate(g, v));
        }
        hereditary::lex_least(&eng, variant, &cands, value, &unlimited)
    } else {
        dual::lex_least(&eng, &ascending, value, &unlimited)
    };
    let witness = found.unwrap_or(best);

    let mut st = stats(&budget);
    st.nodes_explored += unlimited.nodes();
    st.prunes += unlimited.prunes();

    let method = if opts.seed_witness.is_some() && value == engine::ones(seed) {
        Method::OracleAssisted
    } else {
        Method::Search
    };
    Ok(SolveResult {
        variant,
        value,
        witness: mask_to_set(n, witness),
        stats: st,
        method,
        exact: true,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, cartesian_product};
    use crate::visibility::classify_set;

    fn path(n: usize) -> Graph {
        build_graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        build_graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn value(g: &Graph, v: Variant) -> usize {
        solve(g, v, &SolveOptions::default()).unwrap().value
    }

    #[test]
    fn cycle_seven_has_no_dual_set() {
        assert_eq!(value(&cycle(7), Variant::Dual), 0);
        let no_shortcut = SolveOptions {
            shortcuts: false,
            ..SolveOptions::default()
        };
        let r = solve(&cycle(7), Variant::Dual, &no_shortcut).unwrap();
        assert_eq!((r.value, r.method), (0, Method::Search));
    }

    #[test]
    fn small_grid_dual_beats_outer() {
        let g = cartesian_product(&path(4), &path(3));
        assert_eq!(value(&g, Variant::Dual), 5);
        assert_eq!(value(&g, Variant::Outer), 4);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // Every pair of P4 vertices is a mutual set; the least is {0, 1}.
        let r = solve(&path(4), Variant::Mutual, &SolveOptions::default()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 1]);
        let r = solve(&path(4), Variant::Dual, &SolveOptions::default()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 1]);
        let r = solve(&path(4), Variant::Total, &SolveOptions::default()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 3]);
    }

    #[test]
    fn witnesses_classify() {
        let g = cartesian_product(&cycle(4), &path(3));
        for v in Variant::ALL {
            let r = solve(&g, v, &SolveOptions::default()).unwrap();
            assert_eq!(r.witness.len(), r.value);
            assert!(classify_set(&g, &r.witness).holds(v));
        }
    }

    #[test]
    fn node_budget_yields_incomplete() {
        let g = cartesian_product(&path(5), &path(5));
        let opts = SolveOptions {
            node_budget: 10,
            ..SolveOptions::default()
        };
        match solve(&g, Variant::Mutual, &opts) {
            Err(SolveError::Incomplete(r)) => {
                assert!(!r.exact);
                assert!(classify_set(&g, &r.witness).is_mutual);
            }
            other => panic!("expected Incomplete, got {other:?}"),
        }
    }

    #[test]
    fn seed_witness_is_validated() {
        let g = cycle(6);
        let bad = SolveOptions {
            seed_witness: Some(g.vertex_set([0]).unwrap()),
            ..SolveOptions::default()
        };
        assert!(matches!(solve(&g, Variant::Dual, &bad), Err(SolveError::InvalidSeed(_))));
        let good = SolveOptions {
            seed_witness: Some(g.vertex_set([2, 3]).unwrap()),
            ..SolveOptions::default()
        };
        let r = solve(&g, Variant::Dual, &good).unwrap();
        assert_eq!((r.value, r.method), (2, Method::OracleAssisted));
        assert_eq!(r.witness.to_vec(), vec![0, 1]);
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = cartesian_product(&path(5), &path(4));
        for v in Variant::ALL {
            let seq = solve(&g, v, &SolveOptions::default()).unwrap();
            let par = solve(
                &g,
                v,
                &SolveOptions {
                    parallel: 4,
                    ..SolveOptions::default()
                },
            )
            .unwrap();
            assert_eq!(seq.value, par.value);
            assert_eq!(seq.witness, par.witness);
        }
    }
}
