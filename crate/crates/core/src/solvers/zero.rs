//! Structural certificates for zero values.

use serde::Serialize;

use super::{solve, SolveError, SolveOptions};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::oracles::cycle_value;
use crate::visibility::{is_bypass_candidate, Variant};

/// μₜ(G) = 0 exactly when every vertex is the middle vertex of a convex P₃.
pub fn total_is_zero(g: &Graph) -> Result<bool, SolveError> {
    if g.n() < 2 {
        return Err(SolveError::TooSmall { n: g.n() });
    }
    Ok((0..g.n()).all(|v| !is_bypass_candidate(g, v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualZeroVerdict {
    ProvenZero,
    /// The sufficient conditions do not apply; μ_d may still be zero.
    Inconclusive,
}

/// Sufficient conditions for μ_d(G) = 0: every edge is the center of a
/// convex P₄, or the girth is at least 7 and the minimum degree at least 2.
pub fn dual_zero_sufficient(g: &Graph) -> DualZeroVerdict {
    if g.n() < 2 {
        return DualZeroVerdict::Inconclusive;
    }
    let stats = g.stats();
    if stats.min_degree >= 2 && stats.girth.is_none_or(|girth| girth >= 7) {
        return DualZeroVerdict::ProvenZero;
    }
    if g.edges().all(|(u, w)| edge_centers_convex_p4(g, u, w)) {
        DualZeroVerdict::ProvenZero
    } else {
        DualZeroVerdict::Inconclusive
    }
}

fn edge_centers_convex_p4(g: &Graph, u: usize, w: usize) -> bool {
    g.neighbors(u).iter().filter(|&&a| a != w).any(|&a| {
        g.neighbors(w).iter().filter(|&&b| b != u).any(|&b| {
            g.distance(a, b) == 3
                && g
                    .is_convex(&g.vertex_set([a, u, w, b]).expect("valid ids"))
                    .unwrap_or(false)
        })
    })
}

/// Certifies μ_d(G) = 0 from a cover of V(G) by convex parts whose induced
/// subgraphs all have μ_d = 0. Cycle parts are evaluated in closed form,
/// other parts by exact search. `false` means the certificate does not
/// apply, not that μ_d(G) > 0.
pub fn dual_zero_by_cover(g: &Graph, cover: &[VertexSet]) -> Result<bool, SolveError> {
    let mut union = g.empty_set();
    for part in cover {
        union = union.union(part);
    }
    if let Some(uncovered) = union.complement().iter().next() {
        return Err(SolveError::IncompleteCover { uncovered });
    }
    for part in cover {
        if part.is_empty() || !g.is_convex(part)? {
            return Ok(false);
        }
        let h = g.induced_subgraph(part)?;
        let is_cycle = h.n() >= 3 && (0..h.n()).all(|v| h.degree(v) == 2);
        let mu_d = if is_cycle {
            cycle_value(h.n(), Variant::Dual)
        } else {
            solve(&h, Variant::Dual, &SolveOptions::default())?.value
        };
        if mu_d != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, cartesian_product};

    fn path(n: usize) -> Graph {
        build_graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        build_graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn total_zero_characterization() {
        assert!(total_is_zero(&cycle(5)).unwrap());
        assert!(!total_is_zero(&path(3)).unwrap());
        assert!(total_is_zero(&cartesian_product(&cycle(5), &cycle(5))).unwrap());
        let k1 = build_graph(1, &[]).unwrap();
        assert!(matches!(total_is_zero(&k1), Err(SolveError::TooSmall { n: 1 })));
    }

    #[test]
    fn dual_zero_conditions() {
        assert_eq!(dual_zero_sufficient(&cycle(9)), DualZeroVerdict::ProvenZero);
        assert_eq!(dual_zero_sufficient(&cycle(6)), DualZeroVerdict::Inconclusive);
        assert_eq!(
            dual_zero_sufficient(&cartesian_product(&cycle(5), &cycle(5))),
            DualZeroVerdict::Inconclusive
        );
        assert_eq!(dual_zero_sufficient(&path(5)), DualZeroVerdict::Inconclusive);
    }

    fn layers(n: usize, m: usize, fix_second: bool) -> Vec<VertexSet> {
        let outer = if fix_second { m } else { n };
        (0..outer)
            .map(|k| {
                let ids: Vec<usize> = if fix_second {
                    (0..n).map(|i| i * m + k).collect()
                } else {
                    (0..m).map(|j| k * m + j).collect()
                };
                VertexSet::from_vertices(n * m, ids).unwrap()
            })
            .collect()
    }

    #[test]
    fn cover_certificates() {
        let t = cartesian_product(&cycle(7), &cycle(5));
        assert!(dual_zero_by_cover(&t, &layers(7, 5, true)).unwrap());
        let t3 = cartesian_product(&cycle(3), &cycle(3));
        assert!(!dual_zero_by_cover(&t3, &layers(3, 3, false)).unwrap());
        let c7 = cycle(7);
        assert!(dual_zero_by_cover(&c7, &[VertexSet::full(7)]).unwrap());
        assert!(matches!(
            dual_zero_by_cover(&c7, &[c7.vertex_set([0, 1]).unwrap()]),
            Err(SolveError::IncompleteCover { uncovered: 2 })
        ));
    }
}
