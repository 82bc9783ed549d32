//! X-visibility and classification of vertex sets.
//!
//! Two vertices `u, v` are X-visible when some shortest u,v-path has no
//! internal vertex in X. The four set variants differ only in which pairs
//! must be X-visible:
//!
//! | variant | required pairs                              |
//! |---------|---------------------------------------------|
//! | mutual  | both ends in X                              |
//! | outer   | at least one end in X                       |
//! | dual    | both ends in X, or both ends outside X      |
//! | total   | every pair of vertices                      |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Mutual,
    Total,
    Outer,
    Dual,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Mutual, Variant::Total, Variant::Outer, Variant::Dual];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Mutual => "mutual",
            Variant::Total => "total",
            Variant::Outer => "outer",
            Variant::Dual => "dual",
        }
    }

    /// Mutual, outer and total sets stay valid under taking subsets; dual
    /// sets do not.
    pub fn is_hereditary(self) -> bool {
        !matches!(self, Variant::Dual)
    }

    /// Whether the pair `(u_in, v_in)` (membership of each end in X) must be
    /// X-visible under this variant.
    #[inline]
    pub fn requires(self, u_in: bool, v_in: bool) -> bool {
        match self {
            Variant::Mutual => u_in && v_in,
            Variant::Outer => u_in || v_in,
            Variant::Dual => u_in == v_in,
            Variant::Total => true,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown variant {0:?} (expected mutual, total, outer or dual)")]
pub struct UnknownVariant(pub String);

impl FromStr for Variant {
    type Err = UnknownVariant;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mutual" | "mu" => Ok(Variant::Mutual),
            "total" | "t" => Ok(Variant::Total),
            "outer" | "o" => Ok(Variant::Outer),
            "dual" | "d" => Ok(Variant::Dual),
            _ => Err(UnknownVariant(s.to_string())),
        }
    }
}

/// BFS from `source` in which vertices of `x` other than the source get a
/// level but are never expanded. The result is, for every vertex, the length
/// of a shortest path from `source` whose internal vertices avoid `x`.
pub fn constrained_distance(g: &Graph, x: &VertexSet, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.n()];
    let mut queue = std::collections::VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        if u != source && x.contains(u) {
            continue;
        }
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_pair_visible(g: &Graph, x: &VertexSet, u: usize, v: usize) -> bool {
    if u == v || g.has_edge(u, v) {
        return true;
    }
    constrained_distance(g, x, u)[v] == Some(g.distance(u, v))
}

/// Per-variant verdicts for one vertex set. Each failed variant records the
/// lexicographically first pair `(u, v)`, `u < v`, that is required but not
/// X-visible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VisibilityReport {
    pub is_mutual: bool,
    pub is_total: bool,
    pub is_outer: bool,
    pub is_dual: bool,
    pub violations: Violations,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Violations {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutual: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outer: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<(usize, usize)>,
}

impl Violations {
    fn slot(&mut self, variant: Variant) -> &mut Option<(usize, usize)> {
        match variant {
            Variant::Mutual => &mut self.mutual,
            Variant::Total => &mut self.total,
            Variant::Outer => &mut self.outer,
            Variant::Dual => &mut self.dual,
        }
    }

    pub fn get(&self, variant: Variant) -> Option<(usize, usize)> {
        match variant {
            Variant::Mutual => self.mutual,
            Variant::Total => self.total,
            Variant::Outer => self.outer,
            Variant::Dual => self.dual,
        }
    }
}

impl VisibilityReport {
    pub fn holds(&self, variant: Variant) -> bool {
        match variant {
            Variant::Mutual => self.is_mutual,
            Variant::Total => self.is_total,
            Variant::Outer => self.is_outer,
            Variant::Dual => self.is_dual,
        }
    }

    pub fn violation(&self, variant: Variant) -> Option<(usize, usize)> {
        self.violations.get(variant)
    }
}

/// Which targets are X-visible from `source`, as a boolean row.
fn visibility_row(g: &Graph, x: &VertexSet, source: usize) -> Vec<bool> {
    let d = g.distances().row(source);
    constrained_distance(g, x, source)
        .into_iter()
        .zip(d)
        .map(|(c, &exact)| c == Some(exact))
        .collect()
}

/// Classifies `x` under all four variants, one constrained BFS per source
/// vertex (`O(n·m)` overall).
pub fn classify_set(g: &Graph, x: &VertexSet) -> VisibilityReport {
    let n = g.n();
    let mut violations = Violations::default();
    if !x.is_empty() {
        for u in 0..n {
            let row = visibility_row(g, x, u);
            let u_in = x.contains(u);
            for (v, &visible) in row.iter().enumerate().skip(u + 1) {
                if visible {
                    continue;
                }
                let v_in = x.contains(v);
                for variant in Variant::ALL {
                    if variant.requires(u_in, v_in) {
                        violations.slot(variant).get_or_insert((u, v));
                    }
                }
            }
        }
    }
    VisibilityReport {
        is_mutual: violations.mutual.is_none(),
        is_total: violations.total.is_none(),
        is_outer: violations.outer.is_none(),
        is_dual: violations.dual.is_none(),
        violations,
    }
}

/// Checks a single variant, running BFS only from the sources it needs:
/// the members of `x` for mutual and outer, every vertex for dual and total.
pub fn satisfies(g: &Graph, x: &VertexSet, variant: Variant) -> bool {
    if x.is_empty() {
        return true;
    }
    let sources: Vec<usize> = match variant {
        Variant::Mutual | Variant::Outer => x.to_vec(),
        Variant::Dual | Variant::Total => (0..g.n()).collect(),
    };
    sources.into_iter().all(|u| {
        let u_in = x.contains(u);
        visibility_row(g, x, u)
            .iter()
            .enumerate()
            .all(|(v, &vis)| vis || v == u || !variant.requires(u_in, x.contains(v)))
    })
}

/// Whether `v` is NOT the middle vertex of any convex P₃, i.e. no two
/// neighbors of `v` at distance 2 have `v` as their only common neighbor.
/// Middle vertices of convex P₃'s can never belong to a total
/// mutual-visibility set.
pub fn is_bypass_candidate(g: &Graph, v: usize) -> bool {
    let nbrs = g.neighbors(v);
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) && common_neighbors(g, a, b) == 1 {
                return false;
            }
        }
    }
    true
}

fn common_neighbors(g: &Graph, a: usize, b: usize) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    let (na, nb) = (g.neighbors(a), g.neighbors(b));
    while i < na.len() && j < nb.len() {
        match na[i].cmp(&nb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
