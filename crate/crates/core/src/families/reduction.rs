//! The graph G′ of the NP-hardness reduction from independent sets.
//!
//! Vertex layout for a base graph with `n` vertices and edges `e_0..e_{m-1}`
//! (in [`Graph::edges`] order):
//!
//! | ids                                   | role                      |
//! |---------------------------------------|---------------------------|
//! | `0..n`                                | original vertices         |
//! | `n + k`                               | edge vertex of `e_k`      |
//! | `n + m`                               | apex `x`                  |
//! | `n + m + i`, `1 ≤ i ≤ t`              | apex clique `x_i`         |
//! | `n + m + t + 1 + k·t + (i − 1)`       | pendant clique of `e_k`   |

use serde::Serialize;

use super::FamilyError;
use crate::bitset::VertexSet;
use crate::graph::{build_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Original,
    /// Edge vertex of the base edge with this index.
    EdgeVertex(usize),
    ApexX,
    ApexClique,
    /// Member of the pendant clique attached to this edge's vertex.
    PendantClique(usize),
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub gprime: Graph,
    pub roles: Vec<Role>,
    /// Order of the base graph.
    pub base_n: usize,
    pub base_edges: Vec<(usize, usize)>,
    pub t: usize,
}

impl Reduction {
    pub fn apex(&self) -> usize {
        self.base_n + self.base_edges.len()
    }

    /// The value `(m + 1) t + α` that every invariant of G′ takes.
    pub fn expected_value(&self, alpha: usize) -> usize {
        (self.base_edges.len() + 1) * self.t + alpha
    }
}

pub fn reduction_gprime(g: &Graph, t: usize) -> Result<Reduction, FamilyError> {
    if t < 3 {
        return Err(FamilyError::BadParams(format!("reduction needs t >= 3, got {t}")));
    }
    if g.n() < 2 {
        return Err(FamilyError::BadParams("reduction needs a base graph with an edge".into()));
    }
    let n = g.n();
    let base_edges: Vec<(usize, usize)> = g.edges().collect();
    let m = base_edges.len();
    let apex = n + m;
    let pendant = |k: usize, i: usize| apex + t + 1 + k * t + (i - 1);
    let total = n + m + (t + 1) + m * t;

    let mut edges: Vec<(usize, usize)> = base_edges.clone();
    let mut roles = vec![Role::Original; n];
    let mut labels: Vec<String> = (0..n)
        .map(|v| g.label(v).map_or_else(|| v.to_string(), str::to_string))
        .collect();
    for (k, &(a, b)) in base_edges.iter().enumerate() {
        edges.extend([(a, n + k), (b, n + k)]);
        edges.extend((0..k).map(|j| (n + j, n + k)));
        roles.push(Role::EdgeVertex(k));
        labels.push(format!("e[{}-{}]", labels[a], labels[b]));
    }
    edges.extend((0..n).map(|v| (v, apex)));
    roles.push(Role::ApexX);
    labels.push("x".into());
    for i in 1..=t {
        edges.extend((0..i).map(|j| (apex + j, apex + i)));
        roles.push(Role::ApexClique);
        labels.push(format!("x{i}"));
    }
    for k in 0..m {
        for i in 1..=t {
            edges.push((n + k, pendant(k, i)));
            edges.extend((1..i).map(|j| (pendant(k, j), pendant(k, i))));
            roles.push(Role::PendantClique(k));
            labels.push(format!("{}/y{i}", labels[n + k]));
        }
    }
    debug_assert_eq!(roles.len(), total);
    let gprime = build_graph(total, &edges)?.with_labels(labels)?;
    Ok(Reduction {
        gprime,
        roles,
        base_n: n,
        base_edges,
        t,
    })
}

/// The set `I ∪ {x_1..x_t} ∪ (all pendant-clique vertices)`, which is a total
/// mutual-visibility set of G′ of size `(m + 1) t + |I|`.
pub fn reduction_witness(r: &Reduction, independent: &[usize]) -> Result<VertexSet, FamilyError> {
    for (idx, &a) in independent.iter().enumerate() {
        if a >= r.base_n {
            return Err(crate::graph::GraphError::InvalidVertexId { id: a, n: r.base_n }.into());
        }
        for &b in &independent[idx + 1..] {
            if r.base_edges.contains(&(a.min(b), a.max(b))) {
                return Err(FamilyError::NotIndependent(a.min(b), a.max(b)));
            }
        }
    }
    let members = (0..r.roles.len()).filter(|&v| {
        matches!(r.roles[v], Role::ApexClique | Role::PendantClique(_))
            || independent.contains(&v)
    });
    Ok(r.gprime.vertex_set(members)?)
}
