//! Simple connected undirected graphs, hop distances and geodesic intervals.

use std::collections::VecDeque;
use std::sync::OnceLock;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    InvalidVertexId { id: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: vertex {unreached} is unreachable from vertex 0")]
    DisconnectedGraph { unreached: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("vertex set is empty")]
    EmptySet,
}

/// Immutable simple connected graph on the vertices `0..n`.
///
/// Adjacency is stored in compressed form: the neighbors of `v` are
/// `targets[offsets[v]..offsets[v + 1]]`, sorted ascending. Hop distances are
/// computed on first use and cached.
#[derive(Debug)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    labels: Option<Vec<String>>,
    name: Option<String>,
    distances: OnceLock<DistanceMatrix>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        let distances = OnceLock::new();
        if let Some(d) = self.distances.get() {
            let _ = distances.set(d.clone());
        }
        Graph {
            n: self.n,
            offsets: self.offsets.clone(),
            targets: self.targets.clone(),
            labels: self.labels.clone(),
            name: self.name.clone(),
            distances,
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.offsets == other.offsets
            && self.targets == other.targets
            && self.labels == other.labels
    }
}

impl Eq for Graph {}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GraphStats {
    pub min_degree: usize,
    pub diameter: u32,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub leaf_count: usize,
}

/// Builds a graph from an edge list. Duplicate edges (in either orientation)
/// are collapsed; loops and disconnected inputs are rejected.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::from_edges(n, edges.iter().copied())
}

impl Graph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::InvalidVertexId { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        let g = Graph {
            n,
            offsets,
            targets,
            labels: None,
            name: None,
            distances: OnceLock::new(),
        };
        g.check_connected()?;
        Ok(g)
    }

    fn check_connected(&self) -> Result<(), GraphError> {
        let dist = self.bfs(0);
        match dist.iter().position(|d| d.is_none()) {
            Some(unreached) => Err(GraphError::DisconnectedGraph { unreached }),
            None => Ok(()),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Looks up a vertex by its label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vs: I) -> Result<VertexSet, GraphError> {
        VertexSet::from_vertices(self.n, vs)
    }

    /// Plain BFS from `source`; `None` marks unreachable vertices.
    pub(crate) fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances, one BFS per source, computed once.
    pub fn distances(&self) -> &DistanceMatrix {
        self.distances.get_or_init(|| {
            let mut d = Vec::with_capacity(self.n * self.n);
            for s in 0..self.n {
                // Connectivity was verified at construction.
                d.extend(self.bfs(s).into_iter().map(|x| x.expect("connected graph")));
            }
            DistanceMatrix { n: self.n, d }
        })
    }

    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.distances().get(u, v)
    }

    /// The geodesic interval `I(u, v)`: every vertex on some shortest u,v-path.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let d = self.distances();
        let duv = d.get(u, v);
        let mut out = VertexSet::new(self.n);
        for z in 0..self.n {
            if d.get(u, z) + d.get(z, v) == duv {
                out.insert(z);
            }
        }
        out
    }

    /// Whether `s` is geodesically convex. Sets that do not induce a connected
    /// subgraph are never convex in a connected graph.
    pub fn is_convex(&self, s: &VertexSet) -> Result<bool, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let d = self.distances();
        let members = s.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                let duv = d.get(u, v);
                for z in 0..self.n {
                    if !s.contains(z) && d.get(u, z) + d.get(z, v) == duv {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn stats(&self) -> GraphStats {
        let d = self.distances();
        GraphStats {
            min_degree: (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0),
            diameter: d.d.iter().copied().max().unwrap_or(0),
            girth: self.girth(),
            leaf_count: (0..self.n).filter(|&v| self.degree(v) == 1).count(),
        }
    }

    fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![u32::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = VecDeque::from([root]);
            dist[root] = 0;
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = (dist[u] + dist[w] + 1) as usize;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The subgraph induced by `s`, with vertices renumbered in ascending
    /// order of their original ids. Labels carry over.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        let members = s.to_vec();
        if members.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .map(|(u, v)| (index[u], index[v]));
        let mut g = Graph::from_edges(members.len(), edges)?;
        if let Some(labels) = &self.labels {
            g.labels = Some(members.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
}

/// Cartesian product `g □ h`. Vertex `(a, b)` gets index `a * n(h) + b`;
/// labels are coordinate tuples such as `(2,3)` built from the factors' labels
/// (or their 1-based indices when unlabeled).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.n, h.n);
    let mut edges = Vec::with_capacity(gn * h.m() + hn * g.m());
    for a in 0..gn {
        for (b, d) in h.edges() {
            edges.push((a * hn + b, a * hn + d));
        }
    }
    for (a, c) in g.edges() {
        for b in 0..hn {
            edges.push((a * hn + b, c * hn + b));
        }
    }
    let tag = |graph: &Graph, v: usize| -> String {
        graph
            .label(v)
            .map(|l| strip_parens(l).to_string())
            .unwrap_or_else(|| (v + 1).to_string())
    };
    let labels = (0..gn)
        .flat_map(|a| (0..hn).map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", tag(g, a), tag(h, b)))
        .collect();
    Graph::from_edges(gn * hn, edges)
        .expect("product of connected graphs is connected")
        .with_labels(labels)
        .expect("one label per vertex")
}
