//! Graph families and their constructive witness sets.
//!
//! Product graphs use the row-major indexing of [`cartesian_product`]: the
//! 1-based coordinate `(i, j)` of `P_n □ P_m` or `C_n □ C_m` is vertex
//! `(i - 1) * m + (j - 1)`.

mod reduction;
mod witness;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::edgelist::{self, EdgeListError};
use crate::graph::{build_graph, cartesian_product, Graph, GraphError};

pub use reduction::{reduction_gprime, reduction_witness, Reduction, Role};
pub use witness::{
    grid_dual_witness, grid_outer_witness, gn_witnesses, ht_witnesses, torus_witnesses,
};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("no witness construction for {0}")]
    OutOfRange(String),
    #[error("no witness exists for {0}: the invariant is zero")]
    NoWitnessKnown(String),
    #[error("vertices {0} and {1} are adjacent in the base graph")]
    NotIndependent(usize, usize),
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParams(msg.into())
}

/// Base graph of the NP-hardness reduction: another family or an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionBase {
    Family(Box<FamilySpec>),
    File(PathBuf),
}

/// A parametrised graph family. The canonical string form (`grid:9x6`,
/// `gprime:path:5:t=3`, ...) is accepted by [`FromStr`] and produced by
/// [`fmt::Display`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_{1,k}`.
    Star { k: usize },
    /// Uniform labelled tree from a seeded Prüfer sequence.
    RandomTree { n: usize, seed: u64 },
    Grid { n: usize, m: usize },
    Torus { n: usize, m: usize },
    /// `P_{n_1} □ ... □ P_{n_k}`.
    PathProduct { dims: Vec<usize> },
    /// `n` five-cycles sharing the edge `uv`.
    Gn { n: usize },
    /// `t` copies of `P_4 □ P_3` joined through an apex.
    Ht { t: usize },
    Reduction { base: ReductionBase, t: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        use FamilySpec::*;
        let ok = match self {
            Path { n } | Complete { n } | RandomTree { n, .. } => *n >= 2,
            Cycle { n } => *n >= 3,
            Star { k } => *k >= 1,
            Grid { n, m } => *n >= 1 && *m >= 1 && n * m >= 2,
            Torus { n, m } => *n >= 3 && *m >= 3,
            PathProduct { dims } => dims.len() >= 2 && dims.iter().all(|&d| d >= 2),
            Gn { n } => *n >= 2,
            Ht { t } => *t >= 2,
            Reduction { base, t } => {
                if let ReductionBase::Family(f) = base {
                    f.validate()?;
                }
                *t >= 3
            }
        };
        if ok {
            Ok(())
        } else {
            Err(bad(format!("{self} is outside the family's parameter range")))
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        use FamilySpec::*;
        let g = match self {
            Path { n } => path(*n),
            Cycle { n } => cycle(*n),
            Complete { n } => {
                let edges: Vec<_> = (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))).collect();
                build_graph(*n, &edges)?
            }
            Star { k } => build_graph(k + 1, &(1..=*k).map(|v| (0, v)).collect::<Vec<_>>())?,
            RandomTree { n, seed } => random_tree(*n, *seed),
            Grid { n, m } => cartesian_product(&path(*n), &path(*m)),
            Torus { n, m } => cartesian_product(&cycle(*n), &cycle(*m)),
            PathProduct { dims } => {
                let mut g = path(dims[0]);
                for &d in &dims[1..] {
                    g = cartesian_product(&g, &path(d));
                }
                g
            }
            Gn { n } => gadget_gn(*n),
            Ht { t } => gadget_ht(*t),
            Reduction { base, t } => {
                let g = match base {
                    ReductionBase::Family(f) => f.generate()?,
                    ReductionBase::File(p) => edgelist::read_file(p)?,
                };
                reduction_gprime(&g, *t)?.gprime
            }
        };
        Ok(g.with_name(self.to_string()))
    }
}

fn path(n: usize) -> Graph {
    build_graph(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).expect("path is connected")
}

fn cycle(n: usize) -> Graph {
    build_graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).expect("cycle is connected")
}

/// Decodes a uniformly random Prüfer sequence.
fn random_tree(n: usize, seed: u64) -> Graph {
    if n == 2 {
        return path(2);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    build_graph(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Vertex ids of `G_n`: `u = 0`, `v = 1`, and `x_i, z_i, y_i` for the i-th
/// cycle `u x_i z_i y_i v`.
pub fn gn_vertex(name: char, i: usize) -> usize {
    match name {
        'u' => 0,
        'v' => 1,
        'x' => 2 + 3 * (i - 1),
        'z' => 3 + 3 * (i - 1),
        'y' => 4 + 3 * (i - 1),
        _ => panic!("G_n has no vertex class {name:?}"),
    }
}

fn gadget_gn(n: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    let mut labels = vec!["u".to_string(), "v".to_string()];
    for i in 1..=n {
        let (x, z, y) = (gn_vertex('x', i), gn_vertex('z', i), gn_vertex('y', i));
        edges.extend([(0, x), (x, z), (z, y), (y, 1)]);
        labels.extend([format!("x{i}"), format!("z{i}"), format!("y{i}")]);
    }
    build_graph(3 * n + 2, &edges)
        .expect("G_n is connected")
        .with_labels(labels)
        .expect("one label per vertex")
}

/// Order of one grid copy inside `H_t`.
pub const HT_COPY: usize = 12;

/// Vertex of `H_t` at 1-based coordinate `(i, j)` of copy `k` (1-based).
pub fn ht_vertex(k: usize, i: usize, j: usize) -> usize {
    (k - 1) * HT_COPY + (i - 1) * 3 + (j - 1)
}

fn gadget_ht(t: usize) -> Graph {
    let grid = cartesian_product(&path(4), &path(3));
    let apex = HT_COPY * t;
    let mut edges = Vec::new();
    let mut labels = Vec::with_capacity(apex + 1);
    for k in 1..=t {
        let off = (k - 1) * HT_COPY;
        edges.extend(grid.edges().map(|(a, b)| (off + a, off + b)));
        edges.push((ht_vertex(k, 2, 3), apex));
        labels.extend((0..HT_COPY).map(|v| {
            let l = grid.label(v).expect("product labels");
            format!("({k},{}", &l[1..])
        }));
    }
    labels.push("x".to_string());
    build_graph(apex + 1, &edges)
        .expect("H_t is connected")
        .with_labels(labels)
        .expect("one label per vertex")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path { n } => write!(f, "path:{n}"),
            Cycle { n } => write!(f, "cycle:{n}"),
            Complete { n } => write!(f, "complete:{n}"),
            Star { k } => write!(f, "star:{k}"),
            RandomTree { n, seed } => write!(f, "tree:{n}:{seed}"),
            Grid { n, m } => write!(f, "grid:{n}x{m}"),
            Torus { n, m } => write!(f, "torus:{n}x{m}"),
            PathProduct { dims } => {
                let d: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                write!(f, "pathprod:{}", d.join("x"))
            }
            Gn { n } => write!(f, "gn:{n}"),
            Ht { t } => write!(f, "ht:{t}"),
            Reduction { base, t } => match base {
                ReductionBase::Family(b) => write!(f, "gprime:{b}:t={t}"),
                ReductionBase::File(p) => write!(f, "gprime:{}:t={t}", p.display()),
            },
        }
    }
}

fn num<T: FromStr>(s: &str, what: &str) -> Result<T, FamilyError> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("expected an integer for {what}, got {s:?}")))
}

fn dims(s: &str) -> Result<Vec<usize>, FamilyError> {
    s.split('x').map(|d| num(d, "dimension")).collect()
}

fn pair(s: &str) -> Result<(usize, usize), FamilyError> {
    match dims(s)?.as_slice() {
        &[n, m] => Ok((n, m)),
        _ => Err(bad(format!("expected NxM, got {s:?}"))),
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        use FamilySpec::*;
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("expected kind:params, got {s:?}")))?;
        let spec = match kind {
            "path" => Path { n: num(rest, "n")? },
            "cycle" => Cycle { n: num(rest, "n")? },
            "complete" => Complete { n: num(rest, "n")? },
            "star" => Star { k: num(rest, "k")? },
            "tree" => {
                let (n, seed) = rest
                    .split_once(':')
                    .ok_or_else(|| bad("expected tree:N:SEED"))?;
                RandomTree {
                    n: num(n, "n")?,
                    seed: num(seed, "seed")?,
                }
            }
            "grid" => {
                let (n, m) = pair(rest)?;
                Grid { n, m }
            }
            "torus" => {
                let (n, m) = pair(rest)?;
                Torus { n, m }
            }
            "pathprod" => PathProduct { dims: dims(rest)? },
            "gn" => Gn { n: num(rest, "n")? },
            "ht" => Ht { t: num(rest, "t")? },
            "gprime" => {
                let (base, t) = rest
                    .rsplit_once(":t=")
                    .ok_or_else(|| bad("expected gprime:BASE:t=T"))?;
                let base = match base.parse::<FamilySpec>() {
                    Ok(f) => ReductionBase::Family(Box::new(f)),
                    Err(_) => ReductionBase::File(PathBuf::from(base)),
                };
                Reduction {
                    base,
                    t: num(t, "t")?,
                }
            }
            _ => return Err(bad(format!("unknown family {kind:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
