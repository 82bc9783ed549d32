//! Explicit witness sets for grids, tori and the two gadgets, in 1-based
//! coordinates.

use std::collections::BTreeSet;

use super::{gn_vertex, ht_vertex, FamilyError};
use crate::bitset::VertexSet;
use crate::visibility::Variant;

type Coord = (usize, usize);

/// Maps 1-based `(i, j)` coordinates of an `n × m` product to a vertex set.
fn coords(n: usize, m: usize, cs: impl IntoIterator<Item = Coord>) -> VertexSet {
    let ids = cs.into_iter().map(|(i, j)| {
        debug_assert!((1..=n).contains(&i) && (1..=m).contains(&j), "({i},{j}) outside {n}x{m}");
        (i - 1) * m + (j - 1)
    });
    VertexSet::from_vertices(n * m, ids).expect("coordinates inside the grid")
}

fn corners(n: usize, m: usize) -> [Coord; 4] {
    [(1, 1), (n, 1), (1, m), (n, m)]
}

fn out_of_range(what: &str, n: usize, m: usize) -> FamilyError {
    FamilyError::OutOfRange(format!("{what} of {n}x{m}"))
}

/// Outer mutual-visibility set of `P_n □ P_m` (`n ≥ m`) of the optimal size,
/// for every case where the construction is explicit.
pub fn grid_outer_witness(n: usize, m: usize) -> Result<VertexSet, FamilyError> {
    let set: Vec<Coord> = match (n, m) {
        (n, 2) if n >= 3 => corners(n, 2).to_vec(),
        (3, 3) | (4, 3) | (4, 4) => corners(n, m).to_vec(),
        (n, 3) if n >= 5 => vec![(1, 1), (n, 1), (3, 2), (1, 3), (n, 3)],
        (n, 5) if n >= 7 => vec![(1, 1), (n, 1), (5, 2), (2, 3), (4, 4), (1, 5), (n, 5)],
        (6, 6) => vec![(1, 1), (1, 6), (3, 2), (5, 3), (2, 4), (4, 5), (6, 1), (6, 6)],
        (n, m) if n >= 7 && n >= m && (m == 4 || m >= 6) => general_outer(n, m),
        _ => return Err(out_of_range("outer witness", n, m)),
    };
    Ok(coords(n, m, set))
}

/// Corners plus the diagonal staircases `A` and `B`, with the two local
/// repairs for collisions near `(n-1, m-1)` and `(2, m-1)`. When `n` is so
/// large that `A` would run past row `m-1`, `A` is cut at `m-2` vertices and
/// `B` is empty.
fn general_outer(n: usize, m: usize) -> Vec<Coord> {
    let f = (n - 2) / 2;
    let a_len = f.min(m - 2);
    let b_len = m - 2 - a_len;
    let a: Vec<Coord> = (1..=a_len).map(|k| (2 * k + 1, k + 1)).collect();
    let b: Vec<Coord> = (1..=b_len).map(|k| (2 * k, f + k + 1)).collect();
    let mut x: BTreeSet<Coord> = corners(n, m).into_iter().chain(a.iter().copied()).chain(b.iter().copied()).collect();

    let pinch = (n - 1, m - 1);
    if a.last() == Some(&pinch) || b.last() == Some(&pinch) {
        x.remove(&(n - 3, m - 2));
        x.remove(&pinch);
        x.insert((n - 3, m - 1));
        x.insert((n - 1, m - 2));
    }
    if b == [(2, m - 1)] {
        x.remove(&(2, m - 1));
        x.insert((4, m - 1));
    }
    x.into_iter().collect()
}

/// Dual mutual-visibility set of `P_n □ P_m`: five vertices for `n ≥ 4`,
/// `m ≥ 3`, the four corners for `m = 2`.
pub fn grid_dual_witness(n: usize, m: usize) -> Result<VertexSet, FamilyError> {
    let set: Vec<Coord> = match (n, m) {
        (n, 2) if n >= 3 => corners(n, 2).to_vec(),
        (n, m) if n >= 4 && m >= 3 => vec![(1, 1), (2, 1), (n, m - 1), (n, m), (1, m)],
        _ => return Err(out_of_range("dual witness", n, m)),
    };
    Ok(coords(n, m, set))
}

/// Dual and total witnesses of `C_n □ C_m` for the nonzero cases.
pub fn torus_witnesses(n: usize, m: usize, variant: Variant) -> Result<VertexSet, FamilyError> {
    const D: [Coord; 5] = [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)];
    let set: Vec<Coord> = match (variant, n, m) {
        (Variant::Dual, 3, 3) | (Variant::Dual, 4, 3) => D.to_vec(),
        (Variant::Dual, 4, 4) => D.iter().copied().chain([(3, 3), (3, 4), (4, 3)]).collect(),
        (Variant::Dual, 5, 3) => vec![(1, 1), (2, 1)],
        (Variant::Dual, 5, 4) => vec![(1, 1), (2, 1), (4, 3), (5, 3)],
        (Variant::Dual, 6, 3) | (Variant::Dual, 6, 4) => vec![(1, 2), (2, 2), (4, 1), (5, 1)],
        (Variant::Total, 3, 3) | (Variant::Total, 4, 3) => vec![(1, 1), (1, 2), (1, 3)],
        (Variant::Total, 4, 4) => vec![(1, 1), (1, 2), (3, 3), (3, 4)],
        (Variant::Dual | Variant::Total, n, m) if n >= m && m >= 3 => {
            return Err(FamilyError::NoWitnessKnown(format!("{variant} on torus {n}x{m}")))
        }
        _ => return Err(out_of_range(&format!("{variant} witness"), n, m)),
    };
    Ok(coords(n, m, set))
}

/// Witnesses of `G_n`: `{x_i} ∪ {y_i}` (mutual), `{z_i}` (outer) and
/// `{x_1} ∪ {z_i}` (dual).
pub fn gn_witnesses(n: usize, variant: Variant) -> Result<VertexSet, FamilyError> {
    if n < 2 {
        return Err(FamilyError::BadParams(format!("G_n needs n >= 2, got {n}")));
    }
    let range = 1..=n;
    let ids: Vec<usize> = match variant {
        Variant::Mutual => range.flat_map(|i| [gn_vertex('x', i), gn_vertex('y', i)]).collect(),
        Variant::Outer => range.map(|i| gn_vertex('z', i)).collect(),
        Variant::Dual => std::iter::once(gn_vertex('x', 1))
            .chain(range.map(|i| gn_vertex('z', i)))
            .collect(),
        Variant::Total => return Err(FamilyError::NoWitnessKnown(format!("total on G_{n}"))),
    };
    Ok(VertexSet::from_vertices(3 * n + 2, ids)?)
}

/// Witnesses of `H_t`: the grid dual witness of `P_4 □ P_3` in every copy
/// (dual), and the four corners of every copy (outer).
pub fn ht_witnesses(t: usize, variant: Variant) -> Result<VertexSet, FamilyError> {
    if t < 2 {
        return Err(FamilyError::BadParams(format!("H_t needs t >= 2, got {t}")));
    }
    let per_copy: Vec<Coord> = match variant {
        Variant::Dual => vec![(1, 1), (2, 1), (4, 2), (4, 3), (1, 3)],
        Variant::Outer => corners(4, 3).to_vec(),
        _ => return Err(FamilyError::OutOfRange(format!("{variant} witness of H_{t}"))),
    };
    let ids = (1..=t).flat_map(|k| per_copy.iter().map(move |&(i, j)| ht_vertex(k, i, j)));
    Ok(VertexSet::from_vertices(12 * t + 1, ids)?)
}
