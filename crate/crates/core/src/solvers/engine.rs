//! Bitmask machinery shared by the exact searches.
//!
//! Vertex sets are `u128` masks, so searches are limited to graphs on at
//! most 128 vertices. Visibility from a source is computed layer by layer:
//! a vertex at distance `k` is reached iff it neighbors a vertex at distance
//! `k - 1` that was itself reached and is not an obstacle (the source is
//! always expandable). A target is X-visible from the source exactly when it
//! is reached.

use crate::graph::Graph;
use crate::visibility::Variant;

pub(crate) type Mask = u128;
pub(crate) const MAX_VERTICES: usize = 128;

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1 << v
}

#[inline]
pub(crate) fn ones(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Vertices with id strictly greater than `v`.
#[inline]
pub(crate) fn above(v: usize) -> Mask {
    if v + 1 >= MAX_VERTICES {
        0
    } else {
        !0 << (v + 1)
    }
}

pub(crate) struct Bits(pub Mask);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

pub(crate) struct Engine {
    pub n: usize,
    pub all: Mask,
    pub adj: Vec<Mask>,
    /// `layers[s][k]`: vertices at distance exactly `k` from `s`.
    layers: Vec<Vec<Mask>>,
    /// `through[s * n + c]`: targets `t` such that `c` is an internal vertex
    /// of the interval `I(s, t)`.
    through: Vec<Mask>,
    /// Disjoint convex induced paths on at least three vertices. A set of
    /// any of the four variants meets each of them in at most two vertices.
    pub paths: Vec<Mask>,
    pub path_cover: Mask,
}

impl Engine {
    /// Callers guarantee `g.n() <= MAX_VERTICES`.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        debug_assert!(n <= MAX_VERTICES);
        let d = g.distances();
        let all = if n == MAX_VERTICES { !0 } else { (1 << n) - 1 };
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
            .collect();
        let layers = (0..n)
            .map(|s| {
                let row = d.row(s);
                let ecc = *row.iter().max().unwrap() as usize;
                let mut ls = vec![0; ecc + 1];
                for (t, &k) in row.iter().enumerate() {
                    ls[k as usize] |= bit(t);
                }
                ls
            })
            .collect();
        let mut through = vec![0; n * n];
        for s in 0..n {
            for c in 0..n {
                if c == s {
                    continue;
                }
                let dsc = d.get(s, c);
                let mut m = 0;
                for t in 0..n {
                    if t != c && dsc + d.get(c, t) == d.get(s, t) {
                        m |= bit(t);
                    }
                }
                through[s * n + c] = m;
            }
        }
        let paths = convex_path_partition(g);
        let path_cover = paths.iter().fold(0, |a, &p| a | p);
        Engine {
            n,
            all,
            adj,
            layers,
            through,
            paths,
            path_cover,
        }
    }

    #[inline]
    pub fn through(&self, s: usize, c: usize) -> Mask {
        self.through[s * self.n + c]
    }

    /// Targets that are visible from `s` when `obstacles` may not be used as
    /// internal vertices.
    pub fn visible_from(&self, s: usize, obstacles: Mask) -> Mask {
        let layers = &self.layers[s];
        let mut reached = bit(s);
        let mut expand = bit(s);
        for layer in &layers[1..] {
            let mut next = 0;
            for w in Bits(expand) {
                next |= self.adj[w];
            }
            next &= layer;
            if next == 0 {
                break;
            }
            reached |= next;
            expand = next & !obstacles;
            if expand == 0 {
                break;
            }
        }
        reached
    }

    /// Full check of `x` against a variant.
    pub fn is_feasible(&self, x: Mask, variant: Variant) -> bool {
        if x == 0 {
            return true;
        }
        let out = self.all & !x;
        let ok = |s: usize, targets: Mask| targets & !self.visible_from(s, x) == 0;
        match variant {
            Variant::Mutual => Bits(x).all(|s| ok(s, x & above(s))),
            Variant::Outer => Bits(x).all(|s| ok(s, self.all)),
            Variant::Total => Bits(self.all).all(|s| ok(s, self.all & above(s))),
            Variant::Dual => {
                Bits(x).all(|s| ok(s, x & above(s))) && Bits(out).all(|s| ok(s, out & above(s)))
            }
        }
    }

    /// For a hereditary variant: given that `x` is feasible and `c ∉ x`,
    /// whether `x ∪ {c}` is feasible. Only pairs that can change are checked:
    /// pairs with `c` as an end, and pairs having `c` inside their interval.
    pub fn can_add(&self, x: Mask, c: usize, variant: Variant) -> bool {
        let x2 = x | bit(c);
        let from_c = match variant {
            Variant::Mutual => x,
            Variant::Outer => self.all,
            // Pairs ending at c keep their obstacles (c is exempt as an end).
            Variant::Total => 0,
            Variant::Dual => unreachable!("dual is not hereditary"),
        };
        if from_c & !self.visible_from(c, x2) != 0 {
            return false;
        }
        let sources = match variant {
            Variant::Mutual | Variant::Outer => x,
            _ => self.all & !bit(c),
        };
        for s in Bits(sources) {
            let targets = match variant {
                Variant::Mutual => self.through(s, c) & x & above(s),
                Variant::Total => self.through(s, c) & above(s),
                _ => self.through(s, c),
            };
            if targets != 0 && targets & !self.visible_from(s, x2) != 0 {
                return false;
            }
        }
        true
    }

    /// Dual search, deciding `v ∈ X`: with `inside` the decided members and
    /// `outside` the decided non-members, `v` may join unless some pair that
    /// is already decided (both inside, or both outside) loses visibility
    /// w.r.t. `inside ∪ {v}`. Undecided vertices are treated as passable,
    /// which can only over-approximate visibility, so rejection is sound.
    pub fn dual_include_ok(&self, inside: Mask, outside: Mask, v: usize) -> bool {
        let i2 = inside | bit(v);
        if inside & !self.visible_from(v, i2) != 0 {
            return false;
        }
        for s in Bits(inside) {
            let t = self.through(s, v) & inside & above(s);
            if t != 0 && t & !self.visible_from(s, i2) != 0 {
                return false;
            }
        }
        for s in Bits(outside) {
            let t = self.through(s, v) & outside & above(s);
            if t != 0 && t & !self.visible_from(s, i2) != 0 {
                return false;
            }
        }
        true
    }

    /// Dual search, deciding `v ∉ X`: pairs `(v, w)` with `w` already outside
    /// must be visible w.r.t. `inside`.
    pub fn dual_exclude_ok(&self, inside: Mask, outside: Mask, v: usize) -> bool {
        outside & !self.visible_from(v, inside) == 0
    }

    /// Upper bound on the size of any set `X` with `x ⊆ X ⊆ x ∪ pool`
    /// that belongs to one of the four variants.
    #[inline]
    pub fn upper_bound(&self, x: Mask, pool: Mask) -> usize {
        let avail = x | pool;
        let mut bound = ones(avail & !self.path_cover);
        for &p in &self.paths {
            bound += ones(avail & p).min(2);
        }
        bound
    }
}

/// Greedily partitions part of the vertex set into convex induced paths:
/// repeatedly take a farthest pair `(u, v)` whose interval is a single
/// geodesic lying in the unused vertices. A unique geodesic is convex, since
/// the interval of any two of its vertices lies inside `I(u, v)`.
fn convex_path_partition(g: &Graph) -> Vec<Mask> {
    let n = g.n();
    let d = g.distances();
    let mut intervals: Vec<(u32, usize, usize, Mask)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let duv = d.get(u, v);
            if duv < 2 {
                continue;
            }
            let mut m: Mask = 0;
            for z in 0..n {
                if d.get(u, z) + d.get(z, v) == duv {
                    m |= bit(z);
                }
            }
            if ones(m) == duv as usize + 1 {
                intervals.push((duv, u, v, m));
            }
        }
    }
    // Longest first, then lexicographic for determinism.
    intervals.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut used: Mask = 0;
    let mut parts = Vec::new();
    for (_, _, _, m) in intervals {
        if m & used == 0 {
            used |= m;
            parts.push(m);
        }
    }
    parts
}
