//! Independent reference implementations used as test oracles. Nothing here
//! shares code with the library beyond the `Graph` adjacency accessors.

#![allow(dead_code)]

use mvis::{build_graph, Graph, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Floyd–Warshall over an adjacency matrix.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every shortest u,v-path, as vertex sequences.
pub fn all_geodesics(g: &Graph, d: &[Vec<u32>], u: usize, v: usize) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, d: &[Vec<u32>], path: &mut Vec<usize>, v: usize, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if cur == v {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(cur) {
            if d[w][v] + 1 == d[cur][v] {
                path.push(w);
                walk(g, d, path, v, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g, d, &mut vec![u], v, &mut out);
    out
}

pub fn naive_visible(g: &Graph, d: &[Vec<u32>], x: &[bool], u: usize, v: usize) -> bool {
    all_geodesics(g, d, u, v)
        .iter()
        .any(|p| p[1..p.len() - 1].iter().all(|&w| !x[w]))
}

/// The four-variant classification by explicit geodesic enumeration.
pub fn naive_classify(g: &Graph, d: &[Vec<u32>], members: &[usize]) -> [bool; 4] {
    let n = g.n();
    let mut x = vec![false; n];
    for &m in members {
        x[m] = true;
    }
    let mut ok = [true; 4];
    for u in 0..n {
        for v in u + 1..n {
            if naive_visible(g, d, &x, u, v) {
                continue;
            }
            let (a, b) = (x[u], x[v]);
            // Mutual, Total, Outer, Dual, in `Variant::ALL` order.
            if a && b {
                ok[0] = false;
                ok[2] = false;
                ok[3] = false;
            }
            if a != b {
                ok[2] = false;
            }
            if !a && !b {
                ok[3] = false;
            }
            ok[1] = false;
        }
    }
    ok
}

pub fn variant_index(v: Variant) -> usize {
    Variant::ALL.iter().position(|&w| w == v).unwrap()
}

/// Largest set satisfying `variant` by exhaustive enumeration, with the
/// lexicographically least such set (as a sorted vertex list).
pub fn brute_force(g: &Graph, variant: Variant) -> (usize, Vec<usize>) {
    let n = g.n();
    assert!(n <= 12, "brute force is for tiny graphs");
    let d = floyd(g);
    let k = variant_index(variant);
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if set.len() < best.0 || !naive_classify(g, &d, &set)[k] {
            continue;
        }
        if set.len() > best.0 || set < best.1 {
            best = (set.len(), set);
        }
    }
    best
}

/// Connected graph on `n` vertices: a random spanning tree plus each other
/// pair with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build_graph(n, &edges).unwrap()
}

pub fn random_subset(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).filter(|_| rng.gen_bool(0.4)).collect()
}
