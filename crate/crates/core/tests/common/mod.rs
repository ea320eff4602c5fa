#![allow(dead_code, clippy::needless_range_loop)]

use rand::Rng;
use sgspec::{Sign, SignedGraph};

/// A signed graph on `n` vertices; each pair is absent, positive or negative.
pub fn from_codes(n: usize, codes: &[u8]) -> SignedGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            match codes[k] {
                1 => edges.push((u, v, Sign::Positive)),
                2 => edges.push((u, v, Sign::Negative)),
                _ => {}
            }
            k += 1;
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

/// Random connected signed graph: a random spanning tree plus each other pair
/// with probability `density`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, density: f64) -> SignedGraph {
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present[u][v] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if present[u][v] || rng.gen_bool(density) {
                let s = if rng.gen_bool(0.5) {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                edges.push((u, v, s));
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

/// Every simple cycle of length ≥ 3 as a vertex sequence starting at its
/// minimum vertex, each cycle listed in both orientations.
pub fn all_cycles(g: &SignedGraph) -> Vec<Vec<usize>> {
    fn extend(
        g: &SignedGraph,
        path: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &(w, _) in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                out.push(path.clone());
            } else if w > start && !used[w] {
                used[w] = true;
                path.push(w);
                extend(g, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut used = vec![false; g.n()];
        used[s] = true;
        extend(g, &mut vec![s], &mut used, &mut out);
    }
    out
}

pub fn graph_file(g: &SignedGraph) -> String {
    sgspec::format::write_graph(g, &[])
}
