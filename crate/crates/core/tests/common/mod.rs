//! Random instances and brute-force reference values shared by the
//! integration tests. Nothing here calls into the library's algorithms.

#![allow(dead_code)]

use dconn::{DiGraph, VertexWeights};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random simple digraph on `n` vertices with capacities in `[1, max_cap]`.
/// Half of the instances get a random Hamiltonian cycle so that nonzero
/// connectivities are common.
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, max_cap: u64) -> DiGraph {
    let p: f64 = rng.gen_range(0.15..0.9);
    let mut caps = vec![0u64; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                caps[u * n + v] = rng.gen_range(1..=max_cap);
            }
        }
    }
    if rng.gen_bool(0.5) {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for i in 0..n {
            let (u, v) = (order[i], order[(i + 1) % n]);
            if u != v && caps[u * n + v] == 0 {
                caps[u * n + v] = rng.gen_range(1..=max_cap);
            }
        }
    }
    let edges = (0..n * n)
        .filter(|&i| caps[i] > 0)
        .map(|i| (i / n, i % n, caps[i]));
    DiGraph::new(n, edges).unwrap().with_cap_bound(max_cap).unwrap()
}

pub fn with_random_weights(rng: &mut ChaCha8Rng, g: DiGraph, max_w: u64) -> DiGraph {
    let w = (0..g.n()).map(|_| rng.gen_range(1..=max_w)).collect();
    g.with_weights(VertexWeights::new(w).unwrap()).unwrap()
}

fn mask_members(mask: u32, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&v| mask >> v & 1 == 1)
}

/// `(λ_r, fewest sink vertices among minimum r-cuts)`.
pub fn brute_rooted_ec(g: &DiGraph, r: usize) -> (u64, usize) {
    let n = g.n();
    let mut best = (u64::MAX, usize::MAX);
    for mask in 1u32..(1 << n) {
        if mask >> r & 1 == 1 {
            continue;
        }
        let value = in_cut(g, mask);
        best = best.min((value, mask.count_ones() as usize));
    }
    best
}

/// Capacity entering the vertex set `mask`.
pub fn in_cut(g: &DiGraph, mask: u32) -> u64 {
    g.edges()
        .iter()
        .filter(|e| mask >> e.head & 1 == 1 && mask >> e.tail & 1 == 0)
        .map(|e| e.cap)
        .sum()
}

/// Minimum edge cut over all nonempty proper subsets.
pub fn brute_global_ec(g: &DiGraph) -> u64 {
    let full = (1u32 << g.n()) - 1;
    (1..full).map(|mask| in_cut(g, mask)).min().unwrap()
}

fn in_neighborhood(g: &DiGraph, mask: u32) -> u32 {
    g.edges()
        .iter()
        .filter(|e| mask >> e.head & 1 == 1 && mask >> e.tail & 1 == 0)
        .fold(0, |acc, e| acc | 1 << e.tail)
}

fn weight_of(g: &DiGraph, mask: u32) -> u64 {
    mask_members(mask, g.n()).map(|v| g.weight(v)).sum()
}

/// `Some((κ_r, lightest sink weight among minimum cuts))`, or `None` when
/// every other vertex is an out-neighbor of `r`.
pub fn brute_rooted_vc(g: &DiGraph, r: usize) -> Option<(u64, u64)> {
    let n = g.n();
    let mut best: Option<(u64, u64)> = None;
    for mask in 1u32..(1 << n) {
        if mask >> r & 1 == 1 {
            continue;
        }
        let sep = in_neighborhood(g, mask);
        if sep >> r & 1 == 1 {
            continue;
        }
        let key = (weight_of(g, sep), weight_of(g, mask));
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    best
}

/// Minimum vertex-cut weight over sink sets leaving some vertex outside
/// both the sink and its in-neighborhood; `None` if there is none.
pub fn brute_global_vc(g: &DiGraph) -> Option<u64> {
    let n = g.n();
    let full = (1u32 << n) - 1;
    (1..full)
        .filter_map(|mask| {
            let sep = in_neighborhood(g, mask);
            (mask | sep != full).then(|| weight_of(g, sep))
        })
        .min()
}

/// Minimum weight vertex (s,t)-separator avoiding `s` and `t`, by subset
/// enumeration over the other vertices; `None` when `(s,t)` is an edge.
pub fn brute_st_separator(g: &DiGraph, s: usize, t: usize) -> Option<u64> {
    if g.has_edge(s, t) {
        return None;
    }
    let n = g.n();
    let others: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
    let mut best = u64::MAX;
    for sub in 0u32..(1 << others.len()) {
        let removed: Vec<bool> = {
            let mut r = vec![false; n];
            for (i, &v) in others.iter().enumerate() {
                r[v] = sub >> i & 1 == 1;
            }
            r
        };
        let mut seen = vec![false; n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for w in g.out_neighbors(u) {
                if !seen[w] && !removed[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if !seen[t] {
            let w: u64 = (0..n).filter(|&v| removed[v]).map(|v| g.weight(v)).sum();
            best = best.min(w);
        }
    }
    Some(best)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_exponent(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let k = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}
