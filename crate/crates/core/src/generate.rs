//! Seeded random graph families.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::AlgoError;
use crate::graph::{DiGraph, VertexWeights};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Cycle,
    Complete,
    Gnp,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum Family {
    /// Each ordered pair is an edge with probability `p`.
    GnpDense { p: f64, max_cap: u64 },
    /// Each ordered pair is an edge with probability `avg_degree / (n − 1)`.
    GnpSparse { avg_degree: f64, max_cap: u64 },
    /// Root 0 and a random sink set `T` of `sink` vertices entered by
    /// exactly `cut` units of capacity; every other ordered pair is an edge
    /// with probability `p`.
    PlantedSink {
        sink: usize,
        cut: u64,
        p: f64,
        max_cap: u64,
    },
    /// Symmetric graphs with unit capacities.
    Bidirected { shape: Shape, p: f64 },
    /// Root 0, a sink set `T` of `sink` vertices whose in-neighbors all lie
    /// in a separator of `separator` vertices; other pairs are edges with
    /// probability `p`.
    PlantedVertex { sink: usize, separator: usize, p: f64 },
}

fn bad(msg: impl Into<String>) -> AlgoError {
    AlgoError::BadParams(msg.into())
}

fn check_p(p: f64) -> Result<(), AlgoError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(bad(format!("probability {p} not in [0, 1]")))
    }
}

fn check_cap(max_cap: u64) -> Result<(), AlgoError> {
    if max_cap == 0 {
        Err(bad("max_cap must be at least 1"))
    } else {
        Ok(())
    }
}

fn gnp_edges(n: usize, p: f64, max_cap: u64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize, u64)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v, rng.gen_range(1..=max_cap)));
            }
        }
    }
    edges
}

/// Generates a graph of `family` on `n` vertices; identical for equal seeds.
pub fn generate(family: &Family, n: usize, seed: u64) -> Result<DiGraph, AlgoError> {
    if n < 2 {
        return Err(AlgoError::TooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = match *family {
        Family::GnpDense { p, max_cap } => {
            check_p(p)?;
            check_cap(max_cap)?;
            DiGraph::new(n, gnp_edges(n, p, max_cap, &mut rng))?.with_cap_bound(max_cap)?
        }
        Family::GnpSparse { avg_degree, max_cap } => {
            check_cap(max_cap)?;
            if avg_degree.is_nan() || avg_degree < 0.0 {
                return Err(bad("avg_degree must be nonnegative"));
            }
            let p = (avg_degree / (n - 1) as f64).min(1.0);
            DiGraph::new(n, gnp_edges(n, p, max_cap, &mut rng))?.with_cap_bound(max_cap)?
        }
        Family::PlantedSink { sink, cut, p, max_cap } => {
            check_p(p)?;
            check_cap(max_cap)?;
            planted_sink(n, sink, cut, p, max_cap, &mut rng)?
        }
        Family::Bidirected { shape, p } => {
            check_p(p)?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let keep = match shape {
                        Shape::Cycle => v == u + 1 || (u == 0 && v == n - 1 && n > 2),
                        Shape::Complete => true,
                        Shape::Gnp => rng.gen_bool(p),
                    };
                    if keep {
                        edges.push((u, v, 1));
                        edges.push((v, u, 1));
                    }
                }
            }
            DiGraph::new(n, edges)?
        }
        Family::PlantedVertex { sink, separator, p } => {
            check_p(p)?;
            planted_vertex(n, sink, separator, p, &mut rng)?
        }
    };
    Ok(graph)
}

fn planted_sink(
    n: usize,
    sink: usize,
    cut: u64,
    p: f64,
    max_cap: u64,
    rng: &mut ChaCha8Rng,
) -> Result<DiGraph, AlgoError> {
    if sink == 0 || sink >= n {
        return Err(bad(format!("sink size {sink} not in [1, n−1]")));
    }
    let outside = (n - sink) as u64;
    if cut > outside * sink as u64 * max_cap {
        return Err(bad(format!("cut {cut} exceeds the available crossing capacity")));
    }
    let mut order: Vec<usize> = (1..n).collect();
    order.shuffle(rng);
    let mut in_sink = vec![false; n];
    for &v in &order[..sink] {
        in_sink[v] = true;
    }
    let mut caps = vec![0u64; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v && !(in_sink[v] && !in_sink[u]) && rng.gen_bool(p) {
                caps[u * n + v] = rng.gen_range(1..=max_cap);
            }
        }
    }
    let sources: Vec<usize> = (0..n).filter(|&v| !in_sink[v]).collect();
    let sinks: Vec<usize> = (0..n).filter(|&v| in_sink[v]).collect();
    let mut remaining = cut;
    while remaining > 0 {
        let u = *sources.choose(rng).expect("nonempty");
        let v = *sinks.choose(rng).expect("nonempty");
        if caps[u * n + v] < max_cap {
            caps[u * n + v] += 1;
            remaining -= 1;
        }
    }
    let edges = (0..n * n)
        .filter(|&i| caps[i] > 0)
        .map(|i| (i / n, i % n, caps[i]));
    Ok(DiGraph::new(n, edges)?.with_cap_bound(max_cap)?)
}

fn planted_vertex(
    n: usize,
    sink: usize,
    separator: usize,
    p: f64,
    rng: &mut ChaCha8Rng,
) -> Result<DiGraph, AlgoError> {
    if sink == 0 || sink + separator + 1 > n {
        return Err(bad(format!(
            "sink {sink} and separator {separator} do not fit beside the root in {n} vertices"
        )));
    }
    let mut order: Vec<usize> = (1..n).collect();
    order.shuffle(rng);
    // 0: rest (root included), 1: separator, 2: sink.
    let mut class = vec![0u8; n];
    for &v in &order[..sink] {
        class[v] = 2;
    }
    for &v in &order[sink..sink + separator] {
        class[v] = 1;
    }
    let sinks: Vec<usize> = (0..n).filter(|&v| class[v] == 2).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        let mut has_sink_edge = false;
        for v in 0..n {
            if u == v || (class[u] == 0 && class[v] == 2) {
                continue;
            }
            if rng.gen_bool(p) {
                edges.push((u, v, 1));
                has_sink_edge |= class[u] == 1 && class[v] == 2;
            }
        }
        if class[u] == 1 && !has_sink_edge {
            let v = *sinks.choose(rng).expect("nonempty");
            edges.push((u, v, 1));
        }
    }
    Ok(DiGraph::new(n, edges)?)
}

/// Uniform random vertex weights in `[1, max_weight]`.
pub fn random_weights(n: usize, max_weight: u64, seed: u64) -> Result<VertexWeights, AlgoError> {
    if max_weight == 0 {
        return Err(bad("max_weight must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(VertexWeights::new((0..n).map(|_| rng.gen_range(1..=max_weight)).collect())?)
}
