//! Vertex sparsification: every vertex whose in-neighborhood is heavy
//! keeps a single in-edge from the root.

use std::collections::HashMap;

use crate::error::AlgoError;
use crate::graph::{DegreeMode, DiGraph, Edge};
use crate::work::Work;

/// In-neighborhood weight `⌈(1 + 1/ε)k⌉` at which a vertex gets pinned.
pub fn vertex_sparsify_threshold(k: u64, eps: f64) -> u64 {
    let x = k as f64 * (1.0 + 1.0 / eps);
    (x - 1e-9).ceil().max(0.0) as u64
}

fn check(g: &DiGraph, r: usize, eps: f64) -> Result<(), AlgoError> {
    if r >= g.n() {
        return Err(crate::error::GraphError::BadId { id: r, n: g.n() }.into());
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(AlgoError::BadParams(format!("eps {eps} not in (0, 1]")));
    }
    Ok(())
}

/// Replaces the in-edges of every `v ≠ r` with in-neighborhood weight at
/// least [`vertex_sparsify_threshold`]`(k, ε)` by the pin edge `(r, v)`.
pub fn vertex_sparsify(
    g: &DiGraph,
    r: usize,
    k: u64,
    eps: f64,
    work: &mut Work,
) -> Result<DiGraph, AlgoError> {
    check(g, r, eps)?;
    let threshold = vertex_sparsify_threshold(k, eps);
    let heavy: Vec<usize> = (0..g.n())
        .filter(|&v| v != r && in_weight(g, v) >= threshold)
        .collect();
    work.scan(2 * g.m() as u64);
    Ok(g.replace_in_edges_with_root_edges(r, &heavy)?)
}

fn in_weight(g: &DiGraph, v: usize) -> u64 {
    g.in_degree_w(v, DegreeMode::VertexWeight).unwrap_or(0)
}

/// Root-independent part of vertex sparsification: the heavy vertices for
/// one threshold and the graph with their in-edges removed. Pinning for a
/// particular root then only touches the heavy vertices and the root.
#[derive(Debug, Clone)]
pub struct HeavyInEdgeRemoval {
    pub threshold: u64,
    heavy: Vec<bool>,
    heavy_list: Vec<usize>,
    stripped: Vec<Edge>,
}

impl HeavyInEdgeRemoval {
    pub fn new(g: &DiGraph, threshold: u64, work: &mut Work) -> Self {
        let heavy: Vec<bool> = (0..g.n()).map(|v| in_weight(g, v) >= threshold).collect();
        let heavy_list = (0..g.n()).filter(|&v| heavy[v]).collect();
        let stripped = g.edges().iter().filter(|e| !heavy[e.head]).copied().collect();
        work.scan(2 * g.m() as u64);
        Self {
            threshold,
            heavy,
            heavy_list,
            stripped,
        }
    }

    pub fn heavy(&self) -> &[usize] {
        &self.heavy_list
    }

    /// The sparsified graph for root `r`: the same edge set as
    /// [`vertex_sparsify`] with the matching threshold.
    pub fn pin(&self, g: &DiGraph, r: usize, work: &mut Work) -> DiGraph {
        let mut edges = self.stripped.clone();
        if self.heavy[r] {
            edges.extend(g.in_edges(r).copied());
        }
        for &v in self.heavy_list.iter().filter(|&&v| v != r) {
            let cap = g
                .in_edges(v)
                .find(|e| e.tail == r)
                .map_or(1, |e| e.cap);
            edges.push(Edge::new(r, v, cap));
        }
        work.scan((g.n() + g.in_degree(r)) as u64);
        DiGraph::from_unique_edges(g.n(), edges, g.weights().cloned(), g.cap_bound())
    }
}

/// Caches [`HeavyInEdgeRemoval`] per threshold so that many roots on the
/// same graph share the degree scan.
#[derive(Debug)]
pub struct VertexSparsifier<'a> {
    g: &'a DiGraph,
    cache: HashMap<u64, HeavyInEdgeRemoval>,
}

impl<'a> VertexSparsifier<'a> {
    pub fn new(g: &'a DiGraph) -> Self {
        Self {
            g,
            cache: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &'a DiGraph {
        self.g
    }

    pub fn sparsify(&mut self, r: usize, k: u64, eps: f64, work: &mut Work) -> Result<DiGraph, AlgoError> {
        check(self.g, r, eps)?;
        let threshold = vertex_sparsify_threshold(k, eps);
        let g = self.g;
        let removal = self
            .cache
            .entry(threshold)
            .or_insert_with(|| HeavyInEdgeRemoval::new(g, threshold, work));
        Ok(removal.pin(g, r, work))
    }
}
