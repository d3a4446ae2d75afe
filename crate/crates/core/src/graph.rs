//! Immutable directed graph with integer edge capacities and optional
//! vertex weights, plus the structural transforms the connectivity
//! algorithms consume: reversal, contraction into the root, in-edge
//! replacement and the split graph.

use std::collections::HashMap;
use std::collections::VecDeque;

use serde::Serialize;

use crate::error::GraphError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub cap: u64,
}

impl Edge {
    pub fn new(tail: usize, head: usize, cap: u64) -> Self {
        Self { tail, head, cap }
    }
}

/// Positive integer vertex weights together with their total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeights {
    weights: Vec<u64>,
    total: u64,
}

impl VertexWeights {
    pub fn new(weights: Vec<u64>) -> Result<Self, GraphError> {
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(GraphError::ZeroWeight(v));
        }
        let total = weights.iter().sum();
        Ok(Self { weights, total })
    }

    pub fn unit(n: usize) -> Self {
        Self {
            weights: vec![1; n],
            total: n as u64,
        }
    }

    #[inline]
    pub fn get(&self, v: usize) -> u64 {
        self.weights[v]
    }

    /// Total weight `W`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_unit(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Sum of weights over `vertices`.
    pub fn sum_of(&self, vertices: impl IntoIterator<Item = usize>) -> u64 {
        vertices.into_iter().map(|v| self.weights[v]).sum()
    }
}

/// Selects how weighted degrees are measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    /// Sum of edge capacities.
    Capacity,
    /// Sum of neighbor vertex weights.
    VertexWeight,
}

/// Directed graph on dense vertex ids `0..n` without self-loops or
/// parallel edges. Parallel edges are either rejected or merged by
/// capacity summation at build time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    edges: Vec<Edge>,
    cap_bound: u64,
    weights: Option<VertexWeights>,
    out_start: Vec<usize>,
    out_ids: Vec<usize>,
    in_start: Vec<usize>,
    in_ids: Vec<usize>,
}

impl DiGraph {
    /// Builds a graph from an edge list.
    ///
    /// Self-loops are dropped. Parallel edges are summed into the first
    /// occurrence when `merge_parallel` is set and rejected otherwise. The
    /// capacity bound `U` is the largest capacity (at least 1).
    pub fn build(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, u64)>,
        weights: Option<VertexWeights>,
        merge_parallel: bool,
    ) -> Result<Self, GraphError> {
        if let Some(w) = &weights {
            if w.len() != n {
                return Err(GraphError::WeightCount { got: w.len(), n });
            }
        }
        let mut list: Vec<Edge> = Vec::new();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        for (tail, head, cap) in edges {
            for id in [tail, head] {
                if id >= n {
                    return Err(GraphError::BadId { id, n });
                }
            }
            if cap == 0 {
                return Err(GraphError::ZeroCap { tail, head });
            }
            if tail == head {
                continue;
            }
            match index.get(&(tail, head)) {
                Some(&i) if merge_parallel => list[i].cap += cap,
                Some(_) => return Err(GraphError::DuplicateEdge { tail, head }),
                None => {
                    index.insert((tail, head), list.len());
                    list.push(Edge { tail, head, cap });
                }
            }
        }
        Ok(Self::from_unique_edges(n, list, weights, 1))
    }

    /// Simple graph without weights; parallel edges are an error.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self, GraphError> {
        Self::build(n, edges, None, false)
    }

    /// Assembles the graph from an edge list already known to be free of
    /// self-loops, parallel edges and out-of-range ids.
    pub(crate) fn from_unique_edges(
        n: usize,
        edges: Vec<Edge>,
        weights: Option<VertexWeights>,
        min_bound: u64,
    ) -> Self {
        let max_cap = edges.iter().map(|e| e.cap).max().unwrap_or(1);
        let (out_start, out_ids) = csr(n, &edges, |e| e.tail, |e| e.head);
        let (in_start, in_ids) = csr(n, &edges, |e| e.head, |e| e.tail);
        Self {
            n,
            edges,
            cap_bound: max_cap.max(min_bound).max(1),
            weights,
            out_start,
            out_ids,
            in_start,
            in_ids,
        }
    }

    /// Raises the declared capacity bound `U`; it may not be below the
    /// largest capacity.
    pub fn with_cap_bound(mut self, bound: u64) -> Result<Self, GraphError> {
        let max_cap = self.max_cap();
        if bound < max_cap {
            return Err(GraphError::CapBound {
                declared: bound,
                max_cap,
            });
        }
        self.cap_bound = bound.max(1);
        Ok(self)
    }

    pub fn with_weights(mut self, weights: VertexWeights) -> Result<Self, GraphError> {
        if weights.len() != self.n {
            return Err(GraphError::WeightCount {
                got: weights.len(),
                n: self.n,
            });
        }
        self.weights = Some(weights);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// The capacity bound `U`.
    #[inline]
    pub fn cap_bound(&self) -> u64 {
        self.cap_bound
    }

    pub fn max_cap(&self) -> u64 {
        self.edges.iter().map(|e| e.cap).max().unwrap_or(0)
    }

    pub fn total_capacity(&self) -> u64 {
        self.edges.iter().map(|e| e.cap).sum()
    }

    /// Explicit weights, if the graph carries any.
    pub fn weights(&self) -> Option<&VertexWeights> {
        self.weights.as_ref()
    }

    /// Weights with the all-ones default filled in.
    pub fn weights_or_unit(&self) -> VertexWeights {
        self.weights
            .clone()
            .unwrap_or_else(|| VertexWeights::unit(self.n))
    }

    #[inline]
    pub fn weight(&self, v: usize) -> u64 {
        self.weights.as_ref().map_or(1, |w| w.get(v))
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.as_ref().map_or(self.n as u64, |w| w.total())
    }

    /// Edge ids leaving `v`, ordered by head.
    #[inline]
    pub fn out_edge_ids(&self, v: usize) -> &[usize] {
        &self.out_ids[self.out_start[v]..self.out_start[v + 1]]
    }

    /// Edge ids entering `v`, ordered by tail.
    #[inline]
    pub fn in_edge_ids(&self, v: usize) -> &[usize] {
        &self.in_ids[self.in_start[v]..self.in_start[v + 1]]
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.out_edge_ids(v).iter().map(move |&id| &self.edges[id])
    }

    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.in_edge_ids(v).iter().map(move |&id| &self.edges[id])
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_edges(v).map(|e| e.head)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_edges(v).map(|e| e.tail)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_start[v + 1] - self.out_start[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_start[v + 1] - self.in_start[v]
    }

    pub fn has_edge(&self, tail: usize, head: usize) -> bool {
        self.out_edge_ids(tail)
            .binary_search_by_key(&head, |&id| self.edges[id].head)
            .is_ok()
    }

    fn check_id(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::BadId { id: v, n: self.n })
        }
    }

    /// Weighted in-degree of `v`: total capacity of entering edges, or total
    /// weight of in-neighbors.
    pub fn in_degree_w(&self, v: usize, mode: DegreeMode) -> Result<u64, GraphError> {
        self.check_id(v)?;
        Ok(match mode {
            DegreeMode::Capacity => self.in_edges(v).map(|e| e.cap).sum(),
            DegreeMode::VertexWeight => self.in_neighbors(v).map(|u| self.weight(u)).sum(),
        })
    }

    pub fn out_degree_w(&self, v: usize, mode: DegreeMode) -> Result<u64, GraphError> {
        self.check_id(v)?;
        Ok(match mode {
            DegreeMode::Capacity => self.out_edges(v).map(|e| e.cap).sum(),
            DegreeMode::VertexWeight => self.out_neighbors(v).map(|u| self.weight(u)).sum(),
        })
    }

    /// Every edge `(u, v, c)` becomes `(v, u, c)`.
    pub fn reverse(&self) -> DiGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.head, e.tail, e.cap))
            .collect();
        Self::from_unique_edges(self.n, edges, self.weights.clone(), self.cap_bound)
    }

    /// Vertices reachable from `s` along edges.
    pub fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for v in self.out_neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Contracts `set ∪ {root}` into a single root vertex.
    ///
    /// Edges inside the contracted set vanish and parallel edges created by
    /// the contraction are merged by capacity sum. Surviving vertices keep
    /// their relative order; the contracted root takes the position of
    /// `root`. Weights, when present, are summed into the new root.
    pub fn contract_into_root(&self, root: usize, set: &[usize]) -> Result<Contraction, GraphError> {
        self.check_id(root)?;
        let mut inside = vec![false; self.n];
        for &v in set {
            self.check_id(v)?;
            if v == root {
                return Err(GraphError::RootInS(root));
            }
            inside[v] = true;
        }
        inside[root] = true;

        let mut map = vec![0; self.n];
        let mut origin = Vec::new();
        let mut new_root = 0;
        for v in 0..self.n {
            if v == root {
                new_root = origin.len();
                map[v] = new_root;
                origin.push(root);
            } else if !inside[v] {
                map[v] = origin.len();
                origin.push(v);
            }
        }
        for v in 0..self.n {
            if inside[v] {
                map[v] = new_root;
            }
        }

        let mut edges: Vec<Edge> = Vec::with_capacity(self.edges.len());
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        for e in &self.edges {
            let (a, b) = (map[e.tail], map[e.head]);
            if a == b {
                continue;
            }
            match index.get(&(a, b)) {
                Some(&i) => edges[i].cap += e.cap,
                None => {
                    index.insert((a, b), edges.len());
                    edges.push(Edge::new(a, b, e.cap));
                }
            }
        }
        let weights = self.weights.as_ref().map(|w| {
            let mut merged = vec![0; origin.len()];
            for v in 0..self.n {
                merged[map[v]] += w.get(v);
            }
            VertexWeights::new(merged).expect("sums of positive weights are positive")
        });
        let graph = Self::from_unique_edges(origin.len(), edges, weights, self.cap_bound);
        Ok(Contraction {
            graph,
            map,
            origin,
            root: new_root,
        })
    }

    /// Replaces all in-edges of `v` by the single pin edge `(root, v)`.
    pub fn replace_in_edges_with_root_edge(&self, root: usize, v: usize) -> Result<DiGraph, GraphError> {
        self.replace_in_edges_with_root_edges(root, &[v])
    }

    /// Batch form of [`DiGraph::replace_in_edges_with_root_edge`].
    ///
    /// A pin edge keeps the capacity of an existing `(root, v)` edge and
    /// gets capacity 1 otherwise.
    pub fn replace_in_edges_with_root_edges(
        &self,
        root: usize,
        targets: &[usize],
    ) -> Result<DiGraph, GraphError> {
        self.check_id(root)?;
        let mut pinned = vec![false; self.n];
        for &v in targets {
            self.check_id(v)?;
            if v == root {
                return Err(GraphError::VIsRoot(v));
            }
            pinned[v] = true;
        }
        let mut pin_cap = vec![1u64; self.n];
        let mut edges: Vec<Edge> = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if !pinned[e.head] {
                edges.push(*e);
            } else if e.tail == root {
                pin_cap[e.head] = e.cap;
            }
        }
        let mut seen = vec![false; self.n];
        for &v in targets {
            if !seen[v] {
                seen[v] = true;
                edges.push(Edge::new(root, v, pin_cap[v]));
            }
        }
        Ok(Self::from_unique_edges(
            self.n,
            edges,
            self.weights.clone(),
            self.cap_bound,
        ))
    }

    /// The split graph with arc `(u⁺, v⁻)` capacity `weight(u)`.
    pub fn split(&self, weights: &VertexWeights) -> SplitGraph {
        SplitGraph::build(self, weights, None)
    }

    /// Split graph for cuts rooted at `root`: identical to
    /// [`DiGraph::split`] except that the root's out-arcs get capacity `W`,
    /// which exceeds the weight of every separator avoiding the root.
    pub fn split_rooted(&self, weights: &VertexWeights, root: usize) -> SplitGraph {
        SplitGraph::build(self, weights, Some(root))
    }
}

fn csr(
    n: usize,
    edges: &[Edge],
    key: impl Fn(&Edge) -> usize,
    order: impl Fn(&Edge) -> usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut start = vec![0usize; n + 1];
    for e in edges {
        start[key(e) + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut ids = vec![0usize; edges.len()];
    for (id, e) in edges.iter().enumerate() {
        let k = key(e);
        ids[fill[k]] = id;
        fill[k] += 1;
    }
    for v in 0..n {
        ids[start[v]..start[v + 1]].sort_unstable_by_key(|&id| order(&edges[id]));
    }
    (start, ids)
}

/// Result of [`DiGraph::contract_into_root`].
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: DiGraph,
    /// Old vertex id to new vertex id.
    pub map: Vec<usize>,
    /// New vertex id to a representative old id (the root for the root).
    pub origin: Vec<usize>,
    /// Id of the contracted root in `graph`.
    pub root: usize,
}

impl Contraction {
    /// Preimage of a set of new vertices that avoids the contracted root.
    pub fn lift(&self, vertices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = vertices
            .iter()
            .inspect(|&&v| debug_assert_ne!(v, self.root))
            .map(|&v| self.origin[v])
            .collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    In,
    Out,
}

/// Edge-capacitated auxiliary graph: vertex `v` becomes `v⁻ = 2v` and
/// `v⁺ = 2v + 1` joined by an arc of capacity `weight(v)`; edge `(u, v)`
/// becomes `(u⁺, v⁻)`. The first `n` edges of `base` are the vertex arcs in
/// vertex order, followed by the original edges in order.
#[derive(Debug, Clone)]
pub struct SplitGraph {
    pub base: DiGraph,
    n: usize,
}

impl SplitGraph {
    fn build(g: &DiGraph, weights: &VertexWeights, root: Option<usize>) -> Self {
        let n = g.n();
        let big = weights.total();
        let mut edges = Vec::with_capacity(n + g.m());
        for v in 0..n {
            edges.push(Edge::new(2 * v, 2 * v + 1, weights.get(v)));
        }
        for e in g.edges() {
            let cap = if Some(e.tail) == root {
                big
            } else {
                weights.get(e.tail)
            };
            edges.push(Edge::new(2 * e.tail + 1, 2 * e.head, cap));
        }
        Self {
            base: DiGraph::from_unique_edges(2 * n, edges, None, 1),
            n,
        }
    }

    /// Number of original vertices.
    pub fn original_n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn in_node(&self, v: usize) -> usize {
        2 * v
    }

    #[inline]
    pub fn out_node(&self, v: usize) -> usize {
        2 * v + 1
    }

    #[inline]
    pub fn origin(&self, node: usize) -> (usize, Side) {
        (node / 2, if node.is_multiple_of(2) { Side::In } else { Side::Out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_graph() {
        let g = DiGraph::new(2, [(0, 1, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.cap_bound(), 1);
    }

    #[test]
    fn parallel_edges_merge_or_fail() {
        let g = DiGraph::build(3, [(0, 1, 2), (0, 1, 3)], None, true).unwrap();
        assert_eq!(g.edges(), &[Edge::new(0, 1, 5)]);
        assert_eq!(g.cap_bound(), 5);
        let err = DiGraph::build(3, [(0, 1, 2), (0, 1, 3)], None, false).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { tail: 0, head: 1 });
    }

    #[test]
    fn self_loops_dropped_and_bad_input_rejected() {
        let g = DiGraph::new(3, [(0, 0, 1), (0, 1, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(
            DiGraph::new(2, [(0, 2, 1)]).unwrap_err(),
            GraphError::BadId { id: 2, n: 2 }
        );
        assert_eq!(
            DiGraph::new(2, [(0, 1, 0)]).unwrap_err(),
            GraphError::ZeroCap { tail: 0, head: 1 }
        );
    }

    #[test]
    fn reverse_path() {
        let g = DiGraph::new(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        let r = g.reverse();
        assert_eq!(r.edges(), &[Edge::new(1, 0, 1), Edge::new(2, 1, 1)]);
        assert_eq!(r.reverse(), g);
    }

    #[test]
    fn contract_empty_set_is_identity() {
        let g = DiGraph::new(4, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        let c = g.contract_into_root(0, &[]).unwrap();
        assert_eq!(c.graph, g);
        assert_eq!(c.map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn contract_triangle() {
        // r=0 -> a=1 -> b=2 -> r
        let g = DiGraph::new(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let c = g.contract_into_root(0, &[1]).unwrap();
        assert_eq!(c.graph.n(), 2);
        assert_eq!(c.root, 0);
        assert_eq!(c.graph.edges(), &[Edge::new(0, 1, 1), Edge::new(1, 0, 1)]);
        assert_eq!(c.lift(&[1]), vec![2]);
        assert_eq!(
            g.contract_into_root(0, &[0]).unwrap_err(),
            GraphError::RootInS(0)
        );
    }

    #[test]
    fn contraction_merges_parallel_edges() {
        // a=1 and b=2 both point at c=3; contracting both yields one edge of cap 5.
        let g = DiGraph::new(4, [(0, 1, 1), (1, 3, 2), (2, 3, 3)]).unwrap();
        let c = g.contract_into_root(0, &[1, 2]).unwrap();
        assert_eq!(c.graph.edges(), &[Edge::new(0, 1, 5)]);
        assert_eq!(c.graph.cap_bound(), 5);
    }

    #[test]
    fn degrees() {
        let g = DiGraph::new(6, [(1, 0, 1), (2, 0, 1), (3, 0, 1), (4, 0, 1)]).unwrap();
        assert_eq!(g.in_degree_w(5, DegreeMode::Capacity).unwrap(), 0);
        assert_eq!(g.in_degree_w(0, DegreeMode::Capacity).unwrap(), 4);
        let w = VertexWeights::new(vec![1, 1, 2, 3, 4, 1]).unwrap();
        let g = g.with_weights(w).unwrap();
        assert_eq!(g.in_degree_w(0, DegreeMode::VertexWeight).unwrap(), 10);
        assert_eq!(g.out_degree_w(3, DegreeMode::VertexWeight).unwrap(), 1);
        assert!(g.in_degree_w(6, DegreeMode::Capacity).is_err());
    }

    #[test]
    fn split_single_edge() {
        let g = DiGraph::new(2, [(0, 1, 1)]).unwrap();
        let s = g.split(&VertexWeights::unit(2));
        let mut e = s.base.edges().to_vec();
        e.sort();
        assert_eq!(e, vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(2, 3, 1)]);
        assert_eq!(s.base.n(), 4);
        assert_eq!(s.origin(3), (1, Side::Out));
        assert_eq!(s.in_node(1), 2);
    }

    #[test]
    fn rooted_split_raises_only_root_arcs() {
        let g = DiGraph::new(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        let w = VertexWeights::new(vec![1, 5, 2]).unwrap();
        let s = g.split_rooted(&w, 0);
        let caps: Vec<u64> = s.base.edges().iter().map(|e| e.cap).collect();
        assert_eq!(caps, vec![1, 5, 2, 8, 5]);
    }

    #[test]
    fn pin_edge_replacement() {
        // a=1, b=2, c=3 all point into v=4; root 0.
        let g = DiGraph::new(5, [(1, 4, 1), (2, 4, 1), (3, 4, 1), (0, 1, 1)]).unwrap();
        let h = g.replace_in_edges_with_root_edge(0, 4).unwrap();
        assert_eq!(h.in_edges(4).copied().collect::<Vec<_>>(), vec![Edge::new(0, 4, 1)]);
        let again = h.replace_in_edges_with_root_edge(0, 4).unwrap();
        let mut a = h.edges().to_vec();
        let mut b = again.edges().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(
            g.replace_in_edges_with_root_edge(0, 0).unwrap_err(),
            GraphError::VIsRoot(0)
        );
    }

    #[test]
    fn has_edge_lookup() {
        let g = DiGraph::new(4, [(0, 3, 1), (0, 1, 1), (2, 0, 1)]).unwrap();
        assert!(g.has_edge(0, 3));
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(1, 0));
        assert_eq!(g.out_neighbors(0).collect::<Vec<_>>(), vec![1, 3]);
    }
}
