//! Bounded (s,t) max-flow / min-cut by blocking flows on level graphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::AlgoError;
use crate::graph::{DiGraph, Edge};
use crate::work::Work;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CutKind {
    /// `value` is the capacity of the certified cut.
    Exact,
    /// The cut value is at least `value`; no certificate.
    AtLeastBound,
}

/// An edge cut with its sink side `T` and entering edges `δ⁻(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCutResult {
    pub value: u64,
    pub sink_side: Vec<usize>,
    pub cut_edges: Vec<Edge>,
    pub kind: CutKind,
}

impl EdgeCutResult {
    /// Certificate for sink side `sink` (sorted on output).
    pub fn from_sink_side(g: &DiGraph, mut sink: Vec<usize>) -> Self {
        sink.sort_unstable();
        let mut in_sink = vec![false; g.n()];
        for &v in &sink {
            in_sink[v] = true;
        }
        let cut_edges: Vec<Edge> = g
            .edges()
            .iter()
            .filter(|e| !in_sink[e.tail] && in_sink[e.head])
            .copied()
            .collect();
        Self {
            value: cut_edges.iter().map(|e| e.cap).sum(),
            sink_side: sink,
            cut_edges,
            kind: CutKind::Exact,
        }
    }

    pub fn at_least(bound: u64) -> Self {
        Self {
            value: bound,
            sink_side: Vec::new(),
            cut_edges: Vec::new(),
            kind: CutKind::AtLeastBound,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == CutKind::Exact
    }
}

/// Residual network for repeated flow computations on one graph.
///
/// Arc `2e` is edge `e` and arc `2e + 1` its reverse.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    n: usize,
    head: Vec<usize>,
    cap: Vec<u64>,
    res: Vec<u64>,
    start: Vec<usize>,
    adj: Vec<usize>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

const UNSEEN: u32 = u32::MAX;

impl FlowNetwork {
    pub fn new(g: &DiGraph) -> Self {
        let n = g.n();
        let arcs = 2 * g.m();
        let mut head = vec![0; arcs];
        let mut cap = vec![0; arcs];
        let mut start = vec![0usize; n + 1];
        for (id, e) in g.edges().iter().enumerate() {
            head[2 * id] = e.head;
            head[2 * id + 1] = e.tail;
            cap[2 * id] = e.cap;
            start[e.tail + 1] += 1;
            start[e.head + 1] += 1;
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut adj = vec![0; arcs];
        for v in 0..n {
            // Out-arcs first (ordered by head), then reverse arcs (ordered by tail).
            for &id in g.out_edge_ids(v) {
                adj[fill[v]] = 2 * id;
                fill[v] += 1;
            }
            for &id in g.in_edge_ids(v) {
                adj[fill[v]] = 2 * id + 1;
                fill[v] += 1;
            }
        }
        Self {
            n,
            head,
            res: cap.clone(),
            cap,
            start,
            adj,
            level: vec![UNSEEN; n],
            iter: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reset(&mut self, work: &mut Work) {
        self.res.copy_from_slice(&self.cap);
        work.scan(self.cap.len() as u64);
    }

    #[inline]
    fn tail(&self, arc: usize) -> usize {
        self.head[arc ^ 1]
    }

    fn bfs(&mut self, s: usize, t: usize, work: &mut Work) -> bool {
        self.level.fill(UNSEEN);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[self.start[u]..self.start[u + 1]] {
                work.edge_scans += 1;
                let w = self.head[a];
                if self.res[a] > 0 && self.level[w] == UNSEEN {
                    self.level[w] = self.level[u] + 1;
                    if w == t {
                        return true;
                    }
                    queue.push_back(w);
                }
            }
        }
        false
    }

    /// Augments along the level graph until blocked or `limit` is reached.
    fn blocking_flow(&mut self, s: usize, t: usize, limit: u64, work: &mut Work) -> u64 {
        for v in 0..self.n {
            self.iter[v] = self.start[v];
        }
        let mut total = 0u64;
        let mut path: Vec<usize> = Vec::new();
        let mut v = s;
        while total < limit {
            if v == t {
                let mut push = limit - total;
                for &a in &path {
                    push = push.min(self.res[a]);
                }
                for &a in &path {
                    self.res[a] -= push;
                    self.res[a ^ 1] += push;
                }
                total += push;
                if total == limit {
                    break;
                }
                let k = path
                    .iter()
                    .position(|&a| self.res[a] == 0)
                    .expect("a bottleneck arc saturates");
                path.truncate(k);
                v = path.last().map_or(s, |&a| self.head[a]);
                continue;
            }
            let mut advanced = false;
            while self.iter[v] < self.start[v + 1] {
                let a = self.adj[self.iter[v]];
                work.edge_scans += 1;
                let w = self.head[a];
                if self.res[a] > 0 && self.level[w] == self.level[v] + 1 {
                    path.push(a);
                    v = w;
                    advanced = true;
                    break;
                }
                self.iter[v] += 1;
            }
            if !advanced {
                if v == s {
                    break;
                }
                self.level[v] = UNSEEN;
                let a = path.pop().expect("non-source vertex has a path arc");
                v = self.tail(a);
                self.iter[v] += 1;
            }
        }
        total
    }

    /// Max flow from `s` to `t` on a fresh residual, stopping once `bound`
    /// units are routed.
    pub fn max_flow(&mut self, s: usize, t: usize, bound: Option<u64>, work: &mut Work) -> u64 {
        self.reset(work);
        work.flow_calls += 1;
        let limit = bound.unwrap_or(u64::MAX);
        let mut flow = 0u64;
        while flow < limit && self.bfs(s, t, work) {
            flow += self.blocking_flow(s, t, limit - flow, work);
        }
        flow
    }

    /// Vertices reachable from `s` in the current residual.
    pub fn residual_reachable(&self, s: usize, work: &mut Work) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[self.start[u]..self.start[u + 1]] {
                work.edge_scans += 1;
                let w = self.head[a];
                if self.res[a] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Bounded minimum (s,t)-cut. The sink side is the complement of the
    /// residual-reachable set of `s`, the min cut closest to `s`.
    pub fn min_cut(
        &mut self,
        g: &DiGraph,
        s: usize,
        t: usize,
        bound: Option<u64>,
        work: &mut Work,
    ) -> EdgeCutResult {
        let flow = self.max_flow(s, t, bound, work);
        if let Some(b) = bound {
            if flow >= b {
                return EdgeCutResult::at_least(b);
            }
        }
        let reach = self.residual_reachable(s, work);
        let sink = (0..self.n).filter(|&v| !reach[v]).collect();
        let cut = EdgeCutResult::from_sink_side(g, sink);
        work.scan(g.m() as u64);
        debug_assert_eq!(cut.value, flow, "max-flow/min-cut duality");
        cut
    }
}

/// Minimum (s,t)-cut, or `AtLeastBound(b)` once `b` units of flow route.
pub fn min_st_cut(
    g: &DiGraph,
    s: usize,
    t: usize,
    cap_bound: Option<u64>,
    work: &mut Work,
) -> Result<EdgeCutResult, AlgoError> {
    for v in [s, t] {
        if v >= g.n() {
            return Err(crate::error::GraphError::BadId { id: v, n: g.n() }.into());
        }
    }
    if s == t {
        return Err(AlgoError::SameVertex(s));
    }
    let mut net = FlowNetwork::new(g);
    Ok(net.min_cut(g, s, t, cap_bound, work))
}

/// Minimum over all sinks `t ≠ r` of the bounded (r,t)-cut: an exact
/// minimum r-cut when its value is below `bound`, otherwise
/// `AtLeastBound(bound)`. Ties go to the lowest `t`.
pub fn min_rt_cut_all_sinks_bounded(
    g: &DiGraph,
    r: usize,
    bound: u64,
    work: &mut Work,
) -> EdgeCutResult {
    let mut net = FlowNetwork::new(g);
    let mut best = EdgeCutResult::at_least(bound);
    for t in (0..g.n()).filter(|&t| t != r) {
        if best.value == 0 {
            break;
        }
        // Only cuts strictly below the incumbent matter.
        let cut = net.min_cut(g, r, t, Some(best.value), work);
        if cut.is_exact() {
            best = cut;
        }
    }
    best
}
