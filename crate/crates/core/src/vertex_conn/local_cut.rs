//! Local (r,t)-cut search by randomized augmenting paths in the reversed
//! residual graph.
//!
//! Each iteration runs a DFS from `t` over residual arcs of the reversed
//! graph. It stops when it (a) reaches `r`, (b) has traversed a budget of
//! `⌈budget_constant·ℓ/ε⌉` residual capacity, or (c) runs out of arcs. In
//! (a) one unit is routed to `r`; in (b) one traversed arc is drawn with
//! probability proportional to its traversed capacity and one unit is
//! routed to its tail; in (c) the visited set is returned as the sink side
//! of an (r,t)-cut. After `1 + ⌈(1+ε)ν⌉` iterations without (c) the search
//! gives up.
//!
//! Routing to the tail of the drawn arc keeps the probability of picking a
//! sink inside a target component `T` below `vol⁺(T) / budget`, since only
//! arcs leaving `T` have their tail in `T`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

use crate::error::{AlgoError, GraphError};
use crate::graph::{DiGraph, Edge};
use crate::maxflow::{CutKind, EdgeCutResult};
use crate::work::Work;

#[derive(Debug, Clone, PartialEq)]
pub struct LocalCutParams {
    /// Cut-value budget `ν`.
    pub nu: u64,
    /// Sink in-volume budget `ℓ`.
    pub ell: u64,
    pub eps: f64,
    pub budget_constant: f64,
    pub seed: u64,
}

impl LocalCutParams {
    pub const DEFAULT_BUDGET_CONSTANT: f64 = 8.0;

    pub fn new(nu: u64, ell: u64, eps: f64) -> Self {
        Self {
            nu,
            ell,
            eps,
            budget_constant: Self::DEFAULT_BUDGET_CONSTANT,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), AlgoError> {
        if self.nu == 0 || self.ell == 0 {
            return Err(AlgoError::BadParams("nu and ell must be at least 1".into()));
        }
        if !(self.eps > 0.0 && self.eps <= 1.0) {
            return Err(AlgoError::BadParams(format!("eps {} not in (0, 1]", self.eps)));
        }
        if self.budget_constant.is_nan() || self.budget_constant <= 0.0 {
            return Err(AlgoError::BadParams("budget constant must be positive".into()));
        }
        Ok(())
    }

    /// Traversal budget per iteration, `⌈budget_constant·ℓ/ε⌉`.
    pub fn budget(&self) -> u64 {
        (self.budget_constant * self.ell as f64 / self.eps).ceil() as u64
    }

    /// `1 + ⌈(1+ε)ν⌉`.
    pub fn max_iterations(&self) -> u64 {
        1 + ((1.0 + self.eps) * self.nu as f64).ceil() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalCutOutcome {
    Found(EdgeCutResult),
    NotFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCutReport {
    pub outcome: LocalCutOutcome,
    pub iterations: u64,
    pub units_routed: u64,
    /// Largest capacity traversed in a single iteration.
    pub max_traversed: u64,
}

impl LocalCutReport {
    pub fn cut(&self) -> Option<&EdgeCutResult> {
        match &self.outcome {
            LocalCutOutcome::Found(c) => Some(c),
            LocalCutOutcome::NotFound => None,
        }
    }
}

enum Stop {
    Root,
    Budget,
    Exhausted,
}

/// Reversed residual network reused across local searches on one graph.
/// Only arcs touched by a search are reset afterwards, so a call costs
/// time proportional to what it explores.
///
/// Arc `2e` is edge `e` reversed (`head → tail`); arc `2e + 1` is its
/// residual partner.
#[derive(Debug, Clone)]
pub struct LocalCutEngine {
    n: usize,
    head: Vec<usize>,
    cap: Vec<u64>,
    res: Vec<u64>,
    start: Vec<usize>,
    adj: Vec<usize>,
    touched: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
    parent: Vec<usize>,
}

impl LocalCutEngine {
    pub fn new(g: &DiGraph) -> Self {
        let n = g.n();
        let arcs = 2 * g.m();
        let mut head = vec![0; arcs];
        let mut cap = vec![0; arcs];
        let mut start = vec![0usize; n + 1];
        for (id, e) in g.edges().iter().enumerate() {
            head[2 * id] = e.tail;
            head[2 * id + 1] = e.head;
            cap[2 * id] = e.cap;
            start[e.head + 1] += 1;
            start[e.tail + 1] += 1;
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut adj = vec![0; arcs];
        for v in 0..n {
            for &id in g.in_edge_ids(v) {
                adj[fill[v]] = 2 * id;
                fill[v] += 1;
            }
            for &id in g.out_edge_ids(v) {
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
            touched: Vec::new(),
            stamp: vec![0; n],
            epoch: 0,
            parent: vec![usize::MAX; n],
        }
    }

    fn next_epoch(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
    }

    fn restore(&mut self) {
        for a in self.touched.drain(..) {
            self.res[a] = self.cap[a];
        }
    }

    fn route(&mut self, t: usize, mut v: usize) {
        while v != t {
            let a = self.parent[v];
            self.res[a] -= 1;
            self.res[a ^ 1] += 1;
            self.touched.push(a);
            self.touched.push(a ^ 1);
            v = self.head[a ^ 1];
        }
    }

    /// Runs the search on `g`, which must be the graph this engine was
    /// built from.
    pub fn run(
        &mut self,
        g: &DiGraph,
        r: usize,
        t: usize,
        params: &LocalCutParams,
        rng: &mut ChaCha8Rng,
        work: &mut Work,
    ) -> Result<LocalCutReport, AlgoError> {
        params.validate()?;
        for v in [r, t] {
            if v >= self.n {
                return Err(GraphError::BadId { id: v, n: self.n }.into());
            }
        }
        if r == t {
            return Err(AlgoError::SameVertex(r));
        }
        let budget = params.budget();
        let max_iterations = params.max_iterations();
        let mut report = LocalCutReport {
            outcome: LocalCutOutcome::NotFound,
            iterations: 0,
            units_routed: 0,
            max_traversed: 0,
        };
        let mut stack: Vec<(usize, usize)> = Vec::new();
        let mut traversed_arcs: Vec<(usize, u64)> = Vec::new();

        for iteration in 1..=max_iterations {
            report.iterations = iteration;
            self.next_epoch();
            let epoch = self.epoch;
            self.stamp[t] = epoch;
            stack.clear();
            stack.push((t, self.start[t]));
            traversed_arcs.clear();
            let mut traversed = 0u64;
            let mut visited = vec![t];

            let stop = loop {
                let Some(top) = stack.last_mut() else {
                    break Stop::Exhausted;
                };
                let v = top.0;
                if top.1 == self.start[v + 1] {
                    stack.pop();
                    continue;
                }
                let a = self.adj[top.1];
                top.1 += 1;
                work.edge_scans += 1;
                if self.res[a] == 0 {
                    continue;
                }
                let share = self.res[a].min(budget - traversed);
                traversed += share;
                traversed_arcs.push((a, share));
                let w = self.head[a];
                if self.stamp[w] != epoch {
                    self.stamp[w] = epoch;
                    self.parent[w] = a;
                    visited.push(w);
                    if w == r {
                        break Stop::Root;
                    }
                    stack.push((w, self.start[w]));
                }
                if traversed >= budget {
                    break Stop::Budget;
                }
            };
            assert!(traversed <= budget, "local search exceeded its traversal budget");
            report.max_traversed = report.max_traversed.max(traversed);

            match stop {
                Stop::Root => {
                    self.route(t, r);
                    report.units_routed += 1;
                }
                Stop::Budget => {
                    let mut pick = rng.gen_range(0..traversed);
                    let mut chosen = traversed_arcs[0].0;
                    for &(a, share) in &traversed_arcs {
                        if pick < share {
                            chosen = a;
                            break;
                        }
                        pick -= share;
                    }
                    self.route(t, self.head[chosen ^ 1]);
                    report.units_routed += 1;
                }
                Stop::Exhausted => {
                    let cut = self.sink_cut(g, &visited, work);
                    report.outcome = LocalCutOutcome::Found(cut);
                    break;
                }
            }
        }
        self.restore();
        Ok(report)
    }

    /// `δ⁻(R)` in `g` for the visited set `R`, using only in-edges of `R`.
    fn sink_cut(&self, g: &DiGraph, visited: &[usize], work: &mut Work) -> EdgeCutResult {
        let mut sink = visited.to_vec();
        sink.sort_unstable();
        let mut cut_edges: Vec<Edge> = Vec::new();
        for &v in &sink {
            for e in g.in_edges(v) {
                work.edge_scans += 1;
                if self.stamp[e.tail] != self.epoch {
                    cut_edges.push(*e);
                }
            }
        }
        cut_edges.sort_unstable_by_key(|e| (e.tail, e.head));
        EdgeCutResult {
            value: cut_edges.iter().map(|e| e.cap).sum(),
            sink_side: sink,
            cut_edges,
            kind: CutKind::Exact,
        }
    }
}

/// One local (r,t)-cut search with a stream seeded from `params.seed`.
pub fn local_edge_cut(
    g: &DiGraph,
    r: usize,
    t: usize,
    params: &LocalCutParams,
    work: &mut Work,
) -> Result<LocalCutReport, AlgoError> {
    let mut engine = LocalCutEngine::new(g);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    engine.run(g, r, t, params, &mut rng, work)
}
