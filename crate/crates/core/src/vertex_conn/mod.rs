//! Rooted and global vertex connectivity on vertex-weighted digraphs.
//!
//! A rooted vertex cut is a nonempty sink component `T ∌ r` together with
//! its in-neighborhood `N⁻(T)`, which must avoid `r`; the value is the
//! weight of `N⁻(T)`. The rooted approximation combines a singleton check,
//! a local-cut search for light sinks and sampled split-graph flows on
//! vertex-sparsified graphs for heavier sinks.

pub mod local_cut;
pub mod sparsify;

use rand::distributions::{Distribution, WeightedIndex};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{log2, Config};
use crate::error::{AlgoError, GraphError};
use crate::graph::{DegreeMode, DiGraph, SplitGraph, VertexWeights};
use crate::maxflow::FlowNetwork;
use crate::work::Work;

pub use local_cut::{local_edge_cut, LocalCutEngine, LocalCutOutcome, LocalCutParams, LocalCutReport};
pub use sparsify::{vertex_sparsify, vertex_sparsify_threshold, HeavyInEdgeRemoval, VertexSparsifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VcKind {
    Cut,
    /// Every vertex other than the root is an out-neighbor of the root (or,
    /// globally, the graph is complete), so no separator exists.
    NoCutExists,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCutResult {
    /// Separator weight; `u64::MAX` when no cut exists.
    pub value: u64,
    pub separator: Vec<usize>,
    pub sink_component: Vec<usize>,
    pub kind: VcKind,
}

impl VertexCutResult {
    /// The cut with sink component `sink` and separator `N⁻(sink) \ sink`.
    pub fn from_sink(g: &DiGraph, mut sink: Vec<usize>) -> Self {
        sink.sort_unstable();
        sink.dedup();
        let mut inside = vec![false; g.n()];
        for &v in &sink {
            inside[v] = true;
        }
        let mut in_sep = vec![false; g.n()];
        let mut separator = Vec::new();
        for &v in &sink {
            for u in g.in_neighbors(v) {
                if !inside[u] && !in_sep[u] {
                    in_sep[u] = true;
                    separator.push(u);
                }
            }
        }
        separator.sort_unstable();
        Self {
            value: separator.iter().map(|&v| g.weight(v)).sum(),
            separator,
            sink_component: sink,
            kind: VcKind::Cut,
        }
    }

    pub fn no_cut() -> Self {
        Self {
            value: u64::MAX,
            separator: Vec::new(),
            sink_component: Vec::new(),
            kind: VcKind::NoCutExists,
        }
    }

    pub fn is_cut(&self) -> bool {
        self.kind == VcKind::Cut
    }

    /// The value as usually reported: the cut value, or `n − 1` by
    /// convention for a graph without cuts and unit weights.
    pub fn reported_value(&self, g: &DiGraph) -> Option<u64> {
        match self.kind {
            VcKind::Cut => Some(self.value),
            VcKind::NoCutExists if g.weights().is_none_or(|w| w.is_unit()) => {
                Some(g.n() as u64 - 1)
            }
            VcKind::NoCutExists => None,
        }
    }
}

const SMALL: u64 = 1;
const BUCKET: u64 = 2;
const ROOTS: u64 = 3;
const IN_RANGE: u64 = 4;
const GLOBAL: u64 = 5;

fn check_root(g: &DiGraph, r: usize) -> Result<(), AlgoError> {
    if g.n() < 2 {
        return Err(AlgoError::TooSmall(g.n()));
    }
    if r >= g.n() {
        return Err(GraphError::BadId { id: r, n: g.n() }.into());
    }
    Ok(())
}

fn check_eps(eps: f64) -> Result<(), AlgoError> {
    if eps > 0.0 && eps <= 1.0 {
        Ok(())
    } else {
        Err(AlgoError::BadParams(format!("eps {eps} not in (0, 1]")))
    }
}

fn tagged(prefix: &[u64], rest: &[u64]) -> Vec<u64> {
    prefix.iter().chain(rest).copied().collect()
}

/// Value-0 cut around the vertices `r` cannot reach.
fn unreachable_cut(g: &DiGraph, r: usize, work: &mut Work) -> Option<VertexCutResult> {
    let seen = g.reachable_from(r);
    work.scan(g.m() as u64);
    let sink: Vec<usize> = (0..g.n()).filter(|&v| !seen[v]).collect();
    (!sink.is_empty()).then(|| VertexCutResult::from_sink(g, sink))
}

/// Candidate sinks: vertices other than `r` and its out-neighbors.
fn candidate_sinks(g: &DiGraph, r: usize) -> Vec<usize> {
    let mut excluded = vec![false; g.n()];
    excluded[r] = true;
    for v in g.out_neighbors(r) {
        excluded[v] = true;
    }
    (0..g.n()).filter(|&v| !excluded[v]).collect()
}

fn in_weight(g: &DiGraph, v: usize) -> u64 {
    g.in_degree_w(v, DegreeMode::VertexWeight).unwrap_or(u64::MAX)
}

fn best_singleton(g: &DiGraph, candidates: &[usize], work: &mut Work) -> VertexCutResult {
    work.scan(g.m() as u64);
    candidates
        .iter()
        .min_by_key(|&&v| (in_weight(g, v), v))
        .map_or_else(VertexCutResult::no_cut, |&v| VertexCutResult::from_sink(g, vec![v]))
}

/// Outcome of [`small_sink_weight_bound_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingletonCheck {
    /// A singleton cut of value at most `(1+ε)κ̂`.
    SingletonGood(VertexCutResult),
    /// Every candidate sink has in-neighborhood weight above `(1+ε)κ̂`;
    /// carries the best singleton cut anyway.
    AllHeavy(VertexCutResult),
}

/// Compares the best singleton r-cut against `(1+ε)·kappa_estimate`.
pub fn small_sink_weight_bound_check(
    g: &DiGraph,
    r: usize,
    eps: f64,
    kappa_estimate: u64,
    work: &mut Work,
) -> Result<SingletonCheck, AlgoError> {
    check_root(g, r)?;
    check_eps(eps)?;
    let best = best_singleton(g, &candidate_sinks(g, r), work);
    let limit = (1.0 + eps) * kappa_estimate as f64;
    Ok(if best.is_cut() && best.value as f64 <= limit {
        SingletonCheck::SingletonGood(best)
    } else {
        SingletonCheck::AllHeavy(best)
    })
}

/// Split-graph flow network for one root on one sparsified graph.
struct SplitFlow {
    split: SplitGraph,
    net: FlowNetwork,
    root: usize,
    total: u64,
}

impl SplitFlow {
    fn new(h: &DiGraph, weights: &VertexWeights, r: usize) -> Self {
        let split = h.split_rooted(weights, r);
        let net = FlowNetwork::new(&split.base);
        Self {
            split,
            net,
            root: r,
            total: weights.total(),
        }
    }

    /// Minimum vertex (r,t)-cut of the sparsified graph if it is below
    /// `bound`, reported in `g`. Sinks never contain pinned vertices, whose
    /// root arc alone costs `W`, and all other vertices have the same
    /// in-edges in both graphs.
    fn cut(&mut self, g: &DiGraph, t: usize, bound: u64, work: &mut Work) -> Option<VertexCutResult> {
        let s = self.split.out_node(self.root);
        let sink_node = self.split.in_node(t);
        let flow_cut = self
            .net
            .min_cut(&self.split.base, s, sink_node, Some(bound.min(self.total)), work);
        if !flow_cut.is_exact() {
            return None;
        }
        let mut inside = vec![false; self.split.base.n()];
        for &x in &flow_cut.sink_side {
            inside[x] = true;
        }
        let sink = (0..g.n())
            .filter(|&v| v != self.root && inside[self.split.in_node(v)])
            .collect();
        let cut = VertexCutResult::from_sink(g, sink);
        debug_assert_eq!(cut.value, flow_cut.value);
        Some(cut)
    }
}

/// Weight-proportional sampling over the candidate sinks.
struct Sampler {
    candidates: Vec<usize>,
    dist: WeightedIndex<u64>,
    /// `W − w(N⁺(r))`.
    mass: u64,
}

impl Sampler {
    fn new(g: &DiGraph, r: usize, candidates: Vec<usize>) -> Self {
        let dist = WeightedIndex::new(candidates.iter().map(|&v| g.weight(v)))
            .expect("candidate set is nonempty with positive weights");
        let out_w = g.out_degree_w(r, DegreeMode::VertexWeight).unwrap_or(0);
        Self {
            candidates,
            dist,
            mass: g.total_weight() - out_w,
        }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> usize {
        self.candidates[self.dist.sample(rng)]
    }
}

#[allow(clippy::too_many_arguments)]
fn sampled_flows(
    g: &DiGraph,
    h: &DiGraph,
    r: usize,
    sampler: &Sampler,
    count: usize,
    flow: &mut SplitFlow,
    rng: &mut ChaCha8Rng,
    best: &mut VertexCutResult,
    work: &mut Work,
) {
    for _ in 0..count {
        if best.value == 0 {
            return;
        }
        let t = sampler.draw(rng);
        if h.has_edge(r, t) {
            continue;
        }
        if let Some(cut) = flow.cut(g, t, best.value, work) {
            if cut.value < best.value {
                *best = cut;
            }
        }
    }
}

fn sample_count(constant: f64, mass: u64, k1: u64) -> usize {
    (constant * mass as f64 / k1 as f64).ceil() as usize
}

/// Local-cut search for sinks of weight at most `k` on the graph
/// sparsified for `k`.
#[allow(clippy::too_many_arguments)]
fn small_inner(
    g: &DiGraph,
    r: usize,
    k: u64,
    eps: f64,
    cfg: &Config,
    tag: &[u64],
    sp: &mut VertexSparsifier,
    sampler: &Sampler,
    best: &mut VertexCutResult,
    work: &mut Work,
) -> Result<(), AlgoError> {
    let h = sp.sparsify(r, k, eps, work)?;
    let weights = g.weights_or_unit();
    let split = h.split_rooted(&weights, r);
    let mut engine = LocalCutEngine::new(&split.base);
    let nu = ((2 * k) as f64 / eps).ceil() as u64;
    let nu = nu.min(g.total_weight()).max(1);
    let logn = log2(g.n());
    let mut lhat = 1u64;
    while lhat <= k {
        let ell = ((2 * lhat * k) as f64 / eps).ceil() as u64;
        let samples = (cfg.sampling_constant * sampler.mass as f64 * logn / lhat as f64).ceil() as usize;
        let mut rng = cfg.stream(&tagged(tag, &[SMALL, lhat]));
        let params = LocalCutParams::new(nu, ell, eps);
        for _ in 0..samples {
            if best.value == 0 {
                return Ok(());
            }
            let t = sampler.draw(&mut rng);
            if h.has_edge(r, t) {
                continue;
            }
            let report = engine.run(
                &split.base,
                split.out_node(r),
                split.in_node(t),
                &params,
                &mut rng,
                work,
            )?;
            let Some(found) = report.cut() else { continue };
            let sink: Vec<usize> = found
                .sink_side
                .iter()
                .filter(|&&x| x % 2 == 0 && x / 2 != r)
                .map(|&x| x / 2)
                .collect();
            if sink.is_empty() || sink.iter().any(|&v| h.has_edge(r, v)) {
                continue;
            }
            let cut = VertexCutResult::from_sink(g, sink);
            if cut.value < best.value {
                *best = cut;
            }
        }
        lhat *= 2;
    }
    Ok(())
}

/// Shared preamble: validation, the unreachable pre-pass and the
/// candidate set. `Err(result)` short-circuits with a final answer.
fn prepare(g: &DiGraph, r: usize, eps: f64, work: &mut Work) -> Result<Result<Sampler, VertexCutResult>, AlgoError> {
    check_root(g, r)?;
    check_eps(eps)?;
    if let Some(cut) = unreachable_cut(g, r, work) {
        return Ok(Err(cut));
    }
    let candidates = candidate_sinks(g, r);
    if candidates.is_empty() {
        return Ok(Err(VertexCutResult::no_cut()));
    }
    Ok(Ok(Sampler::new(g, r, candidates)))
}

/// Vertex r-cut that is minimum with constant probability when some
/// minimum r-cut has a sink component of weight in `[k1, k2]`.
pub fn rooted_vc_in_range(
    g: &DiGraph,
    r: usize,
    k1: u64,
    k2: u64,
    eps: f64,
    cfg: &Config,
    work: &mut Work,
) -> Result<VertexCutResult, AlgoError> {
    if k1 == 0 || k1 > k2 {
        return Err(AlgoError::BadRange { k1, k2 });
    }
    let sampler = match prepare(g, r, eps, work)? {
        Ok(s) => s,
        Err(done) => return Ok(done),
    };
    let mut best = best_singleton(g, &sampler.candidates, work);
    let h = vertex_sparsify(g, r, k2, eps, work)?;
    let mut flow = SplitFlow::new(&h, &g.weights_or_unit(), r);
    let mut rng = cfg.stream(&[IN_RANGE, k1, k2]);
    let count = sample_count(cfg.sampling_constant, sampler.mass, k1);
    sampled_flows(g, &h, r, &sampler, count, &mut flow, &mut rng, &mut best, work);
    Ok(best)
}

/// Vertex r-cut that is minimum with constant probability when some
/// minimum r-cut has a sink component of weight at most `k`, or when the
/// best singleton is already within `1 + ε`.
pub fn rooted_vc_small_sink(
    g: &DiGraph,
    r: usize,
    k: u64,
    eps: f64,
    cfg: &Config,
    work: &mut Work,
) -> Result<VertexCutResult, AlgoError> {
    if k == 0 {
        return Err(AlgoError::BadParams("k must be at least 1".into()));
    }
    let sampler = match prepare(g, r, eps, work)? {
        Ok(s) => s,
        Err(done) => return Ok(done),
    };
    let mut best = best_singleton(g, &sampler.candidates, work);
    let mut sp = VertexSparsifier::new(g);
    small_inner(g, r, k, eps, cfg, &[], &mut sp, &sampler, &mut best, work)?;
    Ok(best)
}

/// Small-sink threshold `κ₀ = max(1, ⌈ε√n⌉)`.
fn kappa0(n: usize, eps: f64) -> u64 {
    ((eps * (n as f64).sqrt()).ceil() as u64).max(1)
}

/// Sink-weight buckets `[k1, k2]` above the small-sink threshold, capped at
/// the candidate mass.
pub fn vc_buckets(n: usize, m: usize, mass: u64, eps: f64) -> Vec<(u64, u64)> {
    let k0 = kappa0(n, eps);
    let i0 = k0.ilog2();
    let ratio = eps * m as f64 / n as f64;
    let top_index = if ratio > 1.0 { ratio.log2().ceil() as u32 } else { 0 };
    let i1 = top_index.max(i0 + 1);
    let mut out = Vec::new();
    for i in i0..i1 {
        let k1 = 1u64 << i.min(62);
        if k1 >= mass {
            break;
        }
        let k2 = if i + 1 == i1 { mass } else { (k1 * 2).min(mass) };
        out.push((k1, k2));
    }
    out
}

fn rooted_apx_inner(
    g: &DiGraph,
    r: usize,
    eps: f64,
    cfg: &Config,
    tag: &[u64],
    sp: &mut VertexSparsifier,
    work: &mut Work,
) -> Result<VertexCutResult, AlgoError> {
    let sampler = match prepare(g, r, eps, work)? {
        Ok(s) => s,
        Err(done) => return Ok(done),
    };
    let mut best = best_singleton(g, &sampler.candidates, work);
    let k0 = kappa0(g.n(), eps);
    small_inner(g, r, k0, eps, cfg, tag, sp, &sampler, &mut best, work)?;
    let weights = g.weights_or_unit();
    let reps = cfg.repetitions(g.n());
    for (k1, k2) in vc_buckets(g.n(), g.m(), sampler.mass, eps) {
        if best.value == 0 {
            break;
        }
        let h = sp.sparsify(r, k2, eps, work)?;
        let mut flow = SplitFlow::new(&h, &weights, r);
        let count = sample_count(cfg.sampling_constant, sampler.mass, k1);
        for rep in 0..reps {
            let mut rng = cfg.stream(&tagged(tag, &[BUCKET, k1, rep as u64]));
            sampled_flows(g, &h, r, &sampler, count, &mut flow, &mut rng, &mut best, work);
        }
    }
    Ok(best)
}

/// Rooted vertex connectivity within a factor `1 + ε` with high
/// probability. The result is always a valid vertex r-cut, or
/// `NoCutExists` when every other vertex is an out-neighbor of `r`.
pub fn rooted_vertex_connectivity_apx(
    g: &DiGraph,
    r: usize,
    eps: f64,
    cfg: &Config,
    work: &mut Work,
) -> Result<VertexCutResult, AlgoError> {
    let mut sp = VertexSparsifier::new(g);
    rooted_apx_inner(g, r, eps, cfg, &[], &mut sp, work)
}

fn rooted_exact_inner(
    g: &DiGraph,
    r: usize,
    cfg: &Config,
    tag: &[u64],
    sp: &mut VertexSparsifier,
    work: &mut Work,
) -> Result<VertexCutResult, AlgoError> {
    let first = rooted_apx_inner(g, r, 0.5, cfg, &tagged(tag, &[0]), sp, work)?;
    if !first.is_cut() || first.value <= 1 {
        return Ok(first);
    }
    let eps = 1.0 / (2.0 * first.value as f64);
    let second = rooted_apx_inner(g, r, eps, cfg, &tagged(tag, &[1]), sp, work)?;
    Ok(if second.value < first.value { second } else { first })
}

/// Exact rooted vertex connectivity with high probability: a coarse
/// `ε = 1/2` estimate `κ̂`, then a run with `ε = 1/(2κ̂)`.
pub fn rooted_vertex_connectivity_exact(
    g: &DiGraph,
    r: usize,
    cfg: &Config,
    work: &mut Work,
) -> Result<VertexCutResult, AlgoError> {
    let mut sp = VertexSparsifier::new(g);
    rooted_exact_inner(g, r, cfg, &[], &mut sp, work)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VcMode {
    Approx(f64),
    Exact,
}

/// Global vertex connectivity: the minimum over sampled roots of rooted
/// connectivity in `G` and in the reversed graph.
///
/// Roots are drawn by weight from vertices that are not adjacent to every
/// other vertex in both directions; such vertices lie in every separator.
/// When the draw count reaches the number of candidates every candidate
/// is used.
pub fn global_vertex_connectivity(
    g: &DiGraph,
    mode: VcMode,
    cfg: &Config,
    work: &mut Work,
) -> Result<VertexCutResult, AlgoError> {
    if g.n() < 2 {
        return Err(AlgoError::TooSmall(g.n()));
    }
    if let VcMode::Approx(eps) = mode {
        check_eps(eps)?;
    }
    if let Some(cut) = unreachable_cut(g, 0, work) {
        return Ok(cut);
    }
    let rev = g.reverse();
    let reaches_zero = rev.reachable_from(0);
    work.scan(g.m() as u64);
    if reaches_zero.iter().any(|&b| !b) {
        let sink = (0..g.n()).filter(|&v| reaches_zero[v]).collect();
        return Ok(VertexCutResult::from_sink(g, sink));
    }
    let n = g.n();
    let candidates: Vec<usize> = (0..n)
        .filter(|&v| g.out_degree(v) < n - 1 || g.in_degree(v) < n - 1)
        .collect();
    if candidates.is_empty() {
        return Ok(VertexCutResult::no_cut());
    }
    let mut run = GlobalRun {
        g,
        rev: &rev,
        candidates: &candidates,
        cfg,
        fwd: VertexSparsifier::new(g),
        bwd: VertexSparsifier::new(&rev),
    };
    match mode {
        VcMode::Approx(eps) => run.apx(eps, &[GLOBAL, 0], work),
        VcMode::Exact => {
            let first = run.apx(0.5, &[GLOBAL, 0], work)?;
            if first.value <= 1 {
                return Ok(first);
            }
            let eps = 1.0 / (2.0 * first.value as f64);
            let second = run.apx(eps, &[GLOBAL, 1], work)?;
            Ok(if second.value < first.value { second } else { first })
        }
    }
}

struct GlobalRun<'a> {
    g: &'a DiGraph,
    rev: &'a DiGraph,
    candidates: &'a [usize],
    cfg: &'a Config,
    fwd: VertexSparsifier<'a>,
    bwd: VertexSparsifier<'a>,
}

impl GlobalRun<'_> {
    fn roots(&self, tag: &[u64], work: &mut Work) -> Vec<usize> {
        let g = self.g;
        let n = g.n();
        let weight_of = |set: &mut dyn Iterator<Item = usize>| set.map(|v| g.weight(v)).sum::<u64>();
        let kappa_up = self
            .candidates
            .iter()
            .flat_map(|&v| {
                let a = (g.in_degree(v) < n - 1).then(|| weight_of(&mut g.in_neighbors(v)));
                let b = (g.out_degree(v) < n - 1).then(|| weight_of(&mut g.out_neighbors(v)));
                a.into_iter().chain(b)
            })
            .min()
            .expect("candidates have a missing neighbor");
        work.scan(2 * g.m() as u64);
        let total = g.total_weight();
        let draws = (total as f64 / (total - kappa_up) as f64 * self.cfg.amplification * log2(n)).ceil() as usize;
        if draws >= self.candidates.len() {
            return self.candidates.to_vec();
        }
        let dist = WeightedIndex::new(self.candidates.iter().map(|&v| g.weight(v)))
            .expect("nonempty positive weights");
        let mut rng = self.cfg.stream(&tagged(tag, &[ROOTS]));
        (0..draws).map(|_| self.candidates[dist.sample(&mut rng)]).collect()
    }

    fn apx(&mut self, eps: f64, tag: &[u64], work: &mut Work) -> Result<VertexCutResult, AlgoError> {
        let g = self.g;
        let mut best = VertexCutResult::no_cut();
        for (i, r) in self.roots(tag, work).into_iter().enumerate() {
            let forward = rooted_apx_inner(g, r, eps, self.cfg, &tagged(tag, &[i as u64, 0]), &mut self.fwd, work)?;
            if forward.value < best.value {
                best = forward;
            }
            if best.value == 0 {
                break;
            }
            let backward = rooted_apx_inner(self.rev, r, eps, self.cfg, &tagged(tag, &[i as u64, 1]), &mut self.bwd, work)?;
            if backward.is_cut() && backward.value < best.value {
                let mut taken = vec![false; g.n()];
                for &v in backward.sink_component.iter().chain(&backward.separator) {
                    taken[v] = true;
                }
                let sink = (0..g.n()).filter(|&v| !taken[v]).collect();
                let cut = VertexCutResult::from_sink(g, sink);
                debug_assert!(cut.value <= backward.value);
                best = cut;
            }
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::check_vertex_cut;

    fn complete(n: usize) -> DiGraph {
        let edges = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v, 1)));
        DiGraph::new(n, edges).unwrap()
    }

    fn bicycle(n: usize) -> DiGraph {
        let edges = (0..n).flat_map(|v| [(v, (v + 1) % n, 1), ((v + 1) % n, v, 1)]);
        DiGraph::new(n, edges).unwrap()
    }

    #[test]
    fn from_sink_builds_separator() {
        let g = DiGraph::new(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1)]).unwrap();
        let cut = VertexCutResult::from_sink(&g, vec![3]);
        assert_eq!(cut.separator, vec![2]);
        assert_eq!(cut.value, 1);
        let cut = VertexCutResult::from_sink(&g, vec![2, 3]);
        assert_eq!(cut.separator, vec![0, 1]);
        assert_eq!(cut.value, 2);
    }

    #[test]
    fn complete_graph_has_no_rooted_cut() {
        let g = complete(5);
        let cut = rooted_vertex_connectivity_exact(&g, 0, &Config::default(), &mut Work::new()).unwrap();
        assert_eq!(cut.kind, VcKind::NoCutExists);
        assert_eq!(cut.reported_value(&g), Some(4));
        let cut = global_vertex_connectivity(&g, VcMode::Exact, &Config::default(), &mut Work::new()).unwrap();
        assert_eq!(cut.kind, VcKind::NoCutExists);
    }

    #[test]
    fn bidirected_cycle_has_connectivity_two() {
        let g = bicycle(8);
        let cfg = Config::with_seed(3);
        let cut = rooted_vertex_connectivity_exact(&g, 0, &cfg, &mut Work::new()).unwrap();
        assert_eq!(cut.value, 2);
        check_vertex_cut(&g, &cut, Some(0)).unwrap();
        let cut = global_vertex_connectivity(&g, VcMode::Exact, &cfg, &mut Work::new()).unwrap();
        assert_eq!(cut.value, 2);
        check_vertex_cut(&g, &cut, None).unwrap();
    }

    #[test]
    fn unreachable_vertex_gives_zero() {
        let g = DiGraph::new(3, [(0, 1, 1), (2, 1, 1)]).unwrap();
        let cut = rooted_vertex_connectivity_apx(&g, 0, 0.5, &Config::default(), &mut Work::new()).unwrap();
        assert_eq!(cut.value, 0);
        assert_eq!(cut.sink_component, vec![2]);
        check_vertex_cut(&g, &cut, Some(0)).unwrap();
    }

    #[test]
    fn global_backward_zero_cut() {
        // Everything is reachable from 0, but 2 cannot reach 0.
        let g = DiGraph::new(3, [(0, 1, 1), (1, 0, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let cut = global_vertex_connectivity(&g, VcMode::Exact, &Config::default(), &mut Work::new()).unwrap();
        assert_eq!(cut.value, 0);
        check_vertex_cut(&g, &cut, None).unwrap();
    }

    #[test]
    fn weighted_separator_prefers_light_vertices() {
        // 0 -> {1, 2} -> 3 with w(1)=5, w(2)=1, and 0 -> 4 -> 3 with w(4)=1.
        let g = DiGraph::new(5, [(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1), (0, 4, 1), (4, 3, 1)])
            .unwrap()
            .with_weights(VertexWeights::new(vec![1, 5, 1, 1, 1]).unwrap())
            .unwrap();
        let cut = rooted_vertex_connectivity_exact(&g, 0, &Config::default(), &mut Work::new()).unwrap();
        assert_eq!(cut.value, 7);
        assert_eq!(cut.sink_component, vec![3]);
    }

    #[test]
    fn singleton_check() {
        let g = bicycle(6);
        let mut w = Work::new();
        match small_sink_weight_bound_check(&g, 0, 0.5, 2, &mut w).unwrap() {
            SingletonCheck::SingletonGood(c) => assert_eq!(c.value, 2),
            other => panic!("{other:?}"),
        }
        match small_sink_weight_bound_check(&g, 0, 0.5, 1, &mut w).unwrap() {
            SingletonCheck::AllHeavy(c) => assert_eq!(c.value, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bucket_schedule() {
        assert_eq!(vc_buckets(16, 16, 13, 0.5), vec![(2, 13)]);
        assert_eq!(vc_buckets(16, 240, 16, 0.5), vec![(2, 4), (4, 16)]);
        assert!(vc_buckets(4, 4, 1, 0.5).is_empty());
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = bicycle(4);
        let cfg = Config::default();
        assert!(matches!(
            rooted_vc_in_range(&g, 0, 3, 2, 0.5, &cfg, &mut Work::new()),
            Err(AlgoError::BadRange { .. })
        ));
        assert!(rooted_vertex_connectivity_apx(&g, 9, 0.5, &cfg, &mut Work::new()).is_err());
        assert!(rooted_vertex_connectivity_apx(&g, 0, 2.0, &cfg, &mut Work::new()).is_err());
    }
}
