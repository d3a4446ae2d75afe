//! Rooted and global edge connectivity by rooted sparsification,
//! bucketed sink-size guessing and sink sampling.
//!
//! The minimum r-cut's sink component `T` is either a singleton, small
//! (at most `k_{i₀}` vertices, handled deterministically on a sparsified
//! graph with bounded flows), or falls in a bucket `[k_i, k_{i+1}]` where
//! sampling `O(n / k_i)` sinks on a graph sparsified for `k_{i+1}` finds it
//! with constant probability. Each bucket is repeated `O(log n)` times.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::config::{ceil_log2_ratio, Config};
use crate::error::AlgoError;
use crate::graph::{Contraction, DegreeMode, DiGraph};
use crate::maxflow::{min_rt_cut_all_sinks_bounded, EdgeCutResult, FlowNetwork};
use crate::work::Work;

const FORWARD: u64 = 0;
const REVERSED: u64 = 1;
const IN_RANGE: u64 = 2;

/// Bucket schedule for [`rooted_edge_connectivity`].
#[derive(Debug, Clone, PartialEq)]
pub struct EcParams {
    /// Small-sink threshold `ℓ = max(1, ⌊√n / U⌋)`.
    pub ell: u64,
    pub i0: u32,
    pub i1: u32,
    pub repetitions: usize,
    pub sampling_constant: f64,
    pub seed: u64,
    n: usize,
}

impl EcParams {
    pub fn new(g: &DiGraph, cfg: &Config) -> Self {
        let n = g.n();
        let u = g.cap_bound();
        let ell = (isqrt(n as u64) / u).max(1);
        let i0 = ell.ilog2();
        let i1 = ceil_log2_ratio(g.m() as u64, n as u64 * u).max(i0 as i64 + 1) as u32;
        Self {
            ell,
            i0,
            i1,
            repetitions: cfg.repetitions(n),
            sampling_constant: cfg.sampling_constant,
            seed: cfg.seed,
            n,
        }
    }

    /// `k_i = 2^i` below the top index and `k_{i₁} = n`.
    pub fn k(&self, i: u32) -> usize {
        if i >= self.i1 {
            self.n
        } else {
            (1usize << i).min(self.n)
        }
    }

    /// Sink-size ranges `[k_i, k_{i+1}]` for `i ∈ [i₀, i₁)`.
    pub fn buckets(&self) -> Vec<(usize, usize)> {
        (self.i0..self.i1).map(|i| (self.k(i), self.k(i + 1))).collect()
    }
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// In-capacity at which a vertex is contracted into the root when sinks
/// have at most `k` vertices. Equals `(1 + U)k` for `U = 1`; for larger `U`
/// a sink vertex can carry up to `λ + U(k − 1) ≤ U(2k − 1) − 1`, so the
/// threshold is raised to `U(2k − 1)` where that is larger.
pub fn sparsify_threshold(cap_bound: u64, k: u64) -> u64 {
    ((1 + cap_bound) * k).max(cap_bound * (2 * k).saturating_sub(1))
}

fn check_root(g: &DiGraph, r: usize) -> Result<(), AlgoError> {
    if g.n() < 2 {
        return Err(AlgoError::TooSmall(g.n()));
    }
    if r >= g.n() {
        return Err(crate::error::GraphError::BadId { id: r, n: g.n() }.into());
    }
    Ok(())
}

/// Cut of value 0 around the vertices `r` cannot reach, if any.
fn unreachable_cut(g: &DiGraph, r: usize, work: &mut Work) -> Option<EdgeCutResult> {
    let seen = g.reachable_from(r);
    work.scan(g.m() as u64);
    let sink: Vec<usize> = (0..g.n()).filter(|&v| !seen[v]).collect();
    (!sink.is_empty()).then(|| EdgeCutResult::from_sink_side(g, sink))
}

/// Best singleton r-cut: minimum weighted in-degree over `v ≠ r`, lowest id
/// on ties.
pub fn singleton_r_cuts(g: &DiGraph, r: usize, work: &mut Work) -> Result<EdgeCutResult, AlgoError> {
    check_root(g, r)?;
    work.scan(g.m() as u64);
    let v = (0..g.n())
        .filter(|&v| v != r)
        .min_by_key(|&v| (g.in_degree_w(v, DegreeMode::Capacity).unwrap_or(u64::MAX), v))
        .expect("n ≥ 2");
    Ok(EdgeCutResult::from_sink_side(g, vec![v]))
}

/// Contracts every `v ≠ r` with in-capacity at least
/// [`sparsify_threshold`]`(U, k)` into `r`.
pub fn rooted_sparsify_edges(
    g: &DiGraph,
    r: usize,
    k: u64,
    work: &mut Work,
) -> Result<Contraction, AlgoError> {
    if k == 0 {
        return Err(AlgoError::BadParams("k must be at least 1".into()));
    }
    check_root(g, r)?;
    let threshold = sparsify_threshold(g.cap_bound(), k);
    let heavy: Vec<usize> = (0..g.n())
        .filter(|&v| v != r && g.in_degree_w(v, DegreeMode::Capacity).unwrap_or(0) >= threshold)
        .collect();
    work.scan(2 * g.m() as u64);
    Ok(g.contract_into_root(r, &heavy)?)
}

/// Samples `⌈c·n / k1⌉` sinks uniformly among the non-root vertices of the
/// sparsified graph and returns the best lifted cut below `incumbent`.
#[allow(clippy::too_many_arguments)]
fn sampled_cut(
    g: &DiGraph,
    sparse: &Contraction,
    net: &mut FlowNetwork,
    k1: usize,
    sampling_constant: f64,
    rng: &mut ChaCha8Rng,
    incumbent: u64,
    work: &mut Work,
) -> Option<EdgeCutResult> {
    let h = &sparse.graph;
    if h.n() < 2 {
        return None;
    }
    let samples = (sampling_constant * g.n() as f64 / k1 as f64).ceil() as usize;
    let mut bound = incumbent;
    let mut best = None;
    for _ in 0..samples {
        if bound == 0 {
            break;
        }
        let mut t = rng.gen_range(0..h.n() - 1);
        if t >= sparse.root {
            t += 1;
        }
        let cut = net.min_cut(h, sparse.root, t, Some(bound), work);
        if cut.is_exact() {
            let lifted = EdgeCutResult::from_sink_side(g, sparse.lift(&cut.sink_side));
            debug_assert_eq!(lifted.value, cut.value);
            bound = lifted.value;
            best = Some(lifted);
        }
    }
    best
}

/// Minimum r-cut when its sink has between `k1` and `k2` vertices, with
/// constant probability. Always returns a valid r-cut.
pub fn rooted_cut_in_range(
    g: &DiGraph,
    r: usize,
    k1: usize,
    k2: usize,
    cfg: &Config,
    work: &mut Work,
) -> Result<EdgeCutResult, AlgoError> {
    check_root(g, r)?;
    if k1 == 0 || k1 > k2 || k2 > g.n() {
        return Err(AlgoError::BadRange {
            k1: k1 as u64,
            k2: k2 as u64,
        });
    }
    let mut best = singleton_r_cuts(g, r, work)?;
    if k2 >= 2 {
        let sparse = rooted_sparsify_edges(g, r, k2 as u64, work)?;
        let mut net = FlowNetwork::new(&sparse.graph);
        let mut rng = cfg.stream(&[IN_RANGE, k1 as u64, k2 as u64]);
        let k1 = k1.max(2);
        if let Some(cut) = sampled_cut(
            g,
            &sparse,
            &mut net,
            k1,
            cfg.sampling_constant,
            &mut rng,
            best.value,
            work,
        ) {
            best = cut;
        }
    }
    Ok(best)
}

fn small_sink_inner(
    g: &DiGraph,
    r: usize,
    k: u64,
    incumbent: u64,
    work: &mut Work,
) -> Result<Option<EdgeCutResult>, AlgoError> {
    let sparse = rooted_sparsify_edges(g, r, k, work)?;
    if sparse.graph.n() < 2 {
        return Ok(None);
    }
    let bound = (k * g.cap_bound()).min(incumbent);
    let cut = min_rt_cut_all_sinks_bounded(&sparse.graph, sparse.root, bound, work);
    Ok(cut
        .is_exact()
        .then(|| EdgeCutResult::from_sink_side(g, sparse.lift(&cut.sink_side))))
}

/// Deterministic r-cut that is minimum whenever some minimum r-cut has a
/// sink of at most `k` vertices.
pub fn rooted_cut_small_sink(
    g: &DiGraph,
    r: usize,
    k: u64,
    work: &mut Work,
) -> Result<EdgeCutResult, AlgoError> {
    let singleton = singleton_r_cuts(g, r, work)?;
    let cut = small_sink_inner(g, r, k, singleton.value, work)?;
    Ok(cut.unwrap_or(singleton))
}

fn rooted_inner(
    g: &DiGraph,
    r: usize,
    cfg: &Config,
    orientation: u64,
    work: &mut Work,
) -> Result<EdgeCutResult, AlgoError> {
    check_root(g, r)?;
    if let Some(cut) = unreachable_cut(g, r, work) {
        return Ok(cut);
    }
    let params = EcParams::new(g, cfg);
    let mut best = singleton_r_cuts(g, r, work)?;
    if let Some(cut) = small_sink_inner(g, r, params.k(params.i0) as u64, best.value, work)? {
        best = cut;
    }
    for (b, (k1, k2)) in params.buckets().into_iter().enumerate() {
        let sparse = rooted_sparsify_edges(g, r, k2 as u64, work)?;
        if sparse.graph.n() < 2 {
            continue;
        }
        let mut net = FlowNetwork::new(&sparse.graph);
        work.scan(2 * sparse.graph.m() as u64);
        for rep in 0..params.repetitions {
            let mut rng = cfg.stream(&[orientation, b as u64, rep as u64]);
            if let Some(cut) = sampled_cut(
                g,
                &sparse,
                &mut net,
                k1.max(2),
                params.sampling_constant,
                &mut rng,
                best.value,
                work,
            ) {
                best = cut;
            }
        }
    }
    Ok(best)
}

/// Minimum r-cut with high probability. The result is always a valid
/// r-cut certificate; vertices unreachable from `r` give value 0.
pub fn rooted_edge_connectivity(
    g: &DiGraph,
    r: usize,
    cfg: &Config,
    work: &mut Work,
) -> Result<EdgeCutResult, AlgoError> {
    rooted_inner(g, r, cfg, FORWARD, work)
}

/// Global edge connectivity as the smaller of the rooted connectivity from
/// vertex 0 in `G` and in the reversed graph. Reversed-side cuts are
/// reported as `δ⁻(V \ T)` in `G`; ties prefer the forward orientation.
pub fn global_edge_connectivity(
    g: &DiGraph,
    cfg: &Config,
    work: &mut Work,
) -> Result<EdgeCutResult, AlgoError> {
    let forward = rooted_inner(g, 0, cfg, FORWARD, work)?;
    if forward.value == 0 {
        return Ok(forward);
    }
    let rev = g.reverse();
    let backward = rooted_inner(&rev, 0, cfg, REVERSED, work)?;
    if backward.value < forward.value {
        let mut in_sink = vec![false; g.n()];
        for &v in &backward.sink_side {
            in_sink[v] = true;
        }
        let sink = (0..g.n()).filter(|&v| !in_sink[v]).collect();
        let cut = EdgeCutResult::from_sink_side(g, sink);
        debug_assert_eq!(cut.value, backward.value);
        Ok(cut)
    } else {
        Ok(forward)
    }
}
