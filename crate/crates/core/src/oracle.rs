//! Exact ground truth for small instances: exhaustive subset enumeration
//! and all-sinks flow computations.

use serde::Serialize;

use crate::error::{AlgoError, GraphError};
use crate::graph::DiGraph;
use crate::maxflow::{min_st_cut, EdgeCutResult, FlowNetwork};
use crate::vertex_conn::VertexCutResult;
use crate::work::Work;

/// Largest `n` for subset enumeration.
pub const ENUM_MAX_N: usize = 16;
/// Largest `n` for the pairwise global vertex connectivity oracle.
pub const PAIRWISE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedEcEnum {
    /// Optimal cut with the fewest sink vertices.
    pub cut: EdgeCutResult,
    /// Fewest sink vertices over all optimal cuts.
    pub min_sink_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedVcEnum {
    /// Optimal cut with the lightest sink component.
    pub cut: VertexCutResult,
    /// Lightest sink component weight over all optimal cuts; 0 if no cut.
    pub min_sink_weight: u64,
}

fn check(g: &DiGraph, r: usize, max: usize) -> Result<(), AlgoError> {
    if g.n() < 2 {
        return Err(AlgoError::TooSmall(g.n()));
    }
    if g.n() > max {
        return Err(AlgoError::TooLarge { n: g.n(), max });
    }
    if r >= g.n() {
        return Err(GraphError::BadId { id: r, n: g.n() }.into());
    }
    Ok(())
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Minimum r-cut by enumerating every nonempty `T ⊆ V \ {r}`.
pub fn exact_rooted_ec_enum(g: &DiGraph, r: usize) -> Result<RootedEcEnum, AlgoError> {
    check(g, r, ENUM_MAX_N)?;
    let n = g.n();
    let mut best: Option<(u64, u32, u32)> = None;
    for mask in 1u32..(1 << n) {
        if mask >> r & 1 == 1 {
            continue;
        }
        let value: u64 = g
            .edges()
            .iter()
            .filter(|e| mask >> e.head & 1 == 1 && mask >> e.tail & 1 == 0)
            .map(|e| e.cap)
            .sum();
        let key = (value, mask.count_ones(), mask);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    let (_, size, mask) = best.expect("n ≥ 2 leaves a nonempty sink");
    Ok(RootedEcEnum {
        cut: EdgeCutResult::from_sink_side(g, members(mask, n)),
        min_sink_size: size as usize,
    })
}

/// Minimum r-cut as the minimum over `t ≠ r` of the (r,t)-cut; ties go to
/// the lowest `t`.
pub fn exact_rooted_ec_flows(g: &DiGraph, r: usize) -> Result<EdgeCutResult, AlgoError> {
    check(g, r, usize::MAX)?;
    let mut work = Work::new();
    let mut best: Option<EdgeCutResult> = None;
    for t in (0..g.n()).filter(|&t| t != r) {
        let cut = min_st_cut(g, r, t, None, &mut work)?;
        if best.as_ref().is_none_or(|b| cut.value < b.value) {
            best = Some(cut);
        }
    }
    Ok(best.expect("n ≥ 2"))
}

/// Minimum edge cut over all nonempty proper vertex subsets.
pub fn exact_global_ec_enum(g: &DiGraph) -> Result<EdgeCutResult, AlgoError> {
    check(g, 0, ENUM_MAX_N)?;
    let n = g.n();
    let full = (1u32 << n) - 1;
    let mut best: Option<(u64, u32)> = None;
    for mask in 1..full {
        let value: u64 = g
            .edges()
            .iter()
            .filter(|e| mask >> e.head & 1 == 1 && mask >> e.tail & 1 == 0)
            .map(|e| e.cap)
            .sum();
        if best.is_none_or(|b| (value, mask) < b) {
            best = Some((value, mask));
        }
    }
    let (_, mask) = best.expect("n ≥ 2");
    Ok(EdgeCutResult::from_sink_side(g, members(mask, n)))
}

/// Minimum edge cut as the minimum (s,t)-cut over all ordered pairs.
pub fn exact_global_ec_pairs(g: &DiGraph) -> Result<EdgeCutResult, AlgoError> {
    check(g, 0, usize::MAX)?;
    let mut work = Work::new();
    let mut best: Option<EdgeCutResult> = None;
    for s in 0..g.n() {
        for t in (0..g.n()).filter(|&t| t != s) {
            let cut = min_st_cut(g, s, t, None, &mut work)?;
            if best.as_ref().is_none_or(|b| cut.value < b.value) {
                best = Some(cut);
            }
        }
    }
    Ok(best.expect("n ≥ 2"))
}

/// Minimum vertex (s,t)-cut through the rooted split graph, for `t` not an
/// out-neighbor of `s`.
fn split_cut(g: &DiGraph, net: &mut FlowNetwork, split: &crate::graph::SplitGraph, s: usize, t: usize) -> VertexCutResult {
    let mut work = Work::new();
    let cut = net.min_cut(&split.base, split.out_node(s), split.in_node(t), None, &mut work);
    let mut inside = vec![false; split.base.n()];
    for &x in &cut.sink_side {
        inside[x] = true;
    }
    let sink = (0..g.n())
        .filter(|&v| v != s && inside[split.in_node(v)])
        .collect();
    let result = VertexCutResult::from_sink(g, sink);
    debug_assert_eq!(result.value, cut.value);
    result
}

/// Minimum vertex r-cut as the minimum split-graph (r⁺, t⁻) cut over
/// `t ∉ {r} ∪ N⁺(r)`; `NoCutExists` if there is no such `t`.
pub fn exact_rooted_vc_flows(g: &DiGraph, r: usize) -> Result<VertexCutResult, AlgoError> {
    check(g, r, usize::MAX)?;
    let split = g.split_rooted(&g.weights_or_unit(), r);
    let mut net = FlowNetwork::new(&split.base);
    let mut best = VertexCutResult::no_cut();
    for t in (0..g.n()).filter(|&t| t != r && !g.has_edge(r, t)) {
        let cut = split_cut(g, &mut net, &split, r, t);
        if cut.value < best.value {
            best = cut;
        }
    }
    Ok(best)
}

/// Minimum vertex r-cut by enumerating every nonempty `T ⊆ V \ {r}` with
/// `r ∉ N⁻(T)`.
pub fn exact_rooted_vc_enum(g: &DiGraph, r: usize) -> Result<RootedVcEnum, AlgoError> {
    check(g, r, ENUM_MAX_N)?;
    let n = g.n();
    let mut in_mask = vec![0u32; n];
    for e in g.edges() {
        in_mask[e.head] |= 1 << e.tail;
    }
    let mut best: Option<(u64, u64, u32)> = None;
    for mask in 1u32..(1 << n) {
        if mask >> r & 1 == 1 {
            continue;
        }
        let nbrs = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .fold(0u32, |acc, v| acc | in_mask[v])
            & !mask;
        if nbrs >> r & 1 == 1 {
            continue;
        }
        let value: u64 = members(nbrs, n).into_iter().map(|v| g.weight(v)).sum();
        let sink_weight: u64 = members(mask, n).into_iter().map(|v| g.weight(v)).sum();
        let key = (value, sink_weight, mask);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    Ok(match best {
        Some((_, w, mask)) => RootedVcEnum {
            cut: VertexCutResult::from_sink(g, members(mask, n)),
            min_sink_weight: w,
        },
        None => RootedVcEnum {
            cut: VertexCutResult::no_cut(),
            min_sink_weight: 0,
        },
    })
}

/// Global vertex connectivity as the minimum split-graph cut over ordered
/// pairs `(s, t)` with `t ∉ N⁺(s)`; `NoCutExists` if every ordered pair is
/// adjacent.
pub fn exact_global_vc(g: &DiGraph) -> Result<VertexCutResult, AlgoError> {
    check(g, 0, PAIRWISE_MAX_N)?;
    let weights = g.weights_or_unit();
    let mut best = VertexCutResult::no_cut();
    for s in 0..g.n() {
        let split = g.split_rooted(&weights, s);
        let mut net = FlowNetwork::new(&split.base);
        for t in (0..g.n()).filter(|&t| t != s && !g.has_edge(s, t)) {
            let cut = split_cut(g, &mut net, &split, s, t);
            if cut.value < best.value {
                best = cut;
            }
        }
    }
    Ok(best)
}
