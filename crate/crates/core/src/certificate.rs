//! Independent certificate checker for edge and vertex cuts.
//!
//! Recomputes everything from the graph; shares no code with the
//! algorithms whose output it checks.

use thiserror::Error;

use crate::graph::DiGraph;
use crate::maxflow::{CutKind, EdgeCutResult};
use crate::vertex_conn::{VcKind, VertexCutResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("certificate has no cut (kind is not a certified cut)")]
    NotACut,
    #[error("sink side is empty")]
    EmptySink,
    #[error("sink side covers every vertex")]
    FullSink,
    #[error("vertex {0} listed twice or out of range")]
    BadVertex(usize),
    #[error("root {0} lies in the sink side or separator")]
    RootInside(usize),
    #[error("claimed value {claimed}, recomputed {actual}")]
    ValueMismatch { claimed: u64, actual: u64 },
    #[error("cut edge list does not match the edges entering the sink side")]
    EdgeMismatch,
    #[error("separator differs from the in-neighborhood of the sink component")]
    SeparatorMismatch,
    #[error("no vertex remains outside sink component and separator")]
    NothingOutside,
}

fn membership(g: &DiGraph, set: &[usize]) -> Result<Vec<bool>, CertError> {
    let mut inside = vec![false; g.n()];
    for &v in set {
        if v >= g.n() || inside[v] {
            return Err(CertError::BadVertex(v));
        }
        inside[v] = true;
    }
    Ok(inside)
}

/// Checks an exact edge cut: nonempty proper sink side, root (if any)
/// outside it, cut edges exactly `δ⁻(T)` and value equal to their capacity.
pub fn check_edge_cut(g: &DiGraph, cut: &EdgeCutResult, root: Option<usize>) -> Result<(), CertError> {
    if cut.kind != CutKind::Exact {
        return Err(CertError::NotACut);
    }
    let sink = membership(g, &cut.sink_side)?;
    if cut.sink_side.is_empty() {
        return Err(CertError::EmptySink);
    }
    if cut.sink_side.len() == g.n() {
        return Err(CertError::FullSink);
    }
    if let Some(r) = root {
        if sink[r] {
            return Err(CertError::RootInside(r));
        }
    }
    let mut entering: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| !sink[e.tail] && sink[e.head])
        .copied()
        .collect();
    let actual: u64 = entering.iter().map(|e| e.cap).sum();
    let mut listed = cut.cut_edges.clone();
    entering.sort_unstable();
    listed.sort_unstable();
    if entering != listed {
        return Err(CertError::EdgeMismatch);
    }
    if actual != cut.value {
        return Err(CertError::ValueMismatch {
            claimed: cut.value,
            actual,
        });
    }
    Ok(())
}

/// Checks a vertex cut: nonempty sink component `T`, separator equal to
/// `N⁻(T) \ T`, some vertex outside both, root (if any) outside both, and
/// value equal to the separator weight.
pub fn check_vertex_cut(
    g: &DiGraph,
    cut: &VertexCutResult,
    root: Option<usize>,
) -> Result<(), CertError> {
    if cut.kind != VcKind::Cut {
        return Err(CertError::NotACut);
    }
    let sink = membership(g, &cut.sink_component)?;
    let sep = membership(g, &cut.separator)?;
    if cut.sink_component.is_empty() {
        return Err(CertError::EmptySink);
    }
    if let Some(r) = root {
        if sink[r] || sep[r] {
            return Err(CertError::RootInside(r));
        }
    }
    let mut in_nbrs = vec![false; g.n()];
    for e in g.edges() {
        if sink[e.head] && !sink[e.tail] {
            in_nbrs[e.tail] = true;
        }
    }
    if in_nbrs != sep {
        return Err(CertError::SeparatorMismatch);
    }
    if (0..g.n()).all(|v| sink[v] || sep[v]) {
        return Err(CertError::NothingOutside);
    }
    let actual: u64 = cut.separator.iter().map(|&v| g.weight(v)).sum();
    if actual != cut.value {
        return Err(CertError::ValueMismatch {
            claimed: cut.value,
            actual,
        });
    }
    Ok(())
}
