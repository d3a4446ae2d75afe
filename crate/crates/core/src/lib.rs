//! Connectivity of directed graphs: rooted and global edge connectivity,
//! rooted and global vertex connectivity, with certificates that can be
//! checked independently.

pub mod certificate;
pub mod config;
pub mod edge_conn;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod maxflow;
pub mod oracle;
pub mod vertex_conn;
pub mod work;

pub use certificate::{check_edge_cut, check_vertex_cut, CertError};
pub use config::Config;
pub use edge_conn::{global_edge_connectivity, rooted_edge_connectivity};
pub use error::{AlgoError, GraphError};
pub use graph::{DiGraph, Edge, VertexWeights};
pub use maxflow::{CutKind, EdgeCutResult};
pub use vertex_conn::{
    global_vertex_connectivity, rooted_vertex_connectivity_apx, rooted_vertex_connectivity_exact,
    VcKind, VcMode, VertexCutResult,
};
pub use work::Work;
