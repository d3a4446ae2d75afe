//! Runs one connectivity computation and assembles its report.

use std::time::Instant;

use anyhow::{bail, Result};
use dconn::certificate::{check_edge_cut, check_vertex_cut};
use dconn::oracle::{exact_global_ec_pairs, exact_global_vc, exact_rooted_ec_flows, exact_rooted_vc_flows};
use dconn::{
    global_edge_connectivity, global_vertex_connectivity, rooted_edge_connectivity,
    rooted_vertex_connectivity_apx, rooted_vertex_connectivity_exact, Config, DiGraph,
    EdgeCutResult, VcKind, VcMode, VertexCutResult, Work,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    RootedEc,
    GlobalEc,
    RootedVc,
    GlobalVc,
    Oracle,
}

/// The quantity an oracle run computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    RootedEc,
    GlobalEc,
    RootedVc,
    GlobalVc,
}

impl Target {
    fn is_rooted(self) -> bool {
        matches!(self, Target::RootedEc | Target::RootedVc)
    }
}

/// Validated run settings.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    pub target: Target,
    pub root: Option<usize>,
    pub eps: Option<f64>,
    pub exact: bool,
    pub seed: u64,
    pub reps: Option<usize>,
}

impl RunConfig {
    /// Checks the flag combination against the mode and the graph.
    pub fn validate(&self, g: &DiGraph) -> Result<()> {
        let target = self.effective_target();
        if target.is_rooted() {
            match self.root {
                None => bail!("--root is required for rooted modes"),
                Some(r) if r >= g.n() => bail!("root {r} out of range for {} vertices", g.n()),
                _ => {}
            }
        }
        let vc = matches!(self.mode, Mode::RootedVc | Mode::GlobalVc);
        if vc && !self.exact && self.eps.is_none() {
            bail!("--eps is required for vertex connectivity unless --exact is set");
        }
        if let Some(eps) = self.eps {
            if !(eps > 0.0 && eps <= 1.0) {
                bail!("eps {eps} not in (0, 1]");
            }
        }
        if self.reps == Some(0) {
            bail!("--reps must be at least 1");
        }
        if g.n() < 2 {
            bail!("graph needs at least 2 vertices");
        }
        Ok(())
    }

    fn effective_target(&self) -> Target {
        match self.mode {
            Mode::RootedEc => Target::RootedEc,
            Mode::GlobalEc => Target::GlobalEc,
            Mode::RootedVc => Target::RootedVc,
            Mode::GlobalVc => Target::GlobalVc,
            Mode::Oracle => self.target,
        }
    }

    fn library_config(&self) -> Config {
        Config {
            repetitions: self.reps,
            ..Config::with_seed(self.seed)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Certificate {
    Edge {
        sink: Vec<usize>,
        cut_edges: Vec<[u64; 3]>,
    },
    Vertex {
        sink: Vec<usize>,
        separator: Vec<usize>,
    },
    None {},
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_target: Option<Target>,
    /// `null` when no cut exists.
    pub value: Option<u64>,
    /// `n − 1` for unit-weight graphs without any cut.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conventional_value: Option<u64>,
    pub kind: &'static str,
    pub certificate: Certificate,
    pub root: Option<usize>,
    pub seed: u64,
    pub eps: Option<f64>,
    pub exact: bool,
    /// Repetitions per bucket; `null` for oracle runs.
    pub repetitions: Option<usize>,
    pub work: Work,
    pub wall_time_ms: f64,
}

/// Raised when a computed certificate fails the independent checker.
#[derive(Debug)]
pub struct InvariantViolation(pub String);

impl std::fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "certificate rejected: {}", self.0)
    }
}

impl std::error::Error for InvariantViolation {}

enum Outcome {
    Edge(EdgeCutResult),
    Vertex(VertexCutResult),
}

pub fn run(cfg: &RunConfig, g: &DiGraph) -> Result<Report> {
    cfg.validate(g)?;
    let lib = cfg.library_config();
    let mut work = Work::new();
    let start = Instant::now();
    let target = cfg.effective_target();
    let root = target.is_rooted().then(|| cfg.root.expect("validated"));
    let outcome = match (cfg.mode, target) {
        (Mode::Oracle, Target::RootedEc) => Outcome::Edge(exact_rooted_ec_flows(g, root.unwrap())?),
        (Mode::Oracle, Target::GlobalEc) => Outcome::Edge(exact_global_ec_pairs(g)?),
        (Mode::Oracle, Target::RootedVc) => Outcome::Vertex(exact_rooted_vc_flows(g, root.unwrap())?),
        (Mode::Oracle, Target::GlobalVc) => Outcome::Vertex(exact_global_vc(g)?),
        (_, Target::RootedEc) => Outcome::Edge(rooted_edge_connectivity(g, root.unwrap(), &lib, &mut work)?),
        (_, Target::GlobalEc) => Outcome::Edge(global_edge_connectivity(g, &lib, &mut work)?),
        (_, Target::RootedVc) => Outcome::Vertex(if cfg.exact {
            rooted_vertex_connectivity_exact(g, root.unwrap(), &lib, &mut work)?
        } else {
            rooted_vertex_connectivity_apx(g, root.unwrap(), cfg.eps.expect("validated"), &lib, &mut work)?
        }),
        (_, Target::GlobalVc) => {
            let mode = if cfg.exact {
                VcMode::Exact
            } else {
                VcMode::Approx(cfg.eps.expect("validated"))
            };
            Outcome::Vertex(global_vertex_connectivity(g, mode, &lib, &mut work)?)
        }
    };
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;

    let (value, conventional_value, kind, certificate) = match outcome {
        Outcome::Edge(cut) => {
            check_edge_cut(g, &cut, root).map_err(|e| InvariantViolation(e.to_string()))?;
            let cut_edges = cut
                .cut_edges
                .iter()
                .map(|e| [e.tail as u64, e.head as u64, e.cap])
                .collect();
            (
                Some(cut.value),
                None,
                "cut",
                Certificate::Edge {
                    sink: cut.sink_side,
                    cut_edges,
                },
            )
        }
        Outcome::Vertex(cut) if cut.kind == VcKind::Cut => {
            check_vertex_cut(g, &cut, root).map_err(|e| InvariantViolation(e.to_string()))?;
            (
                Some(cut.value),
                None,
                "cut",
                Certificate::Vertex {
                    sink: cut.sink_component,
                    separator: cut.separator,
                },
            )
        }
        Outcome::Vertex(cut) => (None, cut.reported_value(g), "no-cut-exists", Certificate::None {}),
    };

    Ok(Report {
        mode: cfg.mode,
        oracle_target: (cfg.mode == Mode::Oracle).then_some(cfg.target),
        value,
        conventional_value,
        kind,
        certificate,
        root,
        seed: cfg.seed,
        eps: cfg.eps,
        exact: cfg.exact,
        repetitions: (cfg.mode != Mode::Oracle).then(|| lib.repetitions(g.n())),
        work,
        wall_time_ms,
    })
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let value = r.value.map_or_else(|| "none".to_string(), |v| v.to_string());
    let mode = clap::ValueEnum::to_possible_value(&r.mode).expect("no skipped variants");
    out.push_str(&format!("mode        {}\n", mode.get_name()));
    out.push_str(&format!("value       {value}\n"));
    if let Some(c) = r.conventional_value {
        out.push_str(&format!("convention  {c}\n"));
    }
    out.push_str(&format!("kind        {}\n", r.kind));
    match &r.certificate {
        Certificate::Edge { sink, cut_edges } => {
            out.push_str(&format!("sink        {sink:?}\n"));
            out.push_str(&format!("cut edges   {cut_edges:?}\n"));
        }
        Certificate::Vertex { sink, separator } => {
            out.push_str(&format!("sink        {sink:?}\n"));
            out.push_str(&format!("separator   {separator:?}\n"));
        }
        Certificate::None {} => {}
    }
    out.push_str(&format!(
        "work        {} edge scans, {} flow calls\n",
        r.work.edge_scans, r.work.flow_calls
    ));
    out.push_str(&format!("time        {:.3} ms\n", r.wall_time_ms));
    out
}
