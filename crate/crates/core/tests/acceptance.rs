//! Acceptance gate: every criterion at its pinned tolerance, one line each.

mod common;

use std::time::Instant;

use dconn::certificate::{check_edge_cut, check_vertex_cut};
use dconn::edge_conn::rooted_sparsify_edges;
use dconn::generate::{generate, Family, Shape};
use dconn::maxflow::min_st_cut;
use dconn::oracle::{
    exact_global_ec_pairs, exact_global_vc, exact_rooted_ec_enum, exact_rooted_vc_enum,
    exact_rooted_vc_flows,
};
use dconn::vertex_conn::{local_edge_cut, vertex_sparsify, LocalCutParams};
use dconn::{
    global_edge_connectivity, global_vertex_connectivity, rooted_edge_connectivity,
    rooted_vertex_connectivity_apx, rooted_vertex_connectivity_exact, Config, DiGraph, VcKind,
    VcMode, Work,
};
use rand::Rng;

use common::{fit_exponent, random_digraph, rng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn c1_rooted_edge() -> Outcome {
    let start = Instant::now();
    let mut matches = 0;
    let mut invalid = 0;
    for trial in 0..1000u64 {
        let mut rng = rng(10_000 + trial);
        let n = rng.gen_range(2..=12);
        let u = rng.gen_range(1..=2);
        let g = random_digraph(&mut rng, n, u);
        let r = rng.gen_range(0..n);
        let oracle = exact_rooted_ec_enum(&g, r).unwrap().cut.value;
        let got = rooted_edge_connectivity(&g, r, &Config::with_seed(trial), &mut Work::new()).unwrap();
        if check_edge_cut(&g, &got, Some(r)).is_err() || got.value < oracle {
            invalid += 1;
        }
        if got.value == oracle {
            matches += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        matches >= 995 && invalid == 0 && secs < 120.0,
        format!("{matches}/1000 match (need 995), {invalid} invalid, {secs:.1}s (limit 120s)"),
    )
}

fn unit_vc_instance(seed: u64) -> (DiGraph, usize) {
    let mut rng = rng(seed);
    let n = rng.gen_range(3..=10);
    let g = random_digraph(&mut rng, n, 1);
    let r = rng.gen_range(0..n);
    (g, r)
}

fn c2_rooted_vertex_exact() -> Outcome {
    let mut matches = 0;
    let mut invalid = 0;
    for trial in 0..300u64 {
        let (g, r) = unit_vc_instance(20_000 + trial);
        let oracle = exact_rooted_vc_flows(&g, r).unwrap();
        let got = rooted_vertex_connectivity_exact(&g, r, &Config::with_seed(trial), &mut Work::new()).unwrap();
        if got.is_cut() && check_vertex_cut(&g, &got, Some(r)).is_err() {
            invalid += 1;
        }
        if got.kind == oracle.kind && got.value == oracle.value {
            matches += 1;
        }
    }
    outcome(
        matches >= 297 && invalid == 0,
        format!("{matches}/300 match (need 297), {invalid} invalid"),
    )
}

fn c3_approximation() -> Outcome {
    let mut within = 0;
    let mut below = 0;
    for trial in 0..500u64 {
        let (g, r) = unit_vc_instance(30_000 + trial);
        let kappa = exact_rooted_vc_flows(&g, r).unwrap();
        let got = rooted_vertex_connectivity_apx(&g, r, 0.5, &Config::with_seed(trial), &mut Work::new()).unwrap();
        if kappa.kind == VcKind::NoCutExists {
            if got.kind == VcKind::NoCutExists {
                within += 1;
            } else {
                below += 1;
            }
            continue;
        }
        let valid = check_vertex_cut(&g, &got, Some(r)).is_ok();
        if !valid || got.value < kappa.value {
            below += 1;
        }
        let upper = (1.5 * kappa.value as f64).ceil() as u64;
        if valid && got.value >= kappa.value && got.value <= upper {
            within += 1;
        }
    }
    outcome(
        within >= 495 && below == 0,
        format!("{within}/500 within [κ, ⌈1.5κ⌉] (need 495), {below} below κ or invalid"),
    )
}

fn c4_small_sink_law() -> Outcome {
    let mut holds = 0;
    for trial in 0..2000u64 {
        let mut rng = rng(40_000 + trial);
        let n = rng.gen_range(2..=12);
        let u = rng.gen_range(1..=3);
        let g = random_digraph(&mut rng, n, u);
        let r = rng.gen_range(0..n);
        let oracle = exact_rooted_ec_enum(&g, r).unwrap();
        let k = oracle.min_sink_size as u64;
        if k == 1 || oracle.cut.value < g.cap_bound() * k {
            holds += 1;
        }
    }
    outcome(holds == 2000, format!("{holds}/2000 instances satisfy k = 1 or λ < Uk"))
}

fn c5_sparsification() -> Outcome {
    let mut edge_cases = 0;
    let mut edge_ok = 0;
    for trial in 0..400u64 {
        let mut rng = rng(50_000 + trial);
        let n = rng.gen_range(3..=12);
        let u = rng.gen_range(1..=3);
        let g = random_digraph(&mut rng, n, u);
        let r = rng.gen_range(0..n);
        let oracle = exact_rooted_ec_enum(&g, r).unwrap();
        if oracle.min_sink_size < 2 {
            continue;
        }
        for k in oracle.min_sink_size..=n {
            edge_cases += 1;
            let c = rooted_sparsify_edges(&g, r, k as u64, &mut Work::new()).unwrap();
            let after = if c.graph.n() < 2 {
                u64::MAX
            } else {
                exact_rooted_ec_enum(&c.graph, c.root).unwrap().cut.value
            };
            if after == oracle.cut.value {
                edge_ok += 1;
            }
        }
    }
    let mut vertex_cases = 0;
    let mut vertex_ok = 0;
    for trial in 0..400u64 {
        let mut rng = rng(51_000 + trial);
        let n = rng.gen_range(3..=10);
        let g = random_digraph(&mut rng, n, 1);
        let g = if trial % 2 == 0 { common::with_random_weights(&mut rng, g, 3) } else { g };
        let r = rng.gen_range(0..n);
        let oracle = exact_rooted_vc_enum(&g, r).unwrap();
        if oracle.cut.kind != VcKind::Cut {
            continue;
        }
        let kappa = oracle.cut.value;
        for eps in [1.0, 0.5, 0.25] {
            for k in oracle.min_sink_weight..=g.total_weight() {
                if kappa as f64 > k as f64 / eps {
                    continue;
                }
                vertex_cases += 1;
                let h = vertex_sparsify(&g, r, k, eps, &mut Work::new()).unwrap();
                let after = exact_rooted_vc_enum(&h, r).unwrap().cut.value;
                if after == kappa {
                    vertex_ok += 1;
                }
            }
        }
    }
    outcome(
        edge_ok == edge_cases && vertex_ok == vertex_cases && edge_cases > 0 && vertex_cases > 0,
        format!("edge {edge_ok}/{edge_cases}, vertex {vertex_ok}/{vertex_cases} preserved exactly"),
    )
}

/// Root 0, a bidirected sink clique `T` entered by `nu_star` unit edges,
/// and a dense remainder. Returns the graph, a sink vertex and `T`.
fn local_cut_instance(seed: u64) -> (DiGraph, usize, u64) {
    let mut rng = rng(seed);
    let n = 40;
    let size = rng.gen_range(2..=4);
    let nu_star = rng.gen_range(1..=4);
    let sink: Vec<usize> = (1..=size).collect();
    let mut edges = Vec::new();
    for &a in &sink {
        for &b in &sink {
            if a != b {
                edges.push((a, b, 1));
            }
        }
        for v in size + 1..n {
            if rng.gen_bool(0.3) {
                edges.push((a, v, 1));
            }
        }
    }
    for u in std::iter::once(0).chain(size + 1..n) {
        for v in std::iter::once(0).chain(size + 1..n) {
            if u != v && rng.gen_bool(0.5) {
                edges.push((u, v, 1));
            }
        }
    }
    let mut crossing = std::collections::HashSet::new();
    while crossing.len() < nu_star {
        let u = if rng.gen_bool(0.3) { 0 } else { rng.gen_range(size + 1..n) };
        let v = sink[rng.gen_range(0..size)];
        crossing.insert((u, v));
    }
    edges.extend(crossing.into_iter().map(|(u, v)| (u, v, 1)));
    let t = sink[rng.gen_range(0..size)];
    (DiGraph::new(n, edges).unwrap(), t, nu_star as u64)
}

fn c6_local_cut() -> Outcome {
    let eps = 0.5;
    let mut successes = 0;
    let mut violations = 0;
    let mut used = 0;
    for trial in 0..500u64 {
        let (g, t, _) = local_cut_instance(60_000 + trial);
        let exact = min_st_cut(&g, 0, t, None, &mut Work::new()).unwrap();
        let nu_star = exact.value;
        let in_volume: u64 = exact
            .sink_side
            .iter()
            .flat_map(|&v| g.in_edges(v))
            .map(|e| e.cap)
            .sum();
        let params = LocalCutParams {
            seed: trial,
            ..LocalCutParams::new(nu_star + 1, in_volume, eps)
        };
        used += 1;
        let report = local_edge_cut(&g, 0, t, &params, &mut Work::new()).unwrap();
        if report.max_traversed > params.budget() {
            violations += 1;
        }
        if let Some(cut) = report.cut() {
            let within = cut.value as f64 <= (1.0 + eps) * params.nu as f64;
            if check_edge_cut(&g, cut, Some(0)).is_err() || !cut.sink_side.contains(&t) || !within {
                violations += 1;
            } else if cut.value as f64 <= (1.0 + eps) * nu_star as f64 {
                successes += 1;
            }
        }
    }
    outcome(
        successes >= 200 && violations == 0,
        format!("{successes}/{used} successes (need 200), {violations} invalid or over budget"),
    )
}

fn c7_work_scaling() -> Outcome {
    let sizes = [64usize, 128, 256, 512];
    let mut ours = Vec::new();
    let mut naive = Vec::new();
    let mut agree = true;
    for &n in &sizes {
        let family = Family::PlantedSink {
            sink: n / 2,
            cut: (n / 8) as u64,
            p: 0.9,
            max_cap: 1,
        };
        let g = generate(&family, n, 7).unwrap();
        let mut work = Work::new();
        let got = rooted_edge_connectivity(&g, 0, &Config::with_seed(7), &mut work).unwrap();
        let mut base_work = Work::new();
        let base = (1..n)
            .map(|t| min_st_cut(&g, 0, t, None, &mut base_work).unwrap().value)
            .min()
            .unwrap();
        agree &= got.value == base;
        ours.push(work.edge_scans as f64);
        naive.push(base_work.edge_scans as f64);
    }
    let xs: Vec<f64> = sizes.iter().map(|&n| n as f64).collect();
    let e_ours = fit_exponent(&xs, &ours);
    let e_naive = fit_exponent(&xs, &naive);
    outcome(
        e_ours <= 2.4 && e_naive >= 2.7 && agree,
        format!(
            "exponent {e_ours:.2} (limit 2.4) vs naive {e_naive:.2} (need 2.7), values agree: {agree}; scans {:?} vs {:?}",
            ours.iter().map(|&x| x as u64).collect::<Vec<_>>(),
            naive.iter().map(|&x| x as u64).collect::<Vec<_>>()
        ),
    )
}

fn c8_global() -> Outcome {
    let mut ec = 0;
    let mut invalid = 0;
    for trial in 0..300u64 {
        let mut rng = rng(80_000 + trial);
        let n = rng.gen_range(2..=10);
        let u = rng.gen_range(1..=2);
        let g = random_digraph(&mut rng, n, u);
        let oracle = exact_global_ec_pairs(&g).unwrap().value;
        let got = global_edge_connectivity(&g, &Config::with_seed(trial), &mut Work::new()).unwrap();
        invalid += check_edge_cut(&g, &got, None).is_err() as usize;
        ec += (got.value == oracle) as usize;
    }
    let mut vc = 0;
    for trial in 0..200u64 {
        let mut rng = rng(81_000 + trial);
        let n = rng.gen_range(2..=10);
        let g = random_digraph(&mut rng, n, 1);
        let oracle = exact_global_vc(&g).unwrap();
        let got = global_vertex_connectivity(&g, VcMode::Exact, &Config::with_seed(trial), &mut Work::new()).unwrap();
        if got.is_cut() && check_vertex_cut(&g, &got, None).is_err() {
            invalid += 1;
        }
        vc += (got.kind == oracle.kind && got.value == oracle.value) as usize;
    }
    let dag = DiGraph::new(5, [(0, 1, 1), (1, 2, 1), (0, 3, 1), (3, 4, 1), (2, 4, 1)]).unwrap();
    let complete = generate(&Family::Bidirected { shape: Shape::Complete, p: 1.0 }, 6, 0).unwrap();
    let cfg = Config::default();
    let edge_cases = global_edge_connectivity(&dag, &cfg, &mut Work::new()).unwrap().value == 0
        && global_vertex_connectivity(&dag, VcMode::Exact, &cfg, &mut Work::new()).unwrap().value == 0
        && global_vertex_connectivity(&complete, VcMode::Exact, &cfg, &mut Work::new()).unwrap().kind
            == VcKind::NoCutExists;
    outcome(
        ec >= 297 && vc >= 198 && invalid == 0 && edge_cases,
        format!("edge {ec}/300 (need 297), vertex {vc}/200 (need 198), {invalid} invalid, edge cases ok: {edge_cases}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 rooted edge connectivity vs enumeration", c1_rooted_edge),
        ("2 exact rooted vertex connectivity vs flows", c2_rooted_vertex_exact),
        ("3 (1+ε) vertex approximation, ε = 0.5", c3_approximation),
        ("4 small-sink law", c4_small_sink_law),
        ("5 sparsification exactness", c5_sparsification),
        ("6 local cut success rate", c6_local_cut),
        ("7 counted-work scaling", c7_work_scaling),
        ("8 global reductions", c8_global),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {name}: {status} ({}; {:.1}s)",
            o.detail,
            start.elapsed().as_secs_f64()
        );
        failed += !o.pass as usize;
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
