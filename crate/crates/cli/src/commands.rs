use crate::{Command, GenerateCmd};
use copwin_core::bounds;
use copwin_core::game::{
    self, simulate_with_cap, GreedyRobber, OptimalRobberPolicy, RandomRobber, RobberPolicy,
    SolveOptions, VariantSpec, Verdict,
};
use copwin_core::gen::{self, RbdsInstance, TwinMode};
use copwin_core::graph::{io, Graph};
use copwin_core::kernel::{self, KernelResult};
use copwin_core::params::{self, CoverCertificate, CoverKind, VcMode};
use copwin_core::{BoundError, GameError, GenError, GraphError, KernelError, ParamError};
use std::path::{Path, PathBuf};
use std::time::Instant;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Failure {
        fail(4, e.to_string())
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Failure {
        let code = match &e {
            GameError::Budget(..) => 3,
            GameError::Disconnected { .. } | GameError::MalformedState(_) => 4,
            _ => 2,
        };
        fail(code, e.to_string())
    }
}

impl From<ParamError> for Failure {
    fn from(e: ParamError) -> Failure {
        let code = match &e {
            ParamError::Budget(_) => 3,
            ParamError::BadCertificate(..) => 4,
            _ => 2,
        };
        fail(code, e.to_string())
    }
}

impl From<KernelError> for Failure {
    fn from(e: KernelError) -> Failure {
        match e {
            KernelError::Param(p) => p.into(),
            KernelError::Game(g) => g.into(),
            other => fail(2, other.to_string()),
        }
    }
}

impl From<BoundError> for Failure {
    fn from(e: BoundError) -> Failure {
        match e {
            BoundError::Param(p) => p.into(),
            other => fail(2, other.to_string()),
        }
    }
}

impl From<GenError> for Failure {
    fn from(e: GenError) -> Failure {
        fail(2, e.to_string())
    }
}

fn env_budget(var: &str, default: usize) -> usize {
    std::env::var(var).ok().and_then(|v| v.parse().ok()).unwrap_or(default)
}

fn solve_options(flag: Option<usize>) -> SolveOptions {
    let state_budget = flag.unwrap_or_else(|| env_budget("COPWIN_STATE_BUDGET", 5_000_000));
    SolveOptions { state_budget }
}

fn node_budget(flag: Option<usize>) -> usize {
    flag.unwrap_or_else(|| env_budget("COPWIN_NODE_BUDGET", 20_000_000))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(io::load_edge_list(path)?)
}

fn load_solver_graph(path: &Path) -> Result<Graph, Failure> {
    let g = load_graph(path)?;
    if !g.is_solver_ready() {
        return Err(fail(
            4,
            format!(
                "graph {} is not {}; solve components separately",
                path.display(),
                if g.is_directed() { "strongly connected" } else { "connected" }
            ),
        ));
    }
    Ok(g)
}

fn load_spec(path: &Option<PathBuf>, k: Option<usize>) -> Result<VariantSpec, Failure> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| fail(4, e.to_string()))?;
            game::spec::parse_spec(&text, k).map_err(|e| fail(4, e.to_string()))
        }
        None => {
            let k = k.ok_or_else(|| fail(2, "--k is required without --spec"))?;
            Ok(VariantSpec::classic(k))
        }
    }
}

fn load_cover(
    g: &Graph,
    kind: CoverKind,
    path: &Option<PathBuf>,
    budget: usize,
) -> Result<CoverCertificate, Failure> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| fail(4, e.to_string()))?;
            let set = io::parse_cover(&text)?;
            Ok(CoverCertificate::from_set(g, kind, set)?)
        }
        None => {
            let target = if g.is_directed() {
                // Directed pipeline covers the underlying graph.
                underlying(g)
            } else {
                g.clone()
            };
            let cert = match kind {
                CoverKind::Vc => params::vertex_cover_budgeted(&target, VcMode::Exact, budget)?,
                CoverKind::Cvd => params::deletion_search(&target, CoverKind::Cvd, budget)?,
                CoverKind::Dts => params::deletion_search(&target, CoverKind::Dts, budget)?,
            };
            Ok(cert)
        }
    }
}

fn underlying(g: &Graph) -> Graph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::new(g.n(), &edges, false).expect("underlying graph")
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| fail(4, e.to_string())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

pub fn dispatch(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Solve { graph, spec, k, state_budget } => {
            let g = load_solver_graph(&graph)?;
            let spec = load_spec(&spec, k)?;
            let sol = game::solve_with(&g, &spec, &solve_options(state_budget))?;
            println!("n {} m {} k {}", g.n(), g.m(), spec.k());
            println!("states {}", sol.state_count());
            match sol.verdict {
                Verdict::CopWin => {
                    let placement: Vec<String> = sol
                        .placement
                        .as_ref()
                        .unwrap()
                        .iter()
                        .map(|v| v.to_string())
                        .collect();
                    println!("verdict CopWin");
                    println!("placement {}", placement.join(","));
                    Ok(0)
                }
                Verdict::RobberWin => {
                    println!("verdict RobberWin");
                    Ok(1)
                }
            }
        }
        Command::Copnumber { graph, spec, upper, state_budget } => {
            let g = load_solver_graph(&graph)?;
            let template = load_spec(&spec, Some(1))?;
            let opts = solve_options(state_budget);
            let upper = match upper {
                Some(u) => Some(u),
                // A cheap parameter bound narrows the sweep when available.
                None if !g.is_directed() && g.n() <= 128 => {
                    params::vertex_cover(&g, VcMode::Approx2)
                        .ok()
                        .map(|c| default_upper(&template, c.t(), g.n()))
                }
                None => None,
            };
            let k = game::cop_number_with(&g, &template, &opts, upper)?;
            println!("copnumber {k}");
            Ok(0)
        }
        Command::Kernelize { param, graph, k, cover, spec, out, trace, node_budget: nb } => {
            let g = load_graph(&graph)?;
            let budget = node_budget(nb);
            let kr = run_kernelize(&param, &g, k, &cover, &spec, budget)?;
            println!("param {} k {}", kr.param, kr.k);
            println!("original n {} m {}", g.n(), g.m());
            println!("reduced n {} m {}", kr.reduced.n(), kr.reduced.m());
            if let Some(t) = &trace {
                std::fs::write(t, kr.trace_text()).map_err(|e| fail(4, e.to_string()))?;
            }
            match kr.verdict {
                Some(v) => {
                    println!("verdict {}", if v == Verdict::CopWin { "Yes" } else { "No" });
                    Ok(if v == Verdict::CopWin { 0 } else { 1 })
                }
                None => {
                    write_or_print(&out, &io::format_edge_list(&kr.reduced))?;
                    Ok(0)
                }
            }
        }
        Command::Bound { graph, param, cover, node_budget: nb } => {
            let g = load_graph(&graph)?;
            if g.is_directed() {
                return Err(fail(2, "bounds are computed on undirected graphs"));
            }
            let budget = node_budget(nb);
            match param.as_str() {
                "vc" => {
                    let cert = load_cover(&g, CoverKind::Vc, &cover, budget)?;
                    let report = bounds::vcn_third_plan(&g, &cert)?;
                    print!("{}", report.render());
                    println!("classic <= {}", report.bound);
                    let table = bounds::variant_bound_table(&g, &cert)?;
                    print!("{}", table.render());
                    Ok(0)
                }
                "cvd" | "dts" => {
                    let kind = if param == "cvd" { CoverKind::Cvd } else { CoverKind::Dts };
                    let cert = load_cover(&g, kind, &cover, budget)?;
                    let report = bounds::bound_by_decomposition(&g, &cert.set, 1)?;
                    print!("{}", report.render());
                    println!("classic <= {}", report.bound);
                    Ok(0)
                }
                "nd" => {
                    let part = params::nd_partition(&g);
                    println!("param nd w {}", part.width());
                    println!("classic <= {}", part.width());
                    Ok(0)
                }
                other => Err(fail(2, format!("unknown bound parameter `{other}`"))),
            }
        }
        Command::Generate(gen_cmd) => generate(gen_cmd),
        Command::Simulate { graph, spec, k, robber, seed, max_rounds, out, state_budget } => {
            let g = load_solver_graph(&graph)?;
            let spec = load_spec(&spec, k)?;
            let sol = game::solve_with(&g, &spec, &solve_options(state_budget))?;
            if sol.verdict != Verdict::CopWin {
                println!("verdict RobberWin");
                return Ok(1);
            }
            let mut cop = game::extract_strategy(&sol)?;
            let mut robber_policy: Box<dyn RobberPolicy> = match robber.as_str() {
                "optimal" => Box::new(OptimalRobberPolicy { sol: &sol }),
                "greedy" => Box::new(GreedyRobber::new()),
                "random" => Box::new(RandomRobber::seeded(seed)),
                other => return Err(fail(2, format!("unknown robber policy `{other}`"))),
            };
            let cap = max_rounds
                .unwrap_or_else(|| game::simulate::state_space_size(g.n(), &spec) + 1);
            let trace = simulate_with_cap(&g, &spec, &mut cop, robber_policy.as_mut(), cap)?;
            write_or_print(&out, &trace.render())?;
            Ok(0)
        }
        Command::Bench { corpus, k, lift, out, state_budget } => bench(corpus, k, lift, out, state_budget),
    }
}

fn default_upper(template: &VariantSpec, approx_t: usize, n: usize) -> usize {
    use copwin_core::game::{Activity, CaptureMode};
    let t = approx_t;
    let bound = if template.robber.attacking
        || template.cops.first().is_some_and(|c| c.activity == Activity::Lazy)
    {
        t.div_ceil(2) + 1
    } else if template.capture == CaptureMode::Surround
        || template.robber.speed > 1
        || template.cops.first().is_some_and(|c| c.activity == Activity::Active)
    {
        t
    } else {
        t.div_ceil(3) + 1
    };
    bound.clamp(1, n)
}

fn run_kernelize(
    param: &str,
    g: &Graph,
    k: Option<usize>,
    cover: &Option<PathBuf>,
    spec: &Option<PathBuf>,
    budget: usize,
) -> Result<KernelResult, Failure> {
    let need_k = || k.ok_or_else(|| fail(2, "--k is required for this pipeline"));
    match param {
        "vc" => {
            let cert = load_cover(g, CoverKind::Vc, cover, budget)?;
            Ok(kernel::kernelize_vcn(g, need_k()?, &cert)?)
        }
        "cvd" => {
            let cert = load_cover(g, CoverKind::Cvd, cover, budget)?;
            Ok(kernel::kernelize_cvd(g, need_k()?, &cert)?)
        }
        "dts" => {
            let cert = load_cover(g, CoverKind::Dts, cover, budget)?;
            Ok(kernel::kernelize_dts(g, need_k()?, &cert)?)
        }
        "nd" => Ok(kernel::kernelize_nd(g, need_k()?)?),
        "directed" => {
            let cert = load_cover(g, CoverKind::Vc, cover, budget)?;
            Ok(kernel::kernelize_directed(g, need_k()?, &cert)?)
        }
        "general" => {
            let spec = load_spec(spec, k)?;
            let cert = load_cover(g, CoverKind::Vc, cover, budget)?;
            Ok(kernel::kernelize_generalized(g, &spec, &cert)?)
        }
        other => Err(fail(2, format!("unknown kernel parameter `{other}`"))),
    }
}

fn parse_rbds_file(path: &Path) -> Result<RbdsInstance, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| fail(4, e.to_string()))?;
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| fail(4, "empty instance file"))?;
    let mut it = header.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize, Failure> {
        tok.ok_or_else(|| fail(4, "short header"))?
            .parse()
            .map_err(|_| fail(4, "bad header field"))
    };
    let t = parse(it.next())?;
    let n = parse(it.next())?;
    let budget = parse(it.next())?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        edges.push((parse(it.next())?, parse(it.next())?));
    }
    Ok(RbdsInstance::new(t, n, edges, budget)?)
}

fn emit_graph_artifacts(g: &Graph, out: &Path) -> Result<(), Failure> {
    std::fs::write(out, io::format_edge_list(g)).map_err(|e| fail(4, e.to_string()))?;
    if let Some(labels) = io::format_labels(g) {
        std::fs::write(out.with_extension("labels"), labels)
            .map_err(|e| fail(4, e.to_string()))?;
    }
    Ok(())
}

fn generate(cmd: GenerateCmd) -> Result<u8, Failure> {
    match cmd {
        GenerateCmd::Hpqr { p, q, r, seed, out } => {
            let (g, cert) = gen::gen_hpqr(&gen::HpqrParams { p, q, r }, seed)?;
            emit_graph_artifacts(&g, &out)?;
            println!("n {} m {}", g.n(), g.m());
            println!(
                "girth_ok {} degrees_ok {} meets_paper_threshold {}",
                cert.girth_ok, cert.degrees_ok, cert.meets_paper_threshold
            );
            Ok(0)
        }
        GenerateCmd::RbdsReduction { inst, q_override, seed, out } => {
            let base = parse_rbds_file(&inst)?;
            let aug = gen::augment_rbds(&base);
            let output = gen::gen_rbds_reduction(&aug, aug.budget, q_override, seed)?;
            emit_graph_artifacts(&output.graph, &out)?;
            std::fs::write(out.with_extension("cover"), io::format_cover(&output.cover))
                .map_err(|e| fail(4, e.to_string()))?;
            println!("n {} m {} ell {}", output.graph.n(), output.graph.m(), output.ell);
            println!("below_threshold {}", output.below_threshold);
            Ok(0)
        }
        GenerateCmd::OrientedReduction { inst, q_override, seed, out } => {
            let base = parse_rbds_file(&inst)?;
            let aug = gen::augment_rbds(&base);
            let output = gen::gen_oriented_reduction(&aug, aug.budget, q_override, seed)?;
            emit_graph_artifacts(&output.graph, &out)?;
            std::fs::write(out.with_extension("cover"), io::format_cover(&output.cover))
                .map_err(|e| fail(4, e.to_string()))?;
            println!("n {} m {} ell {}", output.graph.n(), output.graph.m(), output.ell);
            println!("strongly_connected {}", output.graph.is_solver_ready());
            Ok(0)
        }
        GenerateCmd::Twins { graph, rounds, seed, mode, out } => {
            let g = load_graph(&graph)?;
            let mode = match mode.as_str() {
                "mixed" => TwinMode::Mixed,
                "false-only" => TwinMode::FalseOnly,
                other => return Err(fail(2, format!("unknown twin mode `{other}`"))),
            };
            let grown = gen::twin_augment(&g, rounds, seed, mode);
            emit_graph_artifacts(&grown, &out)?;
            println!("n {} m {}", grown.n(), grown.m());
            Ok(0)
        }
    }
}

fn bench(
    corpus: PathBuf,
    k: usize,
    lift: bool,
    out: Option<PathBuf>,
    state_budget: Option<usize>,
) -> Result<u8, Failure> {
    let opts = solve_options(state_budget);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&corpus)
        .map_err(|e| fail(2, format!("cannot read corpus {}: {e}", corpus.display())))?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "el"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(fail(2, format!("corpus {} holds no .el instances", corpus.display())));
    }
    let mut report = String::from("instance\tn\tm\tk\tdirect_ms\tkernel_ms\tkernel_n\tverdict\n");
    for file in &files {
        let g = load_solver_graph(file)?;
        if g.is_directed() {
            return Err(fail(2, "the benchmark compares undirected pipelines"));
        }
        let spec = VariantSpec::classic(k);
        let t0 = Instant::now();
        let direct = game::solve_with(&g, &spec, &opts)?.verdict;
        let direct_ms = t0.elapsed().as_secs_f64() * 1e3;

        // Kernel pipeline: sidecar cover if present (instance-supplied, not
        // timed), else an approximation (timed as part of preprocessing).
        let sidecar = file.with_extension("cover");
        let t1 = Instant::now();
        let cert = if sidecar.exists() {
            let set = io::parse_cover(
                &std::fs::read_to_string(&sidecar).map_err(|e| fail(4, e.to_string()))?,
            )?;
            CoverCertificate::from_set(&g, CoverKind::Vc, set)?
        } else {
            params::vertex_cover(&g, VcMode::Approx2)?
        };
        let kr = kernel::kernelize_vcn(&g, k, &cert)?;
        let kernel_verdict = match kr.verdict {
            Some(v) => v,
            None => {
                let ksol = game::solve_with(&kr.reduced, &spec, &opts)?;
                if lift && ksol.verdict == Verdict::CopWin && spec.k() >= 2 {
                    let mut lifted = kernel::lift_strategy(&g, &kr, &ksol)?;
                    let full = game::solve_with(&g, &spec, &opts)?;
                    let mut robber = OptimalRobberPolicy { sol: &full };
                    let trace = game::simulate(&g, &spec, &mut lifted, &mut robber)?;
                    if !trace.captured() {
                        return Err(fail(1, format!(
                            "lifted strategy failed to capture on {}",
                            file.display()
                        )));
                    }
                }
                ksol.verdict
            }
        };
        let kernel_ms = t1.elapsed().as_secs_f64() * 1e3;
        if direct != kernel_verdict {
            return Err(fail(
                1,
                format!(
                    "answer disagreement on {}: direct {:?} vs kernel {:?}",
                    file.display(),
                    direct,
                    kernel_verdict
                ),
            ));
        }
        let name = file.file_stem().unwrap_or_default().to_string_lossy();
        report.push_str(&format!(
            "{name}\t{}\t{}\t{k}\t{direct_ms:.3}\t{kernel_ms:.3}\t{}\t{}\n",
            g.n(),
            g.m(),
            kr.reduced.n(),
            match direct {
                Verdict::CopWin => "Yes",
                Verdict::RobberWin => "No",
            }
        ));
    }
    write_or_print(&out, &report)?;
    Ok(0)
}
