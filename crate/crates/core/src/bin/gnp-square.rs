use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gnp_square::coloring::{
    exact_chromatic_number, is_k_choosable, validate, Choosability, ChoosabilityCaps, Coloring, ListPolicy,
    ListSource, DEFAULT_CHROMATIC_CAP,
};
use gnp_square::graph::io::{format_edge_list, load_edge_list, parse_edge_list};
use gnp_square::graph::{sample_gnp, square, GnpParams, Graph};
use gnp_square::harness::{run_on_graph, run_sweep, write_sweep_outputs, SweepSpec, TrialConfig, TrialReport};
use gnp_square::verify::Claim;

#[derive(Parser)]
#[command(name = "gnp-square", version, about = "List coloring of squared sparse random graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample G(n, c/n) and write its edge list.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read an edge list and write the edge list of its square.
    Square {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the three-stage coloring on a graph file or a fresh sample.
    Color {
        #[command(flatten)]
        trial: TrialArgs,
        /// Write the coloring, one `v color` line per vertex.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Run structural checks, or validate a coloring file.
    Verify {
        #[command(flatten)]
        trial: TrialArgs,
        /// Coloring to validate against the square of the graph.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Exit with status 1 when any check fails.
        #[arg(long)]
        strict: bool,
    },
    /// Exact oracles for small graphs.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Run a grid of trials and write JSONL and CSV outputs.
    Sweep {
        /// Sweep specification (JSON); flags below override it.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        c: Vec<f64>,
        /// Seeds as a list `1,2,3` or a range `0..20`.
        #[arg(long)]
        seeds: Option<String>,
        #[arg(long, value_delimiter = ',')]
        epsilons: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        subset_trials: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Chromatic number of the graph in the file.
    Chi {
        #[arg(long = "in")]
        input: PathBuf,
        /// Color the square of the graph instead.
        #[arg(long)]
        square: bool,
        #[arg(long, default_value_t = DEFAULT_CHROMATIC_CAP)]
        cap: usize,
    },
    /// Whether the graph in the file is k-choosable.
    Choosable {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        square: bool,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Adaptive,
    FormulaQ,
    ExplicitK,
}

#[derive(Args)]
struct TrialArgs {
    /// Trial configuration (JSON); flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Base graph as an edge list instead of a fresh sample.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    policy: Option<PolicyArg>,
    #[arg(long)]
    k: Option<usize>,
    /// Draw random lists instead of a shared palette.
    #[arg(long)]
    random_lists: bool,
    #[arg(long)]
    palette: Option<usize>,
    #[arg(long)]
    list_seed: Option<u64>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    eps_cap: Option<f64>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    delta1: Option<usize>,
    /// Claim ids, comma separated, or `all`.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long)]
    subset_trials: Option<usize>,
    #[arg(long)]
    subset_seed: Option<u64>,
    #[arg(long)]
    chromatic_cap: Option<usize>,
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    timeout: Option<f64>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Invalid(String),
}

type CmdResult = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_claims(ids: &[String]) -> Result<Vec<Claim>, Failure> {
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(Claim::ALL);
            continue;
        }
        out.push(Claim::from_id(id).ok_or_else(|| {
            let known: Vec<&str> = Claim::ALL.iter().map(|c| c.id()).collect();
            usage(format!("unknown check `{id}`; known: {}", known.join(", ")))
        })?);
    }
    Ok(out)
}

fn parse_seeds(text: &str) -> Result<Vec<u64>, Failure> {
    if let Some((a, b)) = text.split_once("..") {
        let a: u64 = a.trim().parse().map_err(usage)?;
        let b: u64 = b.trim().parse().map_err(usage)?;
        return Ok((a..b).collect());
    }
    text.split(',').map(|s| s.trim().parse().map_err(usage)).collect()
}

impl TrialArgs {
    fn config(&self, graph: Option<&Graph>) -> Result<TrialConfig, Failure> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(usage)?;
                TrialConfig::from_json(&text).map_err(usage)?
            }
            None => TrialConfig::new(0, 0.0, 0),
        };
        if let Some(n) = self.n {
            cfg.n = n;
        }
        if let Some(c) = self.c {
            cfg.c = c;
        } else if let (Some(g), None) = (graph, &self.config) {
            // Mean degree of the supplied graph.
            cfg.c = if g.num_vertices() == 0 {
                0.0
            } else {
                2.0 * g.num_edges() as f64 / g.num_vertices() as f64
            };
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        let o = &mut cfg.overrides;
        o.theta = self.theta.or(o.theta);
        o.epsilon = self.epsilon.or(o.epsilon);
        o.eps_cap = self.eps_cap.or(o.eps_cap);
        o.q = self.q.or(o.q);
        o.delta1 = self.delta1.or(o.delta1);
        let source = if self.random_lists {
            ListSource::RandomLists {
                seed: self.list_seed,
                palette: self.palette,
            }
        } else {
            cfg.policy.source
        };
        cfg.policy = match self.policy {
            Some(PolicyArg::Adaptive) => ListPolicy::adaptive(),
            Some(PolicyArg::FormulaQ) => ListPolicy::formula_q(source),
            Some(PolicyArg::ExplicitK) => {
                let k = self.k.or(cfg.policy.k).ok_or_else(|| usage("--policy explicit-k needs --k"))?;
                ListPolicy::explicit(k, source)
            }
            None => {
                let mut p = cfg.policy;
                p.source = source;
                p.k = self.k.or(p.k);
                p
            }
        };
        if !self.checks.is_empty() {
            cfg.checks = parse_claims(&self.checks)?.into_iter().collect();
        }
        if let Some(t) = self.subset_trials {
            cfg.subset_trials = t;
        }
        if self.subset_seed.is_some() {
            cfg.subset_seed = self.subset_seed;
        }
        if let Some(cap) = self.chromatic_cap {
            cfg.caps.chromatic_n = cap;
        }
        cfg.record_timings |= self.timings;
        if self.timeout.is_some() {
            cfg.timeout_secs = self.timeout;
        }
        Ok(cfg)
    }

    fn graph(&self) -> Result<Option<Graph>, Failure> {
        match &self.input {
            Some(path) => Ok(Some(load_edge_list(path).map_err(usage)?)),
            None => Ok(None),
        }
    }

    /// Base graph and configuration, sampling when no file was given.
    fn load(&self) -> Result<(Graph, TrialConfig), Failure> {
        let given = self.graph()?;
        let cfg = self.config(given.as_ref())?;
        let g1 = match given {
            Some(g) => g,
            None => {
                if self.n.is_none() && self.config.is_none() {
                    return Err(usage("give --in, --n/--c/--seed, or --config"));
                }
                sample_gnp(&GnpParams::new(cfg.n, cfg.c, cfg.seed)).map_err(usage)?
            }
        };
        Ok((g1, cfg))
    }
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> CmdResult {
    match out {
        Some(path) => fs::write(path, text).map_err(usage),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_report(path: &Option<PathBuf>, report: &TrialReport) -> CmdResult {
    if let Some(path) = path {
        let json = serde_json::to_string_pretty(report).map_err(usage)?;
        fs::write(path, json + "\n").map_err(usage)?;
    }
    Ok(())
}

fn run_color(trial: &TrialArgs, coloring_out: &Option<PathBuf>) -> CmdResult {
    let (g1, cfg) = trial.load()?;
    let report = run_on_graph(&cfg, &g1).map_err(usage)?;
    write_report(&trial.report, &report)?;
    if let Some(path) = coloring_out {
        let (coloring, _) = gnp_square::coloring::three_stage_color(
            &g1,
            &square(&g1),
            &report.params,
            &cfg.resolved_policy(),
        )
        .map_err(|e| Failure::Invalid(e.to_string()))?;
        fs::write(path, coloring.to_text()).map_err(usage)?;
    }
    let g = &report.graph;
    match &report.coloring.metrics {
        Some(m) => println!(
            "n={} Δ(G1)={} Δ(G2)={} colors={} q_min={} eps={} proper={}",
            g.n, g.max_degree_g1, g.max_degree_g2, m.colors_used, m.q_min, report.params.epsilon, report.coloring.succeeded
        ),
        None => println!("n={} coloring stuck: {:?}", g.n, report.coloring.stuck),
    }
    let broken = report.invariant_violations();
    if !report.coloring.succeeded || !broken.is_empty() {
        return Err(Failure::Invalid(
            std::iter::once("coloring failed validation".to_string()).chain(broken).collect::<Vec<_>>().join("; "),
        ));
    }
    Ok(())
}

fn run_verify(trial: &TrialArgs, coloring: &Option<PathBuf>, strict: bool) -> CmdResult {
    let (g1, cfg) = trial.load()?;
    if let Some(path) = coloring {
        let text = fs::read_to_string(path).map_err(usage)?;
        let col = Coloring::from_text(&text).map_err(usage)?;
        let r = validate(&col, &square(&g1), None).map_err(usage)?;
        println!(
            "coloring: {} monochromatic edges, complete={}",
            r.monochromatic_edges.len(),
            col.is_complete()
        );
        if !r.is_proper() || !col.is_complete() {
            return Err(Failure::Invalid("coloring is not a proper coloring of the square".into()));
        }
        if cfg.checks.is_empty() {
            return Ok(());
        }
    }
    let mut cfg = cfg;
    if cfg.checks.is_empty() {
        cfg.checks = Claim::ALL.into_iter().collect();
    }
    let report = run_on_graph(&cfg, &g1).map_err(usage)?;
    write_report(&trial.report, &report)?;
    for v in &report.checks {
        let name = match &v.part {
            Some(p) => format!("{}/{}", v.claim.id(), p),
            None => v.claim.id().to_string(),
        };
        let measured = v.statistic.measured.map_or("-".to_string(), |m| m.to_string());
        let rate = v.tally.map(|t| format!(" rate={}/{}", t.violations, t.trials)).unwrap_or_default();
        println!(
            "{name:<26} {} measured={measured} bound={}{rate}",
            if v.holds { "holds" } else { "FAILS" },
            v.statistic.bound
        );
    }
    for s in &report.skipped {
        println!("{:<26} skipped: {}", s.claim.id(), s.reason);
    }
    if strict && report.checks.iter().any(|v| !v.holds) {
        return Err(Failure::Invalid("at least one check failed".into()));
    }
    Ok(())
}

fn read_graph(path: &PathBuf, squared: bool) -> Result<Graph, Failure> {
    let g = load_edge_list(path).map_err(usage)?;
    Ok(if squared { square(&g) } else { g })
}

fn run_oracle(which: &OracleCommand) -> CmdResult {
    match which {
        OracleCommand::Chi { input, square, cap } => {
            let g = read_graph(input, *square)?;
            println!("{}", exact_chromatic_number(&g, *cap).map_err(usage)?);
        }
        OracleCommand::Choosable {
            input,
            k,
            square,
            max_n,
            max_k,
        } => {
            let g = read_graph(input, *square)?;
            let caps = ChoosabilityCaps {
                max_n: *max_n,
                max_k: *max_k,
            };
            match is_k_choosable(&g, *k, caps).map_err(usage)? {
                Choosability::Choosable => println!("yes"),
                Choosability::Witness(lists) => {
                    println!("no");
                    for v in 0..lists.len() {
                        let list: Vec<String> = lists.list(v).iter().map(|c| c.to_string()).collect();
                        println!("{v}: {}", list.join(" "));
                    }
                }
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_sweep_cmd(
    spec: &Option<PathBuf>,
    n: &[usize],
    c: &[f64],
    seeds: &Option<String>,
    epsilons: &[f64],
    checks: &[String],
    subset_trials: Option<usize>,
    threads: Option<usize>,
    out: &PathBuf,
) -> CmdResult {
    let mut s = match spec {
        Some(path) => serde_json::from_str(&fs::read_to_string(path).map_err(usage)?).map_err(usage)?,
        None => SweepSpec {
            ns: vec![],
            cs: vec![],
            seeds: vec![],
            epsilons: vec![],
            base: TrialConfig::new(0, 0.0, 0),
        },
    };
    if !n.is_empty() {
        s.ns = n.to_vec();
    }
    if !c.is_empty() {
        s.cs = c.to_vec();
    }
    if let Some(text) = seeds {
        s.seeds = parse_seeds(text)?;
    }
    if !epsilons.is_empty() {
        s.epsilons = epsilons.to_vec();
    }
    if !checks.is_empty() {
        s.base.checks = parse_claims(checks)?.into_iter().collect();
    }
    if let Some(t) = subset_trials {
        s.base.subset_trials = t;
    }
    let records = run_sweep(&s, threads).map_err(usage)?;
    write_sweep_outputs(&records, out).map_err(usage)?;
    print!("{}", gnp_square::harness::summary_csv(&records));
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Sample { n, c, seed, out } => {
            let g = sample_gnp(&GnpParams::new(*n, *c, *seed)).map_err(usage)?;
            write_or_print(out, &format_edge_list(&g))
        }
        Command::Square { input, out } => {
            let text = fs::read_to_string(input).map_err(usage)?;
            let g = parse_edge_list(&text).map_err(usage)?;
            write_or_print(out, &format_edge_list(&square(&g)))
        }
        Command::Color { trial, coloring_out } => run_color(trial, coloring_out),
        Command::Verify {
            trial,
            coloring,
            strict,
        } => run_verify(trial, coloring, *strict),
        Command::Oracle { which } => run_oracle(which),
        Command::Sweep {
            spec,
            n,
            c,
            seeds,
            epsilons,
            checks,
            subset_trials,
            threads,
            out,
        } => run_sweep_cmd(spec, n, c, seeds, epsilons, checks, *subset_trials, *threads, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("validation failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
