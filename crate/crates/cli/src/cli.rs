//! Command-line definitions and subcommand drivers.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context};
use clap::{Args, Parser, Subcommand};
use domgreedy_core::oracle::{brute_force_min, gap_scan, gap_scan_sampled, lt_closure, verify, GapScanResult};
use domgreedy_core::small_graphs::{self, connected_graphs};
use domgreedy_core::{
    greedy_construct, DominationPotential, Error, NodeId, NodeSubset, Potential, Problem, ProblemParams, Rational,
    ThresholdConfig, WeightedGraph,
};
use num_traits::Zero;
use rand::seq::index;
use serde::Serialize;

use crate::experiment::{run_experiment, ExperimentError, InstanceSource};
use crate::format::{parse_graph, parse_rational, write_graph};
use crate::generate::{generate, instance_rng, reweight, GnpSpec, WeightModel};
use crate::report::{rational, write_json_lines, write_records, Outcome, OutputFormat, Summary};
use crate::solve::{solve_instance, SolveConfig, DEFAULT_CLI_ORACLE_LIMIT};

#[derive(Debug, Parser)]
#[command(name = "domgreedy", version, about = "Greedy potential-function solvers for domination problems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the greedy constructor on one graph.
    Solve(RunArgs),
    /// Find a minimum solution by exhaustive search.
    Exact(RunArgs),
    /// Check a node set against the problem definition.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated node ids; omit for the empty set.
        #[arg(long, value_delimiter = ',')]
        set: Vec<NodeId>,
    },
    /// Measure the submodularity gap of a potential.
    Gapscan {
        #[command(flatten)]
        run: RunArgs,
        /// Restrict the larger set to connected subsets.
        #[arg(long)]
        conditional: bool,
        /// Scan this many random triples instead of all of them.
        #[arg(long)]
        sample: Option<u64>,
        /// Scan every connected graph on this many nodes instead of --graph.
        #[arg(long, value_name = "N")]
        all_connected: Option<usize>,
        /// Weight model applied to --all-connected graphs.
        #[arg(long, default_value = "unit")]
        weights: WeightModel,
    },
    /// Solve a batch of generated or loaded instances.
    Experiment {
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        gen: GenArgs,
        /// Number of generated instances.
        #[arg(long, default_value_t = 100)]
        count: u64,
    },
    /// Simulate linear-threshold activation from a seed set.
    Diffuse {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated seed nodes; defaults to the greedy WPPIDS solution
        /// compared against a random seed set of the same size.
        #[arg(long, value_delimiter = ',')]
        seeds: Option<Vec<NodeId>>,
    },
    /// Write random graphs in the edge-list format.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file, or a directory when --count > 1.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Graph file; experiments accept several.
    #[arg(long)]
    pub graph: Vec<PathBuf>,
    #[arg(long, default_value = "tds")]
    pub problem: Problem,
    /// Fault tolerance for mtds.
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Threshold fraction as p/q.
    #[arg(long, default_value = "1/2")]
    pub fraction: String,
    /// Round thresholds up (unit-weight graphs only).
    #[arg(long)]
    pub ceiling: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Compare against the brute-force optimum.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = DEFAULT_CLI_ORACLE_LIMIT)]
    pub oracle_limit: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Leave out wall-clock timings so reports are reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Random graph model.
    #[arg(long = "gen", default_value = "gnp")]
    pub model: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability as p/q.
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, default_value = "unit")]
    pub weights: WeightModel,
    /// Resample until connected.
    #[arg(long)]
    pub connected: bool,
}

impl GenArgs {
    fn spec(&self, force_connected: bool) -> anyhow::Result<GnpSpec> {
        let n = self.n.context("--n is required for generated instances")?;
        let p = self.p.as_deref().context("--p is required for generated instances")?;
        Ok(GnpSpec::parse(&self.model, n, p, self.weights, self.connected || force_connected)?)
    }
}

impl RunArgs {
    fn params(&self) -> anyhow::Result<ProblemParams> {
        let fraction = parse_rational(&self.fraction).context("invalid --fraction")?;
        let threshold = ThresholdConfig::new(fraction, self.ceiling)?;
        Ok(ProblemParams::new(self.m, threshold)?)
    }

    fn solve_config(&self) -> anyhow::Result<SolveConfig> {
        Ok(SolveConfig {
            problem: self.problem,
            params: self.params()?,
            oracle: self.oracle,
            oracle_limit: self.oracle_limit,
            timing: !self.no_timing,
        })
    }

    fn single_graph(&self) -> anyhow::Result<(String, WeightedGraph)> {
        ensure!(self.graph.len() == 1, "expected exactly one --graph");
        load(&self.graph[0])
    }

    fn json_only(&self, command: &str) -> anyhow::Result<()> {
        ensure!(self.format == OutputFormat::Json, "{command} only writes JSON");
        Ok(())
    }
}

pub fn load(path: &Path) -> anyhow::Result<(String, WeightedGraph)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((path.display().to_string(), g))
}

fn output(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(io::BufWriter::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn subset(g: &WeightedGraph, nodes: &[NodeId]) -> Result<NodeSubset, Error> {
    let n = g.node_count();
    if let Some(&node) = nodes.iter().find(|&&v| v >= n) {
        return Err(Error::NodeOutOfRange { node, node_count: n });
    }
    Ok(NodeSubset::from_nodes(n, nodes.iter().copied()))
}

/// Exit status for an error that escaped a subcommand.
pub fn error_exit_code(err: &anyhow::Error) -> u8 {
    let core = err
        .downcast_ref::<Error>()
        .or_else(|| err.downcast_ref::<ExperimentError>().and_then(ExperimentError::core_error));
    match core {
        Some(Error::InfeasibleInstance) => Outcome::Infeasible.exit_code(),
        _ => 1,
    }
}

pub fn execute(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Solve(run) => solve(&run),
        Command::Exact(run) => exact(&run),
        Command::Verify { run, set } => verify_set(&run, &set),
        Command::Gapscan {
            run,
            conditional,
            sample,
            all_connected,
            weights,
        } => gapscan(&run, conditional, sample, all_connected, weights),
        Command::Experiment { run, gen, count } => experiment(&run, &gen, count),
        Command::Diffuse { run, seeds } => diffuse(&run, seeds.as_deref()),
        Command::Gen { gen, seed, out, count } => gen_graphs(&gen, seed, out, count),
    }
}

fn solve(run: &RunArgs) -> anyhow::Result<Outcome> {
    let cfg = run.solve_config()?;
    let (label, g) = run.single_graph()?;
    let record = solve_instance(&cfg, 0, label, &g, 0)?;
    write_records(std::slice::from_ref(&record), run.format, output(&run.out)?)?;
    Ok(record.outcome())
}

fn experiment(run: &RunArgs, gen: &GenArgs, count: u64) -> anyhow::Result<Outcome> {
    let cfg = run.solve_config()?;
    let source = if run.graph.is_empty() {
        InstanceSource::Generator {
            spec: gen.spec(run.problem == Problem::Wppicds)?,
            count,
            seed: run.seed,
        }
    } else {
        InstanceSource::Graphs(run.graph.iter().map(|p| load(p)).collect::<anyhow::Result<_>>()?)
    };
    let records = run_experiment(&cfg, &source)?;
    write_records(&records, run.format, output(&run.out)?)?;
    eprintln!("{}", Summary::of(&records));
    Ok(Summary::outcome(&records))
}

#[derive(Serialize)]
struct ExactRecord {
    schema: &'static str,
    source: String,
    problem: &'static str,
    n: usize,
    optimal_size: Option<usize>,
    solution: Option<Vec<NodeId>>,
}

fn exact(run: &RunArgs) -> anyhow::Result<Outcome> {
    run.json_only("exact")?;
    let params = run.params()?;
    let (source, g) = run.single_graph()?;
    let best = brute_force_min(run.problem, &g, &params, run.oracle_limit)?;
    let record = ExactRecord {
        schema: "domgreedy.exact/v1",
        source,
        problem: run.problem.name(),
        n: g.node_count(),
        optimal_size: best.as_ref().map(NodeSubset::len),
        solution: best.as_ref().map(NodeSubset::sorted),
    };
    write_json_lines(&[record], output(&run.out)?)?;
    Ok(if best.is_some() { Outcome::Pass } else { Outcome::Infeasible })
}

#[derive(Serialize)]
struct VerifyRecord {
    schema: &'static str,
    source: String,
    problem: &'static str,
    set: Vec<NodeId>,
    feasible: bool,
    value: String,
    target: String,
}

fn verify_set(run: &RunArgs, nodes: &[NodeId]) -> anyhow::Result<Outcome> {
    run.json_only("verify")?;
    let params = run.params()?;
    let (source, g) = run.single_graph()?;
    let set = subset(&g, nodes)?;
    let feasible = verify(run.problem, &g, &set, &params)?;
    // the potential is only defined on connected graphs for wppicds
    let potential = DominationPotential::new(&g, run.problem, &params).ok();
    let (value, target) = match &potential {
        Some(p) => (p.value(&set), p.target().clone()),
        None => (Rational::zero(), Rational::zero()),
    };
    let record = VerifyRecord {
        schema: "domgreedy.verify/v1",
        source,
        problem: run.problem.name(),
        set: set.sorted(),
        feasible,
        value: rational(&value),
        target: rational(&target),
    };
    write_json_lines(&[record], output(&run.out)?)?;
    Ok(match (feasible, potential.is_some() && value == target) {
        (true, true) => Outcome::Pass,
        (false, false) => Outcome::Infeasible,
        _ if potential.is_none() => Outcome::Infeasible,
        _ => Outcome::Violation,
    })
}

#[derive(Serialize)]
struct WitnessRecord {
    a: Vec<NodeId>,
    b: Vec<NodeId>,
    x: NodeId,
}

#[derive(Serialize)]
struct GapRecord {
    schema: &'static str,
    id: u64,
    source: String,
    problem: &'static str,
    n: usize,
    mode: &'static str,
    conditional: bool,
    triples_scanned: u64,
    max_gap: String,
    /// Largest gap the potential is known to satisfy, if any.
    allowed_gap: Option<String>,
    within_allowed: Option<bool>,
    witness: Option<WitnessRecord>,
}

fn gap_record(
    id: u64,
    source: String,
    problem: Problem,
    p: &DominationPotential<'_>,
    res: GapScanResult,
) -> GapRecord {
    let allowed = match (problem, res.conditional) {
        (Problem::Wppicds, true) => Some(Rational::new(1.into(), p.lcm().clone())),
        (Problem::Wppicds, false) => None,
        _ => Some(Rational::zero()),
    };
    GapRecord {
        schema: "domgreedy.gapscan/v1",
        id,
        source,
        problem: problem.name(),
        n: p.universe(),
        mode: if res.exhaustive { "exhaustive" } else { "sampled" },
        conditional: res.conditional,
        triples_scanned: res.triples_scanned,
        within_allowed: allowed.as_ref().map(|a| res.max_gap <= *a),
        allowed_gap: allowed.as_ref().map(rational),
        max_gap: rational(&res.max_gap),
        witness: res.witness.map(|w| WitnessRecord {
            a: w.a.sorted(),
            b: w.b.sorted(),
            x: w.x,
        }),
    }
}

fn gapscan(
    run: &RunArgs,
    conditional: bool,
    sample: Option<u64>,
    all_connected: Option<usize>,
    weights: WeightModel,
) -> anyhow::Result<Outcome> {
    run.json_only("gapscan")?;
    let params = run.params()?;
    let graphs: Vec<(String, WeightedGraph)> = match all_connected {
        Some(n) => {
            ensure!(
                (1..=small_graphs::MAX_NODES).contains(&n),
                "--all-connected supports 1..={} nodes",
                small_graphs::MAX_NODES
            );
            connected_graphs(n)
                .into_iter()
                .enumerate()
                .map(|(i, g)| {
                    let g = match weights {
                        WeightModel::Unit => g,
                        model => reweight(&g, model, &mut instance_rng(run.seed, i as u64)),
                    };
                    (format!("connected(n={n},weights={weights})#{i}"), g)
                })
                .collect()
        }
        None => {
            ensure!(!run.graph.is_empty(), "gapscan needs --graph or --all-connected");
            run.graph.iter().map(|p| load(p)).collect::<anyhow::Result<_>>()?
        }
    };
    let mut records = Vec::with_capacity(graphs.len());
    for (id, (source, g)) in graphs.into_iter().enumerate() {
        let id = id as u64;
        let p = DominationPotential::new(&g, run.problem, &params).with_context(|| source.clone())?;
        let res = match sample {
            Some(s) => gap_scan_sampled(&p, &g, conditional, s, &mut instance_rng(run.seed, id)),
            None => gap_scan(&p, &g, conditional).with_context(|| source.clone())?,
        };
        records.push(gap_record(id, source, run.problem, &p, res));
    }
    write_json_lines(&records, output(&run.out)?)?;
    let within = records.iter().all(|r| r.within_allowed != Some(false));
    Ok(if within { Outcome::Pass } else { Outcome::Violation })
}

#[derive(Serialize)]
struct DiffusionRecord {
    schema: &'static str,
    source: String,
    label: &'static str,
    seeds: Vec<NodeId>,
    rounds: usize,
    trace: Vec<Vec<NodeId>>,
    activated: usize,
    n: usize,
    coverage: String,
}

fn diffuse(run: &RunArgs, seeds: Option<&[NodeId]>) -> anyhow::Result<Outcome> {
    run.json_only("diffuse")?;
    let t = run.params()?.threshold;
    let (source, g) = run.single_graph()?;
    let n = g.node_count();
    let seed_sets: Vec<(&'static str, NodeSubset)> = match seeds {
        Some(nodes) => vec![("given", subset(&g, nodes)?)],
        None => {
            let greedy = greedy_construct(&DominationPotential::wppids(&g, &t)?).solution(n);
            let mut rng = instance_rng(run.seed, 0);
            let random = NodeSubset::from_nodes(n, index::sample(&mut rng, n, greedy.len()));
            vec![("greedy", greedy), ("random", random)]
        }
    };
    let mut outcome = Outcome::Pass;
    let mut records = Vec::new();
    for (label, set) in seed_sets {
        let d = lt_closure(&g, &set, &t)?;
        let activated = d.activated.len();
        if label == "greedy" && (activated != n || d.rounds > 1) {
            outcome = Outcome::Violation;
        }
        records.push(DiffusionRecord {
            schema: "domgreedy.diffusion/v1",
            source: source.clone(),
            label,
            seeds: set.sorted(),
            rounds: d.rounds,
            trace: d.trace,
            activated,
            n,
            coverage: format!("{activated}/{n}"),
        });
    }
    write_json_lines(&records, output(&run.out)?)?;
    Ok(outcome)
}

fn gen_graphs(gen: &GenArgs, seed: u64, out: Option<PathBuf>, count: u64) -> anyhow::Result<Outcome> {
    let spec = gen.spec(false)?;
    let render = |id: u64| -> anyhow::Result<String> {
        let inst = generate(&spec, seed, id)?;
        Ok(format!(
            "# {} seed={seed} id={id} resamples={}\n{}",
            spec.describe(),
            inst.resamples,
            write_graph(&inst.graph)
        ))
    };
    if count == 1 {
        let mut w = output(&out)?;
        w.write_all(render(0)?.as_bytes())?;
        w.flush()?;
        return Ok(Outcome::Pass);
    }
    let Some(dir) = out else {
        bail!("--out <dir> is required when --count > 1");
    };
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    for id in 0..count {
        let path = dir.join(format!("g{id:05}.txt"));
        fs::write(&path, render(id)?).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Outcome::Pass)
}
