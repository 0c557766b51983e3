//! `bullhorn`: command-line surface over the structural graph theory
//! toolkit. Line-oriented: graphs come in as graph6 records (one per line,
//! or whole-file DIMACS / edge-list), results go out as one JSON document
//! per input graph, so the tool composes with external generators and shell
//! pipelines.
//!
//! Exit codes: 0 on success, 2 when any input fell outside the advertised
//! graph class (a mathematical outcome, not a failure), 1 on I/O or parse
//! errors and budget violations.

use anyhow::{anyhow, Context, Result};
use bullhorn_core::graph::Graph;
use bullhorn_core::io::GraphFormat;
use bullhorn_core::patterns::PatternKind;
use bullhorn_core::{coloring, critical, divisibility, io, modular, patterns, structure};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "bullhorn",
    about = "Structural graph theory toolkit: detection, classification, modules, coloring, critical graphs, divisibility",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// One inline graph record (graph6 unless --format says otherwise).
    #[arg(long)]
    graph: Option<String>,
    /// Read records from this file instead of standard input.
    #[arg(long)]
    file: Option<String>,
    /// Input codec. graph6 is line-oriented; dimacs and edge-list treat the
    /// whole input as a single graph.
    #[arg(long, value_enum, default_value = "graph6")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Dimacs,
    EdgeList,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::Graph6 => GraphFormat::Graph6,
            FormatArg::Dimacs => GraphFormat::Dimacs,
            FormatArg::EdgeList => GraphFormat::EdgeList,
        }
    }
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Override the desk-scale budgets (enumeration size, divisibility
    /// sweeps). Defaults also honor the BULLHORN_BUDGET_N environment
    /// variable.
    #[arg(long)]
    budget_n: Option<usize>,
    /// Accepted for interface stability; every current subcommand is
    /// deterministic, so the seed has no effect.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    /// Connected (bull, house)-free graphs.
    BullHouse,
    /// Connected (bull, P5)-free graphs.
    P5Bull,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiMethod {
    /// DSATUR branch and bound.
    Exact,
    /// Structure-guided recursion for (P5, bull)-free inputs.
    Structure,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// One part perfect, the other with smaller clique number.
    Standard,
    /// Both parts with smaller clique number.
    TwoDivisible,
}

#[derive(Subcommand)]
enum Command {
    /// Re-encode graphs between graph6, DIMACS, and edge-list formats.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        /// Output codec.
        #[arg(long, value_enum)]
        to: FormatArg,
    },
    /// Search for an induced pattern and report a witness.
    Detect {
        #[command(flatten)]
        input: InputArgs,
        /// Pattern name: p2..p5, c4, triangle, 3k1, bull, house, chair,
        /// gem, domino, hole, odd-hole.
        #[arg(long)]
        pattern: String,
        /// Minimum hole length for hole / odd-hole.
        #[arg(long, default_value_t = 5)]
        min_len: usize,
    },
    /// Produce a structure certificate for each input graph.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "bull-house")]
        class: ClassArg,
    },
    /// Gallai partition into maximal modules plus the prime quotient.
    Modules {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Clique skeleton: modules collapsed to cliques of their chromatic
    /// number.
    Skeleton {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exact chromatic number with a witness coloring.
    Chi {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "exact")]
        method: ChiMethod,
    },
    /// k-criticality report.
    Critical {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustively enumerate k-critical graphs in a hereditary class;
    /// prints graph6 records followed by a JSON summary.
    Enumerate {
        /// Comma-separated forbidden patterns, e.g. "p5,bull".
        #[arg(long)]
        filter: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Perfect-divisibility verdict and witness partition.
    Divisible {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "standard")]
        variant: VariantArg,
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// What a batch run is allowed to report through the exit code.
#[derive(Default)]
struct Outcome {
    any_error: bool,
    any_outside_class: bool,
}

impl Outcome {
    fn code(&self) -> ExitCode {
        if self.any_error {
            ExitCode::from(1)
        } else if self.any_outside_class {
            ExitCode::from(2)
        } else {
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => outcome.code(),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    let mut outcome = Outcome::default();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Convert { input, to } => {
            for_each_graph(&input, &mut outcome, |g, _| {
                let text = io::encode(to.into(), g)?;
                Ok(json!({ "output": text.trim_end_matches('\n') }))
            })?
            .into_iter()
            .try_for_each(|record| emit_convert(&mut out, record))?;
        }
        Command::Detect {
            input,
            pattern,
            min_len,
        } => {
            let kind = parse_pattern(&pattern, min_len)?;
            let records = for_each_graph(&input, &mut outcome, |g, _| {
                let found = patterns::find_induced(g, kind);
                Ok(json!({
                    "pattern": kind.name(),
                    "found": found.is_some(),
                    "witness": found.map(|e| serde_json::to_value(&e).unwrap()),
                }))
            })?;
            emit_all(&mut out, records)?;
        }
        Command::Classify { input, class } => {
            let mut outside = false;
            let records = for_each_graph(&input, &mut outcome, |g, line| {
                let cert = match class {
                    ClassArg::BullHouse => structure::classify_bull_house_free(g),
                    ClassArg::P5Bull => structure::classify_bull_p5_free(g),
                };
                if matches!(cert, structure::Certificate::NotInClass { .. }) {
                    outside = true;
                }
                let mut value = serde_json::to_value(&cert).unwrap();
                if let Value::Object(map) = &mut value {
                    map.insert("line".into(), json!(line));
                }
                Ok(value)
            })?;
            outcome.any_outside_class |= outside;
            emit_all(&mut out, records)?;
        }
        Command::Modules { input } => {
            let records = for_each_graph(&input, &mut outcome, |g, _| {
                let p = modular::maximal_modules(g)?;
                Ok(json!({
                    "blocks": p.blocks,
                    "quotient": io::encode_graph6(&p.quotient)?,
                }))
            })?;
            emit_all(&mut out, records)?;
        }
        Command::Skeleton { input } => {
            let records = for_each_graph(&input, &mut outcome, |g, _| {
                let skeleton = modular::clique_skeleton(g)?;
                Ok(json!({
                    "skeleton": io::encode_graph6(&skeleton)?,
                    "chi": coloring::chromatic_number(&skeleton).k,
                }))
            })?;
            emit_all(&mut out, records)?;
        }
        Command::Chi { input, method } => {
            let mut outside = false;
            let records = for_each_graph(&input, &mut outcome, |g, _| match method {
                ChiMethod::Exact => {
                    let c = coloring::chromatic_number(g);
                    Ok(json!({ "k": c.k, "assignment": c.assignment, "method": "exact" }))
                }
                ChiMethod::Structure => match coloring::chi_via_structure(g) {
                    Ok(c) => {
                        Ok(json!({ "k": c.k, "assignment": c.assignment, "method": "structure" }))
                    }
                    Err(coloring::ColoringError::OutsideClass { witness }) => {
                        outside = true;
                        Ok(json!({
                            "method": "structure",
                            "outside_class": serde_json::to_value(&witness).unwrap(),
                        }))
                    }
                },
            })?;
            outcome.any_outside_class |= outside;
            emit_all(&mut out, records)?;
        }
        Command::Critical { input, k } => {
            if k == 0 {
                return Err(anyhow!("--k must be at least 1"));
            }
            let records = for_each_graph(&input, &mut outcome, |g, _| {
                let report = critical::is_k_critical(g, k);
                Ok(serde_json::to_value(&report).unwrap())
            })?;
            emit_all(&mut out, records)?;
        }
        Command::Enumerate {
            filter,
            k,
            nmax,
            common,
        } => {
            if k == 0 {
                return Err(anyhow!("--k must be at least 1"));
            }
            let kinds = parse_filter(&filter)?;
            let budget = resolve_budget(&common, critical::DEFAULT_ENUMERATION_BUDGET);
            let start = Instant::now();
            let run = critical::enumerate_critical_with_budget(&kinds, k, nmax, budget)
                .map_err(|e| anyhow!(e))?;
            for g in &run.found {
                writeln!(out, "{}", io::encode_graph6(g)?)?;
            }
            let counts: serde_json::Map<String, Value> = run
                .counts_by_n
                .iter()
                .map(|(n, c)| (n.to_string(), json!(c)))
                .collect();
            writeln!(
                out,
                "{}",
                json!({
                    "filter": kinds.iter().map(|p| p.name()).collect::<Vec<_>>(),
                    "k": k,
                    "nmax": nmax,
                    "total": run.found.len(),
                    "counts_by_n": counts,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                })
            )?;
        }
        Command::Divisible {
            input,
            variant,
            common,
        } => {
            let budget = resolve_budget(&common, divisibility::DEFAULT_DESK_BUDGET);
            let variant = match variant {
                VariantArg::Standard => divisibility::DivisibilityVariant::Standard,
                VariantArg::TwoDivisible => divisibility::DivisibilityVariant::TwoDivisible,
            };
            let records = for_each_graph(&input, &mut outcome, |g, _| {
                let verdict = divisibility::is_perfectly_divisible_with_budget(g, variant, budget)?;
                let partition = if g.edge_count() > 0 && g.n() <= 20 {
                    divisibility::divisible_partition(g, variant)?
                } else {
                    None
                };
                Ok(json!({
                    "variant": serde_json::to_value(variant).unwrap(),
                    "perfectly_divisible": verdict.holds,
                    "failing_subgraph": verdict.failing_subgraph,
                    "partition": partition.map(|w| json!({ "part_a": w.part_a, "part_b": w.part_b })),
                }))
            })?;
            emit_all(&mut out, records)?;
        }
    }
    Ok(outcome)
}

/// Reads the inputs named by `input` and applies `f` per graph. Malformed
/// records never abort the batch: they become per-line error documents and
/// flip the error flag.
fn for_each_graph(
    input: &InputArgs,
    outcome: &mut Outcome,
    mut f: impl FnMut(&Graph, usize) -> Result<Value>,
) -> Result<Vec<Value>> {
    let mut records = Vec::new();
    for (line, text) in read_inputs(input)? {
        let parsed = io::decode(input.format.into(), &text);
        let value = match parsed {
            Ok(graph) => match f(&graph, line) {
                Ok(v) => v,
                Err(e) => {
                    outcome.any_error = true;
                    json!({ "line": line, "error": format!("{e:#}") })
                }
            },
            Err(e) => {
                outcome.any_error = true;
                json!({ "line": line, "error": e.to_string() })
            }
        };
        records.push(value);
    }
    Ok(records)
}

/// Splits the input into records: one per line for graph6, one per whole
/// input for DIMACS and edge lists.
fn read_inputs(input: &InputArgs) -> Result<Vec<(usize, String)>> {
    let whole_input = !matches!(input.format, FormatArg::Graph6);
    if let Some(text) = &input.graph {
        return Ok(vec![(1, text.clone())]);
    }
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .lock()
                .read_to_string(&mut buf)
                .context("reading standard input")?;
            buf
        }
    };
    if whole_input {
        return Ok(vec![(1, text)]);
    }
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.to_string()))
        .collect())
}

fn emit_all(out: &mut impl Write, records: Vec<Value>) -> Result<()> {
    for record in records {
        writeln!(out, "{record}")?;
    }
    Ok(())
}

/// `convert` emits raw records rather than JSON so its output feeds
/// straight into other graph tools; errors still come out as JSON.
fn emit_convert(out: &mut impl Write, record: Value) -> Result<()> {
    match record.get("output").and_then(Value::as_str) {
        Some(text) => writeln!(out, "{text}")?,
        None => writeln!(out, "{record}")?,
    }
    Ok(())
}

fn parse_pattern(name: &str, min_len: usize) -> Result<PatternKind> {
    let kind: PatternKind = name.parse().map_err(|e: String| anyhow!(e))?;
    Ok(match kind {
        PatternKind::Hole { .. } => PatternKind::Hole { min_len },
        PatternKind::OddHole { .. } => PatternKind::OddHole { min_len },
        fixed => fixed,
    })
}

fn parse_filter(filter: &str) -> Result<Vec<PatternKind>> {
    filter
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|e: String| anyhow!(e)))
        .collect()
}

fn resolve_budget(common: &CommonArgs, default: usize) -> usize {
    common
        .budget_n
        .or_else(|| {
            std::env::var("BULLHORN_BUDGET_N")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(default)
}
