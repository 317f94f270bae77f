//! `homind` command-line interface.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::builder::BoolishValueParser;
use clap::{ArgAction, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use homind::bilabelled::{simulate_contraction, solve_contractor, ContractorCombination};
use homind::cfi::build_cfi_pair_twisted;
use homind::classes::{class_member, deletion_distance, elimination_distance, ClassPredicate};
use homind::corpus::ingest_corpus;
use homind::family::{find_distinguisher, FamilyKind, FamilySpec};
use homind::graph::named::{complete, complete_bipartite, cycle, disjoint_copies, path, petersen, wagner};
use homind::graph::{decode_graph6, Graph, VertexSet};
use homind::hom::{count_homs, count_homs_big, Homomorphism, DEFAULT_HOM_BUDGET};
use homind::oddo::{
    all_oddomorphisms, certify, search_oddomorphism, verify_oddomorphism, verify_weak_oddomorphism,
    OddoCertificate,
};
use homind::reductions::{
    check_separator_minor, cut_vertex_reduce, reduce_clique_sum, separator_reduce, tree_topological_model,
};
use homind::suite::{run_all, run_suite, ExperimentReport, SuiteConfig, DEFAULT_SEED, SUITES};
use homind::util::with_threads;

#[derive(Parser, Serialize)]
#[command(name = "homind", version, about = "Homomorphism indistinguishability toolkit")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Serialize)]
struct Global {
    /// Vertex bound for enumerated families and sweeps.
    #[arg(long, global = true, env = "HOMIND_MAX_N")]
    max_n: Option<usize>,
    /// Enumeration budget (homomorphism candidates, or patterns for `hom distinguish`).
    #[arg(long, global = true, env = "HOMIND_BUDGET")]
    budget: Option<u128>,
    #[arg(long, global = true, env = "HOMIND_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, env = "HOMIND_THREADS", default_value_t = 0)]
    threads: usize,
    /// Print the full JSON report instead of a summary.
    #[arg(long, global = true, env = "HOMIND_JSON", action = ArgAction::SetTrue, value_parser = BoolishValueParser::new())]
    json: bool,
    /// Count in arbitrary precision.
    #[arg(long, global = true, env = "HOMIND_BIGINT", action = ArgAction::SetTrue, value_parser = BoolishValueParser::new())]
    bigint: bool,
}

impl Global {
    fn hom_budget(&self) -> u128 {
        self.budget.unwrap_or(DEFAULT_HOM_BUDGET)
    }
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Homomorphism counts.
    #[command(subcommand)]
    Hom(HomCmd),
    /// CFI graphs.
    #[command(subcommand)]
    Cfi(CfiCmd),
    /// Oddomorphism verification and search.
    #[command(subcommand)]
    Oddo(OddoCmd),
    /// Reductions of a plain oddomorphism.
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Graph-class membership and distances.
    #[command(subcommand)]
    Class(ClassCmd),
    /// Series-parallel contractors.
    #[command(subcommand)]
    Contractor(ContractorCmd),
    /// Verification suites.
    #[command(subcommand)]
    Suite(SuiteCmd),
    /// Graph corpora.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum HomCmd {
    /// Number of homomorphisms F → G.
    Count { pattern: String, target: String },
    /// First pattern of a family telling G and H apart.
    Distinguish {
        g: String,
        h: String,
        #[arg(long, default_value = "all-graphs")]
        family: String,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        predicate: Option<String>,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CfiCmd {
    /// Even and odd CFI graphs of a connected base.
    Build {
        base: String,
        #[arg(long, default_value_t = 0)]
        twist: usize,
        /// Write the two graphs as graph6 (even first).
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Args, Serialize)]
struct MapArgs {
    source: String,
    target: String,
    /// Images of the source vertices, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    map: Vec<usize>,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum OddoCmd {
    /// Check a map; exits non-zero when it is not an oddomorphism.
    Verify {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long)]
        weak: bool,
    },
    /// Search all homomorphisms F → G.
    Search {
        source: String,
        target: String,
        #[arg(long)]
        weak: bool,
        /// List every plain oddomorphism instead of the first.
        #[arg(long, conflicts_with = "weak")]
        all: bool,
    },
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ReduceCmd {
    /// Reduce at a cut vertex.
    Cut {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long)]
        vertex: usize,
    },
    /// Reduce along a separator.
    Separator {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
    },
    /// Reduce along separators of size at most `s` until none is left.
    Cliquesum {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long)]
        s: usize,
        /// Class the final source is tested against.
        #[arg(long)]
        predicate: Option<String>,
    },
    /// Topological model of the target in a tree source.
    TreeModel {
        #[command(flatten)]
        map: MapArgs,
    },
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ClassCmd {
    /// Membership in one or more classes.
    Check {
        graph: String,
        #[arg(long = "predicate", required = true)]
        predicates: Vec<String>,
    },
    /// Deletion and elimination distance to a class.
    Distance {
        graph: String,
        #[arg(long)]
        predicate: String,
    },
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ContractorCmd {
    /// Rational combination of series-parallel terms that is the identity on G and H.
    Solve {
        g: String,
        h: String,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
    },
    /// hom(F/e, G) through a contractor, next to the direct count.
    Simulate {
        pattern: String,
        /// Edge of the pattern as `u,v`.
        #[arg(long, value_delimiter = ',', required = true)]
        edge: Vec<usize>,
        target: String,
        /// Contractor JSON from `contractor solve --json` (its `payload.contractor`).
        #[arg(long)]
        contractor: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
    },
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum SuiteCmd {
    /// Run one suite, or `all`.
    Run { name: String },
    /// List suite ids.
    List,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CorpusCmd {
    /// Add graph6 files to a corpus directory.
    Ingest {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Graph from graph6 or a name: `K5`, `K2,3`, `C6`, `P4`, `E3` (edgeless),
/// `V8`/`wagner`, `petersen`, or `kxNAME` for `k` disjoint copies.
fn parse_graph(text: &str) -> Result<Graph> {
    let bad = || anyhow!("cannot read `{text}` as a graph name or graph6");
    if let Some((k, rest)) = text.split_once('x') {
        if let Ok(k) = k.parse::<usize>() {
            return Ok(disjoint_copies(&parse_graph(rest)?, k));
        }
    }
    match text {
        "petersen" => return Ok(petersen()),
        "wagner" | "V8" => return Ok(wagner()),
        _ => {}
    }
    let mut chars = text.chars();
    if let (Some(c), rest) = (chars.next(), chars.as_str()) {
        if !rest.is_empty() && rest.chars().all(|d| d.is_ascii_digit() || d == ',') {
            let nums: Vec<usize> = rest
                .split(',')
                .map(|p| p.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            return match (c, nums.as_slice()) {
                ('K', [n]) => Ok(complete(*n)),
                ('K', [a, b]) => Ok(complete_bipartite(*a, *b)),
                ('C', [n]) if *n >= 3 => Ok(cycle(*n)),
                ('P', [n]) => Ok(path(*n)),
                ('E', [n]) => Ok(Graph::new(*n)),
                _ => Err(bad()),
            };
        }
    }
    decode_graph6(text).map_err(|e| anyhow!("`{text}`: {e}"))
}

fn parse_predicate(text: &str) -> Result<ClassPredicate> {
    Ok(text.parse::<ClassPredicate>()?)
}

fn homomorphism(m: &MapArgs) -> Result<Homomorphism> {
    Ok(Homomorphism::new(parse_graph(&m.source)?, parse_graph(&m.target)?, m.map.clone())?)
}

fn plain_cert(m: &MapArgs) -> Result<OddoCertificate> {
    let phi = homomorphism(m)?;
    certify(&phi).ok_or_else(|| anyhow!("the map is not an oddomorphism"))
}

/// What a command hands back for the report.
struct Outcome {
    passed: bool,
    bounds: Vec<String>,
    payload: Value,
    summary: Vec<String>,
}

impl Outcome {
    fn new(payload: Value, summary: Vec<String>) -> Outcome {
        Outcome {
            passed: true,
            bounds: Vec::new(),
            payload,
            summary,
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Hom(HomCmd::Count { .. }) => "hom count",
        Command::Hom(HomCmd::Distinguish { .. }) => "hom distinguish",
        Command::Cfi(_) => "cfi build",
        Command::Oddo(OddoCmd::Verify { .. }) => "oddo verify",
        Command::Oddo(OddoCmd::Search { .. }) => "oddo search",
        Command::Reduce(ReduceCmd::Cut { .. }) => "reduce cut",
        Command::Reduce(ReduceCmd::Separator { .. }) => "reduce separator",
        Command::Reduce(ReduceCmd::Cliquesum { .. }) => "reduce cliquesum",
        Command::Reduce(ReduceCmd::TreeModel { .. }) => "reduce tree-model",
        Command::Class(ClassCmd::Check { .. }) => "class check",
        Command::Class(ClassCmd::Distance { .. }) => "class distance",
        Command::Contractor(ContractorCmd::Solve { .. }) => "contractor solve",
        Command::Contractor(ContractorCmd::Simulate { .. }) => "contractor simulate",
        Command::Suite(SuiteCmd::Run { .. }) => "suite run",
        Command::Suite(SuiteCmd::List) => "suite list",
        Command::Corpus(_) => "corpus ingest",
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let gl = &cli.global;
    match &cli.command {
        Command::Hom(HomCmd::Count { pattern, target }) => {
            let (f, g) = (parse_graph(pattern)?, parse_graph(target)?);
            let count = if gl.bigint {
                count_homs_big(&f, &g).to_string()
            } else {
                count_homs(&f, &g)?.to_string()
            };
            Ok(Outcome::new(
                json!({ "pattern": f.to_string(), "target": g.to_string(), "count": count }),
                vec![format!("hom({f}, {g}) = {count}")],
            ))
        }
        Command::Hom(HomCmd::Distinguish { g, h, family, max_m, predicate, corpus }) => {
            let (g, h) = (parse_graph(g)?, parse_graph(h)?);
            let kind: FamilyKind = serde_json::from_value(Value::String(family.clone()))
                .map_err(|_| anyhow!("unknown family kind `{family}`"))?;
            let spec = FamilySpec {
                kind,
                max_n: gl.max_n.unwrap_or(6),
                max_m: *max_m,
                predicate: predicate.as_deref().map(parse_predicate).transpose()?,
                corpus: corpus.clone(),
            };
            let limit = gl.budget.map(|b| usize::try_from(b).unwrap_or(usize::MAX));
            let report = find_distinguisher(&g, &h, &spec, limit, gl.threads)?;
            let line = match &report.witness {
                Some(w) => format!("distinguished by {} ({} vs {})", w.pattern, w.count_g, w.count_h),
                None => format!(
                    "no distinguishing pattern among {} (verified up to n = {})",
                    report.checked, report.verified_up_to_n
                ),
            };
            let mut out = Outcome::new(json!({ "family": spec, "result": report }), vec![line]);
            out.bounds.push(format!("{family} patterns with at most {} vertices", spec.max_n));
            Ok(out)
        }
        Command::Cfi(CfiCmd::Build { base, twist, emit }) => {
            let pair = build_cfi_pair_twisted(&parse_graph(base)?, *twist)?;
            if let Some(path) = emit {
                fs::write(path, format!("{}\n{}\n", pair.even, pair.odd))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(Outcome::new(
                serde_json::to_value(&pair)?,
                vec![
                    format!("order {}", pair.even.order()),
                    format!("even {}", pair.even),
                    format!("odd  {}", pair.odd),
                ],
            ))
        }
        Command::Oddo(OddoCmd::Verify { map, weak }) => {
            let phi = homomorphism(map)?;
            let (holds, cert) = if *weak {
                match verify_weak_oddomorphism(&phi) {
                    Some(c) => (true, Some(c)),
                    None => (false, None),
                }
            } else {
                let (ok, c) = verify_oddomorphism(&phi);
                (ok, Some(c))
            };
            let kind = if *weak { "weak oddomorphism" } else { "oddomorphism" };
            let mut out = Outcome::new(
                json!({ "holds": holds, "certificate": cert }),
                vec![format!("{} {kind}", if holds { "is an" } else { "is not an" })],
            );
            out.passed = holds;
            Ok(out)
        }
        Command::Oddo(OddoCmd::Search { source, target, weak, all }) => {
            let (f, g) = (parse_graph(source)?, parse_graph(target)?);
            let budget = gl.hom_budget();
            let bound = format!("all homomorphisms {f} -> {g} (budget {budget})");
            let mut out = if *all {
                let certs = all_oddomorphisms(&f, &g, budget)?;
                let line = format!("{} oddomorphisms", certs.len());
                Outcome::new(json!({ "count": certs.len(), "certificates": certs }), vec![line])
            } else {
                let cert = search_oddomorphism(&f, &g, *weak, budget)?;
                let line = match &cert {
                    Some(c) => format!("found {:?}", c.hom.map),
                    None => "none".to_string(),
                };
                Outcome::new(json!({ "found": cert.is_some(), "certificate": cert }), vec![line])
            };
            out.bounds.push(bound);
            Ok(out)
        }
        Command::Reduce(ReduceCmd::Cut { map, vertex }) => {
            let red = cut_vertex_reduce(&plain_cert(map)?, *vertex)?;
            let line = format!("kept {:?}, reduced source {}", red.kept, red.cert.source());
            Ok(Outcome::new(serde_json::to_value(&red)?, vec![line]))
        }
        Command::Reduce(ReduceCmd::Separator { map, set }) => {
            let cert = plain_cert(map)?;
            let sep: VertexSet = set.iter().copied().collect();
            cert.source().check_set(sep)?;
            let red = separator_reduce(&cert, sep)?;
            let host = red.host(cert.source());
            let minor = check_separator_minor(cert.source(), &red);
            let line = format!("I = {:?}, F' = {}, minor of host: {minor}", red.instance.chosen, red.cert.source());
            let mut out = Outcome::new(
                json!({ "reduction": red, "host": host.to_string(), "minor_of_host": minor }),
                vec![line],
            );
            out.passed = minor;
            Ok(out)
        }
        Command::Reduce(ReduceCmd::Cliquesum { map, s, predicate }) => {
            let p = predicate.as_deref().map(parse_predicate).transpose()?;
            let red = reduce_clique_sum(&plain_cert(map)?, |g| p.map_or(true, |p| p.contains(g).unwrap_or(false)), *s)?;
            let line = format!("{} rounds, final source {}", red.rounds.len(), red.cert.source());
            Ok(Outcome::new(serde_json::to_value(&red)?, vec![line]))
        }
        Command::Reduce(ReduceCmd::TreeModel { map }) => {
            let cert = plain_cert(map)?;
            let model = tree_topological_model(&cert)?;
            model.verify(&cert)?;
            let line = format!("rho = {:?}", model.rho);
            Ok(Outcome::new(serde_json::to_value(&model)?, vec![line]))
        }
        Command::Class(ClassCmd::Check { graph, predicates }) => {
            let g = parse_graph(graph)?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for p in predicates {
                let p = parse_predicate(p)?;
                let member = class_member(&g, p)?;
                lines.push(format!("{p}: {member}"));
                rows.push(json!({ "predicate": p, "member": member }));
            }
            Ok(Outcome::new(json!({ "graph": g.to_string(), "classes": rows }), lines))
        }
        Command::Class(ClassCmd::Distance { graph, predicate }) => {
            let g = parse_graph(graph)?;
            let p = parse_predicate(predicate)?;
            let (dd, ed) = (deletion_distance(&g, p)?, elimination_distance(&g, p)?);
            Ok(Outcome::new(
                json!({ "graph": g.to_string(), "predicate": p, "deletion_distance": dd, "elimination_distance": ed }),
                vec![format!("dd = {dd}, ed = {ed}")],
            ))
        }
        Command::Contractor(ContractorCmd::Solve { g, h, max_edges }) => {
            let (g, h) = (parse_graph(g)?, parse_graph(h)?);
            let alpha = solve_contractor(&g, &h, *max_edges, gl.hom_budget())?;
            let lines = alpha.terms.iter().map(|(t, c)| format!("{c} * {}", t.expr)).collect();
            let mut out = Outcome::new(json!({ "g": g.to_string(), "h": h.to_string(), "contractor": alpha }), lines);
            out.bounds.push(format!("series-parallel terms with at most {max_edges} edges"));
            Ok(out)
        }
        Command::Contractor(ContractorCmd::Simulate { pattern, edge, target, contractor, max_edges }) => {
            let (f, g) = (parse_graph(pattern)?, parse_graph(target)?);
            let &[u, v] = edge.as_slice() else {
                bail!("--edge takes exactly two vertices");
            };
            let e = (u, v);
            let alpha: ContractorCombination = match contractor {
                Some(path) => serde_json::from_str(
                    &fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
                )?,
                None => solve_contractor(&g, &g, *max_edges, gl.hom_budget())?,
            };
            let simulated = simulate_contraction(&f, e, &g, &alpha, gl.hom_budget())?;
            let direct = count_homs_big(&f.contract_edge(e.0, e.1)?, &g);
            let agree = simulated.to_string() == direct.to_string();
            let mut out = Outcome::new(
                json!({ "simulated": simulated.to_string(), "direct": direct.to_string(), "agree": agree }),
                vec![format!("simulated {simulated}, direct {direct}")],
            );
            out.passed = agree;
            Ok(out)
        }
        Command::Suite(SuiteCmd::Run { name }) => {
            let cfg = SuiteConfig {
                max_n: gl.max_n,
                seed: gl.seed,
                threads: gl.threads,
            };
            let outcomes = if name == "all" { run_all(&cfg)? } else { vec![run_suite(name, &cfg)?] };
            let lines = outcomes
                .iter()
                .map(|o| {
                    let verdict = if o.passed { "PASS" } else { "FAIL" };
                    format!("{verdict} {} (criterion {}): {} checks, {} violations", o.suite, o.criterion, o.checked, o.violations)
                })
                .collect();
            Ok(Outcome {
                passed: outcomes.iter().all(|o| o.passed),
                bounds: outcomes.iter().map(|o| format!("{}: {}", o.suite, o.bound)).collect(),
                payload: json!({ "suites": outcomes }),
                summary: lines,
            })
        }
        Command::Suite(SuiteCmd::List) => {
            let lines = SUITES.iter().map(|(n, c)| format!("{n} (criterion {c})")).collect();
            Ok(Outcome::new(json!({ "suites": SUITES.iter().map(|(n, _)| n).collect::<Vec<_>>() }), lines))
        }
        Command::Corpus(CorpusCmd::Ingest { files, out }) => {
            if files.is_empty() {
                bail!("no input files");
            }
            let corpus = ingest_corpus(files, out)?;
            Ok(Outcome::new(
                json!({ "dir": out, "graphs": corpus.len(), "index": corpus.index }),
                vec![format!("{} graphs in {}", corpus.len(), out.display())],
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match with_threads(cli.global.threads, || run(&cli)) {
        Ok(outcome) => {
            let mut report = ExperimentReport::new(
                command_name(&cli.command),
                serde_json::to_value(&cli).expect("arguments serialize"),
                cli.global.seed,
                started,
            );
            report.passed = outcome.passed;
            report.bounds = outcome.bounds;
            report.payload = outcome.payload;
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                for line in &outcome.summary {
                    println!("{line}");
                }
                for b in &report.bounds {
                    println!("bound: {b}");
                }
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
