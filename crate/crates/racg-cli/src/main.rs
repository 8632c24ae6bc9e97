//! Batch front door for the racg library: parse graphs, run the analyzers
//! and generators, play the bounded games, and execute the check suites.
//!
//! Exit codes: 0 when everything asked for passed, 1 when a check failed
//! (the failure names a witness), 2 for usage and input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use racg::aec;
use racg::error::{Error, Result};
use racg::families;
use racg::graph::{CoxeterGraph, VertexSet};
use racg::logic;
use racg::reflect;
use racg::rigidity;
use racg::suite;
use racg::words::{GroupElement, Word};

#[derive(Parser)]
#[command(name = "racg", version, about = "Right-angled Coxeter group toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, JSON ({"vertices": [...], "edges": [[..]]}) or DOT
    #[arg(long)]
    graph: PathBuf,
    /// Override the format inferred from the file extension
    #[arg(long)]
    format: Option<GraphFormat>,
}

impl GraphInput {
    fn read(&self) -> Result<CoxeterGraph> {
        read_graph(&self.graph, self.format)
    }
}

#[derive(Args)]
struct OutputOpts {
    /// Emit the result as JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Graph predicates and the strong-rigidity verdict
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        /// Also check the reflection/parabolic agreement at this radius
        /// over every proper vertex subset (graphs up to 5 vertices)
        #[arg(long)]
        radius: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Canonical form, length, and support of a word
    Nf {
        #[command(flatten)]
        input: GraphInput,
        /// Whitespace-separated vertex names, e.g. "a b a"
        #[arg(long)]
        word: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Build a family instance and print it (optionally against a golden file)
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Subgroup probes: conjugated-basis search, transport, chain checks
    Aec {
        #[command(subcommand)]
        op: AecOp,
    },
    /// Bounded games, the clique-gadget encoding, and the degree laws
    Logic {
        #[command(subcommand)]
        op: LogicOp,
    },
    /// Run named check suites ("rewriting", "reflections", "rigidity",
    /// "families", "aec", "logic")
    Suite {
        /// Suites to run
        names: Vec<String>,
        /// Run every suite
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to one named check (requires exactly one suite)
        #[arg(long)]
        only: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args)]
struct GenerateOpts {
    /// Compare the JSON output against <dir>/<instance>.json
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Print the graph as DOT instead of the full JSON record
    #[arg(long)]
    dot: bool,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Subcommand)]
enum Family {
    /// Subdivided complete graph on n vertices
    K1 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        opts: GenerateOpts,
    },
    /// Iterated two-point closure of a triangle-free base graph
    GammaStar {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        opts: GenerateOpts,
    },
    /// Two-sided member: center pair, naturals prefix, integer windows
    K2 {
        #[arg(long)]
        prefix: usize,
        /// Window radii, comma separated, e.g. 2,2
        #[arg(long, value_delimiter = ',')]
        windows: Vec<usize>,
        #[command(flatten)]
        opts: GenerateOpts,
    },
    /// Independent vertices over a growing clique, with the conjugated ladder
    Smoothness {
        #[arg(long)]
        stages: usize,
        #[arg(long)]
        b_count: usize,
        #[command(flatten)]
        opts: GenerateOpts,
    },
    /// Bipartite half-graph with its conjugated diagonal
    HalfGraph {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        opts: GenerateOpts,
    },
    /// Nested chain whose stagewise conjugations cohere without a common bound
    TitsChain {
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        opts: GenerateOpts,
    },
}

#[derive(Subcommand)]
enum AecOp {
    /// Search for one conjugator exhibiting every element as a conjugated vertex
    Parabolic {
        #[command(flatten)]
        input: GraphInput,
        /// Element words, each a quoted vertex-name list; repeatable
        #[arg(long = "element", required = true)]
        elements: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Re-express a conjugated base inside a standard parabolic
    Transport {
        #[command(flatten)]
        input: GraphInput,
        /// The conjugator of the smaller basis, as a word
        #[arg(long)]
        conjugator: String,
        /// Base vertices of the smaller basis, comma separated
        #[arg(long, value_delimiter = ',')]
        base: Vec<String>,
        /// Vertices of the target standard parabolic, comma separated
        #[arg(long, value_delimiter = ',')]
        target: Vec<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Conjugation identities and inclusion witnesses along the chain
    Smoothness {
        #[arg(long)]
        stages: usize,
        #[arg(long)]
        b_count: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args)]
struct EncodeArgs {
    #[arg(long, default_value_t = 6)]
    clique_size: usize,
    #[arg(long, default_value_t = 2)]
    vertex_detached: usize,
    #[arg(long, default_value_t = 3)]
    edge_attached: usize,
    #[arg(long, default_value_t = 0)]
    closure_depth: usize,
    #[arg(long, default_value_t = 2)]
    closure_cap: usize,
}

impl EncodeArgs {
    fn params(&self) -> logic::EncodeParams {
        logic::EncodeParams {
            clique_size: self.clique_size,
            vertex_detached: self.vertex_detached,
            edge_attached: self.edge_attached,
            closure_depth: self.closure_depth,
            closure_set_cap: self.closure_cap,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GameMode {
    Graph,
    Group,
}

#[derive(Subcommand)]
enum LogicOp {
    /// Encode a graph as an incidence structure with clique gadgets
    Encode {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        params: EncodeArgs,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Recover a graph from an encoded one
    Decode {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        params: EncodeArgs,
        /// Print the decoded graph as DOT instead of JSON
        #[arg(long)]
        dot: bool,
    },
    /// Degree-law verdicts with witnesses
    Taxioms {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Decide the bounded tuple game between two graphs exhaustively
    Game {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        format: Option<GraphFormat>,
        #[arg(long, default_value_t = 2)]
        rounds: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Play a scripted game: the optimal responder answers each move
    Ef {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        format: Option<GraphFormat>,
        #[arg(long, value_enum, default_value_t = GameMode::Group)]
        mode: GameMode,
        #[arg(long, default_value_t = 2)]
        rounds: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
        /// Moves as "left:<word>" or "right:<word>"; repeatable, in order
        #[arg(long = "move", required = true)]
        moves: Vec<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<CoxeterGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    let format = match format {
        Some(f) => f,
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("json") => GraphFormat::Json,
            Some("dot") | Some("gv") => GraphFormat::Dot,
            _ => {
                return Err(Error::input(format!(
                    "{}: cannot infer the graph format from the extension; pass --format",
                    path.display()
                )));
            }
        },
    };
    match format {
        GraphFormat::Json => CoxeterGraph::from_json_str(&text),
        GraphFormat::Dot => CoxeterGraph::from_dot_str(&text),
    }
    .map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn names_to_set(graph: &CoxeterGraph, names: &[String]) -> Result<VertexSet> {
    names.iter().map(|n| graph.vertex(n)).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

/// Ok(0) all good, Ok(1) a check failed and was reported.
fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze { input, radius, out } => analyze(&input.read()?, radius, out.json),
        Command::Nf { input, word, out } => nf(&input.read()?, &word, out.json),
        Command::Generate { family } => generate(family),
        Command::Aec { op } => run_aec(op),
        Command::Logic { op } => run_logic(op),
        Command::Suite { names, all, seed, only, out } => run_suites(names, all, seed, only, out.json),
    }
}

fn analyze(graph: &CoxeterGraph, radius: Option<usize>, as_json: bool) -> Result<u8> {
    let triangle = graph.triangle_witness();
    let star_prop = graph.star_property_witness();
    let star_conn = graph.star_connected_witness();
    let p4 = graph.contains_p4();
    let outcome = rigidity::certify_strong_rigidity(graph);

    let mut agreement_failures: Vec<String> = Vec::new();
    if let Some(r) = radius {
        let n = graph.vertex_count();
        for mask in 0..1u64 << n {
            if mask.count_ones() as usize == n {
                continue;
            }
            let t: VertexSet =
                (0..n as u32).filter(|v| mask & (1 << v) != 0).collect();
            let a = reflect::reflections_agree_on_parabolic(graph, &t, r)?;
            if !a.agree {
                agreement_failures.push(format!("{:?}", graph.names(&t)));
            }
        }
    }

    if as_json {
        print_json(&json!({
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "triangle_free": triangle.is_none(),
            "star_property": star_prop.is_none(),
            "star_connected": star_conn.is_none(),
            "p4_subgraph": p4,
            "rigidity": outcome.to_json(),
            "reflection_agreement_failures": agreement_failures,
        }));
    } else {
        println!("graph: {} vertices, {} edges", graph.vertex_count(), graph.edge_count());
        match triangle {
            None => println!("triangle-free: yes"),
            Some([a, b, c]) => println!(
                "triangle-free: no ({}, {}, {})",
                graph.name(a),
                graph.name(b),
                graph.name(c)
            ),
        }
        match star_prop {
            None => println!("star property: yes"),
            Some((u, v)) => println!(
                "star property: no (st({}) is contained in st({}))",
                graph.name(v),
                graph.name(u)
            ),
        }
        match star_conn {
            None => println!("star-connected: yes"),
            Some(v) => println!(
                "star-connected: no (removing st({}) disconnects the rest)",
                graph.name(v)
            ),
        }
        println!("path on four vertices as subgraph: {}", yes_no(p4));
        match outcome.certificate() {
            Some(c) => println!("rigidity: certified (criterion {})", c.criterion),
            None => {
                let r = outcome.refusal().expect("refused");
                println!(
                    "rigidity: refused ({}: {}; {}: {})",
                    r.criterion1.condition,
                    r.criterion1.witness,
                    r.criterion2.condition,
                    r.criterion2.witness
                );
            }
        }
        if radius.is_some() {
            if agreement_failures.is_empty() {
                println!("reflection agreement on every proper subset: yes");
            } else {
                println!("reflection agreement FAILED on: {}", agreement_failures.join(", "));
            }
        }
    }
    Ok(if agreement_failures.is_empty() { 0 } else { 1 })
}

fn nf(graph: &CoxeterGraph, word: &str, as_json: bool) -> Result<u8> {
    let parsed = Word::parse(graph, word)?;
    let canonical = parsed.normal_form();
    if as_json {
        print_json(&json!({
            "word": word,
            "canonical": canonical.to_string(),
            "length": canonical.len(),
            "support": graph.names(&canonical.support()),
            "input_was_normal": parsed.is_normal(),
        }));
    } else {
        println!("{canonical}");
    }
    Ok(0)
}

fn generate(family: Family) -> Result<u8> {
    let (key, value, graph, opts) = match family {
        Family::K1 { n, opts } => {
            let inst = families::k1_member(n)?;
            (format!("k1-{n}"), inst.to_json(), inst.graph, opts)
        }
        Family::GammaStar { input, depth, opts } => {
            let inst = families::gamma_star(&input.read()?, depth)?;
            (format!("gamma-star-{depth}"), inst.to_json(), inst.graph, opts)
        }
        Family::K2 { prefix, windows, opts } => {
            let inst = families::k2_member(prefix, &windows)?;
            let tag: Vec<String> = windows.iter().map(|w| w.to_string()).collect();
            (format!("k2-{prefix}-{}", tag.join("-")), inst.to_json(), inst.graph, opts)
        }
        Family::Smoothness { stages, b_count, opts } => {
            let chain = families::smoothness_chain(stages, b_count)?;
            let value = json!({
                "instance": chain.instance.to_json(),
                "c": chain.c.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "e": chain.e.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            });
            (
                format!("smoothness-{stages}-{b_count}"),
                value,
                chain.instance.graph,
                opts,
            )
        }
        Family::HalfGraph { k, opts } => {
            let hg = families::half_graph(k)?;
            let value = json!({
                "instance": hg.instance.to_json(),
                "t": hg.t.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "c": hg.c.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            });
            (format!("half-graph-{k}"), value, hg.instance.graph, opts)
        }
        Family::TitsChain { depth, opts } => {
            let w = rigidity::tits_limit_witness(depth)?;
            let value = json!({
                "graph": w.graph.to_json(),
                "report": serde_json::to_value(&w.report).expect("serializable"),
            });
            (format!("tits-chain-{depth}"), value, w.graph, opts)
        }
    };

    let rendered = serde_json::to_string_pretty(&value).expect("serializable");
    if let Some(dir) = &opts.golden {
        let path = dir.join(format!("{key}.json"));
        let golden = std::fs::read_to_string(&path)
            .map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
        if golden.trim_end() != rendered {
            println!("golden mismatch for {key}: regenerate or inspect {}", path.display());
            return Ok(1);
        }
        println!("{key}: matches {}", path.display());
        return Ok(0);
    }
    if opts.dot {
        print!("{}", graph.to_dot());
    } else if opts.out.json {
        println!("{rendered}");
    } else {
        println!(
            "{key}: {} vertices, {} edges",
            graph.vertex_count(),
            graph.edge_count()
        );
        print!("{}", graph.to_dot());
    }
    Ok(0)
}

fn run_aec(op: AecOp) -> Result<u8> {
    match op {
        AecOp::Parabolic { input, elements, max_len, out } => {
            let graph = input.read()?;
            let els: Vec<GroupElement> = elements
                .iter()
                .map(|w| GroupElement::parse(&graph, w))
                .collect::<Result<_>>()?;
            match aec::parabolic_search(&graph, &els, max_len)? {
                Some(w) => {
                    if out.json {
                        print_json(&json!({ "found": true, "witness": w.to_json() }));
                    } else {
                        println!(
                            "conjugator: {}\nbase: {:?}",
                            w.conjugator,
                            graph.names(&w.base_vertices)
                        );
                    }
                    Ok(0)
                }
                None => {
                    if out.json {
                        print_json(&json!({ "found": false }));
                    } else {
                        println!("no conjugator of length <= {max_len} works");
                    }
                    Ok(1)
                }
            }
        }
        AecOp::Transport { input, conjugator, base, target, out } => {
            let graph = input.read()?;
            let s_basis = aec::BasisWitness {
                conjugator: GroupElement::parse(&graph, &conjugator)?,
                base_vertices: names_to_set(&graph, &base)?,
            };
            let t_set = names_to_set(&graph, &target)?;
            let t_basis = aec::is_standard_parabolic(&graph, &t_set)?;
            let h = aec::coherence_transport(&s_basis, &t_basis, &t_set)?;
            if out.json {
                print_json(&json!({ "transported_conjugator": h.to_string() }));
            } else {
                println!("{h}");
            }
            Ok(0)
        }
        AecOp::Smoothness { stages, b_count, out } => {
            let report = aec::smoothness_chain_check(stages, b_count)?;
            let ok = report.identity_failures.is_empty()
                && report.inclusions.iter().all(|w| w.verified);
            if out.json {
                print_json(&serde_json::to_value(&report).expect("serializable"));
            } else {
                println!(
                    "identities: {} checked, {} failed; inclusions: {} verified",
                    report.conjugation_identities_checked,
                    report.identity_failures.len(),
                    report.inclusions.len()
                );
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn parse_side_move(text: &str) -> Result<(logic::Side, String)> {
    let Some((side, rest)) = text.split_once(':') else {
        return Err(Error::input(format!(
            "move {text:?} must look like left:<word> or right:<word>"
        )));
    };
    let side = match side {
        "left" => logic::Side::Left,
        "right" => logic::Side::Right,
        other => return Err(Error::input(format!("unknown side {other:?}"))),
    };
    Ok((side, rest.to_string()))
}

fn run_logic(op: LogicOp) -> Result<u8> {
    match op {
        LogicOp::Encode { input, params, out } => {
            let enc = logic::rg_encode(&input.read()?, &params.params())?;
            if out.json {
                print_json(&enc.to_json());
            } else {
                println!(
                    "{} vertices, {} edges, {} gadgets, {} closure vertices",
                    enc.graph.vertex_count(),
                    enc.graph.edge_count(),
                    enc.gadgets.len(),
                    enc.closure_names.len()
                );
            }
            Ok(0)
        }
        LogicOp::Decode { input, params, dot } => {
            let decoded = logic::rg_decode(&input.read()?, &params.params())?;
            if dot {
                print!("{}", decoded.to_dot());
            } else {
                println!("{}", decoded.to_json_string());
            }
            Ok(0)
        }
        LogicOp::Taxioms { input, out } => {
            let report = logic::check_t_axioms(&input.read()?);
            if out.json {
                print_json(&serde_json::to_value(&report).expect("serializable"));
            } else {
                for clause in &report.clauses {
                    match &clause.witness {
                        None => println!("({}) holds", clause.clause),
                        Some(w) => println!("({}) fails: {w}", clause.clause),
                    }
                }
                println!("(cardinality clause is about infinite models; skipped)");
            }
            Ok(if report.all_hold() { 0 } else { 1 })
        }
        LogicOp::Game { left, right, format, rounds, cap, out } => {
            let l = read_graph(&left, format)?;
            let r = read_graph(&right, format)?;
            let wins = logic::ii_wins_graph_game(&l, &r, rounds, cap)?;
            if out.json {
                print_json(&json!({ "rounds": rounds, "tuple_cap": cap, "ii_wins": wins }));
            } else if wins {
                println!("the responder survives {rounds} rounds");
            } else {
                println!("the challenger wins within {rounds} rounds");
            }
            Ok(0)
        }
        LogicOp::Ef { left, right, format, mode, rounds, cap, moves, out } => {
            let l = read_graph(&left, format)?;
            let r = read_graph(&right, format)?;
            let mut pos = match mode {
                GameMode::Graph => logic::EFPosition::graph_game(&l, &r, rounds, cap)?,
                GameMode::Group => logic::EFPosition::group_game(&l, &r, rounds, cap)?,
            };
            let mut strategy = logic::DerivedStrategy::new(&l, &r, cap)?;
            let mut last = logic::EFStatus::Ongoing;
            for text in &moves {
                let (side, word) = parse_side_move(text)?;
                let own = match side {
                    logic::Side::Left => &l,
                    logic::Side::Right => &r,
                };
                let mv = match mode {
                    GameMode::Graph => logic::EFMove::Vertices(
                        word.split_whitespace()
                            .map(|n| own.vertex(n))
                            .collect::<Result<_>>()?,
                    ),
                    GameMode::Group => logic::EFMove::Element(GroupElement::parse(own, &word)?),
                };
                last = logic::ef_referee(&mut pos, mv, side, &mut strategy)?;
                if matches!(last, logic::EFStatus::IiLoses { .. }) {
                    break;
                }
            }
            if out.json {
                print_json(&json!({
                    "transcript": pos.to_json(),
                    "status": serde_json::to_value(&last).expect("serializable"),
                }));
            } else {
                match last {
                    logic::EFStatus::Ongoing => println!(
                        "ongoing after {} of {} rounds",
                        pos.rounds_played(),
                        pos.bound()
                    ),
                    logic::EFStatus::IiLoses { round } => {
                        println!("the responder loses at round {round}");
                    }
                    logic::EFStatus::IiSurvives { rounds } => {
                        println!("the responder survives all {rounds} rounds");
                    }
                }
            }
            Ok(0)
        }
    }
}

fn run_suites(
    names: Vec<String>,
    all: bool,
    seed: u64,
    only: Option<String>,
    as_json: bool,
) -> Result<u8> {
    let names: Vec<String> = if all {
        if !names.is_empty() {
            return Err(Error::input("pass suite names or --all, not both".to_string()));
        }
        suite::SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else if names.is_empty() {
        return Err(Error::input(format!(
            "choose suites ({}) or pass --all",
            suite::SUITE_NAMES.join(", ")
        )));
    } else {
        names
    };
    if only.is_some() && names.len() != 1 {
        return Err(Error::input("--only needs exactly one suite".to_string()));
    }

    let mut reports = Vec::new();
    for name in &names {
        reports.push(suite::run_suite_check(name, seed, only.as_deref())?);
    }
    let failed: usize = reports.iter().map(|r| r.failed).sum();

    if as_json {
        let value = json!({
            "seed": seed,
            "failed": failed,
            "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        });
        print_json(&value);
    } else {
        for report in &reports {
            println!("suite {}: {}/{} passed", report.suite, report.passed, report.checks.len());
            for check in &report.checks {
                if check.passed {
                    println!("  ok   {}", check.check);
                } else {
                    println!("  FAIL {}", check.check);
                    if let Some(w) = &check.witness {
                        println!("       witness: {w}");
                    }
                    println!("       replay: {}", check.replay);
                }
            }
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn main() -> ExitCode {
    // Restore the default SIGPIPE disposition so that piping output into
    // tools like `head` terminates the process quietly instead of
    // panicking on a closed stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
