//! `pcg`: command-line front-end for the pcgroup deciders.
//!
//! Every command prints one JSON document on stdout. Exit status is 0 for any
//! computed answer (including "no" and "inconclusive"), 2 for bad input and 3
//! when a resource budget was exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pcgroup::{
    classify_with, coloured_block_graph, commutator_nontrivial_criterion, decide_embedding, decide_ege,
    decide_universal_equivalence, iterated_commutator, Ball, Budget, Cause, DecideOptions, EqVerdict, Error,
    PathConvention, PcGroup, SimplicialGraph, Verdict, Word,
};
use serde_json::{json, Value};

const DISPATCH_HELP: &str = "\
Dispatch tags reported in the \"reason\" field:
  extension-graph-search       ball search in the extension graph, complete up to
                               the explicit radius bound for induced subgraphs
  clique-source                free abelian source: embeds iff the target has a
                               clique at least as large
  clique-target                free abelian target: only smaller cliques embed
  forest-source                forest sources embed iff they embed in the
                               extension graph
  complement-of-forest-source  sources whose complement is a forest embed iff
                               they embed in the extension graph
  triangle-free-target         triangle-free targets detect embeddings through
                               their extension graph
  triangle-built-target        targets without induced squares or induced paths
                               with three edges detect embeddings likewise
  general-embedding-problem-not-covered
                               no known reduction applies
  atomic-rigidity              atomic graphs are universally equivalent iff
                               isomorphic
  deflation-triangle-sentence  the commuting-triple sentence holds for exactly
                               one group
  triangle-free-deflation      universal equivalence via mutual embeddings into
                               extension graphs of inflations
  triangle-built               as above, for a triangle-built graph
  no-covered-class             no decision procedure applies

Commutators are left-normed: [x, y] = x^-1 y^-1 x y and
[x1, ..., xk] = [x1, ..., x(k-1)]^-1 xk^-1 [x1, ..., x(k-1)] xk.

Exit status: 0 on any computed answer, 2 on input errors, 3 on budget trips.";

#[derive(Parser)]
#[command(name = "pcg", version, about = "Decision procedures for partially commutative groups", after_help = DISPATCH_HELP)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Largest extension-graph radius to search.
    #[arg(long, global = true, default_value_t = 3)]
    cap: u64,
    /// Search up to the theoretical radius instead of --cap.
    #[arg(long, global = true)]
    full: bool,
    /// Maximum number of ball vertices before giving up.
    #[arg(long, global = true, env = "PCG_BUDGET_VERTICES", default_value_t = 100_000)]
    budget_vertices: usize,
    /// Maximum number of conjugates enumerated before giving up.
    #[arg(long, global = true, env = "PCG_BUDGET_CONJUGATES", default_value_t = 5_000_000)]
    budget_conjugates: u64,
    /// Print a human-readable summary on stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    /// Length convention for the forbidden path in triangle-built graphs.
    #[arg(long, global = true, value_enum, default_value_t = Convention::Edges)]
    path_convention: Convention,
    /// Recurse into the factors of a join target before searching balls.
    #[arg(long, global = true)]
    split_joins: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    /// The path has three edges.
    Edges,
    /// The path has three vertices.
    Vertices,
}

#[derive(Subcommand)]
enum Command {
    /// Geodesic normal form of a word.
    Normalize {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Whether two words are conjugate.
    Conjugate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        first: String,
        #[arg(long, allow_hyphen_values = true)]
        second: String,
    },
    /// Block decomposition and least root of a word.
    Blocks {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Generators of the centraliser of a word.
    Centralizer {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Graph predicates used for dispatch.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Quotient by equal closed stars.
    Deflate {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Replace every vertex by a clique of the given size.
    Inflate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        copies: usize,
    },
    /// Ball of the extension graph.
    Ball {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        radius: u64,
    },
    /// Is the source an induced subgraph of the target's extension graph?
    #[command(after_help = DISPATCH_HELP)]
    Ege {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Does the source group embed in the target group?
    #[command(after_help = DISPATCH_HELP)]
    Embed {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Are the two groups universally equivalent?
    #[command(after_help = DISPATCH_HELP)]
    UnivEq {
        #[arg(long)]
        delta: PathBuf,
        #[arg(long)]
        gamma: PathBuf,
    },
    /// Iterated commutator of distinct generators and its triviality.
    #[command(after_help = DISPATCH_HELP)]
    CommutatorCheck {
        #[arg(long)]
        graph: PathBuf,
        /// Generator names, space or comma separated.
        #[arg(long)]
        vertices: String,
    },
    /// Coloured commutation graph of the blocks of a tuple of words.
    BlockGraph {
        #[arg(long)]
        graph: PathBuf,
        /// One word per occurrence.
        #[arg(long = "word", required = true, allow_hyphen_values = true)]
        words: Vec<String>,
    },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Output {
    value: Value,
    budget_tripped: bool,
    summary: String,
}

impl Output {
    fn plain(value: Value, summary: String) -> Self {
        Output { value, budget_tripped: false, summary }
    }
}

fn read_graph(path: &Path) -> Result<SimplicialGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    SimplicialGraph::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse(group: &PcGroup, text: &str) -> Result<Word, Failure> {
    Ok(group.parse_word(text)?)
}

fn verdict_output(v: &Verdict) -> Output {
    let summary = format!(
        "{} ({}, {}){}",
        v.outcome.tag(),
        v.reason.tag(),
        v.cause.tag(),
        v.searched_radius.map(|r| format!(", searched radius {r}")).unwrap_or_default()
    );
    Output { value: v.to_json_value(), budget_tripped: v.cause == Cause::BudgetExceeded, summary }
}

fn eq_output(v: &EqVerdict) -> Output {
    let tripped = v
        .detail
        .as_ref()
        .is_some_and(|(a, b)| a.cause == Cause::BudgetExceeded || b.cause == Cause::BudgetExceeded);
    Output { value: v.to_json_value(), budget_tripped: tripped, summary: format!("{} ({})", v.outcome.tag(), v.reason.tag()) }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let g = &cli.global;
    let convention = match g.path_convention {
        Convention::Edges => PathConvention::Edges,
        Convention::Vertices => PathConvention::Vertices,
    };
    let budget = Budget { max_vertices: g.budget_vertices, max_conjugates: g.budget_conjugates };
    let opts = DecideOptions {
        cap: if g.full { None } else { Some(g.cap) },
        budget,
        split_joins: g.split_joins,
        path_convention: convention,
    };
    let out = match &cli.command {
        Command::Normalize { graph, word } => {
            let group = PcGroup::new(read_graph(graph)?);
            let nf = group.normal_form(&parse(&group, word)?)?;
            let s = group.format_word(&nf);
            Output::plain(json!({ "word": s }), format!("normal form: {s:?} (length {})", nf.len()))
        }
        Command::Conjugate { graph, first, second } => {
            let group = PcGroup::new(read_graph(graph)?);
            let (a, b) = (parse(&group, first)?, parse(&group, second)?);
            let c = group.is_conjugate(&a, &b)?;
            Output::plain(json!({ "conjugate": c }), format!("conjugate: {c}"))
        }
        Command::Blocks { graph, word } => {
            let group = PcGroup::new(read_graph(graph)?);
            let w = parse(&group, word)?;
            let d = group.block_decomposition(&w)?;
            let blocks: Vec<Value> = d
                .blocks
                .iter()
                .map(|b| json!({ "root": group.format_word(&b.root), "exponent": b.exponent }))
                .collect();
            let least_root = if group.is_trivial(&w)? {
                Value::Null
            } else {
                let (root, k) = group.least_root(&w)?;
                json!({ "root": group.format_word(&root), "exponent": k })
            };
            let n = blocks.len();
            Output::plain(
                json!({ "conjugator": group.format_word(&d.conjugator), "blocks": blocks, "least_root": least_root }),
                format!("{n} block(s)"),
            )
        }
        Command::Centralizer { graph, word } => {
            let group = PcGroup::new(read_graph(graph)?);
            let basis = group.centralizer_basis(&parse(&group, word)?)?;
            let show = |ws: &[Word]| ws.iter().map(|w| group.format_word(w)).collect::<Vec<_>>();
            Output::plain(
                json!({ "cyclic": show(&basis.cyclic_parts), "abelian": show(&basis.abelian_part) }),
                format!("{} cyclic, {} abelian generator(s)", basis.cyclic_parts.len(), basis.abelian_part.len()),
            )
        }
        Command::Classify { graph } => {
            let report = classify_with(&read_graph(graph)?, convention);
            let value = serde_json::to_value(&report).expect("report serialises");
            Output::plain(value, format!("{report:?}"))
        }
        Command::Deflate { graph } => {
            let d = read_graph(graph)?.deflation();
            let n = d.len();
            Output::plain(d.to_json_value(), format!("deflation has {n} vertices"))
        }
        Command::Inflate { graph, copies } => {
            let i = read_graph(graph)?.inflation(*copies)?;
            let n = i.len();
            Output::plain(i.to_json_value(), format!("inflation has {n} vertices"))
        }
        Command::Ball { graph, radius } => {
            let ball = Ball::new(&read_graph(graph)?, *radius, budget)?;
            Output::plain(
                ball.to_json_value(),
                format!("ball of radius {radius}: {} vertices, {} edges", ball.graph().len(), ball.graph().edge_count()),
            )
        }
        Command::Ege { source, target } => {
            let (s, t) = (read_graph(source)?, read_graph(target)?);
            verdict_output(&decide_ege(&s, &t, &opts)?)
        }
        Command::Embed { source, target } => {
            let (s, t) = (read_graph(source)?, read_graph(target)?);
            verdict_output(&decide_embedding(&s, &t, &opts)?)
        }
        Command::UnivEq { delta, gamma } => {
            let (d, gm) = (read_graph(delta)?, read_graph(gamma)?);
            eq_output(&decide_universal_equivalence(&d, &gm, &opts)?)
        }
        Command::CommutatorCheck { graph, vertices } => {
            let graph = read_graph(graph)?;
            let seq = vertices
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|name| graph.vertex(name))
                .collect::<pcgroup::Result<Vec<usize>>>()?;
            let criterion = commutator_nontrivial_criterion(&graph, &seq)?;
            let group = PcGroup::new(graph);
            let c = iterated_commutator(&seq)?;
            let nf = group.normal_form(&c)?;
            Output::plain(
                json!({
                    "commutator": group.format_word(&c),
                    "normal_form": group.format_word(&nf),
                    "trivial": nf.is_empty(),
                    "criterion_nontrivial": criterion,
                }),
                format!("trivial: {}, criterion predicts non-trivial: {criterion}", nf.is_empty()),
            )
        }
        Command::BlockGraph { graph, words } => {
            let group = PcGroup::new(read_graph(graph)?);
            let tuple = words.iter().map(|w| parse(&group, w)).collect::<Result<Vec<_>, _>>()?;
            let cg = coloured_block_graph(&group, &tuple)?;
            let n = cg.graph().len();
            Output::plain(cg.to_json_value(), format!("{n} block vertices"))
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.value);
            if cli.global.verbose {
                eprintln!("{}", out.summary);
            }
            if out.budget_tripped {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
