use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use tdgame::format::{parse_graph, serialize_graph, split_payloads, GraphFormat, GraphText};
use tdgame::{exit, exit_code, load_corpus, run_paper_suite, survey, write_rows, Corpus, Emit, Style};
use tdgame_core::enumerate::enumerate_trees;
use tdgame_core::verify::{check_continuation, explore_trees, ContinuationMode};
use tdgame_core::{
    family, gamma_t, grundy_t, gtg, induced_matching_number, ooir, upper_gamma_t, FamilySpec, Graph,
    IndicatedSolver, VertexSet, Witness,
};

/// Exact solvers for the indicated total domination game and related
/// invariants.
#[derive(Parser)]
#[command(name = "tdgame", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of one graph.
    Invariant(InvariantArgs),
    /// Run verification suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Compute all invariants over a corpus and check the known relations.
    Survey(SurveyArgs),
    /// Enumerate free trees, or probe tree conjectures with --probe.
    Trees(TreesArgs),
    /// Print a generated family member.
    Family(FamilyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Family spec, e.g. path:7, cyclepower:7,2, corona:complete3.
    #[arg(long)]
    graph: Option<String>,
    /// Read the graph from a file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Gt,
    Ugt,
    Gti,
    Gtg,
    Grt,
    Ooir,
    Nui,
    All,
}

const ALL: [Which; 7] = [Which::Gt, Which::Ugt, Which::Gti, Which::Gtg, Which::Grt, Which::Ooir, Which::Nui];

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Gt => "gt",
            Which::Ugt => "ugt",
            Which::Gti => "gti",
            Which::Gtg => "gtg",
            Which::Grt => "grt",
            Which::Ooir => "ooir",
            Which::Nui => "nui",
            Which::All => "all",
        }
    }
}

#[derive(Args)]
struct InvariantArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Format of --file.
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
    /// Comma-separated invariants.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    which: Vec<Which>,
    /// Vertices declared already totally dominated (gti only).
    #[arg(long, value_delimiter = ',')]
    declared: Vec<usize>,
    /// Print one JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Recompute every published value and bound.
    Paper {
        /// Omit per-row timings, so repeated runs print identical output.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check gti(G|A) <= gti(G|B) over pairs B ⊆ A.
    Continuation(ContinuationArgs),
}

#[derive(Args)]
struct ContinuationArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
    /// Every pair (the default); needs n <= 7.
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Number of seeded random pairs.
    #[arg(long, requires = "seed")]
    samples: Option<usize>,
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("corpus").required(true).args(["exhaustive", "random", "file"])))]
struct SurveyArgs {
    /// All isolate-free graphs of this order (at most 8).
    #[arg(long)]
    exhaustive: Option<usize>,
    /// Random corpus `n,p,count,seed` from G(n, p), isolates redrawn.
    #[arg(long, value_parser = Corpus::random_from_str)]
    random: Option<Corpus>,
    /// Corpus file: graph6 one per line, or blank-line separated edge lists.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_parser = |s: &str| s.parse::<Emit>(), default_value = "csv")]
    emit: Emit,
}

#[derive(Args)]
struct TreesArgs {
    /// Largest order, 2..=12.
    #[arg(long)]
    max: usize,
    /// Solve each tree and report on the tree conjectures.
    #[arg(long)]
    probe: bool,
}

#[derive(Args)]
struct FamilyArgs {
    spec: String,
    #[arg(long, value_enum, default_value = "edgelist")]
    emit: FormatArg,
}

/// An error message with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: exit::USAGE, message: message.into() }
    }
}

impl From<tdgame_core::Error> for Failure {
    fn from(e: tdgame_core::Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

impl From<tdgame::ParseError> for Failure {
    fn from(e: tdgame::ParseError) -> Self {
        match e {
            tdgame::ParseError::Graph(inner) => inner.into(),
            e if e.is_capacity() => Failure { code: exit::PRECONDITION, message: e.to_string() },
            e => Failure::usage(e.to_string()),
        }
    }
}

impl From<tdgame::SurveyError> for Failure {
    fn from(e: tdgame::SurveyError) -> Self {
        use tdgame::SurveyError::*;
        let code = match &e {
            Solver { source, .. } | Core(source) => exit_code(source),
            Parse { source, .. } if source.is_capacity() => exit::PRECONDITION,
            _ => exit::USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn style() -> Style {
    let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    if no_color || !io::stdout().is_terminal() {
        Style::Plain
    } else {
        Style::Color
    }
}

fn load_graph(source: &GraphSource, format: FormatArg) -> Result<(String, Graph), Failure> {
    if let Some(spec) = &source.graph {
        let spec: FamilySpec = spec.parse()?;
        return Ok((spec.to_string(), family(&spec)?));
    }
    let path = source.file.as_ref().expect("clap requires --graph or --file");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let format = GraphFormat::from(format);
    // A graph6 file may hold several graphs; use the first.
    let payload = match format {
        GraphFormat::Graph6 => split_payloads(&text, format).into_iter().next().unwrap_or_default(),
        GraphFormat::EdgeList => text,
    };
    Ok((path.display().to_string(), parse_graph(&GraphText::new(format, payload))?))
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Vertices(s) => json!(s.iter().collect::<Vec<_>>()),
        Witness::Edges(es) => json!(es),
        Witness::None => Value::Null,
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Vertices(s) => format!("{s}"),
        Witness::Edges(es) => es.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" "),
        Witness::None => String::new(),
    }
}

fn invariant(args: InvariantArgs) -> Result<i32, Failure> {
    let (name, g) = load_graph(&args.source, args.format)?;
    let mut which: Vec<Which> = Vec::new();
    for w in args.which {
        let expanded: &[Which] = if w == Which::All { &ALL } else { std::slice::from_ref(&w) };
        for &x in expanded {
            if !which.contains(&x) {
                which.push(x);
            }
        }
    }
    let declared: VertexSet = args.declared.iter().collect();
    if let Some(&v) = args.declared.iter().find(|&&v| v >= g.order()) {
        return Err(Failure::usage(format!("declared vertex {v} out of range for order {}", g.order())));
    }
    // (value, witness)
    let mut results: Vec<(Which, usize, Witness)> = Vec::new();
    for w in which {
        let (value, witness) = match w {
            Which::Gt => split(gamma_t(&g)?),
            Which::Ugt => split(upper_gamma_t(&g)?),
            Which::Ooir => split(ooir(&g)?),
            Which::Nui => split(induced_matching_number(&g)?),
            Which::Gti => (IndicatedSolver::new(&g)?.value(declared)?, Witness::None),
            Which::Gtg => (gtg(&g)?, Witness::None),
            Which::Grt => (grundy_t(&g)?, Witness::None),
            Which::All => unreachable!(),
        };
        results.push((w, value, witness));
    }
    let mut out = io::stdout().lock();
    if args.json {
        let mut obj = Map::new();
        obj.insert("graph".into(), json!(name));
        obj.insert("n".into(), json!(g.order()));
        obj.insert("m".into(), json!(g.edge_count()));
        obj.insert("declared".into(), json!(declared.iter().collect::<Vec<_>>()));
        for (w, value, witness) in &results {
            let mut entry = Map::new();
            entry.insert("value".into(), json!(value));
            if *witness != Witness::None {
                entry.insert("witness".into(), witness_json(witness));
            }
            obj.insert(w.name().into(), Value::Object(entry));
        }
        writeln!(out, "{}", Value::Object(obj))?;
    } else {
        writeln!(out, "{name}: n={} m={}", g.order(), g.edge_count())?;
        for (w, value, witness) in &results {
            let label = if *w == Which::Gti && !declared.is_empty() {
                format!("gti(G|{declared})")
            } else {
                w.name().to_string()
            };
            let wt = witness_text(witness);
            if wt.is_empty() {
                writeln!(out, "{label:<5} = {value}")?;
            } else {
                writeln!(out, "{label:<5} = {value}  witness {wt}")?;
            }
        }
    }
    Ok(exit::SUCCESS)
}

fn split(v: tdgame_core::InvariantValue) -> (usize, Witness) {
    (v.value, v.witness)
}

fn verify_paper(no_timing: bool) -> Result<i32, Failure> {
    let report = run_paper_suite();
    print!("{}", report.render(!no_timing, style()));
    Ok(if report.passed() { exit::SUCCESS } else { exit::VERIFICATION_FAILED })
}

fn verify_continuation(args: ContinuationArgs) -> Result<i32, Failure> {
    let (name, g) = load_graph(&args.source, args.format)?;
    let mode = match (args.samples, args.seed) {
        (Some(count), Some(seed)) => ContinuationMode::Sampled { count, seed },
        _ => ContinuationMode::Exhaustive,
    };
    let report = check_continuation(&g, mode)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{name}: {} pairs checked, {} violations", report.pairs, report.violations.len())?;
    for v in &report.violations {
        writeln!(out, "  A={} B={}: gti(G|A)={} > gti(G|B)={}", v.a, v.b, v.value_a, v.value_b)?;
    }
    Ok(if report.passes() { exit::SUCCESS } else { exit::VERIFICATION_FAILED })
}

fn run_survey(args: SurveyArgs) -> Result<i32, Failure> {
    let corpus = match (args.exhaustive, args.random, args.file) {
        (Some(n), _, _) => Corpus::Exhaustive(n),
        (_, Some(random), _) => random,
        (_, _, Some(path)) => Corpus::File { path, format: args.format.into() },
        _ => unreachable!("clap requires a corpus"),
    };
    let loaded = load_corpus(&corpus)?;
    if let Corpus::Random { seed, .. } = corpus {
        eprintln!("seed {seed}: {} draws with isolated vertices rejected", loaded.rejected);
    }
    let rows = survey(&loaded.graphs)?;
    match &args.out {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| Failure::usage(format!("cannot create {}: {e}", path.display())))?;
            write_rows(&rows, args.emit, io::BufWriter::new(file))?;
        }
        None => write_rows(&rows, args.emit, io::stdout().lock())?,
    }
    let bad = rows.iter().filter(|r| !r.passes()).count();
    if bad > 0 {
        eprintln!("{bad} of {} graphs violate a chain inequality", rows.len());
        return Ok(exit::VERIFICATION_FAILED);
    }
    Ok(exit::SUCCESS)
}

fn trees(args: TreesArgs) -> Result<i32, Failure> {
    if !(2..=tdgame_core::enumerate::MAX_TREE_ORDER).contains(&args.max) {
        return Err(tdgame_core::Error::OrderOutOfRange {
            order: args.max,
            min: 2,
            max: tdgame_core::enumerate::MAX_TREE_ORDER,
        }
        .into());
    }
    let mut out = io::stdout().lock();
    if !args.probe {
        for n in 2..=args.max {
            let trees = enumerate_trees(n)?;
            eprintln!("n={n}: {} trees", trees.len());
            for t in &trees {
                writeln!(out, "{}", serialize_graph(t, GraphFormat::Graph6).payload)?;
            }
        }
        return Ok(exit::SUCCESS);
    }
    let report = explore_trees(args.max)?;
    writeln!(out, "n   trees  ugt=gti  gti<=2nui  leaf-anchored  bound-failures")?;
    for n in 2..=args.max {
        let rows: Vec<_> = report.rows.iter().filter(|r| r.tree.order() == n).collect();
        let count =
            |f: &dyn Fn(&&tdgame_core::verify::TreeProbeRow) -> bool| rows.iter().filter(|r| f(r)).count();
        writeln!(
            out,
            "{n:<3} {:<6} {:<8} {:<10} {:<14} {}",
            rows.len(),
            count(&|r| r.ugt_equals_gti()),
            count(&|r| r.gti_within_twice_nui()),
            count(&|r| r.leaf_matching),
            count(&|r| !r.restricted_claim_holds()),
        )?;
    }
    writeln!(out, "Gamma_t = gti on trees: {}", report.ugt_vs_gti())?;
    writeln!(out, "gti <= 2 nu_I on trees: {}", report.gti_vs_matching())?;
    let failures = report.restricted_failures();
    if failures.is_empty() {
        writeln!(
            out,
            "leaf-anchored matching bound gti <= 2 nu_I: holds on all {} qualifying trees",
            report.qualifying()
        )?;
        Ok(exit::SUCCESS)
    } else {
        for r in failures {
            writeln!(
                out,
                "leaf-anchored matching bound violated: {} (gti={}, nu_I={})",
                tdgame_core::verify::describe(&r.tree),
                r.gti,
                r.nui
            )?;
        }
        Ok(exit::VERIFICATION_FAILED)
    }
}

fn family_cmd(args: FamilyArgs) -> Result<i32, Failure> {
    let spec: FamilySpec = args.spec.parse()?;
    let g = family(&spec)?;
    println!("{}", serialize_graph(&g, args.emit.into()).payload);
    Ok(exit::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariant(a) => invariant(a),
        Command::Verify(VerifyCommand::Paper { no_timing }) => verify_paper(no_timing),
        Command::Verify(VerifyCommand::Continuation(a)) => verify_continuation(a),
        Command::Survey(a) => run_survey(a),
        Command::Trees(a) => trees(a),
        Command::Family(a) => family_cmd(a),
    };
    let code = result.unwrap_or_else(|f| {
        eprintln!("error: {}", f.message);
        f.code
    });
    ExitCode::from(code as u8)
}
