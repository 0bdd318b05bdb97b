use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use girthlab::bsg::BlockStructureGraph;
use girthlab::construction::{
    build_mother, import_alist, lift_with, write_alist, Anchoring, CodeDescriptor, CodeParams,
    LiftedCode, SlopeSequence, SparseMatrix,
};
use girthlab::girth::{g_max, girth_bfs, girth_bsg, gmax_sweep, sweep_csv, GirthResult, Witness};
use girthlab::parallel;
use girthlab::search::{min_m_search, search, SearchConfig, Strategy};
use girthlab::table::{load_fixtures, verify_table};
use girthlab::{Error, Result};

#[derive(Parser)]
#[command(
    name = "girthlab",
    version,
    about = "Double-cylinder cycle codes and their girth"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the mother matrix H(a,b,c).
    Build(BuildArgs),
    /// Lift the mother matrix with a slope sequence.
    Lift(LiftArgs),
    /// Compute the Tanner-graph girth of a lifted code or an alist file.
    Girth(GirthArgs),
    /// Print the girth upper bound g_max(a,b,c).
    Gmax(GmaxArgs),
    /// Tabulate g_max over a grid of (a,b).
    Sweep(SweepArgs),
    /// Search for a slope sequence reaching a target girth.
    Search(SearchArgs),
    /// Recompute every row of the published code table.
    VerifyTable(OutputArgs),
    /// Write the parity-check matrix of a lifted code in alist format.
    ExportAlist(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Anchor {
    Top,
    Bottom,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Bfs,
    Bsg,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Backtracking,
    RandomRestart,
    Hybrid,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Shape {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    c: usize,
}

impl Shape {
    fn params(&self) -> Result<CodeParams> {
        CodeParams::new(self.a, self.b, self.c)
    }
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    shape: Shape,
    #[arg(long)]
    m: usize,
    /// Comma-separated slopes, one per block column; all zero when omitted.
    #[arg(long, value_delimiter = ',')]
    slopes: Option<Vec<usize>>,
    /// Which block of each column carries the identity.
    #[arg(long, value_enum, default_value_t = Anchor::Top)]
    anchor: Anchor,
}

impl CodeArgs {
    fn code(&self) -> Result<LiftedCode> {
        let mother = build_mother(self.shape.params()?)?;
        let seq = match &self.slopes {
            Some(s) => SlopeSequence::new(self.m, s.iter().copied())?,
            None => SlopeSequence::zeros(self.m, mother.cols())?,
        };
        let anchoring = match self.anchor {
            Anchor::Top => Anchoring::Top,
            Anchor::Bottom => Anchoring::Bottom,
        };
        lift_with(&mother, &seq, anchoring)
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    shape: Shape,
    /// Print the block-structure graph in Graphviz format instead.
    #[arg(long)]
    dot: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct LiftArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct GirthArgs {
    #[arg(long, required_unless_present_any = ["alist", "code"])]
    a: Option<usize>,
    #[arg(long, required_unless_present_any = ["alist", "code"])]
    b: Option<usize>,
    #[arg(long, required_unless_present_any = ["alist", "code"])]
    c: Option<usize>,
    #[arg(long, required_unless_present_any = ["alist", "code"])]
    m: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    slopes: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Anchor::Top)]
    anchor: Anchor,
    /// Read the parity-check matrix from an alist file.
    #[arg(long, conflicts_with_all = ["a", "b", "c", "m", "slopes", "code"])]
    alist: Option<PathBuf>,
    /// Read a JSON code descriptor.
    #[arg(long, conflicts_with_all = ["a", "b", "c", "m", "slopes"])]
    code: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = MethodArg::Bfs)]
    method: MethodArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct GmaxArgs {
    #[command(flatten)]
    shape: Shape,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    c: usize,
    #[arg(long, default_value_t = 2)]
    a_min: usize,
    #[arg(long, default_value_t = 10)]
    a_max: usize,
    #[arg(long, default_value_t = 1)]
    b_min: usize,
    #[arg(long, default_value_t = 10)]
    b_max: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    shape: Shape,
    /// Lifting size, or the smallest one tried when --m-max is given.
    #[arg(long)]
    m: usize,
    /// Try every lifting size from --m up to this one.
    #[arg(long)]
    m_max: Option<usize>,
    /// Defaults to g_max(a,b,c).
    #[arg(long)]
    target_girth: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Candidate evaluations allowed (per lifting size with --m-max).
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    #[arg(long, value_enum, default_value_t = StrategyArg::Backtracking)]
    strategy: StrategyArg,
    /// Log progress to stderr every N evaluations.
    #[arg(long)]
    progress_every: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Destination file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(output: &OutputArgs, text: String) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::io("<stdout>", e))
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn dense_csv(dense: &[Vec<u8>]) -> String {
    let mut out = String::new();
    for row in dense {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn dense_text(dense: &[Vec<u8>]) -> String {
    let mut out = String::new();
    for row in dense {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn cmd_build(args: BuildArgs) -> Result<()> {
    let params = args.shape.params()?;
    let mother = build_mother(params)?;
    if args.dot {
        return emit(
            &args.output,
            BlockStructureGraph::symbolic(&mother).to_dot(),
        );
    }
    #[derive(Serialize)]
    struct Out<'a> {
        a: usize,
        b: usize,
        c: usize,
        rows: usize,
        cols: usize,
        /// Block rows of each block column.
        columns: &'a [[usize; 2]],
    }
    let text = match args.output.format {
        Format::Text => dense_text(&mother.to_dense()),
        Format::Csv => dense_csv(&mother.to_dense()),
        Format::Json => json(&Out {
            a: params.a(),
            b: params.b(),
            c: params.c(),
            rows: mother.rows(),
            cols: mother.cols(),
            columns: mother.support(),
        })?,
    };
    emit(&args.output, text)
}

fn cmd_lift(args: LiftArgs) -> Result<()> {
    let code = args.code.code()?;
    let h = code.matrix();
    let p = code.mother().params();
    #[derive(Serialize)]
    struct Out<'a> {
        #[serde(flatten)]
        descriptor: CodeDescriptor,
        rows: usize,
        n: usize,
        shifts: &'a [[usize; 2]],
    }
    let text = match args.output.format {
        Format::Text => format!(
            "H({},{},{}) lifted by m={}: {} x {} parity-check matrix, n={}, rate 1/{}\nshifts (top,bottom): {}\n",
            p.a(),
            p.b(),
            p.c(),
            code.m(),
            h.rows(),
            h.cols(),
            h.cols(),
            p.cols_per_period(),
            code.all_shifts()
                .iter()
                .map(|[t, b]| format!("({t},{b})"))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        Format::Csv => dense_csv(&h.to_dense()),
        Format::Json => json(&Out {
            descriptor: CodeDescriptor::from_code(&code),
            rows: h.rows(),
            n: h.cols(),
            shifts: code.all_shifts(),
        })?,
    };
    emit(&args.output, text)
}

#[derive(Serialize)]
struct GirthOut {
    rows: usize,
    n: usize,
    girth: girthlab::girth::Girth,
    method: girthlab::girth::Method,
    /// Tanner cycle as alternating check and bit indices, when available.
    witness: Option<Vec<String>>,
}

fn witness_nodes(result: &GirthResult) -> Option<Vec<String>> {
    use girthlab::girth::TannerNode;
    match result.witness.as_ref()? {
        Witness::Tanner(nodes) => Some(
            nodes
                .iter()
                .map(|n| match n {
                    TannerNode::Check(i) => format!("c{i}"),
                    TannerNode::Bit(j) => format!("v{j}"),
                })
                .collect(),
        ),
        Witness::Walk(walk) => Some(
            walk.steps()
                .iter()
                .map(|s| format!("{}{}", if s.forward { "+" } else { "-" }, s.edge))
                .collect(),
        ),
    }
}

fn cmd_girth(args: GirthArgs) -> Result<()> {
    let (matrix, code): (SparseMatrix, Option<LiftedCode>) = if let Some(path) = &args.alist {
        (import_alist(path)?, None)
    } else {
        let code = match &args.code {
            Some(path) => CodeDescriptor::load(path)?.to_code()?,
            None => CodeArgs {
                shape: Shape {
                    a: args.a.unwrap_or_default(),
                    b: args.b.unwrap_or_default(),
                    c: args.c.unwrap_or_default(),
                },
                m: args.m.unwrap_or_default(),
                slopes: args.slopes.clone(),
                anchor: args.anchor,
            }
            .code()?,
        };
        (code.matrix().clone(), Some(code))
    };
    let result = match (args.method, &code) {
        (MethodArg::Bfs, _) => girth_bfs(&matrix)?,
        (MethodArg::Bsg, Some(code)) => girth_bsg(&BlockStructureGraph::from_lifted(code))?,
        (MethodArg::Bsg, None) => {
            return Err(Error::Unsupported(
                "the bsg method needs a lifted code, not an alist file".into(),
            ))
        }
    };
    let out = GirthOut {
        rows: matrix.rows(),
        n: matrix.cols(),
        girth: result.girth,
        method: result.method,
        witness: witness_nodes(&result),
    };
    let text = match args.output.format {
        Format::Text => {
            let mut s = format!("girth {}", out.girth);
            if let Some(w) = &out.witness {
                let _ = write!(s, "\ncycle {}", w.join(" "));
            }
            s + "\n"
        }
        Format::Csv => format!("rows,n,girth\n{},{},{}\n", out.rows, out.n, out.girth),
        Format::Json => json(&out)?,
    };
    emit(&args.output, text)
}

fn cmd_gmax(args: GmaxArgs) -> Result<()> {
    let p = args.shape.params()?;
    let g = g_max(&p);
    let text = match args.output.format {
        Format::Text => format!("{g}\n"),
        Format::Csv => format!("a,b,c,gmax\n{},{},{},{g}\n", p.a(), p.b(), p.c()),
        Format::Json => json(&serde_json::json!({"a": p.a(), "b": p.b(), "c": p.c(), "gmax": g}))?,
    };
    emit(&args.output, text)
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let points = gmax_sweep(args.c, args.a_min..=args.a_max, args.b_min..=args.b_max)?;
    let text = match args.output.format {
        Format::Json => json(&points)?,
        // one point per line reads fine either way
        Format::Text | Format::Csv => sweep_csv(&points),
    };
    emit(&args.output, text)
}

fn cmd_search(args: SearchArgs) -> Result<()> {
    let params = args.shape.params()?;
    let strategy = match args.strategy {
        StrategyArg::Backtracking => Strategy::Backtracking,
        StrategyArg::RandomRestart => Strategy::RandomRestart,
        StrategyArg::Hybrid => Strategy::Hybrid,
    };
    let config = SearchConfig {
        target_girth: args.target_girth,
        seed: args.seed,
        budget: args.budget,
        restarts: args.restarts,
        strategy,
        progress_every: args.progress_every,
        ..SearchConfig::new(params, args.m)
    };
    let outcome = match args.m_max {
        None => search(&config)?,
        Some(m_max) => {
            config.validate()?;
            let result = min_m_search(
                params,
                config.target(),
                args.m..=m_max,
                args.budget,
                args.seed,
                strategy,
            )?;
            match result.found {
                Some(found) => found,
                None => {
                    let text = match args.output.format {
                        Format::Json => json(&result)?,
                        _ => format!("not found for m in {}..={}\n", args.m, m_max),
                    };
                    return emit(&args.output, text);
                }
            }
        }
    };
    let status = serde_json::to_value(outcome.status)?;
    let status = status.as_str().unwrap_or_default();
    let slopes = |s: &Option<Vec<usize>>| {
        s.as_ref()
            .map(|v| v.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .unwrap_or_default()
    };
    let text = match args.output.format {
        Format::Json => json(&outcome)?,
        Format::Csv => format!(
            "status,a,b,c,m,target,achieved,evaluations,slopes\n{status},{},{},{},{},{},{},{},\"{}\"\n",
            outcome.a,
            outcome.b,
            outcome.c,
            outcome.m,
            outcome.target_girth,
            outcome.achieved_girth.map_or(String::new(), |g| g.to_string()),
            outcome.evaluations,
            slopes(&outcome.slopes),
        ),
        Format::Text => {
            let mut s = format!(
                "{status}: m={} target={} achieved={} evaluations={} elapsed={:.3}s\n",
                outcome.m,
                outcome.target_girth,
                outcome.achieved_girth.map_or("-".into(), |g| g.to_string()),
                outcome.evaluations,
                outcome.elapsed.as_secs_f64()
            );
            if outcome.slopes.is_some() {
                let _ = writeln!(s, "slopes {}", slopes(&outcome.slopes));
            }
            s
        }
    };
    emit(&args.output, text)
}

fn cmd_verify_table(args: OutputArgs) -> Result<()> {
    let report = verify_table(&load_fixtures());
    let text = match args.format {
        Format::Text => report.to_text(),
        Format::Json => json(&report)?,
        Format::Csv => {
            let mut s = String::from(
                "b,c,a,m,claimed_n,computed_n,claimed_girth,gmax,computed_girth,verdict,flags\n",
            );
            for r in &report.records {
                let flags: Vec<String> = r
                    .flags
                    .iter()
                    .filter_map(|f| serde_json::to_value(f).ok()?.as_str().map(str::to_string))
                    .collect();
                let computed = r.interpretations.first().and_then(|o| o.girth);
                let verdict = serde_json::to_value(r.verdict)?;
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    r.b,
                    r.c,
                    r.a,
                    r.m,
                    r.claimed_n,
                    r.computed_n,
                    r.claimed_girth,
                    r.gmax,
                    computed.map_or(String::new(), |g| g.to_string()),
                    verdict.as_str().unwrap_or_default(),
                    flags.join(";"),
                );
            }
            s
        }
    };
    emit(&args, text)
}

fn cmd_export_alist(args: ExportArgs) -> Result<()> {
    let code = args.code.code()?;
    let mut buf = Vec::new();
    write_alist(code.matrix(), &mut buf).map_err(|e| Error::io("<buffer>", e))?;
    let output = OutputArgs {
        format: Format::Text,
        out: args.out,
    };
    emit(&output, String::from_utf8(buf).expect("alist is ascii"))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Lift(a) => cmd_lift(a),
        Command::Girth(a) => cmd_girth(a),
        Command::Gmax(a) => cmd_gmax(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Search(a) => cmd_search(a),
        Command::VerifyTable(a) => cmd_verify_table(a),
        Command::ExportAlist(a) => cmd_export_alist(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = parallel::threads_from_env().and_then(|n| parallel::install(n, || run(cli)));
    match result.and_then(|r| r) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("girthlab: error: {msg}");
            ExitCode::FAILURE
        }
    }
}
