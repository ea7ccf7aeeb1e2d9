use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use projcode::codes::CodeProfile;
use projcode::constructions::{
    binary_fixture, fixture_ternary_13_3, lemma14_pair, pair_for, remark1_pair, simplex_generator, ConstructionPair,
};
use projcode::graphs::{build_graph_with, diameter, BuildOptions, EdgeStrategy, Predicate};
use projcode::linalg::{parse_matrices, Subspace};
use projcode::verify::{self, Counterexample, Guards, SweepBounds, VerificationReport, DEFAULT_SEED};
use projcode::Field;

/// Projective codes, their graphs, and exhaustive checks of their properties.
#[derive(Parser)]
#[command(name = "projcode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named check and print its report.
    ///
    /// Claims and their positional parameters:
    ///   all                 (uses --profile)
    ///   theorem1 N K Q
    ///   theorem2 Q K
    ///   corollary1 Q K
    ///   corollary2
    ///   lemma11 N K Q       (--trials)
    ///   lemma12 N K Q       (--trials, --dim-u)
    ///   lemma13 N K Q       (--trials, --m)
    ///   cex-binary | cex-ternary
    ///   constructions [MAX_N]
    #[command(verbatim_doc_comment)]
    Verify(VerifyArgs),
    /// Graph operations.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Print generator matrices of a construction in the matrix text format.
    ///
    /// Names: lemma14 N K Q, remark1 N K Q, pair N K Q, simplex Q K,
    /// binary-15-4, ternary-13-3.
    Construct(ConstructArgs),
    /// Code inspection.
    #[command(subcommand)]
    Code(CodeCommand),
}

#[derive(Args)]
struct VerifyArgs {
    claim: String,
    params: Vec<u64>,
    #[arg(long, default_value = "desk")]
    profile: String,
    #[arg(long)]
    trials: Option<usize>,
    /// Dimension of the fixed subspace U (lemma12).
    #[arg(long, default_value_t = 0)]
    dim_u: usize,
    /// Distance between the sampled codes (lemma13).
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Write the JSON report here ("-" for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = Guards::default().max_vertices)]
    max_vertices: u64,
    #[arg(long, default_value_t = Guards::default().max_scan)]
    max_scan: u64,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Build the graph of k-dimensional codes in F_q^n.
    Build(GraphArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Auto,
    Pairwise,
    Generate,
}

#[derive(Args)]
struct GraphArgs {
    n: usize,
    k: usize,
    q: u64,
    /// all, projective or simplex.
    #[arg(long, default_value = "projective")]
    predicate: Predicate,
    #[arg(long, value_enum, default_value = "auto")]
    strategy: Strategy,
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
    /// Also compute the diameter (one BFS per vertex).
    #[arg(long)]
    diameter: bool,
    #[arg(long, default_value_t = Guards::default().max_vertices)]
    max_vertices: u64,
}

#[derive(Args)]
struct ConstructArgs {
    name: String,
    params: Vec<u64>,
    /// For ternary-13-3, also print the 16 candidate codes.
    #[arg(long)]
    candidates: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Dimension, projectivity and weight distribution of every matrix in a file.
    Profile { file: PathBuf },
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => run_verify(a),
        Command::Graph(GraphCommand::Build(a)) => run_graph(a),
        Command::Construct(a) => run_construct(a),
        Command::Code(CodeCommand::Profile { file }) => run_profile(&file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.msg.is_empty() {
                eprintln!("error: {}", f.msg);
            }
            ExitCode::from(f.code)
        }
    }
}

fn expect_params<const N: usize>(claim: &str, params: &[u64], names: &str) -> Result<[u64; N], Failure> {
    params
        .try_into()
        .map_err(|_| usage(format!("{claim} takes {N} parameters: {names}")))
}

fn write_output(path: &Path, text: &str) -> Result<(), Failure> {
    if path == Path::new("-") {
        print!("{text}");
        Ok(())
    } else {
        fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn run_verify(a: VerifyArgs) -> Result<(), Failure> {
    let guards = Guards {
        max_vertices: a.max_vertices,
        max_scan: a.max_scan,
    };
    let p = &a.params;
    let trials = a.trials;
    let reports: Vec<VerificationReport> = match a.claim.as_str() {
        "all" => {
            if a.profile != "desk" {
                return Err(usage(format!("unknown profile {:?} (expected desk)", a.profile)));
            }
            expect_params::<0>("all", p, "none")?;
            verify::run_all(&guards, a.seed)?
        }
        "theorem1" => {
            let [n, k, q] = expect_params("theorem1", p, "N K Q")?;
            vec![verify::check_theorem1(n as usize, k as usize, q, &guards)?]
        }
        "theorem2" => {
            let [q, k] = expect_params("theorem2", p, "Q K")?;
            vec![verify::check_theorem2(q, k as usize, &guards)?]
        }
        "corollary1" => {
            let [q, k] = expect_params("corollary1", p, "Q K")?;
            vec![verify::check_corollary1(q, k as usize, &guards)?]
        }
        "corollary2" => {
            expect_params::<0>("corollary2", p, "none")?;
            vec![verify::check_corollary2()?]
        }
        "lemma11" => {
            let [n, k, q] = expect_params("lemma11", p, "N K Q")?;
            let t = trials.unwrap_or(100);
            vec![verify::check_lemma11(n as usize, k as usize, q, t, a.seed)?]
        }
        "lemma12" => {
            let [n, k, q] = expect_params("lemma12", p, "N K Q")?;
            let t = trials.unwrap_or(100);
            vec![verify::check_lemma12(n as usize, k as usize, q, t, a.dim_u, a.seed)?]
        }
        "lemma13" => {
            let [n, k, q] = expect_params("lemma13", p, "N K Q")?;
            let t = trials.unwrap_or(25);
            vec![verify::check_lemma13(n as usize, k as usize, q, a.m, t, a.seed)?]
        }
        "cex-binary" | "cex-ternary" | "binary-15-4" | "ternary-13-3" => {
            expect_params::<0>(&a.claim, p, "none")?;
            let which = if a.claim.contains("binary") {
                Counterexample::Binary15_4
            } else {
                Counterexample::Ternary13_3
            };
            vec![verify::check_counterexample(which)?]
        }
        "constructions" => {
            let mut bounds = SweepBounds::default();
            match p.as_slice() {
                [] => {}
                [max_n] => bounds.max_n = *max_n as usize,
                _ => return Err(usage("constructions takes at most one parameter: MAX_N")),
            }
            vec![verify::check_constructions(&bounds)?]
        }
        other => return Err(usage(format!("unknown claim {other:?}"))),
    };

    let to_stdout = a.json.as_deref() == Some(Path::new("-"));
    if !to_stdout {
        for r in &reports {
            print_report(r);
        }
    }
    if let Some(path) = &a.json {
        let value = if a.claim == "all" {
            serde_json::to_value(&reports)?
        } else {
            serde_json::to_value(&reports[0])?
        };
        write_output(path, &(serde_json::to_string_pretty(&value)? + "\n"))?;
    }
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            msg: String::new(),
        })
    }
}

fn print_report(r: &VerificationReport) {
    println!("{} ({} ms)", r.summary(), r.wall_time_ms);
    for (k, v) in &r.counts {
        println!("    {k}: {v}");
    }
    for n in &r.notes {
        println!("    note: {n}");
    }
    if r.status == verify::Status::Fail {
        for w in &r.witnesses {
            println!("    witness: {}", serde_json::to_string(w).unwrap_or_default());
        }
    }
}

fn run_graph(a: GraphArgs) -> Result<(), Failure> {
    let opts = BuildOptions {
        max_vertices: a.max_vertices,
        strategy: match a.strategy {
            Strategy::Auto => EdgeStrategy::Auto,
            Strategy::Pairwise => EdgeStrategy::Pairwise,
            Strategy::Generate => EdgeStrategy::Generate,
        },
    };
    let g = build_graph_with(a.n, a.k, a.q, a.predicate, &opts)?;
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    match g.regular_degree() {
        Some(d) => println!("regular of degree {d}"),
        None => println!("not regular"),
    }
    if a.diameter {
        match diameter(&g) {
            Some(d) => println!("diameter: {d}"),
            None => println!("diameter: disconnected or empty"),
        }
    }
    if let Some(path) = &a.dot {
        write_output(path, &g.to_dot())?;
    }
    if let Some(path) = &a.json {
        write_output(path, &(serde_json::to_string(&g.to_json())? + "\n"))?;
    }
    Ok(())
}

fn pair_text(pair: &ConstructionPair) -> String {
    format!(
        "# {:?} n={} k={} q={} dim(X∩Y)={}\n# X\n{}# Y\n{}",
        pair.provenance,
        pair.n,
        pair.k,
        pair.q,
        pair.meet(),
        pair.gen_x.to_text(),
        pair.gen_y.to_text()
    )
}

fn run_construct(a: ConstructArgs) -> Result<(), Failure> {
    let p = &a.params;
    let text = match a.name.as_str() {
        "lemma14" | "remark1" | "pair" => {
            let [n, k, q] = expect_params(&a.name, p, "N K Q")?;
            let (n, k) = (n as usize, k as usize);
            let pair = match a.name.as_str() {
                "lemma14" => lemma14_pair(n, k, q)?,
                "remark1" => remark1_pair(n, k, q)?,
                _ => pair_for(n, k, q)?,
            };
            pair_text(&pair)
        }
        "simplex" => {
            let [q, k] = expect_params("simplex", p, "Q K")?;
            simplex_generator(&Field::with_order(q)?, k as usize)?.to_text()
        }
        "binary-15-4" => {
            expect_params::<0>("binary-15-4", p, "none")?;
            let fx = binary_fixture();
            let mut s = pair_text(&fx.pair);
            for (i, m) in fx.layer_matrices.iter().enumerate() {
                s += &format!("# L{}\n{}", i + 1, m.to_text());
            }
            s
        }
        "ternary-13-3" => {
            expect_params::<0>("ternary-13-3", p, "none")?;
            let fx = fixture_ternary_13_3();
            let mut s = pair_text(&fx.pair);
            if a.candidates {
                for (i, m) in fx.candidates.iter().enumerate() {
                    s += &format!("# candidate {}\n{}", i + 1, m.to_text());
                }
            }
            s
        }
        other => return Err(usage(format!("unknown construction {other:?}"))),
    };
    match &a.out {
        Some(path) => write_output(path, &text),
        None => write_output(Path::new("-"), &text),
    }
}

fn run_profile(file: &Path) -> Result<(), Failure> {
    let text = fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let matrices = parse_matrices(&text)?;
    if matrices.is_empty() {
        return Err(usage(format!("{}: no matrices found", file.display())));
    }
    let mut out = Vec::new();
    for m in &matrices {
        let code = Subspace::span(m);
        let mut v = serde_json::to_value(CodeProfile::of(&code)?)?;
        v["basis"] = code.to_text().into();
        out.push(v);
    }
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}
