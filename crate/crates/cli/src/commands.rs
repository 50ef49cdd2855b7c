//! Subcommand implementations. Each returns the process exit code.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linforest::gen::{gen_planar, GenError};
use linforest::reduce::Engine;
use linforest::verify::{verify, verify_assignment, VerificationReport};
use linforest::{bench, solve_with, EngineChoice, Graph, SolveError};
use thiserror::Error;

use crate::format::{
    parse_coloring, parse_graph, write_coloring, write_graph, ColoringFile, FormatError,
};

#[derive(Debug, Parser)]
#[command(
    name = "linforest",
    version,
    about = "Split planar graphs into linear forests"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a graph and write the coloring.
    Solve(SolveArgs),
    /// Check a coloring against a graph.
    Verify {
        /// Graph file.
        graph: PathBuf,
        /// Coloring file.
        coloring: PathBuf,
    },
    /// Write a random planar graph.
    Gen {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Upper bound on the maximum degree.
        #[arg(long, default_value_t = 10)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the solver on generated graphs of several sizes.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [10_000, 20_000, 40_000, 80_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Graph file.
    pub input: PathBuf,
    /// Where to write the coloring; stdout if omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Number of colors; must be at least half the maximum degree.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    pub engine: EngineArg,
    /// Print every reduction step to stderr.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Bounded,
    High,
}

impl From<EngineArg> for EngineChoice {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Auto => EngineChoice::Auto,
            EngineArg::Bounded => EngineChoice::Bounded,
            EngineArg::High => EngineChoice::HighDegree,
        }
    }
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_ENGINE: u8 = 2;
pub const EXIT_USAGE: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: String,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Mismatch(FormatError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => EXIT_INVALID,
            CliError::Solve(SolveError::InvalidK { .. }) => EXIT_USAGE,
            CliError::Solve(_) => EXIT_ENGINE,
            CliError::Io { .. }
            | CliError::Format { .. }
            | CliError::Gen(_)
            | CliError::Usage(_) => EXIT_USAGE,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    let res = match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|source| CliError::Io {
        path: path.map_or("<stdout>".into(), |p| p.display().to_string()),
        source,
    })
}

pub fn run(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring),
        Command::Gen {
            n,
            delta,
            seed,
            output,
        } => cmd_gen(n, delta, seed, output.as_deref()),
        Command::Bench { sizes, delta, seed } => cmd_bench(&sizes, delta, seed),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn cmd_solve(args: &SolveArgs) -> Result<u8, CliError> {
    let g = load_graph(&args.input)?;
    let delta = g.max_degree();
    let engine = EngineChoice::from(args.engine);
    if let Some(k) = args.k {
        let min = (delta.div_ceil(2) as u32).max(1);
        if k < min {
            return Err(CliError::Usage(format!(
                "--k {k} is below {min}, half the maximum degree {delta}"
            )));
        }
    }
    let start = Instant::now();
    let sol = solve_with(&g, engine, args.k)?;
    let seconds = start.elapsed().as_secs_f64();
    if args.trace {
        for (i, step) in sol.trace.steps.iter().enumerate() {
            eprintln!("step {i}: {}", step.config);
        }
        for (case, count) in &sol.cases {
            eprintln!("case {case}: {count}");
        }
    }
    let report = verify(&g, &sol.coloring);
    let file = ColoringFile::new(sol.coloring.k(), sol.coloring.iter());
    write_out(args.output.as_deref(), &write_coloring(&file))?;
    let engine = match sol.engine {
        Engine::Bounded => "bounded",
        Engine::HighDegree => "high-degree",
    };
    eprintln!(
        "n={} m={} delta={} k={} colors_used={} engine={} time={:.3}s",
        g.vertex_count(),
        g.edge_count(),
        delta,
        sol.coloring.k(),
        report.colors_used,
        engine,
        seconds
    );
    if !report.valid {
        print_report(&report, &mut io::stderr().lock());
        return Ok(EXIT_INVALID);
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(graph: &Path, coloring: &Path) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    let col = parse_coloring(&read(coloring)?).map_err(|source| CliError::Format {
        path: coloring.display().to_string(),
        source,
    })?;
    col.check_edges(&g).map_err(CliError::Mismatch)?;
    let report = verify_assignment(&g, col.k, col.entries.iter().copied());
    print_report(&report, &mut io::stdout().lock());
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

fn print_report(report: &VerificationReport, out: &mut impl Write) {
    let _ = writeln!(
        out,
        "valid: {} colors_used: {}",
        report.valid, report.colors_used
    );
    for v in &report.violations {
        let edges: Vec<String> = v.edges.iter().map(|e| e.to_string()).collect();
        let _ = write!(out, "{:?}", v.kind);
        if let Some(c) = v.color {
            let _ = write!(out, " color={c}");
        }
        if let Some(x) = v.vertex {
            let _ = write!(out, " vertex={x}");
        }
        let _ = writeln!(out, " edges={}", edges.join(","));
    }
}

pub fn cmd_gen(n: usize, delta: usize, seed: u64, output: Option<&Path>) -> Result<u8, CliError> {
    let g = gen_planar(n, delta, seed)?;
    write_out(output, &write_graph(&g))?;
    Ok(EXIT_OK)
}

pub fn cmd_bench(sizes: &[usize], delta: usize, seed: u64) -> Result<u8, CliError> {
    let rows = bench::run(sizes, seed, delta)?;
    let mut all = true;
    for r in &rows {
        all &= r.verified;
        println!(
            "n={} m={} delta={} k={} seconds={:.4} ratio={:.2} verified: {}",
            r.n, r.m, r.delta, r.colors, r.seconds, r.ratio, r.verified
        );
    }
    Ok(if all { EXIT_OK } else { EXIT_INVALID })
}
