use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lusztig_core::embedding::{embed, transition};
use lusztig_core::graph::{
    tableau_graph, to_dot, to_json, truncated_lusztig_graph, Crystal, CrystalGraph,
    GenerateOptions, LusztigCrystal, Route, TableauCrystal, DEFAULT_NODE_LIMIT,
};
use lusztig_core::lusztig::{apply_direct, apply_tensor, LusztigDatum, Quiver};
use lusztig_core::rsk::{skew_rsk, skew_rsk_inverse, BiwordMatrix};
use lusztig_core::tableaux::{Alphabet, Partition, Tableau};
use lusztig_core::{verify, Direction, Error};
use serde_json::{json, Value};

/// Environment variable overriding the crystal graph node limit.
const NODE_LIMIT_VAR: &str = "LUSZTIG_NODE_LIMIT";

#[derive(Parser)]
#[command(
    name = "lusztig",
    version,
    about = "Tableau crystals, Lusztig data and the embeddings between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a tableau (JSON on stdin) into B(∞) along a single-sink quiver.
    Embed {
        /// Quiver as `n,r` (sink at r).
        #[arg(long)]
        quiver: Quiver,
        /// Padding; defaults to the first row length.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Move a datum (JSON on stdin) to another single-sink quiver.
    Transition {
        #[arg(long)]
        from: Quiver,
        #[arg(long)]
        to: Quiver,
    },
    /// Apply e_i or f_i to a datum (JSON on stdin); prints `null` for zero.
    LusztigOp {
        #[arg(long)]
        i: usize,
        /// raise (e) or lower (f).
        #[arg(long)]
        dir: Direction,
        #[arg(long, value_enum, default_value = "direct")]
        route: RouteArg,
    },
    /// Skew RSK on {"T", "M"}, or its inverse on {"P", "Q"}.
    Rsk {
        #[arg(long)]
        inverse: bool,
    },
    /// Crystal graph of B(λ), or of B(∞) truncated at a depth.
    Graph {
        /// Comma-separated partition.
        #[arg(long, required_unless_present = "quiver")]
        lambda: Option<String>,
        #[arg(long, required_unless_present = "quiver")]
        n: Option<usize>,
        /// Generate B(∞) on Lusztig data of this quiver instead.
        #[arg(long, conflicts_with_all = ["lambda", "n"])]
        quiver: Option<Quiver>,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run property suites and print a pass/fail report.
    Verify {
        /// thm44, thm54, rsk, transition, axioms or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Direct,
    Tensor,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Failures reported as `{"error": {"kind", "message"}}`.
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            kind: "malformed",
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            kind: "io",
            message: e.to_string(),
        }
    }
}

fn fail(kind: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        kind,
        message: message.into(),
    }
}

fn read_stdin() -> Result<Value, Failure> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(serde_json::from_str(&s)?)
}

/// A tableau object, or a bare list of rows read as a normal tableau over `[n]`.
fn parse_tableau(v: Value, n: usize) -> Result<Tableau, Failure> {
    if v.is_array() {
        let rows: Vec<Vec<i32>> = serde_json::from_value(v)?;
        let refs: Vec<&[i32]> = rows.iter().map(Vec::as_slice).collect();
        Ok(Tableau::from_rows(Alphabet::unbarred(n as u32), &refs)?)
    } else {
        Ok(serde_json::from_value(v)?)
    }
}

fn field(v: &Value, name: &str) -> Result<Value, Failure> {
    v.get(name)
        .cloned()
        .ok_or_else(|| fail("malformed", format!("missing field \"{name}\"")))
}

fn node_limit() -> Result<usize, Failure> {
    match std::env::var(NODE_LIMIT_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| {
            fail(
                "malformed",
                format!("{NODE_LIMIT_VAR} must be a positive integer, got {s:?}"),
            )
        }),
        Err(_) => Ok(DEFAULT_NODE_LIMIT),
    }
}

fn render<C: Crystal>(
    crystal: &C,
    g: &CrystalGraph<C::Element>,
    format: Format,
) -> Result<String, Failure>
where
    C::Element: serde::Serialize,
{
    Ok(match format {
        Format::Dot => to_dot(crystal, g),
        Format::Json => serde_json::to_string(&to_json(crystal, g))? + "\n",
    })
}

fn emit(v: &impl serde::Serialize) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn run(cmd: Command) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Embed { quiver, d } => {
            let s = parse_tableau(read_stdin()?, quiver.n)?;
            let d = d.unwrap_or_else(|| s.shape().outer.first());
            emit(&embed(&s, quiver, d)?)?;
        }
        Command::Transition { from, to } => {
            let c: LusztigDatum = serde_json::from_value(read_stdin()?)?;
            if c.quiver() != from {
                return Err(Error::QuiverMismatch(c.quiver().to_string(), from.to_string()).into());
            }
            emit(&transition(&c, to)?)?;
        }
        Command::LusztigOp { i, dir, route } => {
            let c: LusztigDatum = serde_json::from_value(read_stdin()?)?;
            let r = match route {
                RouteArg::Direct => apply_direct(&c, i, dir)?,
                RouteArg::Tensor => apply_tensor(&c, i, dir)?,
            };
            emit(&r)?;
        }
        Command::Rsk { inverse: false } => {
            let v = read_stdin()?;
            let t: Tableau = serde_json::from_value(field(&v, "T")?)?;
            let m: BiwordMatrix = serde_json::from_value(field(&v, "M")?)?;
            let (p, q) = skew_rsk(&t, &m)?;
            emit(&json!({ "P": p, "Q": q }))?;
        }
        Command::Rsk { inverse: true } => {
            let v = read_stdin()?;
            let p: Tableau = serde_json::from_value(field(&v, "P")?)?;
            let q: Tableau = serde_json::from_value(field(&v, "Q")?)?;
            let (t, m) = skew_rsk_inverse(&p, &q, p.alphabet())?;
            emit(&json!({ "T": t, "M": m }))?;
        }
        Command::Graph {
            lambda,
            n,
            quiver,
            depth,
            format,
        } => {
            let opts = GenerateOptions {
                node_limit: node_limit()?,
                ..Default::default()
            };
            let text = if let Some(q) = quiver {
                let lc = LusztigCrystal {
                    quiver: q,
                    route: Route::Direct,
                };
                render(&lc, &truncated_lusztig_graph(&lc, depth, &opts)?, format)?
            } else {
                let (lambda, n) = (lambda.unwrap_or_default(), n.unwrap_or_default());
                let parts = lambda
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| fail("malformed", format!("cannot read partition {lambda:?}")))?;
                let lambda = Partition::new(parts)?;
                render(
                    &TableauCrystal { n },
                    &tableau_graph(n, &lambda, &opts)?,
                    format,
                )?
            };
            io::stdout().write_all(text.as_bytes())?;
        }
        Command::Verify { suite } => {
            let reports = verify::run(&suite).ok_or_else(|| {
                fail(
                    "usage",
                    format!(
                        "unknown suite {suite:?}; expected one of {} or all",
                        verify::SUITES.join(", ")
                    ),
                )
            })?;
            let mut ok = true;
            for r in &reports {
                println!("{r}");
                ok &= r.passed();
            }
            return Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report(f: Failure) -> ExitCode {
    let v = json!({ "error": { "kind": f.kind, "message": f.message } });
    eprintln!("{v}");
    ExitCode::FAILURE
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => return report(fail("usage", e.to_string().trim_end())),
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => report(f),
    }
}
