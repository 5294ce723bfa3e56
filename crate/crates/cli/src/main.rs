//! `scpp`: counts, Schur polynomials, Pfaffians and identity checks from
//! the command line.
//!
//! Exit status is 0 when every check matches, 1 on a mismatch and 2 on a
//! usage or precondition error. Errors are reported as
//! `{"error":{"code":…,"message":…}}`.

mod commands;
mod grid;
mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use scpp_core::{Budget, BorderedCase, Method};
use serde_json::{json, Value};

use grid::{Params, SweepSpec};
use output::{Document, Format};

#[derive(Debug, Clone)]
pub struct CliError {
    pub code: String,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: "usage".into(),
            message: message.into(),
        }
    }

    fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code, "message": self.message } })
    }
}

impl From<scpp_core::Error> for CliError {
    fn from(e: scpp_core::Error) -> Self {
        CliError {
            code: e.code().into(),
            message: e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(name = "scpp", version, about = "Self-complementary plane partitions and Schur identities")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Node budget for each enumeration.
    #[arg(long, default_value_t = Budget::DEFAULT_LIMIT, global = true)]
    budget: u64,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct ParamArgs {
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    c1: Option<usize>,
    #[arg(long)]
    c2: Option<usize>,
    #[arg(long)]
    gamma: Option<usize>,
    #[arg(long)]
    gamma1: Option<usize>,
    #[arg(long)]
    gamma2: Option<usize>,
    #[arg(long)]
    alpha: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

impl ParamArgs {
    fn to_params(&self) -> Params {
        [
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
            ("c1", self.c1),
            ("c2", self.c2),
            ("gamma", self.gamma),
            ("gamma1", self.gamma1),
            ("gamma2", self.gamma2),
            ("alpha", self.alpha),
            ("n", self.n),
            ("m", self.m),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed form or count by enumeration.
    ///
    /// Kinds: box, pp, sc, scpp, signed, middle-line, genenum,
    /// genenum-swapped, minenum, minenum-all-even.
    Count {
        kind: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Expand a (skew) Schur polynomial and optionally evaluate it.
    Schur {
        /// Outer shape, e.g. 3,2,1.
        #[arg(long)]
        shape: String,
        /// Inner shape for a skew polynomial.
        #[arg(long)]
        inner: Option<String>,
        /// Number of variables.
        #[arg(long)]
        n: usize,
        /// Comma-separated rational coordinates, e.g. 1,-1,1/2.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Expand through the determinant formula instead of tableaux.
        #[arg(long)]
        oracle: bool,
        /// Also print the principal specialization in q.
        #[arg(long)]
        principal: bool,
    },
    /// Compare a bordered binomial Pfaffian with its product formula.
    Pfaffian {
        /// even-even, a-odd or ab-odd.
        #[arg(long)]
        case: String,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c1: usize,
        #[arg(long)]
        c2: usize,
    },
    /// Check one identity at one parameter tuple.
    ///
    /// Identities: schurid1, schurid2, reduction, bridge, box, stanley,
    /// genenum, minenum, weight, pfaffian.
    Verify {
        identity: String,
        #[command(flatten)]
        params: ParamArgs,
        /// full-expansion or evaluation-sweep (Schur identities only).
        #[arg(long)]
        method: Option<String>,
    },
    /// Check an identity on every point of a parameter grid.
    Sweep {
        /// Identity name; may also come from the config file.
        identity: Option<String>,
        /// Grid axis as key=range, e.g. a=0..4, c=0..8:2 or n=1,3.
        #[arg(long = "param")]
        params: Vec<String>,
        /// File of key = range lines; flags given with --param override it.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        method: Option<String>,
        /// Worker threads; output order does not depend on this.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

fn parse_method(name: Option<&str>) -> Result<Option<Method>, CliError> {
    name.map(|m| m.parse::<Method>().map_err(|_| CliError::usage(format!("unknown method {m:?}"))))
        .transpose()
}

fn run(cli: &Cli) -> Result<Document, CliError> {
    match &cli.command {
        Command::Count { kind, params } => {
            commands::count(kind, &params.to_params(), cli.budget).map(Document::single)
        }
        Command::Schur {
            shape,
            inner,
            n,
            point,
            oracle,
            principal,
        } => commands::schur(&commands::SchurArgs {
            shape,
            inner: inner.as_deref(),
            n: *n,
            point: point.as_deref(),
            oracle: *oracle,
            principal: *principal,
        })
        .map(Document::single),
        Command::Pfaffian { case, a, b, c1, c2 } => {
            let case: BorderedCase = case.parse()?;
            commands::pfaffian(case, *a, *b, *c1, *c2).map(Document::single)
        }
        Command::Verify {
            identity,
            params,
            method,
        } => {
            let method = parse_method(method.as_deref())?;
            commands::verify_identity(identity, &params.to_params(), method, cli.budget).map(Document::single)
        }
        Command::Sweep {
            identity,
            params,
            config,
            method,
            workers,
        } => {
            let mut spec = match config {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
                    SweepSpec::parse_config(&text)?
                }
                None => SweepSpec::default(),
            };
            for p in params {
                spec.assign(p)?;
            }
            if identity.is_some() {
                spec.identity.clone_from(identity);
            }
            let method = parse_method(method.as_deref().or(spec.method.as_deref()))?;
            commands::sweep(&spec, method, cli.budget, *workers)
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                // --help and --version
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let err = CliError::usage(e.render().to_string().trim_end());
            println!("{}", err.to_json());
            return ExitCode::from(2);
        }
    };
    let (doc, code) = match run(&cli) {
        Ok(doc) => {
            let ok = match doc.json.get("summary") {
                Some(summary) => summary["match"] != json!(false),
                None => doc.json.get("match") != Some(&json!(false)),
            };
            (doc, if ok { 0 } else { 1 })
        }
        Err(e) => (Document::single(e.to_json()), 2),
    };
    if let Err(e) = emit(cli.out.as_ref(), &output::render(cli.format, &doc)) {
        eprintln!("scpp: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
