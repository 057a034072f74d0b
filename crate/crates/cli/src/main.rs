//! `dqalg`: construct, analyze, enumerate, classify, verify and conjugate
//! matrix subalgebras through JSON documents.

mod doc;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dqalg::constructions::{
    block_type_algebra, canonical_commutative, max_dim_example, named_example, CanonicalBlockId, NamedExample,
};
use dqalg::dq::{check_dq_bruteforce, min_dq, BlockType, DEFAULT_BRUTE_FORCE_BUDGET};
use dqalg::{FieldSpec, MatSubalgebra, MatrixSpace};
use serde::Serialize;

use doc::{read_json, to_json, AlgebraDocument, MatrixDocument, Metadata};

pub const BUDGET_ENV: &str = "DQ_BRUTE_FORCE_BUDGET";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] dqalg::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::Io(_) => "io_error",
            CliError::Parse(_) => "parse_error",
        }
    }

    fn exit_status(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io(_) | CliError::Parse(_) => 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "dqalg", version, about = "Exact toolkit for D_q subalgebras of matrix algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a block-type algebra, a maximum-dimension example or a named example.
    Construct {
        /// Block sizes, e.g. `2,3`.
        #[arg(long = "type", value_delimiter = ',')]
        block_type: Option<Vec<usize>>,
        /// One entry per block: a canonical index k or a path to an algebra document.
        #[arg(long, value_delimiter = ',')]
        blocks: Option<Vec<String>>,
        /// Maximum-dimension D_q example as `n,q`.
        #[arg(long, value_delimiter = ',', num_args = 1, conflicts_with_all = ["block_type", "example"])]
        max_dim: Option<Vec<usize>>,
        /// `m2-dual-numbers` or `nine-by-nine`.
        #[arg(long, conflicts_with = "block_type")]
        example: Option<String>,
        /// `rational` or `prime:P`.
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report dimension, D_q index, type, maximality and invariants.
    Analyze { input: PathBuf },
    /// List the maximum-dimension block types for given n and q.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        /// Also list every ordering of every tuple.
        #[arg(long)]
        ordered: bool,
        /// Also count conjugacy classes with canonical blocks.
        #[arg(long)]
        count_classes: bool,
    },
    /// Decide conjugacy of two block-type algebras with maximum-dimension blocks.
    Classify { left: PathBuf, right: PathBuf },
    /// Check the D_q identity structurally and optionally by brute force.
    Verify {
        input: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        brute_force: bool,
        /// Tuple budget; defaults to $DQ_BRUTE_FORCE_BUDGET or 1000000.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Conjugate an algebra: X⁻¹·A·X.
    Conjugate {
        input: PathBuf,
        #[arg(long)]
        by: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    let t = text.trim().to_ascii_lowercase();
    if t == "rational" || t == "q" {
        return Ok(FieldSpec::Rational);
    }
    let p = t
        .strip_prefix("prime:")
        .or_else(|| t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
        .ok_or_else(|| CliError::Parse(format!("unknown field {text:?}; use rational or prime:P")))?;
    let p: u64 = p.parse().map_err(|_| CliError::Parse(format!("bad prime in {text:?}")))?;
    Ok(FieldSpec::prime(p)?)
}

fn load(path: &Path) -> Result<MatSubalgebra, CliError> {
    read_json::<AlgebraDocument>(path)?.to_algebra()
}

fn emit<T: Serialize>(value: &T, output: Option<&Path>) -> Result<(), CliError> {
    let text = to_json(value);
    match output {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print_stdout(&text);
            Ok(())
        }
    }
}

// A closed pipe on stdout is not worth a panic.
fn print_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn budget_from_env() -> Result<u128, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Parse(format!("{BUDGET_ENV}={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_BRUTE_FORCE_BUDGET),
    }
}

fn construct_block(field: FieldSpec, size: usize, spec: &str) -> Result<MatSubalgebra, CliError> {
    if let Ok(k) = spec.trim().parse::<usize>() {
        return Ok(canonical_commutative(field, CanonicalBlockId::new(size, k)?)?);
    }
    let b = load(Path::new(spec))?;
    if b.field() != field {
        return Err(dqalg::Error::FieldMismatch.into());
    }
    Ok(b)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct { block_type, blocks, max_dim, example, field, output } => {
            let f = parse_field(&field)?;
            let (a, meta) = if let Some(name) = example {
                let ex = NamedExample::from_slug(&name)
                    .ok_or_else(|| CliError::Parse(format!("unknown example {name:?}")))?;
                let provenance = format!("dqalg construct --example {}", ex.slug());
                (named_example(f, ex), Metadata { name: Some(ex.slug().into()), provenance: Some(provenance) })
            } else if let Some(nq) = max_dim {
                let [n, q] = nq[..] else {
                    return Err(CliError::Parse("--max-dim takes n,q".into()));
                };
                (max_dim_example(f, n, q)?, Metadata { name: Some(format!("max-dim-d{q}-n{n}")), provenance: None })
            } else {
                let parts = block_type.ok_or_else(|| CliError::Parse("construct needs --type, --max-dim or --example".into()))?;
                let ty = BlockType::new(parts)?;
                let specs = blocks.unwrap_or_else(|| vec!["1".into(); ty.q()]);
                if specs.len() != ty.q() {
                    return Err(dqalg::Error::ShapeMismatch(format!("{} blocks for type {ty}", specs.len())).into());
                }
                let blks = ty
                    .parts()
                    .iter()
                    .zip(&specs)
                    .map(|(&ni, s)| construct_block(f, ni, s))
                    .collect::<Result<Vec<_>, _>>()?;
                let name = format!("type {ty} blocks {}", specs.join(","));
                (block_type_algebra(&ty, &blks)?, Metadata { name: Some(name), provenance: None })
            };
            emit(&AlgebraDocument::from_algebra(&a, Some(meta)), output.as_deref())
        }
        Command::Analyze { input } => emit(&report::analyze(&load(&input)?), None),
        Command::Enumerate { n, q, ordered, count_classes } => {
            emit(&report::enumerate(n, q, ordered, count_classes)?, None)
        }
        Command::Classify { left, right } => emit(&report::classify(&load(&left)?, &load(&right)?)?, None),
        Command::Verify { input, q, brute_force, budget } => {
            let a = load(&input)?;
            if q == 0 {
                return Err(dqalg::Error::InvalidInput("q must be at least 1".into()).into());
            }
            let budget = match budget {
                Some(b) => b,
                None => budget_from_env()?,
            };
            let min_q = min_dq(&a);
            let brute = if brute_force { Some(check_dq_bruteforce(&a, q, budget)?) } else { None };
            emit(
                &report::Verification {
                    q,
                    structural: min_q.is_some_and(|m| m <= q),
                    min_q: report::MinQ::from(min_q),
                    brute_force: brute,
                    budget: brute_force.then_some(budget),
                },
                None,
            )
        }
        Command::Conjugate { input, by, output } => {
            let a = load(&input)?;
            let x = read_json::<MatrixDocument>(&by)?.to_matrix()?;
            let b = a.conjugate(&x)?;
            emit(&AlgebraDocument::from_algebra(&b, None), output.as_deref())
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDocument<'a> {
    error: ErrorBody<'a>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let body = ErrorDocument { error: ErrorBody { code: e.code(), message: e.to_string() } };
            print_stdout(&to_json(&body));
            ExitCode::from(e.exit_status())
        }
    }
}
