//! `sbrauer`: batch front end over the σ-Brauer library. Every subcommand
//! prints one JSON document; logs go to stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use sigma_brauer::brauer::{compose, hom_basis, Morphism};
use sigma_brauer::combinat::{Partition, PartitionTuple};
use sigma_brauer::modcat::{ext_dim, multiplicity, simple_realization_dim, traceless_space, FormPoint};
use sigma_brauer::schurweyl::weight_space_basis;
use sigma_brauer::stabilizer::{germinal_axiom_suite, monomial_symmetries};
use sigma_brauer::symfun::shift_decompose;
use sigma_brauer::Error;

/// Largest tensor power `rank^n` the traceless computation will build.
const MAX_TENSOR_DIM: usize = 46_656;

#[derive(Parser, Debug)]
#[command(name = "sbrauer", version, about = "Exact computations in σ-Brauer categories")]
struct Cli {
    /// Cap on every degree and rank the command may search.
    #[arg(long, global = true, default_value_t = 6)]
    degree_bound: usize,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of Hom([n], [m]) in the downwards category.
    Homdim {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Composes g∘f read from a JSON file {"sigma", "f", "g"}.
    Compose {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// [K^⊕λ : L_μ].
    Mult {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// dim Ext^i(L_λ, L_μ).
    Ext {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Decomposition of S_λ(k^n ⊕ V) as a functor of V.
    Shift {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Traceless tensors for a seeded generic form, and simple realizations.
    Traceless {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        seed: u64,
    },
    Stab {
        #[command(subcommand)]
        command: StabCommand,
    },
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum StabCommand {
    /// Runs the germinal axiom suite on a seeded generic form.
    Check {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        samples: usize,
        /// Use x1·x2·x3 instead of a random form (σ = 3, rank 3).
        #[arg(long)]
        monomial: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Compares diagram counts with weight-space counts for 0 <= m <= n <= max.
    Step1 {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        max: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Semantic(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Semantic(e.to_string())
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn parse_sigma(s: &str) -> Outcome<PartitionTuple> {
    let t: PartitionTuple = s.parse()?;
    Ok(t)
}

fn parse_partition(s: &str) -> Outcome<Partition> {
    let p: Partition = s.parse()?;
    Ok(p)
}

fn within(bound: usize, what: &str, value: usize) -> Outcome<()> {
    if value > bound {
        return Err(Error::DegreeBound(format!("{what} = {value} exceeds --degree-bound {bound}")).into());
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome<Value> {
    let bound = cli.degree_bound;
    match &cli.command {
        Command::Homdim { sigma, n, m } => {
            let sigma = parse_sigma(sigma)?;
            within(bound, "n", *n)?;
            within(bound, "m", *m)?;
            Ok(json!({ "dim": hom_basis(&sigma, *n, *m)?.len() }))
        }
        Command::Compose { input } => {
            let text = fs::read_to_string(input).map_err(|e| Failure::Semantic(format!("{}: {e}", input.display())))?;
            let doc: Value = serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))?;
            let sigma_text = doc
                .get("sigma")
                .and_then(Value::as_str)
                .ok_or_else(|| Failure::Parse("input needs a string field \"sigma\"".into()))?;
            let sigma = parse_sigma(sigma_text)?;
            let field = |k: &str| doc.get(k).ok_or_else(|| Failure::Parse(format!("input needs a field {k:?}")));
            let f = Morphism::from_json(&sigma, field("f")?)?;
            let g = Morphism::from_json(&sigma, field("g")?)?;
            for size in [f.source(), f.target(), g.source(), g.target()] {
                within(bound, "diagram size", size)?;
            }
            Ok(json!({ "sigma": sigma_text, "result": compose(&g, &f)?.to_json() }))
        }
        Command::Mult { sigma, lambda, mu } => {
            let sigma = parse_sigma(sigma)?;
            let (lambda, mu) = (parse_partition(lambda)?, parse_partition(mu)?);
            within(bound, "|λ|", lambda.size())?;
            within(bound, "|μ|", mu.size())?;
            Ok(json!({ "multiplicity": multiplicity(&sigma, &lambda, &mu)? }))
        }
        Command::Ext { sigma, i, lambda, mu } => {
            let sigma = parse_sigma(sigma)?;
            let (lambda, mu) = (parse_partition(lambda)?, parse_partition(mu)?);
            within(bound, "|λ|", lambda.size())?;
            within(bound, "|μ|", mu.size())?;
            within(bound, "i", *i)?;
            Ok(json!({ "dim": ext_dim(&sigma, *i, &lambda, &mu)? }))
        }
        Command::Shift { lambda, n } => {
            let lambda = parse_partition(lambda)?;
            within(bound, "|λ|", lambda.size())?;
            let mut parts: Vec<(Partition, u64)> = shift_decompose(&lambda, *n).into_iter().collect();
            parts.sort_by(|a, b| a.0.display_cmp(&b.0));
            let map: Map<String, Value> = parts.into_iter().map(|(p, m)| (p.to_string(), json!(m))).collect();
            Ok(Value::Object(map))
        }
        Command::Traceless { sigma, rank, n, lambda, seed } => {
            let sigma_t = parse_sigma(sigma)?;
            within(bound, "n", *n)?;
            within(bound, "rank", *rank)?;
            let lambda = lambda.as_deref().map(parse_partition).transpose()?;
            if let Some(l) = &lambda {
                if l.size() != *n {
                    return Err(Error::Precondition(format!("λ = {l} is not a partition of n = {n}")).into());
                }
            }
            match rank.checked_pow(*n as u32) {
                Some(d) if d <= MAX_TENSOR_DIM => {}
                _ => return Err(Error::DegreeBound(format!("rank^n exceeds {MAX_TENSOR_DIM}")).into()),
            }
            let omega = FormPoint::random(&sigma_t, *rank, *seed)?;
            log::info!("building traceless tensors of degree {n} at rank {rank}");
            let space = traceless_space(&sigma_t, &omega, *n)?;
            let shapes = match lambda {
                Some(l) => vec![l],
                None => Partition::all_of(*n),
            };
            let mut simple = Map::new();
            for l in shapes {
                simple.insert(l.to_string(), json!(simple_realization_dim(&sigma_t, &omega, &l)?));
            }
            Ok(json!({
                "sigma": sigma,
                "rank": rank,
                "n": n,
                "seed": seed,
                "traceless_dim": space.dim(),
                "simple_dims": simple,
            }))
        }
        Command::Stab { command: StabCommand::Check { sigma, rank, seed, samples, monomial } } => {
            let sigma_t = parse_sigma(sigma)?;
            within(bound, "rank", *rank)?;
            let (omega, symmetries) = if *monomial {
                if sigma_t.to_string() != "3" || *rank != 3 {
                    return Err(Error::Precondition("--monomial needs σ = 3 and rank 3".into()).into());
                }
                let omega = FormPoint::from_layout(&sigma_t, 3, |_, a, _| {
                    if a == [0, 1, 2] {
                        sigma_brauer::exactla::rat(1)
                    } else {
                        sigma_brauer::exactla::rat(0)
                    }
                })?;
                (omega, monomial_symmetries())
            } else {
                (FormPoint::random(&sigma_t, *rank, *seed)?, Vec::new())
            };
            let levels: Vec<usize> = (0..=*rank).collect();
            let reports = germinal_axiom_suite(&omega, &levels, *samples, *seed, &symmetries)?;
            let all = reports.iter().all(|r| r.all_passed());
            Ok(json!({ "sigma": sigma, "rank": rank, "seed": seed, "reports": reports, "all_passed": all }))
        }
        Command::Oracle { command: OracleCommand::Step1 { sigma, max } } => {
            let sigma_t = parse_sigma(sigma)?;
            within(bound, "max", *max)?;
            let mut cases = Vec::new();
            let mut all = true;
            for n in 0..=*max {
                for m in 0..=n {
                    let diagrams = hom_basis(&sigma_t, n, m)?.len();
                    let weights = weight_space_basis(&sigma_t, n, m)?.len();
                    all &= diagrams == weights;
                    cases.push(json!({ "n": n, "m": m, "diagrams": diagrams, "weight_vectors": weights }));
                }
            }
            Ok(json!({ "sigma": sigma, "cases": cases, "all_equal": all }))
        }
    }
}

fn render(doc: &Value, format: Format) -> String {
    match (format, doc) {
        (Format::Table, Value::Object(map)) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}\t{s}\n"),
                other => format!("{k}\t{other}\n"),
            })
            .collect(),
        _ => format!("{doc}\n"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            let text = render(&doc, cli.format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
