use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use specdiss::dissociation::dissociation_number;
use specdiss::enumeration::{cache_dir, load_or_generate, CorpusKind};
use specdiss::families::FamilySpec;
use specdiss::graph::{graph6_decode, graph6_encode, Graph};
use specdiss::spectral::{alpha_matrix, quotient_matrix, spectral_radius, Partition, Tolerances};
use specdiss::verify::{verify, ClaimId, Status, VerifyParams};

#[derive(Parser)]
#[command(name = "specdiss", version, about = "A_alpha spectra and dissociation numbers of small graphs")]
struct Cli {
    /// Print tabular output as CSV.
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dissociation number and a maximum dissociation set.
    Tau {
        /// graph6 string, or `-` to read one from stdin.
        graph: String,
    },
    /// A_alpha spectral radius and Perron vector.
    Index {
        graph: String,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
    },
    /// Named graph families.
    Family {
        #[command(subcommand)]
        cmd: FamilyCommand,
    },
    /// Quotient matrix of A_alpha over an equitable partition.
    Quotient {
        graph: String,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Blocks separated by `|`, vertices by `,`, e.g. `0|1,2,3`.
        #[arg(long)]
        blocks: String,
    },
    /// Build a graph corpus and write it to the cache.
    Enumerate {
        /// TREES, CONNECTED or CONNECTED_BIPARTITE.
        kind: String,
        n: usize,
        /// Alphas for the `lambda_at_<alpha>` CSV columns.
        #[arg(long, value_delimiter = ',', default_value = "0")]
        alpha: Vec<f64>,
    },
    /// Check one claim and write a JSON report.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Build the member described by a JSON file (`-` for stdin) and print its graph6.
    Build { spec: String },
}

#[derive(Args)]
struct VerifyArgs {
    claim: String,
    /// Only order `n`.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Comma-separated alphas in [0, 1).
    #[arg(long, value_delimiter = ',')]
    alpha_grid: Option<Vec<f64>>,
    #[arg(long)]
    tau: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Report path; defaults to `<CLAIM>.json` in the working directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("io: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_arg(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(arg.to_string())
    }
}

fn read_graph(arg: &str) -> Result<Graph> {
    let text = read_arg(arg)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| CliError::Input("no graph6 input".into()))?;
    graph6_decode(line).map_err(CliError::input)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn fmt(x: f64) -> String {
    format!("{x:.10}")
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    let csv = cli.csv;
    match cli.cmd {
        Command::Tau { graph } => {
            let g = read_graph(&graph)?;
            let r = dissociation_number(&g);
            let witness = join(r.witness.iter(), " ");
            if csv {
                writeln!(out, "tau,witness\n{},{witness}", r.tau)?;
            } else {
                writeln!(out, "{}", r.tau)?;
                writeln!(out, "witness: {witness}")?;
            }
        }
        Command::Index { graph, alpha } => {
            let g = read_graph(&graph)?;
            let m = alpha_matrix(&g, alpha).map_err(CliError::input)?;
            let r = spectral_radius(&m, g.is_connected()).map_err(CliError::input)?;
            if csv {
                writeln!(out, "vertex,perron")?;
                for (v, x) in r.perron.iter().enumerate() {
                    writeln!(out, "{v},{}", fmt(*x))?;
                }
                writeln!(out, "lambda,{}", fmt(r.lambda))?;
            } else {
                writeln!(out, "{}", fmt(r.lambda))?;
                writeln!(out, "perron: {}", join(r.perron.iter().map(|&x| fmt(x)), " "))?;
            }
        }
        Command::Family {
            cmd: FamilyCommand::Build { spec },
        } => {
            let text = if spec == "-" { read_arg("-")? } else { fs::read_to_string(&spec)? };
            let spec: FamilySpec = serde_json::from_str(&text).map_err(CliError::input)?;
            let g = spec.build().map_err(CliError::input)?;
            writeln!(out, "{}", graph6_encode(&g))?;
        }
        Command::Quotient { graph, alpha, blocks } => {
            let g = read_graph(&graph)?;
            let p = Partition::parse(g.order(), &blocks).map_err(CliError::input)?;
            let q = quotient_matrix(&g, alpha, &p).map_err(CliError::input)?;
            let rho = q.spectral_radius(&Tolerances::default()).map_err(CliError::input)?;
            let sep = if csv { "," } else { " " };
            for row in q.entries().rows() {
                writeln!(out, "{}", join(row.iter().map(|&x| fmt(x)), sep))?;
            }
            if csv {
                writeln!(out, "radius,{}", fmt(rho))?;
            } else {
                writeln!(out, "radius: {}", fmt(rho))?;
            }
        }
        Command::Enumerate { kind, n, alpha } => {
            let kind: CorpusKind = kind.parse().map_err(CliError::input)?;
            let dir = cache_dir();
            let corpus = load_or_generate(kind, n, &dir).map_err(CliError::input)?;
            if csv {
                let cols = join(alpha.iter().map(|a| format!("lambda_at_{a}")), ",");
                writeln!(out, "g6,n,m,tau,{cols}")?;
                for (g, tau) in corpus.members.iter().zip(&corpus.taus) {
                    let mut lams = Vec::with_capacity(alpha.len());
                    for &a in &alpha {
                        lams.push(fmt(specdiss::spectral::index(g, a).map_err(CliError::input)?));
                    }
                    writeln!(out, "{},{},{},{tau},{}", graph6_encode(g), g.order(), g.size(), lams.join(","))?;
                }
            } else {
                writeln!(out, "{} {kind} graphs of order {n} cached in {}", corpus.len(), dir.display())?;
                for (tau, members) in &corpus.by_tau {
                    writeln!(out, "tau {tau}: {}", members.len())?;
                }
            }
        }
        Command::Verify(args) => {
            let claim: ClaimId = args.claim.parse().map_err(CliError::input)?;
            let params = VerifyParams {
                n_min: args.n.or(args.n_min),
                n_max: args.n.or(args.n_max),
                alphas: args.alpha_grid,
                tau: args.tau,
                samples: args.samples,
                seed: args.seed,
                grid: None,
            };
            let report = verify(claim, &params).map_err(CliError::input)?;
            let path = args.out.unwrap_or_else(|| PathBuf::from(format!("{claim}.json")));
            fs::write(&path, report.to_json())?;
            writeln!(out, "{}", report.summary())?;
            if report.status == Status::Fail {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
