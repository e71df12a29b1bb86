//! `hoeffding`: batch front end for error-exponent computations.
//!
//! Exit codes: 0 success, 1 usage or I/O, 2 validation, 3 resource cap,
//! 4 numerical consistency.

mod grid;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hoeffding::format::{ChannelsJson, FormatError, StatePairJson};
use hoeffding::iid::DEFAULT_TYPE_CAP;
use hoeffding::linalg::DEFAULT_DIM_CAP;
use hoeffding::random::rng_from_seed;
use hoeffding::report::{self, RunMeta, Table, NS_IDENTITY_TOL};
use hoeffding::{random_channel, ClassicalPair, Error, KrausChannel, Legendre, StatePair};

use grid::Grid;

#[derive(Debug, Parser)]
#[command(
    name = "hoeffding",
    version,
    about = "Error exponents for quantum hypothesis testing"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// State pair JSON: {"rho": <state>, "sigma": <state>}
    #[arg(long, global = true, value_name = "FILE")]
    states: Option<PathBuf>,
    /// Output file (written atomically); stdout when omitted
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Emit JSON instead of CSV
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random generation, echoed into the output header
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Tolerance for consistency checks
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Maximum Hilbert-space dimension, including tensor powers
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_CAP)]
    cap: usize,
    /// Report exponents in bits instead of nats
    #[arg(long, global = true)]
    base2: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hoeffding bound b(r), its Golden-Thompson variant and the Legendre data
    Bounds {
        /// Rates r as lo:hi:k or a comma list; defaults to 11 points on [0, D(rho||sigma)]
        #[arg(long)]
        r: Option<Grid<f64>>,
    },
    /// phi(s) by every available route, plus xi and the endpoint slope
    SweepPhi {
        #[arg(long, default_value = "0:1:21")]
        s: Grid<f64>,
    },
    /// Nussbaum-Szkola classical pair and the phi identity residual (JSON)
    Ns {
        #[arg(long, default_value = "0:1:21")]
        s: Grid<f64>,
    },
    /// Exact i.i.d. tails f_n(b), g_n(b) by the method of types
    Tails {
        /// Classical pair JSON {"support", "p", "q"}; otherwise the reduction of --states
        #[arg(long, value_name = "FILE")]
        pair: Option<PathBuf>,
        /// Block lengths as lo:hi or a comma list
        #[arg(long, default_value = "1:20")]
        n: Grid<usize>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        b: f64,
        /// Maximum number of type classes per block length
        #[arg(long, default_value_t = DEFAULT_TYPE_CAP)]
        type_cap: u128,
    },
    /// Helstrom tests on n copies: errors, risk and the classical lower bound
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        delta: Grid<f64>,
    },
    /// Finite-n rates of the spectral tails next to Phi(a) and Psi(a)
    Probe {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Data-processing checks under channels
    ChannelCheck {
        /// Channel JSON, a single channel or a list
        #[arg(long, value_name = "FILE", conflicts_with = "random")]
        channels: Option<PathBuf>,
        /// Number of random channels to draw from --seed (default seed 0)
        #[arg(long, value_name = "K")]
        random: Option<usize>,
        #[arg(long, default_value = "0:1:11")]
        s: Grid<f64>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let code = match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Format { source, .. } => source.exit_code(),
            CliError::Lib(e) => e.exit_code(),
        };
        code as u8
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Format {
        path: path.display().to_string(),
        source: FormatError::Json(e),
    })
}

fn invalid(path: &Path, e: Error) -> CliError {
    CliError::Format {
        path: path.display().to_string(),
        source: FormatError::Invalid(e),
    }
}

impl Common {
    fn meta(&self, command: &str) -> CliResult<RunMeta> {
        let mut meta = RunMeta::new(command);
        if let Some(tol) = self.tol {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Usage(format!(
                    "--tol must be positive, got {tol}"
                )));
            }
            meta.tol = tol;
        }
        if self.cap == 0 {
            return Err(CliError::Usage("--cap must be positive".into()));
        }
        meta.cap = self.cap;
        meta.seed = self.seed;
        meta.base2 = self.base2;
        Ok(meta)
    }

    fn pair(&self) -> CliResult<StatePair> {
        let path = self
            .states
            .as_deref()
            .ok_or_else(|| CliError::Usage("--states FILE is required for this command".into()))?;
        let raw: StatePairJson = parse(path)?;
        raw.to_pair(self.cap).map_err(|e| invalid(path, e))
    }

    fn render(&self, table: &Table) -> String {
        if self.json {
            format!("{:#}\n", table.to_json())
        } else {
            table.to_csv()
        }
    }

    fn write(&self, text: &str) -> CliResult<()> {
        output::emit(self.out.as_deref(), text).map_err(|source| CliError::Io {
            path: self
                .out
                .as_ref()
                .map_or_else(|| "<stdout>".to_string(), |p| p.display().to_string()),
            source,
        })
    }
}

fn channels_from_file(path: &Path, cap: usize) -> CliResult<Vec<KrausChannel>> {
    let raw: ChannelsJson = parse(path)?;
    let list = match raw {
        ChannelsJson::One(c) => vec![c],
        ChannelsJson::Many(v) => v,
    };
    list.iter()
        .map(|c| c.to_channel(cap).map_err(|e| invalid(path, e)))
        .collect()
}

/// `k` channels on dimension `dim` from one seeded stream; Kraus ranks cycle through 1, 2, 3.
fn random_channels(dim: usize, k: usize, seed: u64) -> CliResult<Vec<KrausChannel>> {
    let mut rng = rng_from_seed(seed);
    (0..k)
        .map(|i| Ok(random_channel(dim, dim, 1 + i % 3, &mut rng)?))
        .collect()
}

fn run(cli: Cli) -> CliResult<()> {
    let common = &cli.common;
    let text = match cli.command {
        Command::Bounds { r } => {
            let meta = common.meta("bounds")?;
            let pair = common.pair()?;
            let r_grid = match r {
                Some(Grid(v)) => v,
                None => {
                    let d = Legendre::quantum(&pair)?.d_forward();
                    report::linspace(0.0, d, 11)
                }
            };
            common.render(&report::bounds_table(&pair, &r_grid, &meta)?)
        }
        Command::SweepPhi { s } => {
            let meta = common.meta("sweep-phi")?;
            let pair = common.pair()?;
            common.render(&report::phi_sweep_table(&pair, &s.0, &meta)?)
        }
        Command::Ns { s } => {
            let mut meta = common.meta("ns")?;
            let pair = common.pair()?;
            let mut rep = report::ns_report(&pair, &s.0)?;
            rep.tolerance = common.tol.unwrap_or(NS_IDENTITY_TOL);
            meta.tol = rep.tolerance;
            if rep.phi_identity_residual > rep.tolerance {
                return Err(Error::NumericalConsistency {
                    what: "phi identity residual exceeds tolerance".into(),
                    discrepancy: rep.phi_identity_residual,
                }
                .into());
            }
            eprintln!("phi identity residual: {:e}", rep.phi_identity_residual);
            let doc = serde_json::json!({ "run": meta, "report": rep });
            format!("{doc:#}\n")
        }
        Command::Tails {
            pair,
            n,
            b,
            type_cap,
        } => {
            let meta = common.meta("tails")?;
            let cp: ClassicalPair = match (&pair, &common.states) {
                (Some(path), _) => parse(path)?,
                (None, Some(_)) => hoeffding::ns_distributions(&common.pair()?)?,
                (None, None) => {
                    return Err(CliError::Usage(
                        "tails needs --pair FILE or --states FILE".into(),
                    ))
                }
            };
            common.render(&report::tails_table(&cp, &n.0, b, type_cap, &meta)?)
        }
        Command::Simulate { n, delta } => {
            let meta = common.meta("simulate")?;
            let pair = common.pair()?;
            if n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            if delta.0[0] <= 0.0 {
                return Err(CliError::Usage("--delta values must be positive".into()));
            }
            common.render(&report::simulate_table(&pair, n, &delta.0, &meta)?)
        }
        Command::Probe { a, n_max } => {
            let meta = common.meta("probe")?;
            let pair = common.pair()?;
            common.render(&report::probe_table(&pair, a, n_max, &meta)?)
        }
        Command::ChannelCheck {
            channels,
            random,
            s,
        } => {
            let mut meta = common.meta("channel-check")?;
            let pair = common.pair()?;
            if s.0[0] < 0.0 || s.0[s.0.len() - 1] > 1.0 {
                return Err(CliError::Usage("--s values must lie in [0, 1]".into()));
            }
            let list = match (channels, random) {
                (Some(path), None) => channels_from_file(&path, common.cap)?,
                (None, Some(k)) => {
                    let seed = common.seed.unwrap_or(0);
                    meta.seed = Some(seed);
                    random_channels(pair.dim(), k, seed)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "channel-check needs --channels FILE or --random K".into(),
                    ))
                }
            };
            let table = report::channel_check_table(&pair, &list, &s.0, &meta)?;
            eprintln!(
                "violations: {} of {} channels",
                report::channel_violations(&table),
                list.len()
            );
            common.render(&table)
        }
    };
    common.write(&text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
