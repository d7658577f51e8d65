//! Flag definitions and their conversion into a validated job.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use humbert::evaluator::{EvalConfig, Regime, Thresholds};
use humbert::{Phi1Params, C64};

use crate::error::CliError;
use crate::number::parse_complex;
use crate::output::Format;

/// Environment variable naming a `key=value` threshold override file.
pub const THRESHOLDS_ENV: &str = "HUMBERT_THRESHOLDS";

#[derive(Debug, Parser)]
#[command(
    name = "humbert",
    version,
    about = "Evaluate Humbert's confluent function Phi_1"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Relative tolerance requested from the evaluator.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Fixed truncation order for asymptotic expansions.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Force this method instead of dispatching (e.g. large-x).
    #[arg(long, global = true)]
    pub regime: Option<String>,
    /// Output format; the default depends on the command.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Phi_1 at one point.
    Eval(PointArgs),
    /// Evaluate Phi_1 along a segment of (x, y) points.
    Table(TableArgs),
    /// Evaluate every applicable method and report their differences.
    Check(CheckArgs),
    /// Spin autocorrelation C_0 of the Glauber model.
    Glauber(GlauberArgs),
    /// Prabhakar-type operators applied to f(t) = sum_k a_k t^(rho+k).
    Prabhakar(PrabhakarArgs),
    /// Saran's function F_M.
    Fm(FmArgs),
    /// Write the overlap-grid reference vectors as CSV.
    Vectors(VectorsArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub b: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub c: Option<C64>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub y: Option<C64>,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x_from: C64,
    /// Defaults to --x-from.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x_to: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub y_from: C64,
    /// Defaults to --y-from.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub y_to: Option<C64>,
    /// Number of equally spaced points, endpoints included.
    #[arg(long, default_value_t = 11)]
    pub steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Re-verify a reference-vector CSV written by `vectors`.
    #[arg(long)]
    pub from_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GlauberArgs {
    #[arg(long)]
    pub s: f64,
    #[arg(long)]
    pub tau: f64,
    #[arg(long, default_value_t = 0.0)]
    pub mu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Plus,
    Minus,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct PrabhakarArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub gamma: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: C64,
    /// Leading exponent of f.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub rho: f64,
    /// Coefficients a_k of f, one flag per k (default: a single 1).
    #[arg(long = "coeff", value_parser = parse_complex, allow_hyphen_values = true)]
    pub coeffs: Vec<C64>,
    #[arg(long)]
    pub x: f64,
    /// Right end of the interval; defaults to --x.
    #[arg(long)]
    pub b_end: Option<f64>,
    #[arg(long, value_enum, default_value_t = SideArg::Both)]
    pub side: SideArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FmMethod {
    Auto,
    Series,
    Laplace,
}

#[derive(Debug, Clone, Args)]
pub struct FmArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha1: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha2: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta1: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta2: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub gamma1: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub gamma2: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub y: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: C64,
    #[arg(long, value_enum, default_value_t = FmMethod::Auto)]
    pub method: FmMethod,
}

#[derive(Debug, Clone, Args)]
pub struct VectorsArgs {
    /// `default` for the built-in 50-point grid, `empty` for none, or a CSV
    /// file with columns a_re,a_im,b_re,b_im,c_re,c_im,x_re,x_im,y_re,y_im.
    #[arg(long, default_value = "default")]
    pub grid: String,
}

/// A parsed command with the global settings it runs under.
#[derive(Debug)]
pub struct JobSpec {
    pub command: Command,
    pub format: Option<Format>,
    pub config: EvalConfig,
    pub out: Option<PathBuf>,
}

impl JobSpec {
    /// Validates the global flags and reads the threshold override file
    /// named by [`THRESHOLDS_ENV`], if set.
    pub fn from_cli(cli: Cli, thresholds_file: Option<PathBuf>) -> Result<Self, CliError> {
        if !(cli.tol > 0.0 && cli.tol.is_finite()) {
            return Err(CliError::Usage(format!(
                "--tol must be positive, got {}",
                cli.tol
            )));
        }
        let regime = cli
            .regime
            .as_deref()
            .map(|s| {
                s.parse::<Regime>().map_err(|_| {
                    let tags: Vec<_> = Regime::ALL.iter().map(|r| r.tag()).collect();
                    CliError::Usage(format!(
                        "unknown regime {s:?}; expected one of {}",
                        tags.join(", ")
                    ))
                })
            })
            .transpose()?;
        let thresholds = match thresholds_file {
            Some(path) => {
                let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                Thresholds::parse(&text)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
            }
            None => Thresholds::default(),
        };
        Ok(JobSpec {
            command: cli.command,
            format: cli.format,
            config: EvalConfig {
                tol: cli.tol,
                order: cli.order,
                regime,
                thresholds,
                ..EvalConfig::default()
            },
            out: cli.out,
        })
    }
}

impl ParamArgs {
    pub fn params(&self) -> Result<Phi1Params, CliError> {
        let (a, b, c) = (
            require(self.a, "--a")?,
            require(self.b, "--b")?,
            require(self.c, "--c")?,
        );
        Ok(Phi1Params::new(a, b, c)?)
    }
}

impl PointArgs {
    pub fn point(&self) -> Result<(Phi1Params, C64, C64), CliError> {
        Ok((
            self.params.params()?,
            require(self.x, "--x")?,
            require(self.y, "--y")?,
        ))
    }
}

fn require<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing required flag {flag}")))
}
