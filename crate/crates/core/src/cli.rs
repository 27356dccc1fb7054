//! Command-line front end. `main` in `bin/booldiff.rs` only parses
//! arguments, calls [`run`] and maps errors to exit codes.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::figure::{digraph_figure, figure_tsv, product_figure};
use crate::function::BooleanFunction;
use crate::gf2::Gf2Matrix;
use crate::operator::{
    apply_operator, change_operator_basis, format_operator, jordan_digraph, operator_digraph,
    operator_matrix, operator_rank_profile, BasisId, Digraph,
};
use crate::product::{
    multiplication_table, product_with_limits, table_label, DirectCaps, Limits, Route,
};
use crate::subset::{Dimension, DEFAULT_N_MAX};

/// Environment variable overriding the dimension cap.
pub const NMAX_ENV: &str = "BOOLDIFF_NMAX";

#[derive(Debug, Parser)]
#[command(
    name = "booldiff",
    version,
    about = "Boolean differential operators as digraphs on the subset lattice"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BasisArg {
    /// Operator basis: ms, md, xs or xd.
    #[arg(long, default_value = "ms")]
    pub basis: BasisId,
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two digraphs in the chosen basis.
    Product {
        #[command(flatten)]
        basis: BasisArg,
        /// direct, matrix or auto.
        #[arg(long, default_value = "auto")]
        route: Route,
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Rewrite a digraph from one basis into another.
    Convert {
        #[arg(long)]
        from: BasisId,
        #[arg(long)]
        to: BasisId,
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Matrix of the operator in the {m^a} basis.
    Matrix {
        #[command(flatten)]
        basis: BasisArg,
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Digraph of a 2^n x 2^n matrix.
    Digraph {
        #[command(flatten)]
        basis: BasisArg,
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Apply an operator to a Boolean function.
    Apply {
        #[command(flatten)]
        basis: BasisArg,
        operator: PathBuf,
        function: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Rank, image size and kernel size of the operator.
    Rank {
        #[command(flatten)]
        basis: BasisArg,
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Print the operator as a sum of basis terms.
    Format {
        #[command(flatten)]
        basis: BasisArg,
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Multiplication table (n <= 1), or products of explicit digraph pairs.
    Table {
        #[command(flatten)]
        basis: BasisArg,
        #[arg(short = 'n')]
        n: Option<u32>,
        /// Digraph files taken two at a time as (left, right) pairs.
        pairs: Vec<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Operators of the Jordan-like matrices, one line per requested n.
    Jordan {
        #[command(flatten)]
        basis: BasisArg,
        #[arg(short = 'n', required = true, num_args = 1..)]
        n: Vec<u32>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Plot coordinates (TSV) for a digraph or for a product of two.
    Render {
        #[command(flatten)]
        basis: BasisArg,
        left: PathBuf,
        right: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
}

impl Command {
    fn out_path(&self) -> Option<&Path> {
        let out = match self {
            Command::Product { out, .. }
            | Command::Convert { out, .. }
            | Command::Matrix { out, .. }
            | Command::Digraph { out, .. }
            | Command::Apply { out, .. }
            | Command::Rank { out, .. }
            | Command::Format { out, .. }
            | Command::Table { out, .. }
            | Command::Jordan { out, .. }
            | Command::Render { out, .. } => out,
        };
        out.out.as_deref()
    }
}

/// Runtime settings shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliConfig {
    pub n_max: u32,
    pub direct_caps: DirectCaps,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            n_max: DEFAULT_N_MAX,
            direct_caps: DirectCaps::default(),
        }
    }
}

impl CliConfig {
    /// Defaults, with `n_max` taken from `BOOLDIFF_NMAX` when set.
    pub fn from_env() -> Result<Self, CliError> {
        let mut cfg = CliConfig::default();
        if let Ok(v) = std::env::var(NMAX_ENV) {
            let n: u32 = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{NMAX_ENV}={v:?} is not a number")))?;
            if n > Dimension::CEILING {
                return Err(CliError::Usage(format!(
                    "{NMAX_ENV}={n} exceeds the supported maximum {}",
                    Dimension::CEILING
                )));
            }
            cfg.n_max = n;
        }
        Ok(cfg)
    }

    fn limits(&self) -> Limits {
        Limits {
            n_max: self.n_max,
            direct: self.direct_caps,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Lib { path: String, source: Error },
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for malformed input, 3 for dimension problems, 4 for capacity, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Lib { source, .. } | CliError::Core(source) => source,
            CliError::Io { .. } => return 1,
            CliError::Usage(_) => return 2,
        };
        match core {
            Error::Parse { .. } => 2,
            Error::Dimension(_) | Error::Domain(_) => 3,
            Error::Capacity { .. } => 4,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn in_file<T>(path: &Path, r: Result<T, Error>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Lib {
        path: path.display().to_string(),
        source,
    })
}

fn load_digraph(path: &Path, cfg: &CliConfig) -> Result<Digraph, CliError> {
    let text = read(path)?;
    in_file(path, Digraph::parse(&text, cfg.n_max))
}

fn load_matrix(path: &Path, cfg: &CliConfig) -> Result<Gf2Matrix, CliError> {
    let text = read(path)?;
    let m = in_file(path, Gf2Matrix::parse(&text))?;
    let dim = in_file(path, crate::operator::matrix_dimension(&m))?;
    in_file(path, Dimension::with_limit(dim.n(), cfg.n_max))?;
    Ok(m)
}

fn load_function(path: &Path, cfg: &CliConfig) -> Result<BooleanFunction, CliError> {
    let text = read(path)?;
    in_file(path, BooleanFunction::parse(&text, cfg.n_max))
}

/// Executes one command and returns the text it produces.
pub fn execute(command: &Command, cfg: &CliConfig) -> Result<String, CliError> {
    let limits = cfg.limits();
    match command {
        Command::Product {
            basis,
            route,
            left,
            right,
            ..
        } => {
            let a = load_digraph(left, cfg)?;
            let b = load_digraph(right, cfg)?;
            let p = product_with_limits(&a, &b, basis.basis, *route, &limits)?;
            Ok(p.to_text())
        }
        Command::Convert {
            from, to, input, ..
        } => {
            let a = load_digraph(input, cfg)?;
            Ok(change_operator_basis(&a, *from, *to).to_text())
        }
        Command::Matrix { basis, input, .. } => {
            let a = load_digraph(input, cfg)?;
            Ok(operator_matrix(&a, basis.basis).to_text())
        }
        Command::Digraph { basis, input, .. } => {
            let m = load_matrix(input, cfg)?;
            Ok(operator_digraph(&m, basis.basis)?.to_text())
        }
        Command::Apply {
            basis,
            operator,
            function,
            ..
        } => {
            let a = load_digraph(operator, cfg)?;
            let f = load_function(function, cfg)?;
            Ok(apply_operator(&a, basis.basis, &f)?.to_text())
        }
        Command::Rank { basis, input, .. } => {
            let a = load_digraph(input, cfg)?;
            Ok(format!("{}\n", operator_rank_profile(&a, basis.basis)))
        }
        Command::Format { basis, input, .. } => {
            let a = load_digraph(input, cfg)?;
            Ok(format!("{}\n", format_operator(&a, basis.basis)))
        }
        Command::Table {
            basis, n, pairs, ..
        } => {
            if pairs.is_empty() {
                let n = n.ok_or_else(|| {
                    CliError::Usage("table needs -n <dim> or a list of digraph pairs".into())
                })?;
                let dim = Dimension::with_limit(n, cfg.n_max)?;
                return Ok(multiplication_table(dim, basis.basis)?.to_tsv());
            }
            if pairs.len() % 2 != 0 {
                return Err(CliError::Usage(
                    "table expects an even number of digraph files".into(),
                ));
            }
            let mut s = format!("left\tright\t{}\n", basis.basis.product_symbol());
            for pair in pairs.chunks(2) {
                let a = load_digraph(&pair[0], cfg)?;
                let b = load_digraph(&pair[1], cfg)?;
                if let Some(n) = n {
                    if a.dim().n() != *n {
                        return Err(CliError::Lib {
                            path: pair[0].display().to_string(),
                            source: Error::Dimension(format!(
                                "expected n = {n}, found n = {}",
                                a.dim().n()
                            )),
                        });
                    }
                }
                let p = product_with_limits(&a, &b, basis.basis, Route::Auto, &limits)?;
                s.push_str(&format!(
                    "{}\t{}\t{}\n",
                    table_label(&a),
                    table_label(&b),
                    table_label(&p)
                ));
            }
            Ok(s)
        }
        Command::Jordan { basis, n, .. } => {
            let mut s = String::new();
            for &k in n {
                let dim = Dimension::with_limit(k, cfg.n_max)?;
                let g = jordan_digraph(dim, basis.basis)?;
                s.push_str(&format!("{}\n", format_operator(&g, basis.basis)));
            }
            Ok(s)
        }
        Command::Render {
            basis, left, right, ..
        } => {
            let a = load_digraph(left, cfg)?;
            let points = match right {
                None => digraph_figure(&a),
                Some(right) => {
                    let b = load_digraph(right, cfg)?;
                    let p = product_with_limits(&a, &b, basis.basis, Route::Auto, &limits)?;
                    product_figure(&a, &b, &p)
                }
            };
            Ok(figure_tsv(&points))
        }
    }
}

/// Runs a parsed command, writing to `--out` or returning the text for stdout.
pub fn run(cli: &Cli, cfg: &CliConfig) -> Result<Option<String>, CliError> {
    let text = execute(&cli.command, cfg)?;
    match cli.command.out_path() {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
