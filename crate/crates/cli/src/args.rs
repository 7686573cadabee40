//! Command-line syntax.

use std::path::PathBuf;

use bicov_core::DEFAULT_TOL;
use clap::{Args, Parser, Subcommand};

use crate::config::{Command, Format, GroupSource, RunConfig};
use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "bicov",
    version,
    about = "Bicovariant differential calculi on finite groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Directory of irrep JSON files, one per irreducible representation.
    #[arg(long, global = true, value_name = "DIR")]
    pub irrep_dir: Option<PathBuf>,

    /// Tolerance for residuals and rank decisions.
    #[arg(long, global = true, value_name = "X", env = "BICOV_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the report (for `ybe`, the Λ matrix) to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Catalog group: Z<n>, Z2xZ2, S3, D4, Q8, A4.
    #[arg(long, global = true, value_name = "NAME")]
    pub group: Option<String>,

    /// Cayley table file.
    #[arg(long, global = true, value_name = "FILE")]
    pub cayley: Option<PathBuf>,

    /// Permutation generators, one per line in cycle notation.
    #[arg(long, global = true, value_name = "FILE")]
    pub perms: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Conjugacy classes, irreducible calculi and the ideal cross-check.
    Classify,
    /// Every (class, irrep) bimodule with equivalences and braid residuals.
    Bimodules,
    /// The full identity suite; exit code 3 on any failure.
    Verify,
    /// Export the braiding matrix of one bimodule.
    Ybe {
        /// Class index or member name.
        #[arg(long, value_name = "K")]
        class: String,
        /// Irrep label, index, or `trivial`.
        #[arg(long, value_name = "NAME")]
        irrep: String,
    },
    /// Differentials dφ of the calculus of one class.
    Calculus {
        /// Class index or member name.
        #[arg(long, value_name = "K")]
        class: String,
        /// Element g of the basis function φ_g; all elements when omitted.
        #[arg(long, value_name = "G")]
        phi: Option<String>,
    },
}

impl Cli {
    /// Fails unless exactly one of `--group`, `--cayley`, `--perms` is given.
    pub fn into_config(self) -> CliResult<RunConfig> {
        let SourceArgs {
            group,
            cayley,
            perms,
        } = self.source;
        let group = match (group, cayley, perms) {
            (Some(name), None, None) => GroupSource::Catalog(name),
            (None, Some(path), None) => GroupSource::Cayley(path),
            (None, None, Some(path)) => GroupSource::Perms(path),
            (None, None, None) => {
                return Err(CliError::Input(
                    "one of --group, --cayley, --perms is required".into(),
                ))
            }
            _ => {
                return Err(CliError::Input(
                    "--group, --cayley and --perms are mutually exclusive".into(),
                ))
            }
        };
        let command = match self.command {
            Sub::Classify => Command::Classify,
            Sub::Bimodules => Command::Bimodules,
            Sub::Verify => Command::Verify,
            Sub::Ybe { class, irrep } => Command::Ybe { class, irrep },
            Sub::Calculus { class, phi } => Command::Calculus { class, phi },
        };
        Ok(RunConfig {
            group,
            irrep_dir: self.irrep_dir,
            tol: self.tol,
            format: if self.json {
                Format::Json
            } else {
                Format::Text
            },
            out: self.out,
            command,
        })
    }
}
