use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use symrep::ffield::is_prime;
use symrep::filtration::{Criterion, Kind};
use symrep::structure::Config;

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "symrep", version, about = "Specht filtrations and modular representations of symmetric groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Characteristic of the ground field.
    #[arg(long, global = true, env = "SYMREP_P", default_value_t = 5)]
    pub p: u32,
    /// Degree of the symmetric group; inferred from the arguments when omitted.
    #[arg(long, global = true, env = "SYMREP_D")]
    pub d: Option<usize>,
    #[arg(long, global = true, env = "SYMREP_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest degree at which regular-module work (Ext, projective covers) runs.
    #[arg(long = "limit-regular", global = true, env = "SYMREP_LIMIT_REGULAR", default_value_t = 7)]
    pub limit_regular: usize,
    /// Step budget for filtration searches.
    #[arg(long, global = true, env = "SYMREP_BUDGET", default_value_t = 1_000_000)]
    pub budget: u64,
    #[arg(long = "cache-dir", global = true, env = "SYMREP_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, env = "SYMREP_FORMAT", value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labeling {
    Regular,
    Restricted,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    Specht,
    Dual,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Specht => Kind::Specht,
            KindArg::Dual => Kind::DualSpecht,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionArg {
    I,
    Ii,
    Iii,
    Iv,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Criterion {
        match c {
            CriterionArg::I => Criterion::I,
            CriterionArg::Ii => Criterion::II,
            CriterionArg::Iii => Criterion::III,
            CriterionArg::Iv => Criterion::IV,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section {
    #[value(name = "4")]
    Four,
    #[value(name = "6")]
    Six,
    #[value(name = "7")]
    Seven,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Specht module S^λ.
    Specht { partition: String },
    /// Permutation module M^λ.
    Perm { partition: String },
    /// Simple module D^μ (regular label) or D_λ (restricted label).
    Simple {
        partition: String,
        #[arg(long, value_enum, default_value_t = Labeling::Regular)]
        labeling: Labeling,
    },
    /// Signed permutation module M^(λ|μ), written "λ|μ".
    SignedPerm { spec: String },
    /// The four Ext-vanishing criteria for a module expression.
    Criteria {
        expr: String,
        /// Fail unless these criteria hold.
        #[arg(long, value_enum, value_delimiter = ',')]
        require: Vec<CriterionArg>,
    },
    /// Search for a certified Specht or dual Specht filtration.
    Filtration {
        expr: String,
        #[arg(long, value_enum, default_value_t = KindArg::Specht)]
        kind: KindArg,
    },
    /// Young module Y^λ with its filtrations.
    Young { partition: String },
    /// Rerun the worked examples.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Section::All)]
        section: Section,
    },
    /// Every summand of every signed permutation module of degree d.
    SweepSigned,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Specht { .. } => "specht",
            Command::Perm { .. } => "perm",
            Command::Simple { .. } => "simple",
            Command::SignedPerm { .. } => "signed-perm",
            Command::Criteria { .. } => "criteria",
            Command::Filtration { .. } => "filtration",
            Command::Young { .. } => "young",
            Command::VerifyPaper { .. } => "verify-paper",
            Command::SweepSigned => "sweep-signed",
        }
    }
}

/// Validated settings, echoed into every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub p: u32,
    pub d: Option<usize>,
    pub seed: u64,
    pub regular_limit: usize,
    pub budget: u64,
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_args(g: &GlobalArgs) -> Result<Self, CliError> {
        if !is_prime(g.p) || g.p >= 1 << 16 {
            return Err(CliError::Usage(format!("--p {} is not a prime below 65536", g.p)));
        }
        if g.d == Some(0) || g.limit_regular == 0 || g.budget == 0 {
            return Err(CliError::Usage("--d, --limit-regular and --budget must be positive".into()));
        }
        Ok(RunConfig {
            p: g.p,
            d: g.d,
            seed: g.seed,
            regular_limit: g.limit_regular,
            budget: g.budget,
            cache_dir: g.cache_dir.clone(),
            format: g.format,
        })
    }

    pub fn engine_config(&self) -> Config {
        Config { seed: self.seed, regular_limit: self.regular_limit, budget: self.budget, ..Config::default() }
    }
}
