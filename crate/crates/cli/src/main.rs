//! `appell`: command-line front end for the exact hypergeometric kernel.
//!
//! Exit status is 0 on success, 1 when a verification or derivation fails, and
//! 2 for usage and input errors.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "appell", version, about = "Exact Appell and Gauss hypergeometric computations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Taylor coefficients of an expression.
    Taylor {
        /// Expression such as `pFq([1,1],[2]; t)` or `F2(1/3,1/2,1/5,2/3,3/7; x, y)`.
        expr: String,
        /// Truncation order (total degree).
        #[arg(long, default_value_t = 8, value_parser = parse_order)]
        order: i64,
        /// Parameter values, e.g. `a=1/3,b=1/5`.
        #[arg(long, default_value = "")]
        params: String,
        /// Expansion variables in axis order, e.g. `x,y`; inferred when omitted.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Exact value of a terminating Appell sum at a rational point.
    Eval {
        /// `F1(...)`..`F4(...)` with rational parameters, at least one of them terminating.
        appell: String,
        /// Point `x,y`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Minimal linear ODE satisfied by an Appell function along a curve.
    DeriveOde {
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "")]
        params: String,
        /// `x = X(t); y = Y(t)`.
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long, default_value_t = 2)]
        prolong_depth: u32,
    },
    /// Indicial polynomial and rational local exponents of an ODE at a point.
    Exponents {
        /// JSON file written by `derive-ode --format json`, or a builtin like `euler(1/3,1/5,1/7)`.
        #[arg(long)]
        ode: String,
        /// A rational point or `inf`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Pullback of an ODE along `t -> phi(t)` with a power prefactor.
    Pullback {
        #[arg(long)]
        ode: String,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Prefactor `(point, exponent)` pairs, e.g. `(2,-1/3),(0,1/2)`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        theta: String,
    },
    /// Verify catalog records at sampled parameters.
    Verify {
        /// Record id.
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        /// Verify every record.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Override the record's truncation order.
        #[arg(long, value_parser = parse_order)]
        order: Option<i64>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Include wall-clock times in the reports.
        #[arg(long)]
        timings: bool,
    },
    /// Catalog inspection.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List record ids, modes and claims.
    List,
    /// Print one record.
    Show { id: String },
}

fn parse_order(s: &str) -> Result<i64, String> {
    let n: i64 = s.parse().map_err(|e| format!("{e}"))?;
    if n < 2 {
        return Err("order must be at least 2".into());
    }
    Ok(n)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status())
        }
    }
}
