use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "gammamin", version, about = "Minimum of the Gamma function by Lagrange inversion of digamma")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root of digamma (the abscissa of the Gamma minimum) by Newton/bisection.
    Root {
        #[arg(long, default_value = "20", value_parser = parse_digits)]
        digits: usize,
    },
    /// Truncations of the inverse series of digamma about `a`.
    Expand {
        /// Expansion point: decimal or `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "3", value_parser = clap::value_parser!(u32).range(1..=20))]
        order: u32,
        #[arg(long, value_enum, default_value = "reversion")]
        method: MethodArg,
        #[arg(long, default_value = "50", value_parser = parse_digits)]
        digits: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Recompute published table 1 (a = 1) or 2 (a = 3/2).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        id: u8,
        #[arg(long, default_value = "20", value_parser = parse_digits)]
        digits: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Signed deltas between printed formulas, tables, reversion and the root.
    Audit {
        #[arg(long, default_value = "20", value_parser = parse_digits)]
        digits: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate one special function.
    Specfun {
        #[arg(long = "fn", value_enum)]
        function: Function,
        /// `z` (digamma), `n z` (polygamma), `u` (zeta), `u v` (hurwitz).
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        args: Vec<String>,
        #[arg(long, default_value = "20", value_parser = parse_digits)]
        digits: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Reversion,
    Faadibruno,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Digamma,
    Polygamma,
    Zeta,
    Hurwitz,
}

fn parse_digits(s: &str) -> Result<usize, String> {
    let d: usize = s.parse().map_err(|_| format!("not a digit count: {s}"))?;
    if d < gammamin_core::bigreal::MIN_DIGITS {
        return Err("digits must be ≥ 16".into());
    }
    Ok(d)
}
