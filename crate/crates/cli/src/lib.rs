//! Command dispatch for the `gammamin` binary.
//!
//! [`run`] turns parsed arguments into the exact bytes written to stdout, so
//! the binary stays a thin shell and tests can drive commands in process.

pub mod args;
pub mod render;

use gammamin_core::minimum::{discrepancy_report, expand, psi_root, table, Method};
use gammamin_core::specfun::{digamma, hurwitz_zeta, polygamma, riemann_zeta};
use gammamin_core::{BigReal, Error, PrecisionConfig};

use clap::ValueEnum;

use args::{Cli, Command, Format, Function, MethodArg};
use render::{AuditView, ComparisonView, ExpansionView, TableView};

/// Exit status for malformed input.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for well-formed input outside a function's domain.
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Precision { .. } => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn config(digits: usize) -> Result<PrecisionConfig, Failure> {
    Ok(PrecisionConfig::with_digits(digits)?)
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Root { digits } => {
            let cfg = config(*digits)?;
            Ok(format!("{}\n", psi_root(&cfg)?.format_sig(*digits)))
        }
        Command::Expand {
            a,
            order,
            method,
            digits,
            format,
        } => run_expand(a, *order as usize, *method, *digits, *format),
        Command::Table { id, digits, format } => {
            let report = table(*id, &config(*digits)?)?;
            Ok(match format {
                Format::Text => render::table_text(&report),
                Format::Csv => render::table_csv(&report),
                Format::Json => render::json(&TableView::new(&report, *digits)),
            })
        }
        Command::Audit { digits, format } => {
            let view = AuditView::new(&discrepancy_report(&config(*digits)?)?, *digits);
            Ok(match format {
                Format::Text => render::audit_text(&view),
                Format::Csv => render::audit_csv(&view),
                Format::Json => render::json(&view),
            })
        }
        Command::Specfun { function, args, digits } => run_specfun(*function, args, *digits),
    }
}

fn run_expand(a: &str, order: usize, method: MethodArg, digits: usize, format: Format) -> Result<String, Failure> {
    let cfg = config(digits)?;
    let a = BigReal::parse(a, cfg.working())?;
    let single = |m: Method| -> Result<ExpansionView, Failure> {
        Ok(ExpansionView::new(&expand(&a, order, m, &cfg)?, digits))
    };
    match method {
        MethodArg::Reversion | MethodArg::Faadibruno => {
            let m = if method == MethodArg::Reversion {
                Method::Reversion
            } else {
                Method::FaaDiBruno
            };
            let view = single(m)?;
            Ok(match format {
                Format::Text => render::expansion_text(&view),
                Format::Csv => render::expansion_csv(&view),
                Format::Json => render::json(&view),
            })
        }
        MethodArg::Both => {
            let rev = expand(&a, order, Method::Reversion, &cfg)?;
            let fdb = expand(&a, order, Method::FaaDiBruno, &cfg)?;
            let view = ComparisonView {
                reversion: ExpansionView::new(&rev, digits),
                faadibruno: ExpansionView::new(&fdb, digits),
                max_relative_deviation: rev.max_relative_deviation(&fdb).format_sig(3),
            };
            Ok(match format {
                Format::Text => render::comparison_text(&view),
                Format::Csv => render::comparison_csv(&view),
                Format::Json => render::json(&view),
            })
        }
    }
}

fn run_specfun(function: Function, args: &[String], digits: usize) -> Result<String, Failure> {
    let cfg = config(digits)?;
    let wp = cfg.working();
    let arity = match function {
        Function::Digamma | Function::Zeta => 1,
        Function::Polygamma | Function::Hurwitz => 2,
    };
    if args.len() != arity {
        return Err(Failure::usage(format!(
            "{} takes {arity} argument(s), got {}",
            function.to_possible_value().expect("no skipped variants").get_name(),
            args.len()
        )));
    }
    let order = |s: &str| -> Result<u32, Failure> {
        s.parse()
            .map_err(|_| Failure::usage(format!("expected a non-negative integer order, got {s:?}")))
    };
    let real = |s: &str| -> Result<BigReal, Failure> { Ok(BigReal::parse(s, wp)?) };
    let value = match function {
        Function::Digamma => digamma(&real(&args[0])?, &cfg)?,
        Function::Polygamma => polygamma(order(&args[0])?, &real(&args[1])?, &cfg)?,
        Function::Zeta => riemann_zeta(order(&args[0])?, &cfg)?,
        Function::Hurwitz => hurwitz_zeta(order(&args[0])?, &real(&args[1])?, &cfg)?,
    };
    Ok(format!("{}\n", value.format_sig(digits)))
}
