use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bigreal::{BigReal, PrecisionConfig};
use crate::combinatorics::{l_derivatives, power_derivative};
use crate::error::{domain, Error, Result};
use crate::series::{lagrange_invert, slope_series};
use crate::specfun::{constants, digamma};

use super::printed::{printed_q_terms, printed_r_coefficients};

/// How the coefficients `h_n / n!` of the expansion are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Coefficient extraction from powers of the reciprocal slope series.
    Reversion,
    /// Composition and Bell-partition sums.
    FaaDiBruno,
    /// The published closed forms (only for `a = 1`, order <= 6 and
    /// `a = 3/2`, order <= 3).
    Printed,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Reversion => "reversion",
            Method::FaaDiBruno => "faadibruno",
            Method::Printed => "printed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reversion" => Ok(Method::Reversion),
            "faadibruno" => Ok(Method::FaaDiBruno),
            "printed" => Ok(Method::Printed),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// Truncations of `z_m = a + sum_n (h_n / n!) w~^n` with `w~ = -psi(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    pub anchor: BigReal,
    pub method: Method,
    /// `w~ = -psi(a)`; equals Euler's gamma at `a = 1`.
    pub offset: BigReal,
    /// `h_1..h_N`.
    pub lagrange: Vec<BigReal>,
    /// `h_n / n!`.
    pub coefficients: Vec<BigReal>,
    /// `t_n = (h_n / n!) w~^n`.
    pub terms: Vec<BigReal>,
    /// `a + t_1 + ... + t_n`.
    pub partial_sums: Vec<BigReal>,
}

impl ExpansionResult {
    fn assemble(anchor: BigReal, method: Method, offset: BigReal, coefficients: Vec<BigReal>) -> Self {
        let mut lagrange = Vec::with_capacity(coefficients.len());
        let mut terms = Vec::with_capacity(coefficients.len());
        let mut partial_sums = Vec::with_capacity(coefficients.len());
        let mut fact = BigReal::one(offset.precision());
        let mut power = offset.clone();
        let mut acc = anchor.clone();
        for (i, c) in coefficients.iter().enumerate() {
            fact = fact.mul_int(i as u64 + 1);
            lagrange.push(c * &fact);
            let next = &acc + c * &power;
            // the stored term is the exact increment between partial sums
            terms.push(&next - &acc);
            partial_sums.push(next.clone());
            acc = next;
            power = &power * &offset;
        }
        Self {
            anchor,
            method,
            offset,
            lagrange,
            coefficients,
            terms,
            partial_sums,
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// Largest termwise relative difference between two expansions.
    pub fn max_relative_deviation(&self, other: &ExpansionResult) -> BigReal {
        self.lagrange
            .iter()
            .zip(&other.lagrange)
            .map(|(x, y)| x.rel_diff(y))
            .max()
            .unwrap_or_else(|| BigReal::zero(self.offset.precision()))
    }
}

/// Expands the root of `psi` about `a` to `order` terms.
pub fn expand(a: &BigReal, order: usize, method: Method, cfg: &PrecisionConfig) -> Result<ExpansionResult> {
    if !a.is_positive() {
        return Err(domain("expansion anchor must satisfy a > 0"));
    }
    let wp = cfg.working();
    let a = a.with_precision(wp);
    let offset = -digamma(&a, cfg)?;
    let coefficients = match method {
        Method::Reversion => {
            let slope = slope_series(&a, order.saturating_sub(1), cfg)?;
            let inversion = lagrange_invert(&a, &slope, &offset, order)?;
            inversion.coefficients().to_vec()
        }
        Method::FaaDiBruno => {
            if order == 0 {
                Vec::new()
            } else {
                let l = l_derivatives(&a, order - 1, cfg)?;
                let mut fact = BigReal::one(wp);
                let mut out = Vec::with_capacity(order);
                for n in 1..=order {
                    fact = fact.mul_int(n as u64);
                    out.push(power_derivative(&l, n)? / &fact);
                }
                out
            }
        }
        Method::Printed => return printed_expansion(&a, order, cfg),
    };
    Ok(ExpansionResult::assemble(a, method, offset, coefficients))
}

fn printed_expansion(a: &BigReal, order: usize, cfg: &PrecisionConfig) -> Result<ExpansionResult> {
    let wp = cfg.working();
    if *a == BigReal::one(wp) && order <= 6 {
        let gamma = constants(cfg).gamma;
        let mut r = printed_r_coefficients(cfg)?;
        r.truncate(order);
        return Ok(ExpansionResult::assemble(a.clone(), Method::Printed, gamma, r));
    }
    if *a == BigReal::from_ratio(3, 2, wp) && order <= 3 {
        let c = constants(cfg);
        let eta = (&c.gamma + c.ln4()).add_int(-2);
        let q = printed_q_terms(cfg)?;
        // the printed q_2 carries q_1 along; its own contribution is the difference
        let per_order = [q[0].clone(), &q[1] - &q[0], q[2].clone()];
        let mut coefficients = Vec::with_capacity(order);
        let mut power = eta.clone();
        for t in per_order.iter().take(order) {
            coefficients.push(t / &power);
            power = &power * &eta;
        }
        return Ok(ExpansionResult::assemble(a.clone(), Method::Printed, eta, coefficients));
    }
    Err(domain(
        "printed coefficients exist only for a = 1 (order <= 6) and a = 3/2 (order <= 3)",
    ))
}
