use crate::bigreal::{BigReal, PrecisionConfig};
use crate::error::{Error, Result};
use crate::specfun::{digamma, polygamma};

const MAX_ITERATIONS: usize = 200;

/// The unique zero of `psi` in `[1, 2]`, i.e. the location of the minimum
/// of Gamma on the positive axis.
///
/// Newton's method safeguarded by bisection on the bracket `[1.2, 1.8]`.
/// Stops once both `|psi(x)|` and the last step are below
/// `10^{-(digits+3)}`.
pub fn psi_root(cfg: &PrecisionConfig) -> Result<BigReal> {
    let wp = cfg.working();
    let mut lo = BigReal::parse("1.2", wp)?;
    let mut hi = BigReal::parse("1.8", wp)?;
    if !(digamma(&lo, cfg)?.is_negative() && digamma(&hi, cfg)?.is_positive()) {
        return Err(Error::Domain("[1.2, 1.8] does not bracket the root of psi".into()));
    }
    let tol = BigReal::pow10(-(cfg.digits() as isize + 3), wp);

    let mut x = (&lo + &hi).div_int(2);
    let mut last_step: Option<BigReal> = None;
    for _ in 0..MAX_ITERATIONS {
        let fx = digamma(&x, cfg)?;
        if fx.abs() < tol && last_step.as_ref().is_some_and(|s| *s < tol) {
            return Ok(x);
        }
        if fx.is_negative() {
            lo = x.clone();
        } else {
            hi = x.clone();
        }
        let slope = polygamma(1, &x, cfg)?;
        let mut next = &x - fx / slope;
        if next <= lo || next >= hi {
            next = (&lo + &hi).div_int(2);
        }
        last_step = Some((&next - &x).abs());
        x = next;
    }
    Err(Error::NonConvergence(MAX_ITERATIONS))
}
