//! Digamma and polygamma.

use dashu_int::IBig;

use crate::bigreal::{BigReal, PrecisionConfig};
use crate::error::{domain, Result};

use super::bernoulli::bernoulli;
use super::constants::euler_gamma;
use super::zeta::hurwitz_zeta;

/// `psi(z) = Gamma'(z) / Gamma(z)` for `z > 0`.
///
/// Shifts upward with `psi(z) = psi(z+1) - 1/z` until the argument reaches
/// the working precision `P` (in digits), then applies
/// `psi(x) ~ ln x - 1/(2x) - sum_j B_{2j} / (2j x^{2j})`. For `x >= P` the
/// smallest asymptotic term is about `e^{-2 pi x} < 10^{-P}`, so the series is
/// summed until a term drops below `10^{-P}`.
pub fn digamma(z: &BigReal, cfg: &PrecisionConfig) -> Result<BigReal> {
    if !z.is_positive() {
        return Err(domain("digamma requires z > 0"));
    }
    let wp = cfg.working();
    let threshold = BigReal::from_int(wp as u64, wp);
    let mut x = z.with_precision(wp);
    let mut shift = BigReal::zero(wp);
    while x < threshold {
        shift = shift + x.recip();
        x = x.add_int(1);
    }

    let inv_x2 = x.square().recip();
    let mut acc = x.ln() - x.recip().div_int(2);
    let eps = BigReal::pow10(-(wp as isize), wp);
    let mut power = inv_x2.clone();
    let mut j = 1usize;
    loop {
        let b = BigReal::from_rational(&bernoulli(2 * j), wp);
        let term = (&b * &power).div_int(2 * j as u64);
        acc = &acc - &term;
        if term.abs() < eps {
            break;
        }
        power = &power * &inv_x2;
        j += 1;
        debug_assert!(j < 4 * wp + 64, "digamma asymptotic series failed to converge");
    }
    Ok(acc - shift)
}

/// Direct partial sum of `psi(z) = -gamma + sum_{n>=0} (1/(n+1) - 1/(n+z))`
/// through `n = terms - 1`, at the precision of `z`.
///
/// The truncation error is about `|1 - z| / terms`. Slow; meant only as a
/// low-accuracy cross-check of [`digamma`].
pub fn digamma_reference(z: &BigReal, terms: usize) -> Result<BigReal> {
    if !z.is_positive() {
        return Err(domain("digamma_reference requires z > 0"));
    }
    if terms < 100 {
        return Err(domain("digamma_reference requires terms >= 100"));
    }
    let p = z.precision();
    let gamma = euler_gamma(p);
    let z_minus_one = z.add_int(-1);
    if z_minus_one.is_zero() {
        return Ok(-gamma);
    }
    // 1/(n+1) - 1/(n+z) = (z-1) / ((n+1)(n+z))
    let mut sum = BigReal::zero(p);
    let mut nz = z.clone();
    for n in 0..terms {
        let denom = nz.mul_int(n as u64 + 1);
        sum = sum + denom.recip();
        nz = nz.add_int(1);
    }
    Ok(sum * z_minus_one - gamma)
}

/// `psi^{(n)}(z) = (-1)^{n+1} n! zeta(n+1, z)` for `n >= 1`.
pub fn polygamma(n: u32, z: &BigReal, cfg: &PrecisionConfig) -> Result<BigReal> {
    if n < 1 {
        return Err(domain("polygamma requires order n >= 1"));
    }
    if !z.is_positive() {
        return Err(domain("polygamma requires z > 0"));
    }
    let zeta = hurwitz_zeta(n + 1, z, cfg)?;
    let fact: IBig = (1..=n as u64).map(IBig::from).product();
    let v = zeta.mul_int(fact);
    Ok(if n % 2 == 1 { v } else { -v })
}
