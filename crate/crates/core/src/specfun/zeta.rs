//! Hurwitz and Riemann zeta at integer orders.

use crate::bigreal::{BigReal, PrecisionConfig};
use crate::error::{domain, Result};

use super::bernoulli::bernoulli;

/// `zeta(u, v) = sum_{k>=0} (k + v)^{-u}` for integer `u >= 2`, `v > 0`.
///
/// The first `N` terms are summed directly, with `N` chosen so that
/// `x = v + N > max(u, working digits)`; the remainder `zeta(u, x)` comes from
/// Euler–Maclaurin:
///
/// `x^{1-u}/(u-1) + x^{-u}/2 + sum_j B_{2j}/(2j)! (u)_{2j-1} x^{-u-2j+1}`,
///
/// truncated at the first correction below `10^{-working}` relative to the
/// running value.
pub fn hurwitz_zeta(u: u32, v: &BigReal, cfg: &PrecisionConfig) -> Result<BigReal> {
    if u < 2 {
        return Err(domain("hurwitz_zeta requires integer order u >= 2"));
    }
    if !v.is_positive() {
        return Err(domain("hurwitz_zeta requires v > 0"));
    }
    let wp = cfg.working();
    let v = v.with_precision(wp);
    let threshold = BigReal::from_int((u as usize).max(wp) as u64 + 1, wp);

    let mut sum = BigReal::zero(wp);
    let mut x = v.clone();
    let ui = -(u as i64);
    while x < threshold {
        sum = sum + x.powi(ui);
        x = x.add_int(1);
    }

    let x_pow = x.powi(ui); // x^{-u}
    let inv_x2 = x.square().recip();
    sum = sum + (&x_pow * &x).div_int(u - 1) + x_pow.div_int(2);

    let eps = BigReal::pow10(-(wp as isize), wp);
    // c_j = (u)_{2j-1} / (2j)!, p_j = x^{-u-2j+1}
    let mut coeff = BigReal::from_ratio(u, 2, wp);
    let mut power = &x_pow / &x;
    let mut j: u32 = 1;
    loop {
        let b = BigReal::from_rational(&bernoulli(2 * j as usize), wp);
        let term = &b * &coeff * &power;
        sum = &sum + &term;
        let scale = if sum.abs() < BigReal::one(wp) { sum.abs() } else { BigReal::one(wp) };
        if term.abs() < &eps * &scale {
            break;
        }
        let (a1, a2) = (u + 2 * j - 1, u + 2 * j);
        let (d1, d2) = (2 * j + 1, 2 * j + 2);
        coeff = coeff.mul_int(a1 as u64 * a2 as u64).div_int(d1 as u64 * d2 as u64);
        power = &power * &inv_x2;
        j += 1;
        // x > working digits keeps the corrections decreasing well past this point
        debug_assert!(j < 4 * wp as u32 + 64, "Euler-Maclaurin tail failed to converge");
    }
    Ok(sum)
}

/// `zeta(u) = zeta(u, 1)`.
pub fn riemann_zeta(u: u32, cfg: &PrecisionConfig) -> Result<BigReal> {
    hurwitz_zeta(u, &BigReal::one(cfg.working()), cfg)
}
