//! The published closed-form coefficients, evaluated exactly as typeset.

use alloc::vec;
use alloc::vec::Vec;

use crate::bigreal::{BigReal, PrecisionConfig};
use crate::error::Result;
use crate::specfun::{constants, riemann_zeta};

/// `r_1..r_6` of the expansion `1 + sum r_i gamma^i` about `a = 1`, each a
/// bracket of zeta values times the printed `1/zeta(2)^{i+1}` factor.
pub fn printed_r_coefficients(cfg: &PrecisionConfig) -> Result<Vec<BigReal>> {
    let wp = cfg.working();
    let z = |u: u32| riemann_zeta(u, cfg);
    let (z2, z3, z4, z5, z6, z7, z8) = (z(2)?, z(3)?, z(4)?, z(5)?, z(6)?, z(7)?, z(8)?);
    let q = |n: i64, d: i64| BigReal::from_ratio(n, d, wp);

    let z3_2 = z3.square();
    let r1 = z2.powi(-2);
    let r2 = &z3 / z2.powi(3);
    let r3 = (z3_2.mul_int(2) / &z2 - &z4) / z2.powi(4);
    let r4 = ((&z2 * &z3).mul_int(-2) + z3_2.mul_int(2) / &z4 + &z5) / z2.powi(5);
    let r5 = (q(-42, 5) * &z3_2 + q(16, 5) * z3.powi(4) / &z6 + (&z3 * &z5).mul_int(6) / &z2
        + q(11, 10) * &z6)
        / z2.powi(6);
    let r6 = (q(36, 5) * &z3 * &z4 - z3_2.mul_int(168) / &z2 + q(144, 25) * z3.powi(5) / &z8
        - q(14, 5) * &z2 * &z5
        + q(56, 5) * &z3_2 * &z5 / &z4
        + &z7)
        / z2.powi(7);
    Ok(vec![r1, r2, r3, r4, r5, r6])
}

/// `q_1, q_2, q_3` about `a = 3/2`, with `eta = -2 + gamma + ln 4`:
///
/// * `q_1 = 2/(pi^2-8) eta`
/// * `q_2 = q_1 + 8(7 zeta(3) - 8)/(pi^2-8)^3 eta^2`
/// * `q_3 = [64(7 zeta(3) - 8)^3/(pi^2-8)^5 - 8(pi^2-96)/(3(pi^2-8)^4)] eta^3`
pub fn printed_q_terms(cfg: &PrecisionConfig) -> Result<Vec<BigReal>> {
    let wp = cfg.working();
    let c = constants(cfg);
    let z3 = riemann_zeta(3, cfg)?;
    let eta = (c.gamma.clone() + c.ln4()).add_int(-2);
    let pi2 = c.pi.square();
    let d = pi2.add_int(-8); // pi^2 - 8
    let k = z3.mul_int(7).add_int(-8); // 7 zeta(3) - 8

    let q1 = BigReal::from_int(2, wp) / &d * &eta;
    let q2 = &q1 + k.mul_int(8) / d.powi(3) * eta.square();
    let bracket = k.powi(3).mul_int(64) / d.powi(5) - pi2.add_int(-96).mul_int(8) / d.powi(4).mul_int(3);
    let q3 = bracket * eta.powi(3);
    Ok(vec![q1, q2, q3])
}
