//! Euler's constant, pi and ln 2, computed in scaled-integer arithmetic.

use dashu_int::ops::UnsignedAbs;
use dashu_int::{IBig, UBig};

use crate::bigreal::{BigReal, PrecisionConfig};

/// Extra decimal digits carried by the fixed-point kernels.
const FIXED_GUARD: usize = 15;

/// The three constants every formula in the crate is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constants {
    /// Euler–Mascheroni constant.
    pub gamma: BigReal,
    pub pi: BigReal,
    pub ln2: BigReal,
}

impl Constants {
    /// `ln 4 = 2 ln 2`.
    pub fn ln4(&self) -> BigReal {
        self.ln2.mul_int(2)
    }
}

/// All constants at the working precision of `cfg`.
pub fn constants(cfg: &PrecisionConfig) -> Constants {
    let digits = cfg.working();
    Constants {
        gamma: euler_gamma(digits),
        pi: pi(digits),
        ln2: ln2(digits),
    }
}

fn scale(places: usize) -> IBig {
    IBig::from(10u8).pow(places)
}

fn to_real(fixed: IBig, places: usize, digits: usize) -> BigReal {
    BigReal::from_parts(fixed, -(places as isize), digits)
}

/// `atan(1/x)` scaled by `one`.
fn atan_inv(x: u32, one: &IBig) -> IBig {
    let x2 = IBig::from(x) * IBig::from(x);
    let mut term = one / IBig::from(x);
    let mut sum = term.clone();
    let mut k: u32 = 1;
    while term != IBig::ZERO {
        term /= &x2;
        let t = &term / IBig::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        k += 1;
    }
    sum
}

/// `atanh(1/x)` scaled by `one`.
fn atanh_inv(x: u32, one: &IBig) -> IBig {
    let x2 = IBig::from(x) * IBig::from(x);
    let mut term = one / IBig::from(x);
    let mut sum = term.clone();
    let mut k: u32 = 1;
    while term != IBig::ZERO {
        term /= &x2;
        sum += &term / IBig::from(2 * k + 1);
        k += 1;
    }
    sum
}

fn pi_fixed(places: usize) -> IBig {
    let one = scale(places);
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    atan_inv(5, &one) * IBig::from(16u8) - atan_inv(239, &one) * IBig::from(4u8)
}

fn ln2_fixed(places: usize) -> IBig {
    let one = scale(places);
    atanh_inv(3, &one) * IBig::from(2u8)
}

pub fn pi(digits: usize) -> BigReal {
    let places = digits + FIXED_GUARD;
    to_real(pi_fixed(places), places, digits)
}

pub fn ln2(digits: usize) -> BigReal {
    let places = digits + FIXED_GUARD;
    to_real(ln2_fixed(places), places, digits)
}

/// Brent–McMillan: with `n = 2^p`,
/// `gamma = U/V + O(e^{-4n})`, `V = sum (n^k/k!)^2`,
/// `U = sum (n^k/k!)^2 (H_k - ln n)`.
pub fn euler_gamma(digits: usize) -> BigReal {
    let places = digits + FIXED_GUARD;
    let one = scale(places);

    // e^{-4n} < 10^{-digits-3}
    let needed = ((digits + 3) as f64 * core::f64::consts::LN_10 / 4.0) as u64 + 1;
    let mut p = 0u32;
    while (1u64 << p) < needed {
        p += 1;
    }
    let n = IBig::from(1u64 << p);
    let n2 = &n * &n;

    let mut a = -(ln2_fixed(places) * IBig::from(p));
    let mut b = one.clone();
    let mut u = a.clone();
    let mut v = b.clone();
    let mut k = 1u64;
    loop {
        let kk = IBig::from(k);
        b = &b * &n2 / (&kk * &kk);
        a = (&a * &n2 / &kk + &b) / &kk;
        // floor division can leave `a` parked at -1
        if b == IBig::ZERO && (&a).unsigned_abs() <= UBig::ONE {
            break;
        }
        u += &a;
        v += &b;
        k += 1;
    }
    to_real(u * &one / v, places, digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_digit_values() {
        assert_eq!(euler_gamma(20).format_sig(20), "0.57721566490153286061");
        assert_eq!(pi(20).format_sig(20), "3.1415926535897932385");
        assert_eq!(ln2(20).format_sig(20), "0.69314718055994530942");
    }

    #[test]
    fn ln2_exp_identity() {
        let cfg = PrecisionConfig::with_digits(16).unwrap();
        let c = constants(&cfg);
        let err = (BigReal::from_int(2, cfg.working()) - c.ln2.exp()).abs();
        assert!(err <= BigReal::pow10(-15, cfg.working()));
        assert_eq!(c.ln4(), c.ln2.mul_int(2));
    }

    #[test]
    fn sixty_digit_values() {
        // reference digits from an independent multiprecision library
        let g = "0.577215664901532860606512090082402431042159335939923598805767";
        let pi60 = "3.14159265358979323846264338327950288419716939937510582097494";
        assert_eq!(euler_gamma(70).format_sig(60), g);
        assert_eq!(pi(70).format_sig(60), pi60);
    }

    #[test]
    fn gamma_terminates_for_every_precision() {
        let reference = euler_gamma(140);
        for digits in 16..=130 {
            let g = euler_gamma(digits);
            assert!(g.rel_diff(&reference) <= BigReal::pow10(1 - digits as isize, 140), "{digits}");
        }
    }
}
