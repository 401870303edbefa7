//! Decimal arbitrary-precision reals tagged with their working precision.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::ops::UnsignedAbs;
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use crate::error::{Error, Result};

/// Smallest precision (significant decimal digits) a [`BigReal`] may carry.
pub const MIN_DIGITS: usize = 16;
/// Smallest number of guard digits a [`PrecisionConfig`] may request.
pub const MIN_GUARD: usize = 5;

type Float = FBig<HalfEven, 10>;

/// Requested output precision plus the extra digits carried internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionConfig {
    digits: usize,
    guard: usize,
}

impl PrecisionConfig {
    pub fn new(digits: usize, guard: usize) -> Result<Self> {
        if digits < MIN_DIGITS || guard < MIN_GUARD {
            return Err(Error::Precision { digits, guard });
        }
        Ok(Self { digits, guard })
    }

    /// Default guard digits on top of `digits`.
    pub fn with_digits(digits: usize) -> Result<Self> {
        Self::new(digits, 10)
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    /// Precision all internal arithmetic runs at.
    pub fn working(&self) -> usize {
        self.digits + self.guard
    }

    /// Same guard, different output digits.
    pub fn scaled(&self, digits: usize) -> Result<Self> {
        Self::new(digits, self.guard)
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self {
            digits: 50,
            guard: 10,
        }
    }
}

/// A real number stored as a decimal floating-point value with a fixed
/// number of significant digits.
///
/// Binary operations round their result to the smaller of the two operand
/// precisions, with ties broken to even.
#[derive(Clone, PartialEq, Eq)]
pub struct BigReal(Float);

impl BigReal {
    fn wrap(value: Float, digits: usize) -> Self {
        assert!(digits >= MIN_DIGITS, "precision {digits} below {MIN_DIGITS}");
        BigReal(value.with_precision(digits).value())
    }

    pub fn zero(digits: usize) -> Self {
        Self::wrap(Float::ZERO, digits)
    }

    pub fn one(digits: usize) -> Self {
        Self::wrap(Float::ONE, digits)
    }

    pub fn from_int(n: impl Into<IBig>, digits: usize) -> Self {
        Self::wrap(Float::from(n.into()), digits)
    }

    /// `numer / denom`, correctly rounded to `digits`.
    pub fn from_ratio(numer: impl Into<IBig>, denom: impl Into<IBig>, digits: usize) -> Self {
        let n = Self::from_int(numer, digits);
        let d = Self::from_int(denom, digits);
        n / d
    }

    pub fn from_rational(r: &RBig, digits: usize) -> Self {
        let n = Self::from_int(r.numerator().clone(), digits);
        let d = Self::from_int(IBig::from(r.denominator().clone()), digits);
        n / d
    }

    /// `significand * 10^exponent`, rounded to `digits`.
    pub fn from_parts(significand: IBig, exponent: isize, digits: usize) -> Self {
        Self::wrap(Float::from_parts(significand, exponent), digits)
    }

    /// `10^exponent` at the given precision.
    pub fn pow10(exponent: isize, digits: usize) -> Self {
        Self::from_parts(IBig::ONE, exponent, digits)
    }

    /// Parses a decimal (`1.25`, `-3e-4`) or a rational (`3/2`) literal.
    pub fn parse(s: &str, digits: usize) -> Result<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = IBig::from_str(n.trim()).map_err(|_| Error::Parse(s.to_string()))?;
            let d = IBig::from_str(d.trim()).map_err(|_| Error::Parse(s.to_string()))?;
            if d == IBig::ZERO {
                return Err(Error::Parse(s.to_string()));
            }
            return Ok(Self::from_ratio(n, d, digits));
        }
        let v = Float::from_str(s).map_err(|_| Error::Parse(s.to_string()))?;
        Ok(Self::wrap(v, digits))
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    /// Re-rounds (or widens) to `digits` significant digits, ties to even.
    pub fn with_precision(&self, digits: usize) -> Self {
        Self::wrap(self.0.clone(), digits)
    }

    pub fn is_zero(&self) -> bool {
        self.0.repr().significand() == &IBig::ZERO
    }

    pub fn is_negative(&self) -> bool {
        self.0.repr().significand() < &IBig::ZERO
    }

    pub fn is_positive(&self) -> bool {
        self.0.repr().significand() > &IBig::ZERO
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        BigReal::one(self.precision()) / self
    }

    /// Square-and-multiply with a few guard digits. The backing type's own
    /// `powi` can stall or panic on some exactly representable inputs.
    pub fn powi(&self, exp: i64) -> Self {
        let p = self.precision();
        let wp = p + 5;
        let mut base = self.with_precision(wp);
        let mut acc = BigReal::one(wp);
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if exp < 0 {
            acc = acc.recip();
        }
        acc.with_precision(p)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Natural logarithm; `self` must be positive.
    pub fn ln(&self) -> Self {
        assert!(self.is_positive(), "ln of a non-positive number");
        BigReal(self.0.ln())
    }

    pub fn exp(&self) -> Self {
        BigReal(self.0.exp())
    }

    pub fn mul_int(&self, k: impl Into<IBig>) -> Self {
        let p = self.precision();
        BigReal((&self.0 * Float::from(k.into())).with_precision(p).value())
    }

    pub fn div_int(&self, k: impl Into<IBig>) -> Self {
        let p = self.precision();
        BigReal((&self.0 / Float::from(k.into())).with_precision(p).value())
    }

    pub fn add_int(&self, k: impl Into<IBig>) -> Self {
        let p = self.precision();
        BigReal((&self.0 + Float::from(k.into())).with_precision(p).value())
    }

    /// `|self - other| / |other|`, or `|self|` when `other` is zero.
    pub fn rel_diff(&self, other: &BigReal) -> BigReal {
        let d = (self - other).abs();
        if other.is_zero() {
            d
        } else {
            d / other.abs()
        }
    }

    /// Rounds to the nearest integer, ties to even.
    pub fn round_to_int(&self) -> IBig {
        let q = self.0.quantize(0).value();
        let repr = q.repr();
        shift_exact(repr.significand().clone(), repr.exponent())
    }

    /// Nearest `f64`; diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Decimal rendering with `sig` significant digits, ties to even.
    ///
    /// Magnitudes in `[1e-3, 1e3)` print positionally; anything else uses
    /// `d.ddde<exp>` notation. Zero prints as `0.` followed by `sig - 1`
    /// zeros.
    pub fn format_sig(&self, sig: usize) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return positional(&"0".repeat(sig), 1);
        }
        let rounded = self.0.clone().with_precision(sig).value();
        let repr = rounded.repr();
        let neg = repr.significand() < &IBig::ZERO;
        let mag: UBig = repr.significand().unsigned_abs();
        let mut digits = mag.to_string();
        let pad = sig.saturating_sub(digits.len());
        digits.extend(core::iter::repeat_n('0', pad));
        // exponent of the leading digit
        let lead = repr.exponent() - pad as isize + digits.len() as isize - 1;
        let body = if (-3..=2).contains(&lead) {
            positional(&digits, lead + 1)
        } else {
            let (head, tail) = digits.split_at(1);
            if tail.is_empty() {
                alloc::format!("{head}e{lead}")
            } else {
                alloc::format!("{head}.{tail}e{lead}")
            }
        };
        if neg {
            alloc::format!("-{body}")
        } else {
            body
        }
    }

    /// Fixed-point rendering with exactly `decimals` fractional digits,
    /// ties to even. Never prints a negative zero.
    pub fn format_fixed(&self, decimals: usize) -> String {
        let q = self.0.quantize(-(decimals as isize)).value();
        let repr = q.repr();
        let units = shift_exact(repr.significand().clone(), repr.exponent() + decimals as isize);
        let neg = units < IBig::ZERO;
        let mut digits = units.unsigned_abs().to_string();
        if digits.len() <= decimals {
            let pad = decimals + 1 - digits.len();
            digits.insert_str(0, &"0".repeat(pad));
        }
        let int_len = digits.len() - decimals;
        let body = positional(&digits, int_len as isize);
        if neg {
            alloc::format!("-{body}")
        } else {
            body
        }
    }
}

/// Places a decimal point after `int_len` digits of `digits`, padding with
/// zeros on either side as required.
fn positional(digits: &str, int_len: isize) -> String {
    if int_len <= 0 {
        let zeros = "0".repeat((-int_len) as usize);
        alloc::format!("0.{zeros}{digits}")
    } else {
        let int_len = int_len as usize;
        if int_len >= digits.len() {
            let zeros = "0".repeat(int_len - digits.len());
            alloc::format!("{digits}{zeros}")
        } else {
            let (i, f) = digits.split_at(int_len);
            alloc::format!("{i}.{f}")
        }
    }
}

/// `s * 10^e` for an exponent known to leave an integer.
fn shift_exact(s: IBig, e: isize) -> IBig {
    if e >= 0 {
        s * IBig::from(10u8).pow(e as usize)
    } else {
        s / IBig::from(10u8).pow((-e) as usize)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_sig(self.precision()))
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({} @{})", self.format_sig(self.precision()), self.precision())
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0.clone())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let p = self.precision().min(rhs.precision());
                BigReal($trait::$method(&self.0, &rhs.0).with_precision(p).value())
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                $trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl core::iter::Sum for BigReal {
    /// Panics on an empty iterator: a sum needs a precision to carry.
    fn sum<I: Iterator<Item = BigReal>>(mut iter: I) -> BigReal {
        let first = iter.next().expect("sum of an empty iterator has no precision");
        iter.fold(first, |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powi_exact_cases() {
        assert_eq!(
            BigReal::from_int(4, 40).powi(-29).to_string(),
            BigReal::from_int(2, 40).powi(-58).to_string()
        );
        assert_eq!(BigReal::from_int(25, 40).powi(29), BigReal::from_int(5, 40).powi(58));
        assert_eq!(BigReal::from_int(7, 20).powi(0), BigReal::one(20));
        assert_eq!(BigReal::from_int(10, 30).powi(-7), BigReal::pow10(-7, 30));
        let x = BigReal::from_ratio(3, 7, 30);
        assert!((x.powi(-5) * x.powi(5)).rel_diff(&BigReal::one(30)) <= BigReal::pow10(-29, 30));
    }

    #[test]
    fn ln_exp_small_integers() {
        for p in [20, 40, 60] {
            for k in 1..=120i64 {
                let x = BigReal::from_int(k, p);
                assert!(x.ln().exp().rel_diff(&x) <= BigReal::pow10(2 - p as isize, p), "{k} @ {p}");
            }
        }
    }

    #[test]
    fn precision_floor() {
        assert!(PrecisionConfig::new(15, 10).is_err());
        assert!(PrecisionConfig::new(16, 4).is_err());
        let cfg = PrecisionConfig::new(16, 5).unwrap();
        assert_eq!(cfg.working(), 21);
        assert_eq!(PrecisionConfig::default().digits(), 50);
    }

    #[test]
    fn mixed_precision_takes_minimum() {
        let a = BigReal::from_ratio(1, 3, 20);
        let b = BigReal::from_ratio(1, 3, 40);
        let s = &a + &b;
        assert_eq!(s.precision(), 20);
        // 0.333..3 (20 digits) + 0.333..3 (40 digits), rounded to 20 digits
        assert_eq!(s.format_sig(20), "0.66666666666666666666");
    }

    #[test]
    fn rounding_is_half_even() {
        let x = BigReal::parse("1.25", 20).unwrap();
        assert_eq!(x.format_sig(2), "1.2");
        let y = BigReal::parse("1.35", 20).unwrap();
        assert_eq!(y.format_sig(2), "1.4");
        assert_eq!(BigReal::parse("2.5", 20).unwrap().round_to_int(), IBig::from(2));
        assert_eq!(BigReal::parse("0.0000000005", 20).unwrap().format_fixed(9), "0.000000000");
        assert_eq!(BigReal::parse("0.0000000015", 20).unwrap().format_fixed(9), "0.000000002");
    }

    #[test]
    fn sig_formatting() {
        let p = 30;
        assert_eq!(BigReal::zero(p).format_sig(10), "0.000000000");
        assert_eq!(BigReal::parse("1.4609650320064", p).unwrap().format_sig(10), "1.460965032");
        assert_eq!(BigReal::parse("-0.00092305780425", p).unwrap().format_sig(4), "-9.231e-4");
        assert_eq!(BigReal::parse("0.00123456", p).unwrap().format_sig(3), "0.00123");
        assert_eq!(BigReal::parse("999.96", p).unwrap().format_sig(4), "1.000e3");
        assert_eq!(BigReal::parse("120", p).unwrap().format_sig(5), "120.00");
        assert_eq!(BigReal::parse("12345678", p).unwrap().format_sig(3), "1.23e7");
        assert_eq!(BigReal::parse("3", p).unwrap().format_sig(1), "3");
    }

    #[test]
    fn fixed_formatting() {
        let p = 30;
        assert_eq!(BigReal::parse("-0.1120", p).unwrap().format_fixed(9), "-0.112000000");
        assert_eq!(BigReal::parse("-0.0000000001", p).unwrap().format_fixed(9), "0.000000000");
        assert_eq!(BigReal::parse("12.5", p).unwrap().format_fixed(0), "12");
    }

    #[test]
    fn parse_rational_and_errors() {
        let x = BigReal::parse("3/2", 20).unwrap();
        assert_eq!(x, BigReal::parse("1.5", 20).unwrap());
        assert!(BigReal::parse("1/0", 20).is_err());
        assert!(BigReal::parse("abc", 20).is_err());
    }
}
