//! Truncated power series about an anchor point and series reversion.
//!
//! A [`PowerSeries`] of order `N` holds `c_0..=c_N` and stands for
//! `sum_k c_k h^k` with `h = z - anchor`. Binary operations truncate to the
//! smaller order.

use alloc::vec;
use alloc::vec::Vec;

use crate::bigreal::{BigReal, PrecisionConfig};
use crate::error::{domain, Error, Result};
use crate::specfun::polygamma;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    anchor: BigReal,
    coeffs: Vec<BigReal>,
}

impl PowerSeries {
    /// Panics if `coeffs` is empty.
    pub fn new(anchor: BigReal, coeffs: Vec<BigReal>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least c_0");
        Self { anchor, coeffs }
    }

    /// `c` followed by `order` zeros.
    pub fn constant(anchor: BigReal, c: BigReal, order: usize) -> Self {
        let zero = BigReal::zero(c.precision());
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        Self { anchor, coeffs }
    }

    pub fn anchor(&self) -> &BigReal {
        &self.anchor
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigReal] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigReal {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.anchor.clone(), self.coeffs[..=order].to_vec())
    }

    /// Evaluates the polynomial at `h` by Horner's rule.
    pub fn eval(&self, h: &BigReal) -> BigReal {
        let mut acc = self.coeffs[self.order()].clone();
        for c in self.coeffs[..self.order()].iter().rev() {
            acc = &acc * h + c;
        }
        acc
    }

    fn check_anchor(&self, other: &Self) -> Result<()> {
        if self.anchor == other.anchor {
            Ok(())
        } else {
            Err(Error::AnchorMismatch)
        }
    }
}

/// Cauchy product truncated to the smaller order.
pub fn ps_mul(p: &PowerSeries, q: &PowerSeries) -> Result<PowerSeries> {
    p.check_anchor(q)?;
    let n = p.order().min(q.order());
    let coeffs = (0..=n)
        .map(|k| (0..=k).map(|i| &p.coeffs[i] * &q.coeffs[k - i]).sum())
        .collect();
    Ok(PowerSeries::new(p.anchor.clone(), coeffs))
}

/// The series `r` with `r * q = p` to the common order.
pub fn ps_div(p: &PowerSeries, q: &PowerSeries) -> Result<PowerSeries> {
    p.check_anchor(q)?;
    let q0 = &q.coeffs[0];
    if q0.is_zero() {
        return Err(Error::NonUnitDivisor);
    }
    let n = p.order().min(q.order());
    let mut r: Vec<BigReal> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = p.coeffs[k].clone();
        for j in 1..=k {
            acc = acc - &q.coeffs[j] * &r[k - j];
        }
        r.push(acc / q0);
    }
    Ok(PowerSeries::new(p.anchor.clone(), r))
}

/// `p^n` by binary exponentiation, truncated to `p.order()`.
pub fn ps_pow(p: &PowerSeries, n: u32) -> PowerSeries {
    assert!(n >= 1, "ps_pow takes a positive exponent");
    let mut base = p.clone();
    let mut result: Option<PowerSeries> = None;
    let mut e = n;
    loop {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => ps_mul(&r, &base).expect("same anchor"),
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        base = ps_mul(&base, &base).expect("same anchor");
    }
    result.expect("n >= 1")
}

/// `M(h) = (psi(a+h) - psi(a)) / h` to order `order`:
/// `m_j = psi^{(j+1)}(a) / (j+1)!`.
///
/// `1/M` is the kernel `(z - a)/(psi(z) - psi(a))` with its removable
/// singularity at `z = a` filled in.
pub fn slope_series(a: &BigReal, order: usize, cfg: &PrecisionConfig) -> Result<PowerSeries> {
    if !a.is_positive() {
        return Err(domain("slope_series requires a > 0"));
    }
    let wp = cfg.working();
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut fact = BigReal::one(wp);
    for j in 0..=order {
        fact = fact.mul_int(j as u64 + 1);
        let d = polygamma(j as u32 + 1, a, cfg)?;
        coeffs.push(d / &fact);
    }
    Ok(PowerSeries::new(a.with_precision(wp), coeffs))
}

/// Inverse series of `w = f(z)` about `z = a`, in the variable
/// `w~ = w - f(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inversion {
    /// `a, h_1/1!, h_2/2!, ...` as a series in `w~` (anchored at `w~ = 0`).
    pub series: PowerSeries,
    /// `h_1, h_2, ...`: the Lagrange coefficients themselves.
    pub lagrange: Vec<BigReal>,
    /// The `w~` at which terms and partial sums are evaluated.
    pub offset: BigReal,
}

impl Inversion {
    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// `h_n / n!` for `n = 1..=order`.
    pub fn coefficients(&self) -> &[BigReal] {
        &self.series.coeffs()[1..]
    }

    /// `t_n = (h_n / n!) w~^n` for `n = 1..=order`.
    pub fn terms(&self) -> Vec<BigReal> {
        let mut power = self.offset.clone();
        let mut out = Vec::with_capacity(self.order());
        for c in self.coefficients() {
            out.push(c * &power);
            power = &power * &self.offset;
        }
        out
    }

    /// `a + sum_{i<=n} t_i` for `n = 1..=order`.
    pub fn partial_sums(&self) -> Vec<BigReal> {
        let mut acc = self.series.coeff(0).clone();
        self.terms()
            .into_iter()
            .map(|t| {
                acc = &acc + &t;
                acc.clone()
            })
            .collect()
    }
}

/// Lagrange inversion as coefficient extraction.
///
/// With `f(z) - f(a) = h M(h)`, the limit
/// `h_n = lim_{z->a} d^{n-1}/dz^{n-1} [((z-a)/(f(z)-f(a)))^n]`
/// equals `(n-1)! [h^{n-1}] M^{-n}`, so `h_n / n! = [h^{n-1}] M^{-n} / n`.
/// `f_slope` must have order at least `order - 1`.
pub fn lagrange_invert(
    a: &BigReal,
    f_slope: &PowerSeries,
    w_offset: &BigReal,
    order: usize,
) -> Result<Inversion> {
    if f_slope.coeff(0).is_zero() {
        return Err(Error::InversionUndefined);
    }
    if order > 0 && f_slope.order() + 1 < order {
        return Err(Error::InsufficientData {
            needed: order,
            got: f_slope.order() + 1,
        });
    }
    let prec = f_slope.coeff(0).precision();
    let kernel_order = order.saturating_sub(1);
    let one = PowerSeries::constant(f_slope.anchor().clone(), BigReal::one(prec), kernel_order);
    let kernel = ps_div(&one, &f_slope.truncate(kernel_order))?;

    let mut coeffs = Vec::with_capacity(order + 1);
    let mut lagrange = Vec::with_capacity(order);
    coeffs.push(a.with_precision(prec));
    let mut power = kernel.clone();
    let mut fact = BigReal::one(prec); // (n-1)!
    for n in 1..=order {
        if n > 1 {
            power = ps_mul(&power, &kernel)?;
            fact = fact.mul_int(n as u64 - 1);
        }
        let extracted = power.coeff(n - 1);
        lagrange.push(extracted * &fact);
        coeffs.push(extracted.div_int(n as u64));
    }
    Ok(Inversion {
        series: PowerSeries::new(BigReal::zero(prec), coeffs),
        lagrange,
        offset: w_offset.clone(),
    })
}
