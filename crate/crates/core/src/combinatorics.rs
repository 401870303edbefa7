//! Index sets of the two Faà di Bruno sums and the derivative formulas
//! built on them.
//!
//! The route here is independent of [`crate::series`]: derivatives of
//! `1/g` come from a sum over Bell partitions, derivatives of `L^n` from a
//! sum over compositions. All counting is exact integer arithmetic.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use dashu_int::UBig;

use crate::bigreal::{BigReal, PrecisionConfig};
use crate::error::{Error, Result};
use crate::series::slope_series;

/// An ordered tuple `(l_1, ..., l_n)` of non-negative integers summing to
/// `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Checks `sum(parts) == parts.len() - 1`.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let sum: u64 = parts.iter().map(|&p| p as u64).sum();
        if parts.is_empty() || sum + 1 != parts.len() as u64 {
            return Err(Error::Constraint(format!(
                "composition {parts:?} must have n parts summing to n - 1"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Multiplicities `(k_1, ..., k_m)` with `sum_j j k_j = m`: one partition of
/// the derivative order `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BellPartition {
    counts: Vec<u32>,
}

impl BellPartition {
    pub fn new(counts: Vec<u32>) -> Result<Self> {
        let m = counts.len() as u64;
        let weight: u64 = counts
            .iter()
            .enumerate()
            .map(|(i, &k)| (i as u64 + 1) * k as u64)
            .sum();
        if weight != m {
            return Err(Error::Constraint(format!(
                "bell partition {counts:?} has weight {weight}, expected {m}"
            )));
        }
        Ok(Self { counts })
    }

    /// The order `m` this partition indexes.
    pub fn order(&self) -> usize {
        self.counts.len()
    }

    /// `k_j` for `j = 1..=m` (index 0 holds `k_1`).
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// `k_j`, zero outside `1..=m`.
    pub fn k(&self, j: usize) -> u32 {
        if j == 0 {
            0
        } else {
            self.counts.get(j - 1).copied().unwrap_or(0)
        }
    }

    /// Number of blocks `K = sum_j k_j`.
    pub fn blocks(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// `k_0 = k_2 + 2 k_3 + ... + (m-1) k_m = m - K`.
    pub fn k0(&self) -> u32 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &k)| i as u32 * k)
            .sum()
    }
}

fn factorial(n: u64) -> UBig {
    (1..=n).map(UBig::from).product()
}

/// `(n-1)! / (l_1! ... l_n!)`.
pub fn multinomial(n_minus_1: u32, parts: &Composition) -> Result<UBig> {
    let sum: u64 = parts.parts().iter().map(|&p| p as u64).sum();
    if sum != n_minus_1 as u64 {
        return Err(Error::Constraint(format!(
            "parts {:?} sum to {sum}, not {n_minus_1}",
            parts.parts()
        )));
    }
    let denom: UBig = parts.parts().iter().map(|&p| factorial(p as u64)).product();
    Ok(factorial(n_minus_1 as u64) / denom)
}

/// All `n`-tuples of non-negative integers summing to `n - 1`, in ascending
/// lexicographic order. There are `C(2n-2, n-1)` of them.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    assert!(n >= 1, "compositions need n >= 1");
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill_compositions(&mut current, 0, (n - 1) as u32, &mut out);
    out
}

fn fill_compositions(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Composition>) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(Composition(current.to_vec()));
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        fill_compositions(current, pos + 1, remaining - v, out);
    }
}

/// All `(k_1, ..., k_m)` with `sum_j j k_j = m`, in descending lexicographic
/// order of the count vector (so `(m, 0, ..., 0)` comes first and
/// `(0, ..., 0, 1)` last). There are `p(m)` of them.
pub fn enumerate_bell_partitions(m: usize) -> Vec<BellPartition> {
    assert!(m >= 1, "bell partitions need m >= 1");
    let mut out = Vec::new();
    let mut counts = vec![0u32; m];
    fill_bell(&mut counts, 0, m as u32, &mut out);
    out
}

fn fill_bell(counts: &mut [u32], idx: usize, remaining: u32, out: &mut Vec<BellPartition>) {
    let part = idx as u32 + 1;
    if idx == counts.len() - 1 {
        if remaining.is_multiple_of(part) {
            counts[idx] = remaining / part;
            out.push(BellPartition { counts: counts.to_vec() });
        }
        return;
    }
    for k in (0..=remaining / part).rev() {
        counts[idx] = k;
        fill_bell(counts, idx + 1, remaining - k * part, out);
    }
    counts[idx] = 0;
}

/// `d^m/dz^m [1/g](a)` from `g(a), g'(a), ..., g^{(m)}(a)`:
///
/// `sum_{k in P(m)} m! (-1)^K K! / g^{K+1} prod_j (g^{(j)}/j!)^{k_j} / k_j!`,
/// with `K = sum_j k_j`.
pub fn reciprocal_derivative(g_derivs: &[BigReal], m: usize) -> Result<BigReal> {
    if g_derivs.len() < m + 1 {
        return Err(Error::InsufficientData {
            needed: m + 1,
            got: g_derivs.len(),
        });
    }
    let g0 = &g_derivs[0];
    if g0.is_zero() {
        return Err(Error::Domain("reciprocal_derivative requires g(a) != 0".into()));
    }
    let prec = g0.precision();
    let inv = g0.recip();
    if m == 0 {
        return Ok(inv);
    }

    // t_j = g^{(j)} / j!
    let mut taylor = Vec::with_capacity(m + 1);
    let mut fact = BigReal::one(prec);
    for (j, d) in g_derivs.iter().take(m + 1).enumerate() {
        if j > 0 {
            fact = fact.mul_int(j as u64);
        }
        taylor.push(d / &fact);
    }
    let inv_powers = powers(&inv, m + 1);

    let m_fact = factorial(m as u64);
    let mut total = BigReal::zero(prec);
    for part in enumerate_bell_partitions(m) {
        let blocks = part.blocks() as u64;
        let denom: UBig = part.counts().iter().map(|&k| factorial(k as u64)).product();
        let weight = &m_fact * factorial(blocks) / denom;
        let mut term = BigReal::from_int(weight, prec) * &inv_powers[blocks as usize + 1];
        for (j, &k) in part.counts().iter().enumerate() {
            if k > 0 {
                term = term * taylor[j + 1].powi(k as i64);
            }
        }
        total = if blocks.is_multiple_of(2) { total + term } else { total - term };
    }
    Ok(total)
}

/// `x^0 ..= x^n`.
fn powers(x: &BigReal, n: usize) -> Vec<BigReal> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigReal::one(x.precision()));
    for i in 1..=n {
        out.push(&out[i - 1] * x);
    }
    out
}

/// `[L(a), L'(a), ..., L^{(max_order)}(a)]` for the kernel
/// `L(z) = (z - a)/(psi(z) - psi(a)) = 1/M(z - a)`.
///
/// Each entry is the Bell-partition reciprocal derivative of `M`, whose
/// derivatives at `a` are `M^{(j)}(a) = psi^{(j+1)}(a) / (j+1)`.
pub fn l_derivatives(a: &BigReal, max_order: usize, cfg: &PrecisionConfig) -> Result<Vec<BigReal>> {
    let slope = slope_series(a, max_order, cfg)?;
    let mut g_derivs = Vec::with_capacity(max_order + 1);
    let mut fact = BigReal::one(cfg.working());
    for (j, c) in slope.coeffs().iter().enumerate() {
        if j > 0 {
            fact = fact.mul_int(j as u64);
        }
        g_derivs.push(c * &fact);
    }
    (0..=max_order)
        .map(|m| reciprocal_derivative(&g_derivs, m))
        .collect()
}

/// `(L^n)^{(n-1)}(a) = sum_{l in C(n)} multinomial(n-1; l) prod_i L^{(l_i)}(a)`,
/// which is the Lagrange coefficient `h_n`.
///
/// Compositions that are rearrangements of one another contribute equal
/// products, so the sum runs over partitions of `n - 1` into at most `n`
/// positive parts, each weighted by its number of distinct arrangements
/// `n! / ((n - K)! prod_j k_j!)`. This keeps orders near 20 tractable where
/// the `C(2n-2, n-1)` compositions are not.
pub fn power_derivative(l_derivs: &[BigReal], n: usize) -> Result<BigReal> {
    if n == 0 {
        return Err(Error::Domain("power_derivative requires n >= 1".into()));
    }
    if l_derivs.len() < n {
        return Err(Error::InsufficientData {
            needed: n,
            got: l_derivs.len(),
        });
    }
    let prec = l_derivs[0].precision();
    if n == 1 {
        return Ok(l_derivs[0].clone());
    }
    let base_powers = powers(&l_derivs[0], n);
    let n_fact = factorial(n as u64);
    let nm1_fact = factorial(n as u64 - 1);
    let mut total = BigReal::zero(prec);
    for part in enumerate_bell_partitions(n - 1) {
        let blocks = part.blocks() as usize;
        if blocks > n {
            continue;
        }
        let mut arrangements_denom = factorial((n - blocks) as u64);
        let mut multinomial_denom = UBig::ONE;
        for (i, &k) in part.counts().iter().enumerate() {
            arrangements_denom *= factorial(k as u64);
            multinomial_denom *= factorial(i as u64 + 1).pow(k as usize);
        }
        let weight = (&n_fact / arrangements_denom) * (&nm1_fact / multinomial_denom);
        let mut term = BigReal::from_int(weight, prec) * &base_powers[n - blocks];
        for (i, &k) in part.counts().iter().enumerate() {
            if k > 0 {
                term = term * l_derivs[i + 1].powi(k as i64);
            }
        }
        total = total + term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{ps_div, ps_pow, PowerSeries};

    fn comp(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(2, &comp(&[1, 1, 0])).unwrap(), UBig::from(2u8));
        assert_eq!(multinomial(3, &Composition(vec![1, 1, 1])).unwrap(), UBig::from(6u8));
        assert_eq!(multinomial(0, &comp(&[0])).unwrap(), UBig::ONE);
        assert!(multinomial(3, &comp(&[1, 1, 0])).is_err());
        assert!(Composition::new(vec![2, 2]).is_err());
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(enumerate_compositions(1), vec![comp(&[0])]);
        assert_eq!(enumerate_compositions(2), vec![comp(&[0, 1]), comp(&[1, 0])]);
        let three = enumerate_compositions(3);
        assert_eq!(three.len(), 6);
        assert!(three.windows(2).all(|w| w[0] < w[1]));
        for n in 1..=10u64 {
            assert_eq!(enumerate_compositions(n as usize).len() as u64, binom(2 * n - 2, n - 1));
        }
    }

    #[test]
    fn bell_enumeration() {
        let p = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (m, &count) in p.iter().enumerate() {
            let parts = enumerate_bell_partitions(m + 1);
            assert_eq!(parts.len(), count, "p({})", m + 1);
            for b in &parts {
                assert_eq!(b.k0() + b.blocks(), (m + 1) as u32);
            }
        }
        let three: Vec<Vec<u32>> = enumerate_bell_partitions(3)
            .into_iter()
            .map(|b| b.counts().to_vec())
            .collect();
        assert_eq!(three, vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(enumerate_bell_partitions(1)[0].counts(), &[1]);
        assert!(BellPartition::new(vec![1, 1]).is_err());
        let b = BellPartition::new(vec![0, 1, 0, 1, 0, 0]).unwrap();
        assert_eq!((b.k(2), b.k(4), b.k(0), b.k(9)), (1, 1, 0, 0));
        assert_eq!(b.k0(), 4);
    }

    #[test]
    fn reciprocal_derivative_examples() {
        let p = 30;
        let g = |xs: &[i64]| xs.iter().map(|&x| BigReal::from_int(x, p)).collect::<Vec<_>>();
        let d1 = reciprocal_derivative(&g(&[2, 3]), 1).unwrap();
        assert_eq!(d1, BigReal::from_ratio(-3, 4, p));
        let d2 = reciprocal_derivative(&g(&[1, 1, 1]), 2).unwrap();
        assert_eq!(d2, BigReal::one(p));
        // (2 g1^2 - g0 g2) / g0^3
        let d2b = reciprocal_derivative(&g(&[2, 5, -7]), 2).unwrap();
        assert_eq!(d2b, BigReal::from_ratio(2 * 25 + 14, 8, p));
        assert!(reciprocal_derivative(&g(&[0, 1]), 1).is_err());
        assert!(reciprocal_derivative(&g(&[1, 1]), 2).is_err());
    }

    #[test]
    fn reciprocal_matches_series_division_at_three_halves() {
        let cfg = PrecisionConfig::with_digits(40).unwrap();
        let wp = cfg.working();
        let a = BigReal::from_ratio(3, 2, wp);
        let m = slope_series(&a, 2, &cfg).unwrap();
        let g = [m.coeff(0).clone(), m.coeff(1).clone(), m.coeff(2).mul_int(2)];
        let via_bell = reciprocal_derivative(&g, 2).unwrap();
        let one = PowerSeries::constant(a, BigReal::one(wp), 2);
        let via_series = ps_div(&one, &m).unwrap().coeff(2).mul_int(2);
        assert!((via_bell - via_series).abs() < BigReal::pow10(-30, wp));
    }

    #[test]
    fn kernel_derivatives() {
        let cfg = PrecisionConfig::with_digits(40).unwrap();
        let wp = cfg.working();
        let tol = BigReal::pow10(-45, wp);
        let l = l_derivatives(&BigReal::one(wp), 1, &cfg).unwrap();
        let z2 = crate::specfun::riemann_zeta(2, &cfg).unwrap();
        let z3 = crate::specfun::riemann_zeta(3, &cfg).unwrap();
        assert!((&l[0] - z2.recip()).abs() < tol);
        assert!((&l[1] - &z3 / z2.square()).abs() < tol);

        let l = l_derivatives(&BigReal::from_ratio(3, 2, wp), 0, &cfg).unwrap();
        let pi = crate::specfun::pi(wp);
        let expect = BigReal::from_int(2, wp) / (pi.square() - BigReal::from_int(8, wp));
        assert!((&l[0] - expect).abs() < tol);
    }

    fn power_derivative_by_compositions(l: &[BigReal], n: usize) -> BigReal {
        let p = l[0].precision();
        enumerate_compositions(n)
            .iter()
            .map(|c| {
                let w = multinomial(n as u32 - 1, c).unwrap();
                c.parts()
                    .iter()
                    .fold(BigReal::from_int(w, p), |acc, &li| acc * &l[li as usize])
            })
            .sum()
    }

    #[test]
    fn grouped_sum_matches_composition_sum() {
        let p = 40;
        let l: Vec<BigReal> = (0..9).map(|i| BigReal::from_ratio(3 * i + 1, 7 + i, p)).collect();
        for n in 1..=8 {
            let grouped = power_derivative(&l, n).unwrap();
            let direct = power_derivative_by_compositions(&l, n);
            assert!(grouped.rel_diff(&direct) < BigReal::pow10(-36, p), "n={n}");
        }
    }

    #[test]
    fn power_derivative_small_orders() {
        let p = 30;
        let l = vec![BigReal::from_int(3, p), BigReal::from_int(5, p)];
        assert_eq!(power_derivative(&l, 1).unwrap(), l[0]);
        assert_eq!(power_derivative(&l, 2).unwrap(), BigReal::from_int(30, p));
        assert!(power_derivative(&l, 3).is_err());
        assert!(power_derivative(&l, 0).is_err());
    }

    #[test]
    fn power_derivative_matches_series_at_three_halves() {
        let cfg = PrecisionConfig::with_digits(40).unwrap();
        let wp = cfg.working();
        let a = BigReal::from_ratio(3, 2, wp);
        let l = l_derivatives(&a, 3, &cfg).unwrap();
        let via_combinatorics = power_derivative(&l, 4).unwrap();
        let m = slope_series(&a, 3, &cfg).unwrap();
        let one = PowerSeries::constant(a, BigReal::one(wp), 3);
        let kernel = ps_div(&one, &m).unwrap();
        let via_series = ps_pow(&kernel, 4).coeff(3).mul_int(6);
        assert!(via_combinatorics.rel_diff(&via_series) < BigReal::pow10(-28, wp));
    }
}
