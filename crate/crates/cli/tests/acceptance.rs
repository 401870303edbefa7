//! Acceptance checks, one PASS/FAIL line each.
//!
//! Run with `cargo test -p gammamin --test acceptance -- --nocapture` (the
//! lines are printed either way; the target exits non-zero on any failure).

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use gammamin_core::combinatorics::{enumerate_bell_partitions, enumerate_compositions};
use gammamin_core::minimum::{discrepancy_report, expand, psi_root, Method, TABLE1, TABLE2};
use gammamin_core::series::{lagrange_invert, slope_series, PowerSeries};
use gammamin_core::specfun::{hurwitz_zeta, polygamma, riemann_zeta};
use gammamin_core::{BigReal, PrecisionConfig};

type Outcome = Result<String, String>;

/// Name, optional runtime limit in seconds, check.
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

fn cfg(digits: usize) -> PrecisionConfig {
    PrecisionConfig::with_digits(digits).unwrap()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let stamp = |d: String| format!("{d}; {:.3}s", elapsed.as_secs_f64());
    match (out, limit) {
        (Ok(d), Some(l)) if elapsed >= l => Err(format!("{}; limit {}s", stamp(d), l.as_secs())),
        (Ok(d), _) => Ok(stamp(d)),
        (Err(d), _) => Err(stamp(d)),
    }
}

fn root_reproduction() -> Outcome {
    let got = psi_root(&cfg(20)).map_err(|e| e.to_string())?.format_sig(20);
    check(got == "1.4616321449683623413", format!("psi_root = {got}"))
}

fn table2_reproduction() -> Outcome {
    let c = cfg(20);
    let e = expand(&BigReal::from_ratio(3, 2, c.working()), 3, Method::Reversion, &c).map_err(|e| e.to_string())?;
    let bound = BigReal::pow10(-10, 20).mul_int(5);
    let mut ok = true;
    let mut deltas = Vec::new();
    for (s, (_, published)) in e.partial_sums.iter().zip(TABLE2) {
        let d = s - BigReal::parse(published, c.working()).unwrap();
        ok &= d.abs() <= bound;
        deltas.push(d.format_sig(2));
    }
    check(ok, format!("deltas {}", deltas.join(", ")))
}

fn table1_partial_reproduction() -> Outcome {
    let report = discrepancy_report(&cfg(20)).map_err(|e| e.to_string())?;
    let bound = BigReal::pow10(-9, 20).mul_int(5);
    let mut deltas = Vec::new();
    for n in 1..=TABLE1.len() {
        let label = format!("a=1 order {n}: printed r vs table 1");
        let rec = report.find(&label).ok_or_else(|| format!("missing audit record {label:?}"))?;
        deltas.push(rec.delta.clone());
    }
    let rows_match = deltas[..2].iter().all(|d| d.abs() <= bound);
    let row3_differs = deltas[2].abs() > BigReal::pow10(-3, 20);
    let shown: Vec<String> = deltas.iter().map(|d| d.format_sig(3)).collect();
    check(rows_match && row3_differs, format!("six deltas {}", shown.join(", ")))
}

fn engine_equivalence() -> Outcome {
    let c = cfg(50);
    let bound = BigReal::pow10(-35, c.working());
    let mut worst = BigReal::zero(c.working());
    for a in ["1", "3/2"] {
        let a = BigReal::parse(a, c.working()).unwrap();
        for n in 1..=8 {
            let rev = expand(&a, n, Method::Reversion, &c).map_err(|e| e.to_string())?;
            let fdb = expand(&a, n, Method::FaaDiBruno, &c).map_err(|e| e.to_string())?;
            worst = worst.max(rev.max_relative_deviation(&fdb));
        }
    }
    check(worst <= bound, format!("max relative deviation {}", worst.format_sig(3)))
}

fn polygamma_zeta_identity() -> Outcome {
    let c = cfg(50);
    let wp = c.working();
    let bound = BigReal::pow10(-40, wp);
    let mut worst = BigReal::zero(wp);
    for s in ["1", "3/2"] {
        let s = BigReal::parse(s, wp).unwrap();
        let mut fact = BigReal::one(wp);
        for n in 1..=8u32 {
            fact = fact.mul_int(n);
            let z = hurwitz_zeta(n + 1, &s, &c).map_err(|e| e.to_string())?;
            let rhs = (&fact * z).mul_int(if n % 2 == 1 { 1 } else { -1 });
            let lhs = polygamma(n, &s, &c).map_err(|e| e.to_string())?;
            worst = worst.max(lhs.rel_diff(&rhs));
        }
    }
    check(worst <= bound, format!("max relative error {}", worst.format_sig(3)))
}

/// Largest coefficient of `G(F(h)) - h` through `h^order`.
fn round_trip_residual(slope: &PowerSeries, inverse: &[BigReal], order: usize) -> BigReal {
    let prec = slope.coeff(0).precision();
    let mut forward = vec![BigReal::zero(prec)];
    forward.extend(slope.coeffs().iter().take(order).cloned());
    let mut composed = vec![BigReal::zero(prec); order + 1];
    let mut power = forward.clone();
    for c in inverse.iter().take(order) {
        for (slot, p) in composed.iter_mut().zip(&power) {
            *slot = &*slot + c * p;
        }
        power = (0..=order)
            .map(|k| (0..=k).map(|i| &power[i] * &forward[k - i]).sum())
            .collect();
    }
    composed[1] = composed[1].add_int(-1);
    composed.iter().map(BigReal::abs).max().unwrap()
}

fn reversion_round_trip() -> Outcome {
    let c = cfg(50);
    let wp = c.working();
    let order = 12;
    let mut fact = BigReal::one(wp);
    let exp_slope = PowerSeries::new(
        BigReal::zero(wp),
        (0..order)
            .map(|j| {
                fact = fact.mul_int(j as u64 + 1);
                fact.recip()
            })
            .collect(),
    );
    let a = BigReal::from_ratio(3, 2, wp);
    let psi_slope = slope_series(&a, order - 1, &c).map_err(|e| e.to_string())?;
    let bound = BigReal::pow10(-38, wp);
    let mut shown = Vec::new();
    let mut ok = true;
    for (name, anchor, slope) in [("exp@0", BigReal::zero(wp), exp_slope), ("psi@3/2", a, psi_slope)] {
        let inv = lagrange_invert(&anchor, &slope, &BigReal::zero(wp), order).map_err(|e| e.to_string())?;
        let r = round_trip_residual(&slope, inv.coefficients(), order);
        ok &= r <= bound;
        shown.push(format!("{name} {}", r.format_sig(2)));
    }
    check(ok, format!("residuals {}", shown.join(", ")))
}

fn half_integer_identity() -> Outcome {
    let c = cfg(50);
    let wp = c.working();
    let v = BigReal::from_ratio(3, 2, wp);
    let bound = BigReal::pow10(-45, wp);
    let mut worst = BigReal::zero(wp);
    for u in 2..=8u32 {
        let two_u = BigReal::from_int(1i64 << u, wp);
        let zeta = riemann_zeta(u, &c).map_err(|e| e.to_string())?;
        let expect = two_u.add_int(-1) * zeta - &two_u;
        let got = hurwitz_zeta(u, &v, &c).map_err(|e| e.to_string())?;
        worst = worst.max(got.rel_diff(&expect));
    }
    check(worst <= bound, format!("max relative error {}", worst.format_sig(3)))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn partition_count(m: usize) -> u64 {
    let mut p = vec![0u64; m + 1];
    p[0] = 1;
    for part in 1..=m {
        for total in part..=m {
            p[total] += p[total - part];
        }
    }
    p[m]
}

fn combinatorial_counts() -> Outcome {
    for n in 1..=10usize {
        let got = enumerate_compositions(n).len() as u64;
        let want = binomial(2 * n as u64 - 2, n as u64 - 1);
        if got != want {
            return Err(format!("compositions n={n}: {got} != {want}"));
        }
    }
    for m in 1..=12usize {
        let got = enumerate_bell_partitions(m).len() as u64;
        if got != partition_count(m) {
            return Err(format!("partitions m={m}: {got} != {}", partition_count(m)));
        }
    }
    Ok("compositions n=1..10, partitions m=1..12".into())
}

fn cli_table_csv(id: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gammamin"))
        .args(["table", "--id", id, "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("table {id} exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn golden_files() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for id in ["1", "2"] {
        let first = cli_table_csv(id)?;
        let second = cli_table_csv(id)?;
        if first != second {
            return Err(format!("table {id}: two runs differ"));
        }
        let path = dir.join(format!("table{id}.csv"));
        let golden = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        if first != golden {
            return Err(format!("table {id}: output differs from {}", path.display()));
        }
    }
    Ok("table1.csv, table2.csv".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("root reproduction at 20 digits", Some(1), root_reproduction),
        ("table 2 partial sums within 5e-10", Some(1), table2_reproduction),
        ("table 1 rows 1-2 within 5e-9, row 3 off by > 1e-3", None, table1_partial_reproduction),
        ("reversion vs faa di bruno h_n within 1e-35", Some(10), engine_equivalence),
        ("polygamma vs hurwitz zeta within 1e-40", None, polygamma_zeta_identity),
        ("order-12 round trip residual within 1e-38", None, reversion_round_trip),
        ("half-integer hurwitz identity within 1e-45", None, half_integer_identity),
        ("composition and partition counts", None, combinatorial_counts),
        ("table CSV goldens", None, golden_files),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let outcome = timed(limit.map(Duration::from_secs), f);
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag} [{}] {name} ({detail})", i + 1);
        failed += outcome.is_err() as usize;
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
