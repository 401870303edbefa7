//! Exact Bernoulli numbers with a process-wide, append-only cache.

use alloc::vec::Vec;

use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use spin::RwLock;

use crate::error::{domain, Result};

/// `B_0 ..= B_{len-1}`, extended on demand and never shrunk.
static CACHE: RwLock<Vec<RBig>> = RwLock::new(Vec::new());

/// `B_0, B_1, ..., B_{2 count}` (convention `B_1 = -1/2`).
pub fn bernoulli_numbers(count: usize) -> Result<Vec<RBig>> {
    if count == 0 {
        return Err(domain("bernoulli_numbers requires count >= 1"));
    }
    let len = 2 * count + 1;
    ensure(len);
    Ok(CACHE.read()[..len].to_vec())
}

/// A single Bernoulli number `B_index`.
pub fn bernoulli(index: usize) -> RBig {
    ensure(index + 1);
    CACHE.read()[index].clone()
}

fn ensure(len: usize) {
    if CACHE.read().len() >= len {
        return;
    }
    let mut cache = CACHE.write();
    while cache.len() < len {
        let next = next_bernoulli(&cache);
        cache.push(next);
    }
}

/// `B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k`.
fn next_bernoulli(prev: &[RBig]) -> RBig {
    let m = prev.len();
    match m {
        0 => return RBig::ONE,
        1 => return RBig::from_parts(IBig::NEG_ONE, UBig::from(2u8)),
        _ if m % 2 == 1 => return RBig::ZERO,
        _ => {}
    }
    let mut binom = UBig::ONE; // C(m+1, 0)
    let mut sum = RBig::ZERO;
    for (k, b) in prev.iter().enumerate() {
        if !b.is_zero() {
            sum += RBig::from(IBig::from(binom.clone())) * b;
        }
        binom = binom * UBig::from(m + 1 - k) / UBig::from(k + 1);
    }
    -sum / RBig::from(IBig::from(m + 1))
}
