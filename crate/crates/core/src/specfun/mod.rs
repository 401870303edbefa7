//! Constants and special functions: gamma, pi, ln 2, Bernoulli numbers,
//! Riemann and Hurwitz zeta, digamma and polygamma.

mod bernoulli;
mod constants;
mod digamma;
mod zeta;

pub use bernoulli::{bernoulli, bernoulli_numbers};
pub use constants::{constants, euler_gamma, ln2, pi, Constants};
pub use digamma::{digamma, digamma_reference, polygamma};
pub use zeta::{hurwitz_zeta, riemann_zeta};
