//! Location of the minimum of the Gamma function by Lagrange inversion of
//! the digamma function.
//!
//! The crate is `no_std` (it needs `alloc`). Numbers are [`BigReal`]s:
//! decimal floats carrying their own precision.
//!
//! * [`specfun`]: constants, zeta, digamma, polygamma.
//! * [`series`]: truncated power series and series reversion.
//! * [`combinatorics`]: compositions, Bell partitions and the Faà di Bruno
//!   derivative formulas.
//! * [`minimum`]: expansions of the minimum, the root oracle, printed
//!   coefficient formulas and table reproductions.
#![no_std]
extern crate alloc;

pub mod bigreal;
pub mod combinatorics;
pub mod error;
pub mod minimum;
pub mod series;
pub mod specfun;

pub use bigreal::{BigReal, PrecisionConfig};
pub use error::{Error, Result};
