//! Bilateral zeta functions `H_r`, `K_r`, `ξ` and the generalized multiple
//! sine functions built from their `s`-derivatives at non-positive integers.
//!
//! Everything here is pure computation over `f64`/`Complex64` plus exact
//! rational combinatorics. The crate builds without `std` (it needs `alloc`).

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bilateral;
pub mod combinatorics;
pub mod complex;
pub mod error;
pub mod oracle;
pub mod params;
pub mod quadrature;
pub mod sine;
pub mod special;

pub use complex::ComplexValue;
pub use error::{Error, Result};
pub use params::EvalParams;
