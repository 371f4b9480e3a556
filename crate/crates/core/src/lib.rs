//! Exact evaluation of sums of multiple zeta values whose arguments are
//! multiples of a fixed integer `m`.
//!
//! The central quantity is
//!
//! ```text
//! E(mn, k) = sum over compositions (a_1, ..., a_k) of n of zeta(m a_1, ..., m a_k)
//! ```
//!
//! together with the repeated-argument values `zeta({m}^n)` and
//! `zeta*({m}^n)`. For even `m` every such value is a rational multiple of
//! `pi^(mn)` and is computed exactly as a [`PiValue`] by several independent
//! routes (cyclotomic closed forms, Bernoulli products, modified Bell
//! polynomials). The [`oracle`] module evaluates the same quantities
//! numerically with rigorous error bounds.

pub mod bernoulli;
pub mod cli;
pub mod closedforms;
pub mod error;
pub mod exactarith;
pub mod oracle;
pub mod sumformula;
pub mod symfun;

pub use error::{Error, Result};
pub use exactarith::{Cyclo, PiValue, Rational};
pub use oracle::{NumericValue, OracleConfig};
pub use sumformula::{esum, ESumQuery, Method};
