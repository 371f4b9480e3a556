//! Exact arithmetic: big rationals, pi-graded values and cyclotomic fields.

mod cyclo;
mod pivalue;
mod rational;

pub use cyclo::{cyclotomic_polynomial, euler_phi, Cyclo};
pub use pivalue::PiValue;
pub use rational::{
    binomial, factorial, format_rational, int, parse_rational, pow2, rat, Rational,
};
