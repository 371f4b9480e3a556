//! Bernoulli numbers, Bernoulli polynomials at rational points, and the
//! exact values of the Riemann zeta function at even integers.
//!
//! The convention is `B_1 = -1/2`, matching the generating function
//! `t e^{xt} / (e^t - 1)` at `x = 0`.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactarith::{binomial, factorial, pow2, PiValue, Rational};

static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();

fn table() -> &'static RwLock<Vec<Rational>> {
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Exact `B_n` from the recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
pub fn bernoulli_number(n: u32) -> Rational {
    {
        let t = table().read().unwrap();
        if let Some(b) = t.get(n as usize) {
            return b.clone();
        }
    }
    let mut t = table().write().unwrap();
    while t.len() <= n as usize {
        let m = t.len() as u32;
        if m >= 3 && m % 2 == 1 {
            t.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (k, b) in t.iter().enumerate() {
            if !b.is_zero() {
                acc += b * binomial(m + 1, k as u32);
            }
        }
        let next = -acc / Rational::from_integer((m + 1).into());
        t.push(next);
    }
    t[n as usize].clone()
}

/// `B_n(x) = sum_k C(n, k) B_k x^{n-k}`.
pub fn bernoulli_poly(n: u32, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xp = Rational::one();
    // accumulate from k = n down to 0 so that x^{n-k} grows incrementally
    for k in (0..=n).rev() {
        let b = bernoulli_number(k);
        if !b.is_zero() {
            acc += b * binomial(n, k) * &xp;
        }
        xp *= x;
    }
    acc
}

/// `B_n(1/2)`.
pub fn bernoulli_half(n: u32) -> Rational {
    bernoulli_poly(n, &Rational::new(1.into(), 2.into()))
}

/// `zeta(s) = (-1)^{s/2+1} B_s (2 pi)^s / (2 s!)` for even `s >= 2`.
pub fn zeta_even(s: u32) -> Result<PiValue> {
    if s < 2 || s % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "no exact value for zeta({s}); only even arguments >= 2"
        )));
    }
    let b = bernoulli_number(s);
    let mut c = b * pow2(s as i64) / (Rational::from_integer(factorial(s)) * Rational::from_integer(2.into()));
    if (s / 2) % 2 == 0 {
        c = -c;
    }
    debug_assert!(c.is_positive());
    Ok(PiValue::new(c, s))
}
