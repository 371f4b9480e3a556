use num_traits::{One, Zero};

use super::combinatorics::integer_partitions;
use crate::bernoulli::zeta_even;
use crate::error::{Error, Result};
use crate::exactarith::{factorial, Cyclo, PiValue, Rational};

/// The operations a coefficient ring needs for Bell polynomial evaluation.
pub trait BellRing: Clone {
    fn try_add(&self, other: &Self) -> Result<Self>;
    fn try_mul(&self, other: &Self) -> Result<Self>;
    fn scale(&self, r: &Rational) -> Self;
    fn is_zero_element(&self) -> bool;
}

impl BellRing for Rational {
    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
}

impl BellRing for PiValue {
    fn try_add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn scale(&self, r: &Rational) -> Self {
        PiValue::scale(self, r)
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
}

impl BellRing for Cyclo {
    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }
    fn scale(&self, r: &Rational) -> Self {
        Cyclo::scale(self, r)
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
}

fn ring_pow<R: BellRing>(one: &R, x: &R, e: u32) -> Result<R> {
    let mut acc = one.clone();
    for _ in 0..e {
        acc = acc.try_mul(x)?;
    }
    Ok(acc)
}

/// `P_m(x_1, ..., x_m)`, the coefficient of `z^m` in
/// `exp(sum_k x_k z^k / k)`, with `m = coeffs.len()`, evaluated by the
/// explicit sum over `k_1 + 2 k_2 + ... + m k_m = m`:
///
/// ```text
/// P_m = sum prod_j (x_j / j)^{k_j} / k_j!
/// ```
///
/// `one` is the multiplicative identity of the ring (needed for `m = 0`).
pub fn modified_bell<R: BellRing>(one: &R, coeffs: &[R]) -> Result<R> {
    let m = coeffs.len() as u32;
    let scaled: Vec<R> = coeffs
        .iter()
        .enumerate()
        .map(|(j, x)| x.scale(&Rational::new(1.into(), (j as u64 + 1).into())))
        .collect();
    let mut total: Option<R> = None;
    for mults in integer_partitions(m) {
        let mut term = one.clone();
        let mut denom = num_bigint::BigInt::one();
        for (j, &k) in mults.iter().enumerate() {
            if k > 0 {
                term = term.try_mul(&ring_pow(one, &scaled[j], k)?)?;
                denom *= factorial(k);
            }
        }
        let term = term.scale(&Rational::new(1.into(), denom));
        total = Some(match total {
            None => term,
            Some(t) => t.try_add(&term)?,
        });
    }
    Ok(total.unwrap_or_else(|| one.clone()))
}

/// `P_m` through `P_m = (1/m) sum_{j=1}^{m} x_j P_{m-j}`, `P_0 = 1`.
pub fn modified_bell_recurrence<R: BellRing>(one: &R, coeffs: &[R]) -> Result<R> {
    let m = coeffs.len();
    let mut p: Vec<R> = vec![one.clone()];
    for i in 1..=m {
        let mut acc: Option<R> = None;
        for j in 1..=i {
            let t = coeffs[j - 1].try_mul(&p[i - j])?;
            acc = Some(match acc {
                None => t,
                Some(a) => a.try_add(&t)?,
            });
        }
        let acc = acc.expect("i >= 1");
        p.push(acc.scale(&Rational::new(1.into(), (i as u64).into())));
    }
    Ok(p.pop().expect("nonempty"))
}

fn zeta_multiples(m: u32, n: u32, alternate: bool) -> Result<Vec<PiValue>> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "exact repeated zeta values need an even argument >= 2, got {m}"
        )));
    }
    (1..=n)
        .map(|j| {
            let z = zeta_even(j * m)?;
            Ok(if alternate && j % 2 == 0 { -z } else { z })
        })
        .collect()
}

/// `zeta({m}^n) = P_n(zeta(m), -zeta(2m), ..., (-1)^{n+1} zeta(nm))` for
/// even `m`, with `zeta({m}^0) = 1`.
pub fn zeta_repeated(m: u32, n: u32) -> Result<PiValue> {
    let xs = zeta_multiples(m, n, true)?;
    normalize_grading(modified_bell(&PiValue::one(), &xs)?, m * n)
}

/// `zeta*({m}^n) = P_n(zeta(m), zeta(2m), ..., zeta(nm))` for even `m`,
/// with `zeta*({m}^0) = 1`.
pub fn zeta_star_repeated(m: u32, n: u32) -> Result<PiValue> {
    let xs = zeta_multiples(m, n, false)?;
    normalize_grading(modified_bell(&PiValue::one(), &xs)?, m * n)
}

fn normalize_grading(v: PiValue, pi_exp: u32) -> Result<PiValue> {
    if v.is_zero() {
        return Ok(PiValue::zero(pi_exp));
    }
    if v.pi_exp() != pi_exp {
        return Err(Error::GradingMismatch {
            left: v.pi_exp(),
            right: pi_exp,
        });
    }
    Ok(v)
}
