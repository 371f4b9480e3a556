//! Closed forms for `zeta({2m}^n)` and `zeta*({2m}^n)`.
//!
//! Throughout this module `m` is half of the repeated argument: the
//! functions evaluate `zeta({2m}^n)`. The dispatchers [`zr_closed`] and
//! [`zs_closed`] take the full argument instead.
//!
//! Sums over roots of unity are carried out exactly in a cyclotomic field
//! and the (necessarily rational) result is extracted with
//! [`Cyclo::to_rational`]; a non-rational result means a formula bug and
//! surfaces as [`Error::NotRational`].

pub mod instances;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_half, bernoulli_number};
use crate::error::{Error, Result};
use crate::exactarith::{factorial, int, pow2, Cyclo, PiValue, Rational};
use crate::symfun::{integer_partitions, weak_composition_count};

/// Largest number of weak compositions a closed form will enumerate.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// A vector of signs `(e_1, ..., e_len)`, `e_i = +-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<SignVector> {
        if entries.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidQuery("sign vector entries must be +1 or -1".into()));
        }
        Ok(SignVector(entries))
    }

    /// All `2^len` sign vectors, `+1` entries first.
    pub fn all(len: usize) -> impl Iterator<Item = SignVector> {
        (0u64..1 << len).map(move |mask| {
            SignVector(
                (0..len)
                    .map(|i| if mask >> (len - 1 - i) & 1 == 1 { -1 } else { 1 })
                    .collect(),
            )
        })
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    /// `+1` when the number of `-1` entries is even.
    pub fn sign(&self) -> i8 {
        if self.0.iter().filter(|&&e| e == -1).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn rfact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

fn sign(odd: bool) -> Rational {
    if odd {
        int(-1)
    } else {
        int(1)
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidQuery(msg()))
    }
}

pub(crate) fn guard_enumeration(total: u32, parts: u32) -> Result<()> {
    let count = weak_composition_count(total, parts);
    if count > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            count,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// `sum over weak compositions (p_1..p_slots) of total` of
/// `prod_l weights[p_l] * w^{stride * sum_l (l-1) p_l}` in `Q(w_order)`.
///
/// Zero weights prune the enumeration.
pub(crate) fn phase_weighted_sum(
    total: u32,
    slots: u32,
    weights: &[Rational],
    stride: u32,
    order: u32,
) -> Result<Cyclo> {
    guard_enumeration(total, slots)?;
    let mut buckets = vec![Rational::zero(); order as usize];
    fn rec(
        slot: u32,
        slots: u32,
        remaining: u32,
        phase: u64,
        acc: &Rational,
        weights: &[Rational],
        stride: u64,
        order: u64,
        buckets: &mut [Rational],
    ) {
        if slot + 1 == slots {
            let w = &weights[remaining as usize];
            if !w.is_zero() {
                let ph = (phase + stride * slot as u64 * remaining as u64) % order;
                buckets[ph as usize] += acc * w;
            }
            return;
        }
        for p in 0..=remaining {
            let w = &weights[p as usize];
            if w.is_zero() {
                continue;
            }
            let ph = (phase + stride * slot as u64 * p as u64) % order;
            rec(slot + 1, slots, remaining - p, ph, &(acc * w), weights, stride, order, buckets);
        }
    }
    rec(
        0,
        slots,
        total,
        0,
        &Rational::one(),
        weights,
        stride as u64,
        order as u64,
        &mut buckets,
    );
    Ok(Cyclo::from_power_sum(order, &buckets))
}

/// `zeta({2m}^n)` for odd `m >= 3`, with `w = exp(2 pi i / m)`:
///
/// ```text
/// 2 (2 pi)^{2mn} / (2mn+m)! * sum_{r=1}^{(m-1)/2} (-1)^{r-1}
///     sum_{0 <= j_1 < ... < j_r <= m-1} (w^{j_1} + ... + w^{j_r})^{2mn+m}
/// ```
pub fn zr_closed_odd(m: u32, n: u32) -> Result<PiValue> {
    require(m >= 3 && m % 2 == 1, || format!("expected odd m >= 3, got {m}"))?;
    if n == 0 {
        return Ok(PiValue::one());
    }
    require(m <= 20, || format!("m = {m} is too large for subset enumeration"))?;
    let power = (2 * m * n + m) as u64;
    let roots: Vec<Cyclo> = (0..m as i64).map(|j| Cyclo::root(m, j)).collect();
    let mut total = Cyclo::zero(m);
    for mask in 1u32..(1 << m) {
        let r = mask.count_ones();
        if r > (m - 1) / 2 {
            continue;
        }
        let mut s = Cyclo::zero(m);
        for (j, w) in roots.iter().enumerate() {
            if mask >> j & 1 == 1 {
                s = s.add(w)?;
            }
        }
        let term = s.pow(power);
        total = if r % 2 == 1 { total.add(&term)? } else { total.sub(&term)? };
    }
    let sum = total.to_rational()?;
    let coeff = int(2) * pow2(2 * (m * n) as i64) / rfact(2 * m * n + m) * sum;
    Ok(PiValue::new(coeff, 2 * m * n))
}

/// `zeta({2m}^n)` for even `m`, with `w = exp(2 pi i / 2m)`:
///
/// ```text
/// (-1)^{n+1+m/2} pi^{2mn} / (2^{m-2} (2mn+m)!)
///     * Im( sum_{sign(e) = 1} (w^{m-1} + e_1 w^{m-2} + ... + e_{m-1})^{2mn+m} )
/// ```
pub fn zr_closed_even(m: u32, n: u32) -> Result<PiValue> {
    require(m >= 2 && m % 2 == 0, || format!("expected even m >= 2, got {m}"))?;
    if n == 0 {
        return Ok(PiValue::one());
    }
    require(m <= 20, || format!("m = {m} is too large for sign enumeration"))?;
    let order = 2 * m;
    let power = (2 * m * n + m) as u64;
    let mut sum = Cyclo::zero(order);
    for eps in SignVector::all((m - 1) as usize).filter(|e| e.sign() == 1) {
        let mut a = Cyclo::root(order, (m - 1) as i64);
        for (i, &e) in eps.entries().iter().enumerate() {
            let w = Cyclo::root(order, (m - 2) as i64 - i as i64);
            a = if e == 1 { a.add(&w)? } else { a.sub(&w)? };
        }
        sum = sum.add(&a.pow(power))?;
    }
    // (S - conj S) * (-i) = 2 Im S, with i = w^{m/2}
    let minus_i = Cyclo::root(order, -((m / 2) as i64));
    let im = sum.imag_part_times_2i().mul(&minus_i)?.to_rational()? / int(2);
    let coeff = sign((n + 1 + m / 2) % 2 == 1) * im
        / (pow2((m - 2) as i64) * rfact(2 * m * n + m));
    Ok(PiValue::new(coeff, 2 * m * n))
}

/// `zeta*({2m}^n)` for even `m`:
///
/// ```text
/// (2 pi)^{2mn} sum_{|p| = mn} prod_{j=1}^{m} B_{2p_j}(1/2) / (2p_j)!
///     * exp(2 pi i / m * sum_l (l-1) p_l)
/// ```
///
/// over weak compositions `p` of `mn` into `m` parts.
pub fn zs_closed_even(m: u32, n: u32) -> Result<PiValue> {
    require(m >= 2 && m % 2 == 0, || format!("expected even m >= 2, got {m}"))?;
    if n == 0 {
        return Ok(PiValue::one());
    }
    let total = m * n;
    let weights: Vec<Rational> = (0..=total)
        .map(|p| bernoulli_half(2 * p) / rfact(2 * p))
        .collect();
    let s = phase_weighted_sum(total, m, &weights, 1, m)?.to_rational()?;
    Ok(&PiValue::two_pi_pow(2 * m * n) * &PiValue::rational(s))
}

/// `zeta*({2m}^n)` for odd `m >= 3` as a sum over weak compositions of
/// `2mn` into `m` parts of Bernoulli-number products:
///
/// ```text
/// (2 pi i)^{2mn} sum_{|p| = 2mn} prod_j B_{p_j} / p_j! * exp(2 pi i / m * sum_l (l-1) p_l)
/// ```
pub fn zs_closed_odd_bernoulli(m: u32, n: u32) -> Result<PiValue> {
    require(m >= 3 && m % 2 == 1, || format!("expected odd m >= 3, got {m}"))?;
    if n == 0 {
        return Ok(PiValue::one());
    }
    let total = 2 * m * n;
    let weights: Vec<Rational> = (0..=total)
        .map(|p| bernoulli_number(p) / rfact(p))
        .collect();
    let s = phase_weighted_sum(total, m, &weights, 1, m)?.to_rational()?;
    let s = s * sign((m * n) % 2 == 1);
    Ok(&PiValue::two_pi_pow(2 * m * n) * &PiValue::rational(s))
}

/// `zeta*({2m}^n)` for odd `m >= 3` through Bernoulli polynomials at `1/2`:
///
/// ```text
/// (pi i)^{2mn} sum_{|q| = mn} prod_j 2^{2q_j} B_{2q_j}(1/2) / (2q_j)!
///     * exp(4 pi i / m * sum_l (l-1) q_l)
/// ```
pub fn zs_closed_odd_half(m: u32, n: u32) -> Result<PiValue> {
    require(m >= 3 && m % 2 == 1, || format!("expected odd m >= 3, got {m}"))?;
    if n == 0 {
        return Ok(PiValue::one());
    }
    let total = m * n;
    let weights: Vec<Rational> = (0..=total)
        .map(|q| pow2(2 * q as i64) * bernoulli_half(2 * q) / rfact(2 * q))
        .collect();
    let s = phase_weighted_sum(total, m, &weights, 2, m)?.to_rational()?;
    let s = s * sign((m * n) % 2 == 1);
    Ok(PiValue::new(s, 2 * m * n))
}

/// `zeta*({2m}^n)` for odd `m >= 3`, evaluated both through Bernoulli
/// numbers and through Bernoulli polynomials at `1/2`; the two must agree.
pub fn zs_closed_odd(m: u32, n: u32) -> Result<PiValue> {
    let a = zs_closed_odd_bernoulli(m, n)?;
    let b = zs_closed_odd_half(m, n)?;
    if a != b {
        return Err(Error::RouteDisagreement {
            what: format!("zeta*({{{}}}^{n})", 2 * m),
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(a)
}

fn bernoulli_ratio(k: u32, m: u32) -> Rational {
    bernoulli_number(2 * k * m) / (int(2 * k as i64) * rfact(2 * k * m))
}

fn partition_product_sum(m: u32, n: u32, alternate: bool) -> Rational {
    let ys: Vec<Rational> = (1..=n).map(|k| bernoulli_ratio(k, m)).collect();
    let mut total = Rational::zero();
    for mults in integer_partitions(n) {
        let mut term = Rational::one();
        let mut denom = BigInt::one();
        let mut parts = 0u32;
        for (k, &a) in mults.iter().enumerate() {
            if a > 0 {
                term *= num_traits::pow(ys[k].clone(), a as usize);
                denom *= factorial(a);
                parts += a;
            }
        }
        term /= Rational::from_integer(denom);
        if alternate && parts % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    total
}

/// `zeta({2m}^n) = (-1)^{n(m+1)} (2 pi)^{2mn}
///   sum_{a_1 + 2a_2 + ... + n a_n = n} prod_k (B_{2km} / (2k (2km)!))^{a_k} / a_k!`.
pub fn zr_bernoulli_product(m: u32, n: u32) -> Result<PiValue> {
    require(m >= 1, || "expected m >= 1".to_string())?;
    if n == 0 {
        return Ok(PiValue::one());
    }
    let s = partition_product_sum(m, n, false) * sign((n * (m + 1)) % 2 == 1);
    Ok(&PiValue::two_pi_pow(2 * m * n) * &PiValue::rational(s))
}

/// `zeta*({2m}^n) = (-1)^{mn} (2 pi)^{2mn}
///   sum_{a_1 + 2a_2 + ... + n a_n = n} prod_k (-1)^{a_k} (B_{2km} / (2k (2km)!))^{a_k} / a_k!`.
pub fn zs_bernoulli_product(m: u32, n: u32) -> Result<PiValue> {
    require(m >= 1, || "expected m >= 1".to_string())?;
    if n == 0 {
        return Ok(PiValue::one());
    }
    let s = partition_product_sum(m, n, true) * sign((m * n) % 2 == 1);
    Ok(&PiValue::two_pi_pow(2 * m * n) * &PiValue::rational(s))
}

/// `zeta({2}^n) = pi^{2n} / (2n+1)!`.
pub fn zr_two(n: u32) -> PiValue {
    PiValue::new(Rational::one() / rfact(2 * n + 1), 2 * n)
}

/// `zeta*({2}^n) = (2 pi i)^{2n} B_{2n}(1/2) / (2n)!`.
pub fn zs_two(n: u32) -> PiValue {
    let c = sign(n % 2 == 1) * bernoulli_half(2 * n) / rfact(2 * n);
    &PiValue::two_pi_pow(2 * n) * &PiValue::rational(c)
}

fn split_argument(arg: u32) -> Result<u32> {
    if arg < 2 || arg % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "closed forms need an even argument >= 2, got {arg}"
        )));
    }
    Ok(arg / 2)
}

/// `zeta({arg}^n)` by the closed form matching the parity of `arg / 2`.
pub fn zr_closed(arg: u32, n: u32) -> Result<PiValue> {
    match split_argument(arg)? {
        1 => Ok(zr_two(n)),
        m if m % 2 == 0 => zr_closed_even(m, n),
        m => zr_closed_odd(m, n),
    }
}

/// `zeta*({arg}^n)` by the closed form matching the parity of `arg / 2`.
pub fn zs_closed(arg: u32, n: u32) -> Result<PiValue> {
    match split_argument(arg)? {
        1 => Ok(zs_two(n)),
        m if m % 2 == 0 => zs_closed_even(m, n),
        m => zs_closed_odd(m, n),
    }
}

/// `zeta({arg}^n)` by the Bernoulli-product expansion.
pub fn zr_product(arg: u32, n: u32) -> Result<PiValue> {
    zr_bernoulli_product(split_argument(arg)?, n)
}

/// `zeta*({arg}^n)` by the Bernoulli-product expansion.
pub fn zs_product(arg: u32, n: u32) -> Result<PiValue> {
    zs_bernoulli_product(split_argument(arg)?, n)
}
