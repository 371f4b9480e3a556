//! High-precision numerical evaluation with rigorous absolute error bounds.
//!
//! Values are computed in binary fixed point (see [`Fixed`]). Truncated
//! series are completed with Euler-Maclaurin tails; the reported
//! `error_bound` covers the omitted remainder terms and every rounding step.
//!
//! Nested sums are evaluated by forward dynamic programming over the
//! summation index `j = 1..=N`. Everything with the largest index beyond
//! the cutoff `N` is split by how many trailing indices exceed `N`:
//!
//! ```text
//! zeta(a_1..a_r) = S_N + sum_t A_t(N) * Z_{>N}(a_{t+1}, ..., a_r)
//! ```
//!
//! where `A_t(N)` is the depth-`t` prefix sum and `Z_{>N}` the nested sum
//! over indices all greater than `N`. One- and two-fold `Z_{>N}` are
//! evaluated through Euler-Maclaurin; deeper ones are only bounded.

mod fixed;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use fixed::Fixed;

use crate::bernoulli::bernoulli_number;
use crate::error::{Error, Result};
use crate::exactarith::{factorial, int, PiValue, Rational};
use crate::symfun::compositions;

pub const DEFAULT_DIGITS: u32 = 50;
pub const DEFAULT_CUTOFF: u64 = 100_000;

/// Euler-Maclaurin correction terms beyond the integral and midpoint terms.
const EM_TERMS: u32 = 3;

/// Working precision and summation cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub digits: u32,
    pub cutoff: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            digits: DEFAULT_DIGITS,
            cutoff: DEFAULT_CUTOFF,
        }
    }
}

impl OracleConfig {
    pub fn new(digits: u32, cutoff: u64) -> Self {
        OracleConfig { digits, cutoff }
    }

    /// Binary working precision: the requested decimal digits, 32 guard
    /// bits, and `2 log2 N` more so that accumulated rounding (linear in
    /// `N`) shrinks as the cutoff grows.
    pub fn bits(&self) -> u32 {
        let log_n = 64 - self.cutoff.max(2).leading_zeros();
        (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32 + 2 * log_n
    }

    fn ulp(&self) -> f64 {
        2f64.powi(-(self.bits() as i32))
    }
}

/// A real approximation together with an absolute error bound.
#[derive(Clone, Debug)]
pub struct NumericValue {
    value: Fixed,
    error_bound: f64,
}

impl NumericValue {
    pub fn new(value: Fixed, error_bound: f64) -> Self {
        NumericValue { value, error_bound }
    }

    pub fn exact_zero(bits: u32) -> Self {
        NumericValue::new(Fixed::zero(bits), 0.0)
    }

    pub fn exact_one(bits: u32) -> Self {
        NumericValue::new(Fixed::one(bits), 0.0)
    }

    pub fn value(&self) -> &Fixed {
        &self.value
    }

    pub fn error_bound(&self) -> f64 {
        self.error_bound
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn to_decimal(&self, places: usize) -> String {
        self.value.to_decimal(places)
    }

    fn ulp(&self) -> f64 {
        2f64.powi(-(self.value.bits() as i32))
    }

    pub fn add(&self, other: &NumericValue) -> NumericValue {
        NumericValue::new(self.value.add(&other.value), self.error_bound + other.error_bound)
    }

    pub fn sub(&self, other: &NumericValue) -> NumericValue {
        NumericValue::new(self.value.sub(&other.value), self.error_bound + other.error_bound)
    }

    pub fn mul(&self, other: &NumericValue) -> NumericValue {
        let a = self.value.to_f64().abs();
        let b = other.value.to_f64().abs();
        let bound = a * other.error_bound
            + b * self.error_bound
            + self.error_bound * other.error_bound
            + self.ulp();
        NumericValue::new(self.value.mul(&other.value), bound)
    }

    pub fn scale(&self, r: &Rational) -> NumericValue {
        let factor = r.abs().to_f64().unwrap_or(f64::INFINITY);
        NumericValue::new(
            self.value.mul_rational(r),
            self.error_bound * factor + self.ulp(),
        )
    }

    /// `|self - other|`.
    pub fn abs_diff(&self, other: &NumericValue) -> f64 {
        self.value.sub(&other.value).to_f64().abs()
    }

    /// Whether the two enclosures overlap, i.e. `|a - b| <= err_a + err_b`.
    pub fn agrees_with(&self, other: &NumericValue) -> bool {
        self.abs_diff(other) <= self.error_bound + other.error_bound
    }
}

fn check_exponent(s: &Rational) -> Result<()> {
    if s <= &Rational::one() {
        return Err(Error::Divergent(format!(
            "zeta series diverges at s = {s}"
        )));
    }
    if s.numer().to_u32().is_none() || s.denom().to_u32().is_none() {
        return Err(Error::Unsupported(format!("exponent {s} is out of range")));
    }
    Ok(())
}

/// Crude upper bound for `zeta(s)`, `s > 1`.
fn zeta_upper(s: f64) -> f64 {
    1.0 + 1.0 / (s - 1.0)
}

/// `T_s(a) = sum_{j >= a} j^{-s}` by Euler-Maclaurin:
/// `a^{1-s}/(s-1) + a^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} a^{-s-2k+1}`,
/// bounded by the first omitted correction term.
fn em_tail(s: &Rational, a: u64, cfg: &OracleConfig) -> NumericValue {
    let bits = cfg.bits();
    let one = Rational::one();
    let x = Fixed::inv_pow(a, s, bits);
    let mut v = Fixed::inv_pow(a, &(s - &one), bits).mul_rational(&(&one / (s - &one)));
    v = v.add(&x.div_int(2));
    let mut roundings = 3.0;
    let mut rising = s.clone();
    let mut apow = x.div_int(a);
    for k in 1..=EM_TERMS {
        let c = bernoulli_number(2 * k) * &rising / Rational::from_integer(factorial(2 * k));
        v = v.add(&apow.mul_rational(&c));
        let next = s + int(2 * k as i64 - 1);
        rising = rising * &next * (&next + &one);
        apow = apow.div_int(a).div_int(a);
        roundings += 4.0 + c.abs().to_f64().unwrap_or(0.0) * 2.0;
    }
    let c = bernoulli_number(2 * EM_TERMS + 2) * &rising
        / Rational::from_integer(factorial(2 * EM_TERMS + 2));
    let omitted = c.abs().to_f64().unwrap_or(f64::INFINITY) * (apow.to_f64().abs() + cfg.ulp());
    let first_term_scale = 1.0 / (s - &one).to_f64().unwrap();
    NumericValue::new(v, 2.0 * omitted + (roundings + first_term_scale) * cfg.ulp())
}

/// Upper bound for `T_s(a)`, `a >= 2`, from the integral `int_{a-1}^inf x^{-s} dx`.
fn tail_upper(s: f64, a: u64) -> f64 {
    ((a - 1) as f64).powf(1.0 - s) / (s - 1.0)
}

/// `Z_{>N}(b_1, ..., b_u) = sum_{N < k_1 < ... < k_u} prod k_i^{-b_i}`.
fn suffix_tail(exps: &[Rational], cutoff: u64, cfg: &OracleConfig) -> NumericValue {
    let bits = cfg.bits();
    let start = cutoff + 1;
    match exps {
        [] => NumericValue::exact_one(bits),
        [b] => em_tail(b, start, cfg),
        [b1, b2] => {
            // Z = sum_{a >= start} a^{-b1} T_{b2}(a + 1) with
            // T_b(a+1) = a^{1-b}/(b-1) - a^{-b}/2 + b a^{-b-1}/12 + R,
            // |R| <= b(b+1)(b+2)/720 a^{-b-3}
            let one = Rational::one();
            let sigma = b1 + b2;
            let t1 = em_tail(&(&sigma - &one), start, cfg).scale(&(&one / (b2 - &one)));
            let t2 = em_tail(&sigma, start, cfg).scale(&Rational::new(1.into(), 2.into()));
            let t3 = em_tail(&(&sigma + &one), start, cfg).scale(&(b2 / int(12)));
            let v = t1.sub(&t2).add(&t3);
            let b2f = b2.to_f64().unwrap();
            let remainder = b2f * (b2f + 1.0) * (b2f + 2.0) / 720.0
                * tail_upper(sigma.to_f64().unwrap() + 3.0, start);
            NumericValue::new(v.value, v.error_bound + remainder)
        }
        many => {
            let bound: f64 = many
                .iter()
                .map(|b| {
                    let b = b.to_f64().unwrap();
                    (cutoff as f64).powf(1.0 - b) / (b - 1.0)
                })
                .product();
            NumericValue::new(Fixed::zero(bits), bound)
        }
    }
}

/// `zeta(s)` for rational `s > 1`: the partial sum to `N - 1` plus the
/// Euler-Maclaurin tail from `N`.
pub fn zeta_numeric(s: &Rational, cfg: &OracleConfig) -> Result<NumericValue> {
    check_exponent(s)?;
    let bits = cfg.bits();
    let n = cfg.cutoff.max(2);
    let mut acc = BigInt::zero();
    for j in 1..n {
        acc += Fixed::inv_pow(j, s, bits).raw();
    }
    let partial = NumericValue::new(Fixed::from_raw(acc, bits), (n - 1) as f64 * cfg.ulp());
    Ok(partial.add(&em_tail(s, n, cfg)))
}

/// `zeta(a_1, ..., a_r) = sum_{k_1 < ... < k_r} prod k_i^{-a_i}`.
pub fn mzv_numeric(exps: &[Rational], cfg: &OracleConfig) -> Result<NumericValue> {
    let bits = cfg.bits();
    let Some(last) = exps.last() else {
        return Ok(NumericValue::exact_one(bits));
    };
    check_exponent(last)?;
    for e in exps {
        if e <= &Rational::one() {
            return Err(Error::Unsupported(format!(
                "inner exponents must exceed 1, got {e}"
            )));
        }
        check_exponent(e)?;
    }
    let r = exps.len();
    let n = cfg.cutoff.max(2);
    let mut distinct: Vec<Rational> = exps.to_vec();
    distinct.sort();
    distinct.dedup();
    let slot: Vec<usize> = exps
        .iter()
        .map(|e| distinct.iter().position(|d| d == e).unwrap())
        .collect();

    let mut prefix: Vec<BigInt> = vec![BigInt::zero(); r + 1];
    prefix[0] = BigInt::one() << bits;
    let mut g = vec![BigInt::zero(); distinct.len()];
    for j in 1..=n {
        for (gi, e) in g.iter_mut().zip(&distinct) {
            *gi = Fixed::inv_pow(j, e, bits).raw().clone();
        }
        for t in (1..=r).rev() {
            if prefix[t - 1].is_zero() {
                continue;
            }
            let p = (&prefix[t - 1] * &g[slot[t - 1]]) >> bits;
            prefix[t] += p;
        }
    }

    let magnitude = prefix
        .iter()
        .map(|p| Fixed::from_raw(p.clone(), bits).to_f64())
        .fold(0.0, f64::max)
        + 2.0;
    let mut err = vec![0.0f64; r + 1];
    for t in 1..=r {
        let z = zeta_upper(exps[t - 1].to_f64().unwrap());
        err[t] = z * err[t - 1] + 2.0 * n as f64 * magnitude * cfg.ulp();
    }
    let prefix: Vec<NumericValue> = prefix
        .into_iter()
        .zip(&err)
        .map(|(p, &e)| NumericValue::new(Fixed::from_raw(p, bits), e))
        .collect();

    let mut total = prefix[r].clone();
    for t in 0..r {
        total = total.add(&prefix[t].mul(&suffix_tail(&exps[t..], n, cfg)));
    }
    Ok(total)
}

/// Numerical `E(mn, k)` for every `1 <= k <= n <= max_n` in one pass;
/// `table[n - 1][k - 1]`.
///
/// The dynamic program tracks, for every depth `d` and weight `w`, the sum
/// over compositions of `w` into `d` parts and indices `k_1 < ... < k_d <= j`
/// of `prod k_i^{-m a_i}`.
pub fn esum_numeric_table(m: u32, max_n: u32, cfg: &OracleConfig) -> Result<Vec<Vec<NumericValue>>> {
    if m < 2 {
        return Err(Error::InvalidQuery(format!("argument multiplier must be >= 2, got {m}")));
    }
    if max_n == 0 {
        return Ok(Vec::new());
    }
    let bits = cfg.bits();
    let n = cfg.cutoff.max(2);
    let w_max = max_n as usize;
    // f[d][w]
    let mut f = vec![vec![BigInt::zero(); w_max + 1]; w_max + 1];
    f[0][0] = BigInt::one() << bits;
    let one_raw = BigInt::one() << bits;
    let mut g = vec![BigInt::zero(); w_max + 1];
    for j in 1..=n {
        let jm = num_traits::pow(BigInt::from(j), m as usize);
        let mut denom = BigInt::one();
        for gi in g.iter_mut().skip(1) {
            denom *= &jm;
            *gi = &one_raw / &denom;
        }
        for d in (1..=w_max).rev() {
            for w in d..=w_max {
                let mut acc = BigInt::zero();
                for a in 1..=(w + 1 - d) {
                    let prev = &f[d - 1][w - a];
                    if !prev.is_zero() && !g[a].is_zero() {
                        acc += prev * &g[a];
                    }
                }
                if !acc.is_zero() {
                    f[d][w] += acc >> bits;
                }
            }
        }
    }

    let magnitude = f
        .iter()
        .flatten()
        .map(|p| Fixed::from_raw(p.clone(), bits).to_f64())
        .fold(0.0, f64::max)
        + 2.0;
    let zsum: f64 = (1..=w_max).map(|a| zeta_upper((m as usize * a) as f64)).sum();
    let mut err = vec![0.0f64; w_max + 1];
    for d in 1..=w_max {
        err[d] = zsum * err[d - 1] + 2.0 * (n as f64) * (w_max as f64) * magnitude * cfg.ulp();
    }
    let f: Vec<Vec<NumericValue>> = f
        .into_iter()
        .enumerate()
        .map(|(d, row)| {
            row.into_iter()
                .map(|p| NumericValue::new(Fixed::from_raw(p, bits), err[d]))
                .collect()
        })
        .collect();

    let mut cache: std::collections::HashMap<Vec<u32>, NumericValue> = Default::default();
    let mut table = Vec::with_capacity(w_max);
    for total in 1..=max_n {
        let mut row = Vec::with_capacity(total as usize);
        for k in 1..=total {
            let mut v = f[k as usize][total as usize].clone();
            for t in 0..k {
                let u = k - t;
                for w_prefix in t..=(total - u) {
                    let pre = &f[t as usize][w_prefix as usize];
                    if pre.value.is_zero() && pre.error_bound == 0.0 {
                        continue;
                    }
                    for suffix in compositions(total - w_prefix, u) {
                        let z = cache.entry(suffix.parts.clone()).or_insert_with(|| {
                            let exps: Vec<Rational> =
                                suffix.parts.iter().map(|&p| int((p * m) as i64)).collect();
                            suffix_tail(&exps, n, cfg)
                        });
                        v = v.add(&pre.mul(z));
                    }
                }
            }
            row.push(v);
        }
        table.push(row);
    }
    Ok(table)
}

/// Numerical `E(mn, k)`.
pub fn esum_numeric(m: u32, n: u32, k: u32, cfg: &OracleConfig) -> Result<NumericValue> {
    if k == 0 || k > n {
        return Err(Error::InvalidQuery(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let table = esum_numeric_table(m, n, cfg)?;
    Ok(table[n as usize - 1][k as usize - 1].clone())
}

/// Numerical `zeta*({m}^n)` as the row sum `sum_k E(mn, k)`.
pub fn zeta_star_repeated_numeric(m: u32, n: u32, cfg: &OracleConfig) -> Result<NumericValue> {
    if n == 0 {
        return Ok(NumericValue::exact_one(cfg.bits()));
    }
    let table = esum_numeric_table(m, n, cfg)?;
    let row = &table[n as usize - 1];
    Ok(row
        .iter()
        .skip(1)
        .fold(row[0].clone(), |acc, v| acc.add(v)))
}

/// `coeff * pi^pi_exp` at the configured precision.
pub fn pi_value_numeric(v: &PiValue, cfg: &OracleConfig) -> NumericValue {
    let bits = cfg.bits();
    let (c, exact) = Fixed::from_rational(v.coeff(), bits);
    if v.pi_exp() == 0 {
        return NumericValue::new(c, if exact { 0.0 } else { cfg.ulp() });
    }
    let pi = Fixed::pi(bits);
    let mut acc = Fixed::one(bits);
    for _ in 0..v.pi_exp() {
        acc = acc.mul(&pi);
    }
    let value = acc.mul(&c);
    let e = v.pi_exp() as f64;
    let scale = (v.coeff().abs().to_f64().unwrap_or(f64::INFINITY) + 1.0) * 4f64.powf(e);
    NumericValue::new(value, scale * (2.0 * e + 4.0) * cfg.ulp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::zeta_even;
    use crate::exactarith::rat;

    fn cfg(cutoff: u64) -> OracleConfig {
        OracleConfig::new(40, cutoff)
    }

    #[test]
    fn zeta_two_matches_euler() {
        let c = cfg(1000);
        let z = zeta_numeric(&int(2), &c).unwrap();
        let exact = pi_value_numeric(&zeta_even(2).unwrap(), &c);
        assert!(z.agrees_with(&exact), "{} vs {}", z.to_decimal(30), exact.to_decimal(30));
        assert!(z.to_decimal(10).starts_with("1.6449340668"));
        assert!(z.error_bound() < 1e-20);
    }

    #[test]
    fn zeta_three_is_self_consistent() {
        let a = zeta_numeric(&int(3), &cfg(500)).unwrap();
        let b = zeta_numeric(&int(3), &cfg(1000)).unwrap();
        assert!(a.agrees_with(&b));
        assert!(a.to_decimal(10).starts_with("1.2020569031"));
        assert!(b.error_bound() < a.error_bound());
    }

    #[test]
    fn zeta_ten_matches_euler() {
        let c = cfg(200);
        let z = zeta_numeric(&int(10), &c).unwrap();
        let exact = pi_value_numeric(&PiValue::new(rat(1, 93555), 10), &c);
        assert!(z.agrees_with(&exact));
    }

    #[test]
    fn divergent_inputs() {
        assert!(matches!(zeta_numeric(&int(1), &cfg(10)), Err(Error::Divergent(_))));
        assert!(matches!(mzv_numeric(&[int(2), rat(1, 2)], &cfg(10)), Err(Error::Divergent(_))));
        assert!(matches!(mzv_numeric(&[int(1), int(2)], &cfg(10)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn double_zeta_two_two() {
        let c = cfg(2000);
        let v = mzv_numeric(&[int(2), int(2)], &c).unwrap();
        let exact = pi_value_numeric(&PiValue::new(rat(1, 120), 4), &c);
        assert!(v.agrees_with(&exact), "{} +- {}", v.to_decimal(30), v.error_bound());
        assert!(v.to_decimal(10).starts_with("0.8117424252"));
    }

    #[test]
    fn depth_one_mzv_is_zeta() {
        let c = cfg(300);
        let a = mzv_numeric(&[rat(5, 2)], &c).unwrap();
        let b = zeta_numeric(&rat(5, 2), &c).unwrap();
        assert!(a.agrees_with(&b));
    }

    #[test]
    fn pi_values() {
        let c = cfg(10);
        let v = pi_value_numeric(&PiValue::new(rat(1, 6), 2), &c);
        assert!(v.to_decimal(10).starts_with("1.6449340668"));
        let one = pi_value_numeric(&PiValue::one(), &c);
        assert_eq!(one.error_bound(), 0.0);
        assert_eq!(one.to_decimal(3), "1.000");
        let zero = pi_value_numeric(&PiValue::zero(8), &c);
        assert_eq!(zero.to_f64(), 0.0);
    }

    #[test]
    fn small_esum_table() {
        let c = cfg(3000);
        let t = esum_numeric_table(2, 3, &c).unwrap();
        // E(6, 2) = 3/4 zeta(6)
        let exact = pi_value_numeric(&PiValue::new(rat(1, 1260), 6), &c);
        assert!(t[2][1].agrees_with(&exact));
        // E(4, 1) = zeta(4)
        let z4 = pi_value_numeric(&zeta_even(4).unwrap(), &c);
        assert!(t[1][0].agrees_with(&z4));
        assert!(matches!(esum_numeric(2, 2, 3, &c), Err(Error::InvalidQuery(_))));
    }
}
