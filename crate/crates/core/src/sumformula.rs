//! Exact evaluation of `E(mn, k)`, the sum of all depth-`k` multiple zeta
//! values `zeta(m a_1, ..., m a_k)` with `a_1 + ... + a_k = n`.
//!
//! [`esum_theorem_a`] expresses `E(mn, k)` through `zeta({m}^p)` and
//! `zeta*({m}^q)` and is the reference route. The remaining routes are
//! specialisations to `m = 2, 4, 6, 8` written in Bernoulli numbers and
//! Bernoulli polynomials at `1/2`, plus [`esum_theorem5`] which feeds the
//! reference formula with Bell-polynomial values.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bernoulli::{bernoulli_half, bernoulli_number};
use crate::closedforms::{guard_enumeration, zr_closed, zs_closed};
use crate::error::{Error, Result};
use crate::exactarith::{binomial, factorial, int, pow2, Cyclo, PiValue, Rational};
use crate::symfun::{zeta_repeated, zeta_star_repeated};

/// Evaluation routes for `E(mn, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Products of `zeta({m}^p)` and `zeta*({m}^q)` from closed forms; any even `m`.
    TheoremA,
    /// Bernoulli polynomials at `1/2`; `m = 2`.
    TheoremB,
    /// Bernoulli numbers with `2(2^{2j-1} - 1)` weights; `m = 2`.
    Hoffman,
    /// Products of two Bernoulli polynomials at `1/2`; `m = 4`.
    TheoremC,
    /// The `Y_u` expansion; `m = 4`.
    Gencev,
    /// Triple Bernoulli-number products over `Q(w_3)`; `m = 6`.
    E6Bernoulli,
    /// Triple products of Bernoulli polynomials at `1/2` over `Q(w_3)`; `m = 6`.
    E6Half,
    /// Quadruple products of Bernoulli polynomials at `1/2`; `m = 8`.
    E8,
    /// The reference formula fed with modified Bell polynomials; any even `m`.
    Theorem5,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::TheoremA,
        Method::TheoremB,
        Method::Hoffman,
        Method::TheoremC,
        Method::Gencev,
        Method::E6Bernoulli,
        Method::E6Half,
        Method::E8,
        Method::Theorem5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::TheoremA => "theorem-a",
            Method::TheoremB => "theorem-b",
            Method::Hoffman => "hoffman",
            Method::TheoremC => "theorem-c",
            Method::Gencev => "gencev",
            Method::E6Bernoulli => "e6-bernoulli",
            Method::E6Half => "e6-half",
            Method::E8 => "e8",
            Method::Theorem5 => "theorem5",
        }
    }

    /// The only `m` the route handles, or `None` for any even `m`.
    pub fn fixed_m(self) -> Option<u32> {
        match self {
            Method::TheoremA | Method::Theorem5 => None,
            Method::TheoremB | Method::Hoffman => Some(2),
            Method::TheoremC | Method::Gencev => Some(4),
            Method::E6Bernoulli | Method::E6Half => Some(6),
            Method::E8 => Some(8),
        }
    }

    /// Routes that evaluate `E(mn, k)` for this `m`.
    pub fn applicable(m: u32) -> Vec<Method> {
        if m < 2 || m % 2 == 1 {
            return Vec::new();
        }
        Method::ALL
            .into_iter()
            .filter(|meth| meth.fixed_m().map_or(true, |f| f == m))
            .collect()
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidQuery(format!("unknown method '{s}'")))
    }
}

/// A request for `E(mn, k)` by a given route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ESumQuery {
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub method: Method,
}

impl ESumQuery {
    pub fn new(m: u32, n: u32, k: u32, method: Method) -> Self {
        ESumQuery { m, n, k, method }
    }

    /// Checks `m >= 2`, `1 <= k <= n` and that the route fits `m`.
    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::InvalidQuery(format!("m must be at least 2, got {}", self.m)));
        }
        check_depth(self.n, self.k)?;
        if let Some(f) = self.method.fixed_m() {
            if f != self.m {
                return Err(Error::InvalidQuery(format!(
                    "method {} evaluates m = {f} only, got m = {}",
                    self.method, self.m
                )));
            }
        }
        if self.m % 2 == 1 {
            return Err(Error::Unsupported(format!(
                "no exact evaluation for odd m = {}",
                self.m
            )));
        }
        Ok(())
    }
}

fn check_depth(n: u32, k: u32) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidQuery(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

fn check_even(m: u32) -> Result<()> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::Unsupported(format!("no exact evaluation for m = {m}")));
    }
    Ok(())
}

fn rfact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

fn rbinom(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn sign(odd: bool) -> Rational {
    if odd {
        int(-1)
    } else {
        int(1)
    }
}

/// `sum_{p+q=n} (-1)^{p-k} C(p,k) zr[p] zs[q]`; `C(p,k) = 0` for `p < k`.
fn combine(m: u32, n: u32, k: u32, zr: &[PiValue], zs: &[PiValue]) -> Result<PiValue> {
    let mut total = PiValue::zero(m * n);
    for p in 0..=n {
        let c = binomial(p, k);
        if c.is_zero() {
            continue;
        }
        let q = n - p;
        let term = (&zr[p as usize] * &zs[q as usize]).scale(&(Rational::from_integer(c) * sign((p + k) % 2 == 1)));
        total = total.checked_add(&term)?;
    }
    Ok(total)
}

fn closed_tables(m: u32, n: u32) -> Result<(Vec<PiValue>, Vec<PiValue>)> {
    let zr = (0..=n).map(|p| zr_closed(m, p)).collect::<Result<Vec<_>>>()?;
    let zs = (0..=n).map(|q| zs_closed(m, q)).collect::<Result<Vec<_>>>()?;
    Ok((zr, zs))
}

fn bell_tables(m: u32, n: u32) -> Result<(Vec<PiValue>, Vec<PiValue>)> {
    let zr = (0..=n).map(|p| zeta_repeated(m, p)).collect::<Result<Vec<_>>>()?;
    let zs = (0..=n).map(|q| zeta_star_repeated(m, q)).collect::<Result<Vec<_>>>()?;
    Ok((zr, zs))
}

/// `E(mn,k) = sum_{p+q=n} (-1)^{p-k} C(p,k) zeta({m}^p) zeta*({m}^q)` with
/// both factors from the cyclotomic closed forms.
pub fn esum_theorem_a(m: u32, n: u32, k: u32) -> Result<PiValue> {
    check_even(m)?;
    check_depth(n, k)?;
    let (zr, zs) = closed_tables(m, n)?;
    combine(m, n, k, &zr, &zs)
}

/// The reference formula with `zeta({m}^p)` and `zeta*({m}^q)` taken from
/// modified Bell polynomials in `zeta(m), ..., zeta(nm)`.
pub fn esum_theorem5(m: u32, n: u32, k: u32) -> Result<PiValue> {
    check_even(m)?;
    check_depth(n, k)?;
    let (zr, zs) = bell_tables(m, n)?;
    combine(m, n, k, &zr, &zs)
}

/// `E(2n,k) = (-1)^{n-k} pi^{2n} / (2n+1)! *
///   sum_{q=0}^{n-k} C(n-q,k) C(2n+1,2q) 2^{2q} B_{2q}(1/2)`.
pub fn esum_theorem_b(n: u32, k: u32) -> Result<PiValue> {
    check_depth(n, k)?;
    let mut s = Rational::zero();
    for q in 0..=n - k {
        s += rbinom(n - q, k) * rbinom(2 * n + 1, 2 * q) * pow2(2 * q as i64) * bernoulli_half(2 * q);
    }
    let coeff = sign((n - k) % 2 == 1) * s / rfact(2 * n + 1);
    Ok(PiValue::new(coeff, 2 * n))
}

/// `E(2n,k) = (-1)^{n-k-1} pi^{2n} / (2n+1)! *
///   sum_{j=0}^{n-k} C(n-j,k) C(2n+1,2j) 2(2^{2j-1} - 1) B_{2j}`.
pub fn esum_hoffman(n: u32, k: u32) -> Result<PiValue> {
    check_depth(n, k)?;
    let mut s = Rational::zero();
    for j in 0..=n - k {
        let weight = int(2) * (pow2(2 * j as i64 - 1) - int(1));
        s += rbinom(n - j, k) * rbinom(2 * n + 1, 2 * j) * weight * bernoulli_number(2 * j);
    }
    let coeff = sign((n - k + 1) % 2 == 1) * s / rfact(2 * n + 1);
    Ok(PiValue::new(coeff, 2 * n))
}

/// `E(4n,k) = 2^{2n+1} pi^{4n} / (4n+2)! * sum_{q=0}^{n-k} (-1)^{n-q-k}
///   C(n-q,k) C(4n+2,4q) 2^{2q} sum_{q_1+q_2=2q} C(4q,2q_1) (-1)^{q_1}
///   B_{2q_1}(1/2) B_{2q_2}(1/2)`.
pub fn esum_theorem_c(n: u32, k: u32) -> Result<PiValue> {
    check_depth(n, k)?;
    let mut s = Rational::zero();
    for q in 0..=n - k {
        let mut inner = Rational::zero();
        for q1 in 0..=2 * q {
            let q2 = 2 * q - q1;
            inner += rbinom(4 * q, 2 * q1)
                * sign(q1 % 2 == 1)
                * bernoulli_half(2 * q1)
                * bernoulli_half(2 * q2);
        }
        s += sign((n - q - k) % 2 == 1)
            * rbinom(n - q, k)
            * rbinom(4 * n + 2, 4 * q)
            * pow2(2 * q as i64)
            * inner;
    }
    let coeff = pow2(2 * n as i64 + 1) / rfact(4 * n + 2) * s;
    Ok(PiValue::new(coeff, 4 * n))
}

/// `Y_u = 2 / (-4)^u * sum_{u_1=0}^{2u} (-1)^{u_1} C(4u,2u_1)
///   (2 - 4^{u_1}) B_{2u_1} (2 - 4^{2u-u_1}) B_{2(2u-u_1)}`.
pub fn gencev_y(u: u32) -> Rational {
    let mut s = Rational::zero();
    for u1 in 0..=2 * u {
        let u2 = 2 * u - u1;
        s += sign(u1 % 2 == 1)
            * rbinom(4 * u, 2 * u1)
            * (int(2) - pow2(2 * u1 as i64))
            * bernoulli_number(2 * u1)
            * (int(2) - pow2(2 * u2 as i64))
            * bernoulli_number(2 * u2);
    }
    int(2) * s / num_traits::pow(int(-4), u as usize)
}

/// `E(4n,k) = (-1)^k (-4)^n pi^{4n} / (4n+2)! *
///   sum_{u=0}^{n-k} C(n-u,k) C(4n+2,4u) Y_u`.
pub fn esum_gencev(n: u32, k: u32) -> Result<PiValue> {
    check_depth(n, k)?;
    let mut s = Rational::zero();
    for u in 0..=n - k {
        s += rbinom(n - u, k) * rbinom(4 * n + 2, 4 * u) * gencev_y(u);
    }
    let coeff = sign(k % 2 == 1) * num_traits::pow(int(-4), n as usize) / rfact(4 * n + 2) * s;
    Ok(PiValue::new(coeff, 4 * n))
}

/// Which Bernoulli family the `E(6n,k)` evaluation sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum E6Variant {
    /// `B_{q_1} B_{q_2} B_{q_3}` over `|q| = 6q`.
    BernoulliNumber,
    /// `B_{2q_1}(1/2) B_{2q_2}(1/2) B_{2q_3}(1/2)` over `|q| = 3q`.
    BernoulliHalf,
}

/// Inner sum of the `E(6n,k)` evaluation for one `q`, without `(6q)!`.
fn e6_inner(q: u32, variant: E6Variant) -> Result<Rational> {
    let mut buckets = vec![Rational::zero(); 3];
    match variant {
        E6Variant::BernoulliNumber => {
            let total = 6 * q;
            guard_enumeration(total, 3)?;
            let w: Vec<Rational> = (0..=total).map(|j| bernoulli_number(j) / rfact(j)).collect();
            for q1 in 0..=total {
                if w[q1 as usize].is_zero() {
                    continue;
                }
                for q2 in 0..=total - q1 {
                    let q3 = total - q1 - q2;
                    let t = &w[q1 as usize] * &w[q2 as usize] * &w[q3 as usize];
                    buckets[((q2 + 2 * q3) % 3) as usize] += t;
                }
            }
        }
        E6Variant::BernoulliHalf => {
            let total = 3 * q;
            guard_enumeration(total, 3)?;
            let w: Vec<Rational> = (0..=total)
                .map(|j| bernoulli_half(2 * j) / rfact(2 * j))
                .collect();
            for q1 in 0..=total {
                for q2 in 0..=total - q1 {
                    let q3 = total - q1 - q2;
                    let t = &w[q1 as usize] * &w[q2 as usize] * &w[q3 as usize];
                    buckets[((2 * (q2 + 2 * q3)) % 3) as usize] += t;
                }
            }
        }
    }
    Cyclo::from_power_sum(3, &buckets).to_rational()
}

/// `E(6n,k) = (-1)^{n-k} 6 (2 pi)^{6n} / (6n+3)! * sum_{q=0}^{n-k}
///   C(n-q,k) C(6n+3,6q) (6q)! * inner(q)` where the inner sum runs over
/// triples with phases `exp(2 pi i (q_2 + 2q_3)/3)` (Bernoulli numbers) or
/// `exp(4 pi i (q_2 + 2q_3)/3)` (Bernoulli polynomials at `1/2`).
pub fn esum_e6(n: u32, k: u32, variant: E6Variant) -> Result<PiValue> {
    check_depth(n, k)?;
    let mut s = Rational::zero();
    for q in 0..=n - k {
        s += rbinom(n - q, k) * rbinom(6 * n + 3, 6 * q) * rfact(6 * q) * e6_inner(q, variant)?;
    }
    let coeff = sign((n - k) % 2 == 1) * int(6) * pow2(6 * n as i64) / rfact(6 * n + 3) * s;
    Ok(PiValue::new(coeff, 6 * n))
}

/// `sum_{|q|=4q} prod_j B_{2q_j}(1/2)/(2q_j)! * i^{q_2 + 2q_3 + 3q_4}`.
fn e8_inner(q: u32) -> Result<Rational> {
    let total = 4 * q;
    guard_enumeration(total, 4)?;
    let w: Vec<Rational> = (0..=total)
        .map(|j| bernoulli_half(2 * j) / rfact(2 * j))
        .collect();
    let mut buckets = vec![Rational::zero(); 4];
    for q1 in 0..=total {
        for q2 in 0..=total - q1 {
            let head = &w[q1 as usize] * &w[q2 as usize];
            for q3 in 0..=total - q1 - q2 {
                let q4 = total - q1 - q2 - q3;
                let t = &head * &w[q3 as usize] * &w[q4 as usize];
                buckets[((q2 + 2 * q3 + 3 * q4) % 4) as usize] += t;
            }
        }
    }
    Cyclo::from_power_sum(4, &buckets).to_rational()
}

/// `E(8n,k) = 2^{4n+1} pi^{8n} / (8n+4)! * sum_{q=0}^{n-k} (-1)^{n-q-k}
///   C(n-q,k) C(8n+4,8q) ((2 cos pi/8)^{8n-8q+4} + (2 sin pi/8)^{8n-8q+4})
///   * 2^{4q} (8q)! * inner(q)`.
pub fn esum_e8(n: u32, k: u32) -> Result<PiValue> {
    check_depth(n, k)?;
    let c = Cyclo::root(16, 1).add(&Cyclo::root(16, -1))?;
    // 2 sin(pi/8) = -i (w - w^{-1}) with -i = w^{12}
    let s8 = Cyclo::root(16, 1)
        .sub(&Cyclo::root(16, -1))?
        .mul(&Cyclo::root(16, 12))?;
    let mut s = Rational::zero();
    for q in 0..=n - k {
        let e = (8 * n - 8 * q + 4) as u64;
        let trig = c.pow(e).add(&s8.pow(e))?.to_rational()?;
        s += sign((n - q - k) % 2 == 1)
            * rbinom(n - q, k)
            * rbinom(8 * n + 4, 8 * q)
            * trig
            * pow2(4 * q as i64)
            * rfact(8 * q)
            * e8_inner(q)?;
    }
    let coeff = pow2(4 * n as i64 + 1) / rfact(8 * n + 4) * s;
    Ok(PiValue::new(coeff, 8 * n))
}

/// Dispatches a query to its route.
pub fn esum(q: &ESumQuery) -> Result<PiValue> {
    q.validate()?;
    let (m, n, k) = (q.m, q.n, q.k);
    match q.method {
        Method::TheoremA => esum_theorem_a(m, n, k),
        Method::TheoremB => esum_theorem_b(n, k),
        Method::Hoffman => esum_hoffman(n, k),
        Method::TheoremC => esum_theorem_c(n, k),
        Method::Gencev => esum_gencev(n, k),
        Method::E6Bernoulli => esum_e6(n, k, E6Variant::BernoulliNumber),
        Method::E6Half => esum_e6(n, k, E6Variant::BernoulliHalf),
        Method::E8 => esum_e8(n, k),
        Method::Theorem5 => esum_theorem5(m, n, k),
    }
}

/// Both sides of
/// `sum_{r=1}^n (lambda+1)^r E(mn,r) = sum_{p+q=n} lambda^p zeta({m}^p) zeta*({m}^q)`.
///
/// The left side uses [`esum_theorem_a`], the right side Bell-polynomial
/// values of `zeta({m}^p)` and `zeta*({m}^q)`.
pub fn lambda_identity_sides(m: u32, n: u32, lambda: &Rational) -> Result<(PiValue, PiValue)> {
    check_even(m)?;
    check_depth(n, 1)?;
    let mut lhs = PiValue::zero(m * n);
    let base = lambda + Rational::one();
    for r in 1..=n {
        let term = esum_theorem_a(m, n, r)?.scale(&num_traits::pow(base.clone(), r as usize));
        lhs = lhs.checked_add(&term)?;
    }
    let (zr, zs) = bell_tables(m, n)?;
    let mut rhs = PiValue::zero(m * n);
    for p in 0..=n {
        let w = num_traits::pow(lambda.clone(), p as usize);
        rhs = rhs.checked_add(&(&zr[p as usize] * &zs[(n - p) as usize]).scale(&w))?;
    }
    Ok((lhs, rhs))
}

/// True iff both sides of the `lambda` identity agree exactly.
pub fn lambda_identity_check(m: u32, n: u32, lambda: &Rational) -> Result<bool> {
    let (l, r) = lambda_identity_sides(m, n, lambda)?;
    Ok(l == r)
}

/// Both sides of `sum_{r=1}^n 2^r E(mn,r) = sum_{p+q=n} zeta({m}^p) zeta*({m}^q)`.
pub fn corollary_sides(m: u32, n: u32) -> Result<(PiValue, PiValue)> {
    lambda_identity_sides(m, n, &Rational::one())
}

/// True iff the `lambda = 1` identity holds exactly.
pub fn corollary_check(m: u32, n: u32) -> Result<bool> {
    let (l, r) = corollary_sides(m, n)?;
    Ok(l == r)
}

/// `(E(mn,1), ..., E(mn,n))` by the reference route, sharing the
/// `zeta`/`zeta*` tables across depths.
pub fn esum_row(m: u32, n: u32) -> Result<Vec<PiValue>> {
    check_even(m)?;
    check_depth(n, 1)?;
    let (zr, zs) = closed_tables(m, n)?;
    (1..=n).map(|k| combine(m, n, k, &zr, &zs)).collect()
}
