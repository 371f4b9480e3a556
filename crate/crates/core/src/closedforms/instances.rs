//! Explicit evaluations for small repeated arguments, written out term by
//! term. They duplicate the general closed forms and serve as regression
//! anchors for them.

use num_traits::Zero;

use crate::bernoulli::{bernoulli_half, bernoulli_number};
use crate::error::Result;
use crate::exactarith::{factorial, int, pow2, Cyclo, PiValue, Rational};

fn rfact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

fn two_cos(order: u32, j: i64) -> Cyclo {
    Cyclo::root(order, j).add(&Cyclo::root(order, -j)).expect("same field")
}

/// `zeta({4}^n) = 2^{2n+1} pi^{4n} / (4n+2)!`.
pub fn zeta_four(n: u32) -> PiValue {
    PiValue::new(pow2(2 * n as i64 + 1) / rfact(4 * n + 2), 4 * n)
}

/// `zeta({6}^n) = 6 (2 pi)^{6n} / (6n+3)!`.
pub fn zeta_six(n: u32) -> PiValue {
    PiValue::new(int(6) * pow2(6 * n as i64) / rfact(6 * n + 3), 6 * n)
}

/// `zeta({8}^n) = 2^{4n+1} pi^{8n} / (8n+4)! * ((2 cos pi/8)^{8n+4} + (2 sin pi/8)^{8n+4})`.
pub fn zeta_eight(n: u32) -> Result<PiValue> {
    let big_n = (8 * n + 4) as u64;
    let c = two_cos(16, 1);
    // 2 sin(pi/8) = -i (w - w^{-1}), -i = w^12
    let s = Cyclo::root(16, 1)
        .sub(&Cyclo::root(16, -1))?
        .mul(&Cyclo::root(16, 12))?;
    let braces = c.pow(big_n).add(&s.pow(big_n))?.to_rational()?;
    Ok(PiValue::new(pow2(4 * n as i64 + 1) / rfact(8 * n + 4) * braces, 8 * n))
}

/// `zeta({10}^n) = 10 (2 pi)^{10n} / (10n+5)! * (1 - (2 cos 2pi/5)^{10n+5} - (2 cos 4pi/5)^{10n+5})`.
pub fn zeta_ten(n: u32) -> Result<PiValue> {
    let big_n = (10 * n + 5) as u64;
    let braces = Cyclo::one(5)
        .sub(&two_cos(5, 1).pow(big_n))?
        .sub(&two_cos(5, 2).pow(big_n))?
        .to_rational()?;
    Ok(PiValue::new(
        int(10) * pow2(10 * n as i64) / rfact(10 * n + 5) * braces,
        10 * n,
    ))
}

/// `i sqrt(7)` as the quadratic Gauss sum over the seventh roots of unity.
pub fn i_sqrt_seven() -> Cyclo {
    let mut g = Cyclo::zero(7);
    for j in 1..7i64 {
        let w = Cyclo::root(7, j);
        // quadratic residues mod 7 are 1, 2, 4
        g = if matches!(j, 1 | 2 | 4) {
            g.add(&w).expect("same field")
        } else {
            g.sub(&w).expect("same field")
        };
    }
    g
}

/// `zeta({14}^n)`: `14 (2 pi)^{14n} / (14n+7)!` times
/// `1 - sum_j (2 cos 2j pi/7)^N + sum_j (1 + 2 cos 2j pi/7)^N
///  + ((-1 + i sqrt 7)/2)^N + ((-1 - i sqrt 7)/2)^N`, `N = 14n+7`.
pub fn zeta_fourteen(n: u32) -> Result<PiValue> {
    let big_n = (14 * n + 7) as u64;
    let one = Cyclo::one(7);
    let mut braces = one.clone();
    for j in 1..=3 {
        let c = two_cos(7, j);
        braces = braces.sub(&c.pow(big_n))?;
        braces = braces.add(&one.add(&c)?.pow(big_n))?;
    }
    let g = i_sqrt_seven();
    let half = Rational::new(1.into(), 2.into());
    let plus = one.neg().add(&g)?.scale(&half);
    let minus = one.neg().sub(&g)?.scale(&half);
    braces = braces.add(&plus.pow(big_n))?.add(&minus.pow(big_n))?;
    Ok(PiValue::new(
        int(14) * pow2(14 * n as i64) / rfact(14 * n + 7) * braces.to_rational()?,
        14 * n,
    ))
}

/// `zeta({12}^n) = 3 * 2^{6n-1} pi^{12n} / (12n+6)! *
/// (2^{12n+6} + (sqrt 3 + 1)^{12n+6} + (sqrt 3 - 1)^{12n+6})`, for `n >= 1`.
pub fn zeta_twelve(n: u32) -> Result<PiValue> {
    let big_n = 12 * n + 6;
    let root3 = two_cos(12, 1);
    let one = Cyclo::one(12);
    let braces = Cyclo::from_rational(12, pow2(big_n as i64))
        .add(&root3.add(&one)?.pow(big_n as u64))?
        .add(&root3.sub(&one)?.pow(big_n as u64))?
        .to_rational()?;
    Ok(PiValue::new(
        int(3) * pow2(6 * n as i64 - 1) / rfact(big_n) * braces,
        12 * n,
    ))
}

/// `zeta*({4}^n) = (2 pi)^{4n} sum_{q_1+q_2=2n} (-1)^{q_2}
///   B_{2q_1}(1/2) B_{2q_2}(1/2) / ((2q_1)! (2q_2)!)`.
pub fn zeta_star_four(n: u32) -> PiValue {
    let mut s = Rational::zero();
    for q1 in 0..=2 * n {
        let q2 = 2 * n - q1;
        let t = bernoulli_half(2 * q1) * bernoulli_half(2 * q2) / (rfact(2 * q1) * rfact(2 * q2));
        if q2 % 2 == 1 {
            s -= t;
        } else {
            s += t;
        }
    }
    &PiValue::two_pi_pow(4 * n) * &PiValue::rational(s)
}

/// `zeta*({6}^n) = (-1)^n (2 pi)^{6n} sum_{q_1+q_2+q_3=6n}
///   B_{q_1} B_{q_2} B_{q_3} / (q_1! q_2! q_3!) * w^{q_2 + 2 q_3}`, `w = exp(2 pi i/3)`.
pub fn zeta_star_six(n: u32) -> Result<PiValue> {
    let total = 6 * n;
    let mut buckets = vec![Rational::zero(); 3];
    for q1 in 0..=total {
        for q2 in 0..=total - q1 {
            let q3 = total - q1 - q2;
            let t = bernoulli_number(q1) * bernoulli_number(q2) * bernoulli_number(q3)
                / (rfact(q1) * rfact(q2) * rfact(q3));
            buckets[((q2 + 2 * q3) % 3) as usize] += t;
        }
    }
    let mut s = Cyclo::from_power_sum(3, &buckets).to_rational()?;
    if n % 2 == 1 {
        s = -s;
    }
    Ok(&PiValue::two_pi_pow(6 * n) * &PiValue::rational(s))
}

/// `zeta*({8}^n) = (2 pi)^{8n} sum_{|q|=4n} prod_j B_{2q_j}(1/2) / (2q_j)!
///   * i^{q_2 + 2q_3 + 3q_4}`.
pub fn zeta_star_eight(n: u32) -> Result<PiValue> {
    let total = 4 * n;
    let w: Vec<Rational> = (0..=total)
        .map(|q| bernoulli_half(2 * q) / rfact(2 * q))
        .collect();
    let mut buckets = vec![Rational::zero(); 4];
    for q1 in 0..=total {
        for q2 in 0..=total - q1 {
            for q3 in 0..=total - q1 - q2 {
                let q4 = total - q1 - q2 - q3;
                let t = &w[q1 as usize] * &w[q2 as usize] * &w[q3 as usize] * &w[q4 as usize];
                buckets[((q2 + 2 * q3 + 3 * q4) % 4) as usize] += t;
            }
        }
    }
    let s = Cyclo::from_power_sum(4, &buckets).to_rational()?;
    Ok(&PiValue::two_pi_pow(8 * n) * &PiValue::rational(s))
}
