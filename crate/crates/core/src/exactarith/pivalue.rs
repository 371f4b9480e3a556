use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, pow2, Rational};
use crate::error::{Error, Result};

/// An exact value `coeff * pi^pi_exp`.
///
/// Addition is only defined between values of the same grading; a zero
/// coefficient is compatible with every grading.
#[derive(Clone, Debug)]
pub struct PiValue {
    coeff: Rational,
    pi_exp: u32,
}

impl PiValue {
    pub fn new(coeff: Rational, pi_exp: u32) -> Self {
        PiValue { coeff, pi_exp }
    }

    pub fn zero(pi_exp: u32) -> Self {
        PiValue::new(Rational::zero(), pi_exp)
    }

    pub fn one() -> Self {
        PiValue::new(Rational::one(), 0)
    }

    pub fn rational(coeff: Rational) -> Self {
        PiValue::new(coeff, 0)
    }

    /// `(2 pi)^e`.
    pub fn two_pi_pow(e: u32) -> Self {
        PiValue::new(pow2(e as i64), e)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_exp(&self) -> u32 {
        self.pi_exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn checked_add(&self, other: &PiValue) -> Result<PiValue> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_exp != other.pi_exp {
            return Err(Error::GradingMismatch {
                left: self.pi_exp,
                right: other.pi_exp,
            });
        }
        Ok(PiValue::new(&self.coeff + &other.coeff, self.pi_exp))
    }

    pub fn checked_sub(&self, other: &PiValue) -> Result<PiValue> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, r: &Rational) -> PiValue {
        PiValue::new(&self.coeff * r, self.pi_exp)
    }

    pub fn scale_int(&self, r: &BigInt) -> PiValue {
        PiValue::new(&self.coeff * r, self.pi_exp)
    }

    pub fn pow(&self, e: u32) -> PiValue {
        PiValue::new(num_traits::pow(self.coeff.clone(), e as usize), self.pi_exp * e)
    }

    /// Sums an iterator of values, failing on mixed gradings. The empty sum
    /// is the zero of grading `pi_exp`.
    pub fn sum<'a, I>(pi_exp: u32, values: I) -> Result<PiValue>
    where
        I: IntoIterator<Item = &'a PiValue>,
    {
        values
            .into_iter()
            .try_fold(PiValue::zero(pi_exp), |acc, v| acc.checked_add(v))
    }

    /// LaTeX rendering such as `\frac{1}{120}\pi^{4}`.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sign = if self.coeff.is_negative() { "-" } else { "" };
        let a = self.coeff.abs();
        let pi = match self.pi_exp {
            0 => String::new(),
            1 => "\\pi".to_string(),
            e => format!("\\pi^{{{e}}}"),
        };
        let c = if a.denom().is_one() {
            if a.numer().is_one() && !pi.is_empty() {
                String::new()
            } else {
                a.numer().to_string()
            }
        } else {
            format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
        };
        format!("{sign}{c}{pi}")
    }
}

impl PartialEq for PiValue {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        self.pi_exp == other.pi_exp && self.coeff == other.coeff
    }
}

impl Eq for PiValue {}

impl Mul for &PiValue {
    type Output = PiValue;

    fn mul(self, rhs: &PiValue) -> PiValue {
        PiValue::new(&self.coeff * &rhs.coeff, self.pi_exp + rhs.pi_exp)
    }
}

impl Mul for PiValue {
    type Output = PiValue;

    fn mul(self, rhs: PiValue) -> PiValue {
        &self * &rhs
    }
}

impl Neg for &PiValue {
    type Output = PiValue;

    fn neg(self) -> PiValue {
        PiValue::new(-&self.coeff, self.pi_exp)
    }
}

impl Neg for PiValue {
    type Output = PiValue;

    fn neg(self) -> PiValue {
        -&self
    }
}

impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_exp {
            0 => write!(f, "{}", format_rational(&self.coeff)),
            e => write!(f, "{}*pi^{}", format_rational(&self.coeff), e),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PiValueRepr {
    coeff: String,
    pi_exp: u32,
}

impl Serialize for PiValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PiValueRepr {
            coeff: format_rational(&self.coeff),
            pi_exp: self.pi_exp,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PiValueRepr::deserialize(deserializer)?;
        let coeff = parse_rational(&repr.coeff).map_err(serde::de::Error::custom)?;
        Ok(PiValue::new(coeff, repr.pi_exp))
    }
}
