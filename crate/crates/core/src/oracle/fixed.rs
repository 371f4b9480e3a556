//! Binary fixed-point reals over big integers: `value = raw / 2^bits`.
//!
//! Every operation that discards bits rounds toward negative infinity and
//! loses at most one unit in the last place; addition and subtraction are
//! exact.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactarith::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    raw: BigInt,
    bits: u32,
}

impl Fixed {
    pub fn zero(bits: u32) -> Fixed {
        Fixed {
            raw: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Fixed {
        Fixed {
            raw: BigInt::one() << bits,
            bits,
        }
    }

    pub fn from_raw(raw: BigInt, bits: u32) -> Fixed {
        Fixed { raw, bits }
    }

    pub fn raw(&self) -> &BigInt {
        &self.raw
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Floor of `r * 2^bits`. The flag reports whether the conversion was exact.
    pub fn from_rational(r: &Rational, bits: u32) -> (Fixed, bool) {
        let scaled = r.numer() << bits;
        let (q, rem) = scaled.div_mod_floor(r.denom());
        (Fixed { raw: q, bits }, rem.is_zero())
    }

    /// `floor(2^bits * j^{-s})` for a positive integer `j` and a rational
    /// exponent `s = p/q` with `p >= 0`.
    pub fn inv_pow(j: u64, s: &Rational, bits: u32) -> Fixed {
        let p = s.numer().to_u32().expect("exponent numerator fits in u32");
        let q = s.denom().to_u32().expect("exponent denominator fits in u32");
        let jp = num_traits::pow(BigInt::from(j), p as usize);
        if q == 1 {
            return Fixed {
                raw: (BigInt::one() << bits) / jp,
                bits,
            };
        }
        // floor(floor(x)^{1/q}) == floor(x^{1/q}) for integer roots
        let inner = (BigInt::one() << (bits as u64 * q as u64)) / jp;
        Fixed {
            raw: inner.nth_root(q),
            bits,
        }
    }

    /// The same value at a finer precision (exact).
    pub fn widen(&self, bits: u32) -> Fixed {
        debug_assert!(bits >= self.bits);
        Fixed {
            raw: &self.raw << (bits - self.bits),
            bits,
        }
    }

    /// Operands at a common (the finer) precision.
    fn aligned(&self, other: &Fixed) -> (Fixed, Fixed) {
        let bits = self.bits.max(other.bits);
        (self.widen(bits), other.widen(bits))
    }

    pub fn add(&self, other: &Fixed) -> Fixed {
        if self.bits != other.bits {
            let (a, b) = self.aligned(other);
            return a.add(&b);
        }
        Fixed {
            raw: &self.raw + &other.raw,
            bits: self.bits,
        }
    }

    pub fn sub(&self, other: &Fixed) -> Fixed {
        if self.bits != other.bits {
            let (a, b) = self.aligned(other);
            return a.sub(&b);
        }
        Fixed {
            raw: &self.raw - &other.raw,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Fixed {
        Fixed {
            raw: -&self.raw,
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, other.bits);
        Fixed {
            raw: (&self.raw * &other.raw) >> self.bits,
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, k: i64) -> Fixed {
        Fixed {
            raw: &self.raw * k,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, k: u64) -> Fixed {
        Fixed {
            raw: self.raw.div_floor(&BigInt::from(k)),
            bits: self.bits,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Fixed {
        Fixed {
            raw: (&self.raw * r.numer()).div_floor(r.denom()),
            bits: self.bits,
        }
    }

    pub fn abs(&self) -> Fixed {
        Fixed {
            raw: self.raw.abs(),
            bits: self.bits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.raw.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        // scale in two steps so that neither the raw value nor 2^bits overflows
        let shift = self.raw.bits().saturating_sub(60);
        let top = (&self.raw >> shift).to_f64().unwrap_or(0.0);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }

    /// Decimal rendering with `places` digits after the point, truncated
    /// toward zero.
    pub fn to_decimal(&self, places: usize) -> String {
        let scaled = (self.raw.abs() * num_traits::pow(BigInt::from(10), places)) >> self.bits;
        let mut digits = scaled.to_string();
        if digits.len() <= places {
            digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
        }
        let split = digits.len() - places;
        let sign = if self.raw.sign() == Sign::Minus && !scaled.is_zero() {
            "-"
        } else {
            ""
        };
        if places == 0 {
            format!("{sign}{}", &digits[..split])
        } else {
            format!("{sign}{}.{}", &digits[..split], &digits[split..])
        }
    }

    /// `pi`, accurate to one unit in the last place, via Machin's formula
    /// `pi = 16 atan(1/5) - 4 atan(1/239)`.
    pub fn pi(bits: u32) -> Fixed {
        const GUARD: u32 = 32;
        let b = bits + GUARD;
        let atan_inv = |x: u64| -> BigInt {
            let x2 = BigInt::from(x * x);
            let mut term = (BigInt::one() << b) / x;
            let mut acc = BigInt::zero();
            let mut k: u64 = 0;
            while !term.is_zero() {
                let t = &term / (2 * k + 1);
                if k % 2 == 0 {
                    acc += t;
                } else {
                    acc -= t;
                }
                term /= &x2;
                k += 1;
            }
            acc
        };
        let raw = (atan_inv(5) * 16 - atan_inv(239) * 4) >> GUARD;
        Fixed { raw, bits }
    }

    pub fn cmp_abs(&self, other: &Fixed) -> Ordering {
        self.raw.abs().cmp(&other.raw.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rat;

    #[test]
    fn pi_digits() {
        let pi = Fixed::pi(200);
        assert_eq!(
            pi.to_decimal(50),
            "3.14159265358979323846264338327950288419716939937510"
        );
    }

    #[test]
    fn inverse_powers() {
        let bits = 100;
        assert_eq!(Fixed::inv_pow(2, &rat(3, 1), bits).to_decimal(5), "0.12500");
        // 4^{-5/2} = 1/32
        assert_eq!(Fixed::inv_pow(4, &rat(5, 2), bits).to_decimal(8), "0.03125000");
        // 2^{-1/2}
        assert_eq!(
            Fixed::inv_pow(2, &rat(1, 2), bits).to_decimal(20),
            "0.70710678118654752440"
        );
    }

    #[test]
    fn rational_conversion_and_rendering() {
        let (x, exact) = Fixed::from_rational(&rat(-3, 4), 64);
        assert!(exact);
        assert_eq!(x.to_decimal(3), "-0.750");
        assert_eq!(x.to_f64(), -0.75);
        let (third, exact) = Fixed::from_rational(&rat(1, 3), 64);
        assert!(!exact);
        assert_eq!(third.to_decimal(6), "0.333333");
        assert_eq!(Fixed::one(10).to_decimal(0), "1");
    }
}
