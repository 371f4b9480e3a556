use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
///
/// Built from `Phi_n(x) = prod_{d | n} (x^d - 1)^mu(n/d)`: all numerator
/// factors are multiplied in before the (exact) divisions.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    let mut poly = vec![1i64];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            // multiply by x^d - 1
            let mut next = vec![0i64; poly.len() + d as usize];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d as usize] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            // divide by x^d - 1: q_i = q_{i-d} - p_i, from the low end
            let d = d as usize;
            let qlen = poly.len() - d;
            let mut q = vec![0i64; qlen];
            for i in 0..qlen {
                let prev = if i >= d { q[i - d] } else { 0 };
                q[i] = prev - poly[i];
            }
            poly = q;
        }
    }
    poly
}

struct CycloField {
    order: u32,
    degree: usize,
    /// `powers[j]` holds the reduction of `x^j` modulo `Phi_order`, for `j < order`.
    powers: Vec<Vec<i64>>,
}

impl CycloField {
    fn build(order: u32) -> CycloField {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Phi
            let top = cur[degree - 1];
            let mut next = vec![0i64; degree];
            next[1..degree].copy_from_slice(&cur[..(degree - 1)]);
            if top != 0 {
                for (i, c) in next.iter_mut().enumerate() {
                    *c -= top * phi[i];
                }
            }
            cur = next;
        }
        CycloField {
            order,
            degree,
            powers,
        }
    }
}

fn field(order: u32) -> Arc<CycloField> {
    static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = fields.lock().unwrap();
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(CycloField::build(order)))
        .clone()
}

/// An element of `Q(w)`, `w = exp(2 pi i / order)`, stored in the power
/// basis `1, w, ..., w^(phi(order) - 1)` reduced modulo `Phi_order`.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl Cyclo {
    pub fn zero(order: u32) -> Cyclo {
        assert!(order >= 1, "cyclotomic order must be positive");
        let field = field(order);
        let coeffs = vec![Rational::zero(); field.degree];
        Cyclo { field, coeffs }
    }

    pub fn one(order: u32) -> Cyclo {
        Cyclo::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Cyclo {
        let mut c = Cyclo::zero(order);
        c.coeffs[0] = r;
        c
    }

    /// `w^j` for any integer `j`.
    pub fn root(order: u32, j: i64) -> Cyclo {
        let mut c = Cyclo::zero(order);
        let e = j.rem_euclid(order as i64) as usize;
        for (dst, &src) in c.coeffs.iter_mut().zip(&c.field.powers[e]) {
            *dst = Rational::from_integer(src.into());
        }
        c
    }

    /// `sum_r buckets[r] * w^r`; the bucket index is taken modulo the order.
    pub fn from_power_sum(order: u32, buckets: &[Rational]) -> Cyclo {
        let mut c = Cyclo::zero(order);
        for (r, b) in buckets.iter().enumerate() {
            if !b.is_zero() {
                c.add_scaled_power(r % order as usize, b);
            }
        }
        c
    }

    fn add_scaled_power(&mut self, e: usize, scale: &Rational) {
        let field = Arc::clone(&self.field);
        for (dst, &p) in self.coeffs.iter_mut().zip(&field.powers[e]) {
            if p != 0 {
                *dst += scale * Rational::from_integer(p.into());
            }
        }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Cyclo) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclo {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Cyclo) -> Result<Cyclo> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Cyclo {
        Cyclo {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check(other)?;
        let deg = self.field.degree;
        let mut raw = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut out = Cyclo::zero(self.order());
        let n = self.order() as usize;
        for (e, c) in raw.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled_power(e % n, c);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        acc
    }

    /// Complex conjugation, the automorphism `w -> w^(order - 1)`.
    pub fn conj(&self) -> Cyclo {
        let n = self.order() as usize;
        let mut out = Cyclo::zero(self.order());
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled_power((n - j) % n, c);
            }
        }
        out
    }

    /// `a - conj(a)`, which equals `2i * Im(a)`.
    pub fn imag_part_times_2i(&self) -> Cyclo {
        self.sub(&self.conj()).expect("same order")
    }

    /// Re-expresses the element in `Q(w_target)`, where `order` divides
    /// `target`, via `w_order = w_target^(target / order)`.
    pub fn embed(&self, target: u32) -> Result<Cyclo> {
        if target % self.order() != 0 {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: target,
            });
        }
        let step = (target / self.order()) as usize;
        let mut out = Cyclo::zero(target);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled_power((j * step) % target as usize, c);
            }
        }
        Ok(out)
    }

    /// Embeds both operands into the field of order `lcm(a, b)`.
    pub fn common_field(a: &Cyclo, b: &Cyclo) -> Result<(Cyclo, Cyclo)> {
        let l = a.order().lcm(&b.order());
        Ok((a.embed(l)?, b.embed(l)?))
    }

    pub fn to_rational(&self) -> Result<Rational> {
        if self.coeffs[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotRational(self.to_string()));
        }
        Ok(self.coeffs[0].clone())
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{}", format_rational(c))?,
                _ => write!(f, "({})*w{}^{}", format_rational(c), self.order(), j)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.order(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for n in 1..=100 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n) as usize, "n={n}");
        }
    }

    #[test]
    fn product_over_divisors_is_x_pow_n_minus_one() {
        for n in 1..=30u32 {
            let mut prod = vec![1i64];
            for d in (1..=n).filter(|d| n % d == 0) {
                let f = cyclotomic_polynomial(d);
                let mut next = vec![0i64; prod.len() + f.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in f.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expected = vec![0i64; n as usize + 1];
            expected[0] = -1;
            expected[n as usize] = 1;
            assert_eq!(prod, expected, "n={n}");
        }
    }

    #[test]
    fn roots() {
        let i = Cyclo::root(4, 1);
        assert_eq!(i.mul(&i).unwrap(), Cyclo::from_rational(4, int(-1)));
        assert_eq!(Cyclo::root(5, 5), Cyclo::one(5));
        assert_eq!(Cyclo::root(5, -1), Cyclo::root(5, 4));
        let s = (1..5)
            .map(|j| Cyclo::root(5, j))
            .try_fold(Cyclo::zero(5), |a, b| a.add(&b))
            .unwrap();
        assert_eq!(s.to_rational().unwrap(), int(-1));
    }

    #[test]
    fn field_arithmetic_examples() {
        let w = Cyclo::root(5, 1);
        assert_eq!(w.mul(&Cyclo::root(5, 4)).unwrap(), Cyclo::one(5));
        let c = Cyclo::root(8, 1).add(&Cyclo::root(8, -1)).unwrap();
        assert_eq!(c.pow(2).to_rational().unwrap(), int(2));
        assert_eq!(Cyclo::one(7).pow(123), Cyclo::one(7));
        assert_eq!(
            Cyclo::root(5, 1).add(&Cyclo::root(6, 1)),
            Err(Error::OrderMismatch { left: 5, right: 6 })
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(Cyclo::root(5, 1).conj(), Cyclo::root(5, 4));
        let r = Cyclo::from_rational(9, rat(3, 7));
        assert_eq!(r.conj(), r);
        assert!(r.imag_part_times_2i().is_zero());
        let i = Cyclo::root(4, 1);
        assert_eq!(i.imag_part_times_2i(), i.scale(&int(2)));
        let w8 = Cyclo::root(8, 1);
        assert_eq!(w8.imag_part_times_2i(), w8.sub(&Cyclo::root(8, 7)).unwrap());
    }

    #[test]
    fn to_rational_cases() {
        let all = (0..5)
            .map(|j| Cyclo::root(5, j))
            .try_fold(Cyclo::zero(5), |a, b| a.add(&b))
            .unwrap();
        assert_eq!(all.to_rational().unwrap(), int(0));
        let s = Cyclo::root(3, 1).add(&Cyclo::root(3, 2)).unwrap();
        assert_eq!(s.to_rational().unwrap(), int(-1));
        assert!(matches!(Cyclo::root(5, 1).to_rational(), Err(Error::NotRational(_))));
        assert_eq!(Cyclo::from_rational(12, rat(-5, 3)).to_rational().unwrap(), rat(-5, 3));
    }

    #[test]
    fn root_sums_vanish() {
        for n in 2..=40 {
            let s = (0..n as i64)
                .map(|j| Cyclo::root(n, j))
                .try_fold(Cyclo::zero(n), |a, b| a.add(&b))
                .unwrap();
            assert!(s.is_zero(), "n={n}");
        }
    }

    #[test]
    fn embedding_mixes_orders() {
        // i * w_8 = w_8^3 in Q(w_8)
        let (i, w) = Cyclo::common_field(&Cyclo::root(4, 1), &Cyclo::root(8, 1)).unwrap();
        assert_eq!(i.mul(&w).unwrap(), Cyclo::root(8, 3));
        // sqrt(3) = w12 + w12^-1 squares to 3
        let s3 = Cyclo::root(12, 1).add(&Cyclo::root(12, -1)).unwrap();
        assert_eq!(s3.pow(2).to_rational().unwrap(), int(3));
        assert!(Cyclo::root(6, 1).embed(9).is_err());
    }

    fn arb_cyclo() -> impl Strategy<Value = (u32, Vec<(i64, i64)>)> {
        (1u32..=16).prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec((-6i64..6, 0i64..16), 0..5),
            )
        })
    }

    fn build(n: u32, terms: &[(i64, i64)]) -> Cyclo {
        terms.iter().fold(Cyclo::zero(n), |acc, &(c, e)| {
            acc.add(&Cyclo::root(n, e).scale(&int(c))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms((n, ta) in arb_cyclo(), tb in prop::collection::vec((-6i64..6, 0i64..16), 0..5),
                       tc in prop::collection::vec((-6i64..6, 0i64..16), 0..5)) {
            let (a, b, c) = (build(n, &ta), build(n, &tb), build(n, &tc));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn conj_is_involutive_homomorphism((n, ta) in arb_cyclo(), tb in prop::collection::vec((-6i64..6, 0i64..16), 0..5)) {
            let (a, b) = (build(n, &ta), build(n, &tb));
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).unwrap().conj(), a.conj().mul(&b.conj()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().conj(), a.conj().add(&b.conj()).unwrap());
        }

        #[test]
        fn rational_embedding_roundtrips(n in 1u32..=30, p in -1000i64..1000, q in 1i64..1000) {
            prop_assert_eq!(Cyclo::from_rational(n, rat(p, q)).to_rational().unwrap(), rat(p, q));
        }
    }
}
