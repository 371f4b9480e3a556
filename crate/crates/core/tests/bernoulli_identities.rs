use mzsum::bernoulli::{bernoulli_half, bernoulli_number, bernoulli_poly, zeta_even};
use mzsum::exactarith::{binomial, int, pow2, rat, Rational};
use mzsum::oracle::{pi_value_numeric, zeta_numeric, OracleConfig};
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn multiplication_theorem() {
    let xs = [int(0), rat(1, 2), rat(1, 3), rat(2, 5)];
    for k in 2..=3i64 {
        for n in 0..=10u32 {
            for x in &xs {
                let mut rhs = Rational::zero();
                for j in 0..k {
                    rhs += bernoulli_poly(n, &(x + rat(j, k)));
                }
                rhs *= num_traits::pow(int(k), n as usize) / int(k);
                assert_eq!(bernoulli_poly(n, &(x * int(k))), rhs, "k={k} n={n} x={x}");
            }
        }
    }
}

#[test]
fn half_argument_identity() {
    for q in 0..=20u32 {
        assert_eq!(
            pow2(2 * q as i64) * bernoulli_half(2 * q),
            (int(2) - pow2(2 * q as i64)) * bernoulli_number(2 * q)
        );
    }
}

#[test]
fn odd_bernoulli_numbers_vanish() {
    assert_eq!(bernoulli_number(1), rat(-1, 2));
    for n in (3..=41).step_by(2) {
        assert!(bernoulli_number(n).is_zero(), "B_{n}");
    }
}

#[test]
fn defining_recurrence() {
    for n in 1..=30u32 {
        let mut s = Rational::zero();
        for k in 0..=n {
            s += Rational::from_integer(binomial(n + 1, k)) * bernoulli_number(k);
        }
        assert!(s.is_zero(), "n={n}");
    }
}

#[test]
fn polynomial_values() {
    assert_eq!(bernoulli_poly(4, &rat(1, 2)), rat(7, 240));
    assert_eq!(bernoulli_poly(2, &rat(1, 2)), rat(-1, 12));
    for n in 0..=20 {
        assert_eq!(bernoulli_poly(n, &int(0)), bernoulli_number(n));
    }
}

#[test]
fn even_zeta_matches_direct_summation() {
    let cfg = OracleConfig::new(40, 2000);
    for s in (2..=20).step_by(2) {
        let exact = pi_value_numeric(&zeta_even(s).unwrap(), &cfg);
        let num = zeta_numeric(&int(s as i64), &cfg).unwrap();
        assert!(exact.agrees_with(&num), "s={s}");
    }
}

proptest! {
    // B_n(1 - x) = (-1)^n B_n(x) and B_n(x + 1) - B_n(x) = n x^{n-1}
    #[test]
    fn reflection_and_difference(n in 1u32..16, p in -20i64..20, q in 1i64..12) {
        let x = rat(p, q);
        let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
        prop_assert_eq!(bernoulli_poly(n, &(Rational::one() - &x)), sign * bernoulli_poly(n, &x));
        let diff = bernoulli_poly(n, &(&x + Rational::one())) - bernoulli_poly(n, &x);
        prop_assert_eq!(diff, int(n as i64) * num_traits::pow(x, n as usize - 1));
    }
}
