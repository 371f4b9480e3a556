use std::collections::HashMap;

use num_traits::{One, ToPrimitive, Zero};

use super::combinatorics::set_partitions;
use crate::bernoulli::zeta_even;
use crate::error::{Error, Result};
use crate::exactarith::{int, PiValue, Rational};
use crate::oracle::{zeta_numeric, NumericValue, OracleConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Zeta,
    Star,
}

/// `coeff * prod_i zeta(args[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoffmanTerm {
    pub coeff: i64,
    pub args: Vec<Rational>,
}

/// The symmetrized sum `sum_{sigma in S_n} zeta(i_sigma(1), ..., i_sigma(n))`
/// (or its star analogue) written over set partitions of `{1..n}` as a
/// combination of products of single zeta values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoffmanSum {
    pub variant: Variant,
    pub terms: Vec<HoffmanTerm>,
}

pub const MAX_HOFFMAN_SIZE: usize = 8;

/// Each partition `P = {P_1..P_l}` contributes `s(P) c(P) prod_s zeta(sum_{j in P_s} i_j)`
/// with `c(P) = prod (|P_s| - 1)!` and `s(P) = (-1)^{n-l}` for the zeta
/// variant, `+1` for the star variant.
pub fn hoffman_rhs(exponents: &[Rational], variant: Variant) -> Result<HoffmanSum> {
    let n = exponents.len();
    if n == 0 || n > MAX_HOFFMAN_SIZE {
        return Err(Error::Unsupported(format!(
            "symmetric sums are expanded for 1 <= n <= {MAX_HOFFMAN_SIZE}, got {n}"
        )));
    }
    if let Some(bad) = exponents.iter().find(|e| *e <= &Rational::one()) {
        return Err(Error::Divergent(format!("exponent {bad} must exceed 1")));
    }
    let terms = set_partitions(n as u32)?
        .into_iter()
        .map(|p| {
            let sign = match variant {
                Variant::Star => 1,
                Variant::Zeta if (n - p.len()) % 2 == 0 => 1,
                Variant::Zeta => -1,
            };
            let args = p
                .blocks
                .iter()
                .map(|b| b.iter().map(|&j| exponents[j as usize - 1].clone()).sum())
                .collect();
            HoffmanTerm {
                coeff: sign * p.weight() as i64,
                args,
            }
        })
        .collect();
    Ok(HoffmanSum { variant, terms })
}

impl HoffmanSum {
    /// Exact value; every merged argument must be an even integer.
    pub fn eval_exact(&self) -> Result<PiValue> {
        let mut total: Option<PiValue> = None;
        for t in &self.terms {
            let mut prod = PiValue::one();
            for a in &t.args {
                let s = a
                    .to_integer()
                    .to_u32()
                    .filter(|_| a.denom().is_one())
                    .ok_or_else(|| Error::Unsupported(format!("no exact value for zeta({a})")))?;
                prod = &prod * &zeta_even(s)?;
            }
            let term = prod.scale(&int(t.coeff));
            total = Some(match total {
                None => term,
                Some(acc) => acc.checked_add(&term)?,
            });
        }
        Ok(total.unwrap_or_else(|| PiValue::zero(0)))
    }

    pub fn eval_numeric(&self, cfg: &OracleConfig) -> Result<NumericValue> {
        let bits = cfg.bits();
        let mut memo: HashMap<Rational, NumericValue> = HashMap::new();
        let mut total = NumericValue::exact_zero(bits);
        for t in &self.terms {
            let mut prod = NumericValue::exact_one(bits);
            for a in &t.args {
                if !memo.contains_key(a) {
                    memo.insert(a.clone(), zeta_numeric(a, cfg)?);
                }
                prod = prod.mul(&memo[a]);
            }
            total = total.add(&prod.scale(&int(t.coeff)));
        }
        Ok(total)
    }

    /// Sum of coefficients weighted to the empty case; `n!` for the star
    /// variant, `0` or `1` otherwise. Used as a cheap structural check.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.iter().map(|t| t.coeff).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty() || self.terms.iter().all(|t| t.coeff.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rat;

    #[test]
    fn two_arguments() {
        let (a, b) = (rat(5, 2), int(3));
        let z = hoffman_rhs(&[a.clone(), b.clone()], Variant::Zeta).unwrap();
        assert_eq!(
            z.terms,
            vec![
                HoffmanTerm { coeff: -1, args: vec![&a + &b] },
                HoffmanTerm { coeff: 1, args: vec![a.clone(), b.clone()] },
            ]
        );
        let s = hoffman_rhs(&[a.clone(), b.clone()], Variant::Star).unwrap();
        assert!(s.terms.iter().all(|t| t.coeff == 1));
        assert_eq!(s.terms.len(), 2);
    }

    #[test]
    fn coefficient_sums() {
        // sum_P c(P) = n!, sum_P (-1)^{n-l} c(P) = 0 for n >= 2 (Stirling numbers of the first kind)
        for n in 1..=6usize {
            let e = vec![int(2); n];
            let star = hoffman_rhs(&e, Variant::Star).unwrap();
            assert_eq!(star.coefficient_sum(), (1..=n as i64).product::<i64>());
            let zeta = hoffman_rhs(&e, Variant::Zeta).unwrap();
            assert_eq!(zeta.coefficient_sum(), if n == 1 { 1 } else { 0 });
        }
    }

    #[test]
    fn exact_at_two_two() {
        // 2 zeta(2,2) = zeta(2)^2 - zeta(4)
        let z = hoffman_rhs(&[int(2), int(2)], Variant::Zeta).unwrap();
        assert_eq!(z.eval_exact().unwrap(), PiValue::new(rat(2, 120), 4));
        let odd = hoffman_rhs(&[int(3), int(2)], Variant::Zeta).unwrap();
        assert!(matches!(odd.eval_exact(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(hoffman_rhs(&[], Variant::Zeta).is_err());
        assert!(hoffman_rhs(&vec![int(2); 9], Variant::Star).is_err());
        assert!(matches!(hoffman_rhs(&[int(1)], Variant::Star), Err(Error::Divergent(_))));
    }
}
