use mzsum::bernoulli::zeta_even;
use mzsum::exactarith::{int, rat, PiValue, Rational};
use mzsum::oracle::{
    esum_numeric, esum_numeric_table, mzv_numeric, pi_value_numeric, zeta_numeric,
    zeta_star_repeated_numeric, OracleConfig,
};
use mzsum::Error;
use proptest::prelude::*;

fn cfg(cutoff: u64) -> OracleConfig {
    OracleConfig::new(40, cutoff)
}

#[test]
fn known_constants() {
    let c = cfg(1000);
    let z3 = zeta_numeric(&int(3), &c).unwrap();
    assert!(z3.to_decimal(20).starts_with("1.20205690315959428539"));
    let z2 = zeta_numeric(&int(2), &c).unwrap();
    assert!(z2.agrees_with(&pi_value_numeric(&PiValue::new(rat(1, 6), 2), &c)));
    // zeta(2,2) = pi^4/120 and zeta(4,4) = pi^8/113400
    let z22 = mzv_numeric(&[int(2), int(2)], &c).unwrap();
    assert!(z22.to_decimal(10).starts_with("0.8117424252"));
    assert!(z22.agrees_with(&pi_value_numeric(&PiValue::new(rat(1, 120), 4), &c)));
    let z44 = mzv_numeric(&[int(4), int(4)], &c).unwrap();
    assert!(z44.agrees_with(&pi_value_numeric(&PiValue::new(rat(1, 113400), 8), &c)));
    let z8 = mzv_numeric(&[int(8)], &c).unwrap();
    assert!(z8.agrees_with(&pi_value_numeric(&zeta_even(8).unwrap(), &c)));
}

#[test]
fn depth_one_matches_single_zeta() {
    let c = cfg(500);
    for s in [rat(3, 2), int(2), rat(5, 2), int(3), int(7)] {
        let a = mzv_numeric(&[s.clone()], &c).unwrap();
        let b = zeta_numeric(&s, &c).unwrap();
        assert!(a.agrees_with(&b), "s={s}");
    }
}

#[test]
fn rejects_divergent_input() {
    let c = cfg(100);
    assert!(matches!(zeta_numeric(&int(1), &c), Err(Error::Divergent(_))));
    assert!(matches!(mzv_numeric(&[int(2), int(1)], &c), Err(Error::Divergent(_))));
    assert!(esum_numeric(2, 2, 3, &c).is_err());
}

#[test]
fn exact_rendering() {
    let c = cfg(100);
    let one = pi_value_numeric(&PiValue::one(), &c);
    assert_eq!(one.error_bound(), 0.0);
    assert!(one.to_decimal(5).starts_with("1.00000"));
    let zero = pi_value_numeric(&PiValue::zero(8), &c);
    assert_eq!(zero.to_f64(), 0.0);
}

#[test]
fn numeric_table_matches_small_cases() {
    let c = cfg(3000);
    let t = esum_numeric_table(2, 3, &c).unwrap();
    // E(6,2) = (3/4) zeta(6)
    let exact = pi_value_numeric(&zeta_even(6).unwrap().scale(&rat(3, 4)), &c);
    assert!(t[2][1].agrees_with(&exact));
    // E(8,1) = zeta(8)
    let e81 = esum_numeric(4, 2, 1, &c).unwrap();
    assert!(e81.agrees_with(&pi_value_numeric(&zeta_even(8).unwrap(), &c)));
    // odd m: E(6,1) = zeta(6), E(9,3) = zeta(3,3,3), row sums give zeta*
    let odd = esum_numeric_table(3, 3, &c).unwrap();
    assert!(odd[1][0].agrees_with(&zeta_numeric(&int(6), &c).unwrap()));
    assert!(odd[2][2].agrees_with(&mzv_numeric(&[int(3), int(3), int(3)], &c).unwrap()));
    let star = zeta_star_repeated_numeric(3, 2, &c).unwrap();
    let direct = mzv_numeric(&[int(3), int(3)], &c).unwrap().add(&zeta_numeric(&int(6), &c).unwrap());
    assert!(star.agrees_with(&direct));
}

#[test]
fn tail_bound_shrinks_with_cutoff() {
    let cases: Vec<Vec<Rational>> = vec![
        vec![int(2)],
        vec![int(2), int(2)],
        vec![int(2), int(3), int(2)],
        vec![rat(5, 2), rat(5, 2)],
    ];
    for exps in cases {
        let a = mzv_numeric(&exps, &cfg(400)).unwrap();
        let b = mzv_numeric(&exps, &cfg(800)).unwrap();
        assert!(b.error_bound() < a.error_bound(), "{exps:?}");
        assert!(a.agrees_with(&b), "{exps:?}");
    }
    let a = esum_numeric_table(2, 4, &cfg(400)).unwrap();
    let b = esum_numeric_table(2, 4, &cfg(800)).unwrap();
    for (ra, rb) in a.iter().zip(&b) {
        for (x, y) in ra.iter().zip(rb) {
            assert!(y.error_bound() < x.error_bound());
            assert!(x.agrees_with(y));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_cutoffs_agree(
        exps in proptest::collection::vec((3i64..13, 1i64..3), 1..4),
        cutoff in 50u64..400,
    ) {
        let exps: Vec<Rational> = exps.into_iter().map(|(p, q)| rat(p, q)).collect();
        let a = mzv_numeric(&exps, &cfg(cutoff)).unwrap();
        let b = mzv_numeric(&exps, &cfg(2 * cutoff)).unwrap();
        prop_assert!(a.agrees_with(&b));
        prop_assert!(b.error_bound() < a.error_bound());
    }

    #[test]
    fn two_cutoffs_agree_for_sums(m in 2u32..6, n in 1u32..4, cutoff in 50u64..300) {
        let a = esum_numeric_table(m, n, &cfg(cutoff)).unwrap();
        let b = esum_numeric_table(m, n, &cfg(2 * cutoff)).unwrap();
        for (ra, rb) in a.iter().zip(&b) {
            for (x, y) in ra.iter().zip(rb) {
                prop_assert!(x.agrees_with(y));
            }
        }
    }
}
