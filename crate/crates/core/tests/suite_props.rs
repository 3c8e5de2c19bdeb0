use monomial_lct::algebra::int;
use monomial_lct::suite::{
    multiplicity, multiplicity_limit_estimate, random_codim2_ideal, random_ideal, verify_codim2,
    verify_zero_dim,
};
use monomial_lct::{Exponent, MonomialIdeal};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn zero_dim_reports_pass_in_dimension_two_to_four(seed in any::<u64>(), n in 2usize..=4) {
        let j = random_ideal(seed, n, 10, 8, true);
        let r = verify_zero_dim(&j).unwrap();
        prop_assert!(r.passed(), "{}: {:?}", j, r.violations());
    }

    #[test]
    fn equality_requires_closure_power(seed in any::<u64>(), n in 1usize..=3) {
        let j = random_ideal(seed, n, 4, 6, true);
        let r = verify_zero_dim(&j).unwrap();
        if r.multiplicity_equality {
            let q = r.closure_power_q.expect("closure is a power of M");
            prop_assert_eq!(int(q as i64), int(n as i64) * r.mu.clone());
        }
    }

    #[test]
    fn deeper_generator_keeps_equality(n in 2usize..=3, q in 2u32..=6, pick in any::<prop::sample::Index>(), var in 0usize..3) {
        let m = MonomialIdeal::maximal_power(n, q);
        let inner: Vec<&Exponent> = m.generators().iter().filter(|g| g.as_pure_power().is_none()).collect();
        let target = inner[pick.index(inner.len())];
        let deeper = target.add(&Exponent::pure_power(n, var % n, 1));
        let gens = m.generators().iter().map(|g| if g == target { deeper.clone() } else { g.clone() });
        let j = MonomialIdeal::new(n, gens).unwrap();
        prop_assume!(j.is_power_of_maximal() == Some(q));
        let r = verify_zero_dim(&j).unwrap();
        prop_assert!(r.multiplicity_equality);
        prop_assert_eq!(r.closure_power_q, Some(q));
        prop_assert!(j != m);
    }

    #[test]
    fn codim2_bounds_and_slack_order(seed in any::<u64>()) {
        let i = random_codim2_ideal(seed, 10, 6);
        let r = verify_codim2(&i).unwrap();
        prop_assert!(r.passed(), "{}: {:?}", i, r.violations());
        let sharp = r.sharp_codim2_bound.slack();
        prop_assert!(sharp >= int(0));
        prop_assert!(sharp <= r.codim2_bound.slack());
        prop_assert_eq!(r.mult_f, r.b1 + r.b2);
        prop_assert!(r.b1 <= r.b2);
    }
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn limit_estimates_bound_multiplicity(seed in any::<u64>(), n in 1usize..=3) {
        let j = random_ideal(seed, n, 5, 4, true);
        let e = multiplicity(&j).unwrap();
        let estimates = multiplicity_limit_estimate(&j, 4).unwrap();
        prop_assert_eq!(&estimates[0], &(monomial_lct::algebra::factorial(n) * int(j.colength().unwrap() as i64)));
        for value in &estimates {
            prop_assert!(*value >= e);
        }
    }
}

#[test]
fn dimension_one_strict_bounds_are_equalities() {
    // for J = (x^a): n! l = a = Vol(J) and n^n mu^n / n! = a
    for a in 1..=10u32 {
        let r = verify_zero_dim(&MonomialIdeal::from_pure_powers(&[a])).unwrap();
        assert!(r.covolume_bound.is_equality());
        assert!(r.length_bound.is_equality());
        assert!(r.multiplicity_equality);
        assert_eq!(r.violations().len(), 2);
    }
}

#[test]
fn equality_examples() {
    let r = verify_zero_dim(&MonomialIdeal::from_pure_powers(&[4, 4])).unwrap();
    assert!(r.multiplicity_equality && r.closure_power_q == Some(4));
    let r = verify_zero_dim(&MonomialIdeal::from_pure_powers(&[6, 2])).unwrap();
    assert!(!r.multiplicity_equality && r.closure_power_q.is_none());
}
