use monomial_lct::algebra::minimalize;
use monomial_lct::polytope::build_polytope;
use monomial_lct::{Exponent, MonomialIdeal};
use proptest::prelude::*;

fn exponents(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = Vec<Exponent>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
        .prop_map(|gens| gens.into_iter().map(Exponent::new).collect())
}

fn ideal(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    exponents(n, max_exp, max_gens).prop_map(move |g| MonomialIdeal::new(n, g).unwrap())
}

/// Pure powers of every variable (degrees in `1..=max_exp`) plus up to `extra` generators.
fn zero_dim_ideal(n: usize, max_exp: u32, extra: usize) -> impl Strategy<Value = MonomialIdeal> {
    (
        prop::collection::vec(1..=max_exp, n),
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 0..=extra),
    )
        .prop_map(move |(degrees, others)| {
            let mut gens: Vec<Exponent> = degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| Exponent::pure_power(n, i, d))
                .collect();
            gens.extend(others.into_iter().map(Exponent::new));
            MonomialIdeal::new(n, gens).unwrap()
        })
        .prop_filter("proper ideal", |j| !j.is_unit())
}

/// Colength by inclusion-exclusion over subsets of generators, counting lattice points
/// of the box `[0, B)` that lie above the lcm of each subset.
fn colength_by_inclusion_exclusion(j: &MonomialIdeal) -> i64 {
    let n = j.n();
    let bounds = j.pure_power_degrees().unwrap();
    let gens = j.generators();
    let mut total = 0i64;
    for mask in 0u32..(1 << gens.len()) {
        let mut lcm = vec![0u32; n];
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                for i in 0..n {
                    lcm[i] = lcm[i].max(g.coords()[i]);
                }
            }
        }
        let count: i64 = (0..n)
            .map(|i| (bounds[i] as i64 - lcm[i] as i64).max(0))
            .product();
        if mask.count_ones() % 2 == 0 {
            total += count;
        } else {
            total -= count;
        }
    }
    total
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Closure oracle: scan the box up to the componentwise maximum, keeping lattice points
/// for which the LP finds a convex combination of generators below them.
fn closure_by_lp(j: &MonomialIdeal) -> MonomialIdeal {
    let n = j.n();
    let p = build_polytope(j);
    let top: Vec<u32> = (0..n)
        .map(|i| j.generators().iter().map(|g| g.coords()[i]).max().unwrap())
        .collect();
    let mut found = Vec::new();
    let mut point = vec![0u32; n];
    loop {
        let e = Exponent::new(point.clone());
        if p.contains_point_lp(&e.to_rationals()).unwrap() {
            found.push(e);
        }
        let mut i = 0;
        loop {
            if i == n {
                return minimalize(&found, n).unwrap();
            }
            point[i] += 1;
            if point[i] <= top[i] {
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn minimalize_examples() {
    let e = |v: &[u32]| Exponent::new(v.to_vec());
    let m = minimalize(&[e(&[2, 0]), e(&[2, 1]), e(&[0, 3])], 2).unwrap();
    assert_eq!(m.generators(), &[e(&[0, 3]), e(&[2, 0])]);
    assert!(minimalize(&[], 2).is_err());
    assert!(minimalize(&[e(&[1, 2, 3])], 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn minimalize_is_idempotent_and_order_blind(gens in exponents(3, 6, 8)) {
        let once = minimalize(&gens, 3).unwrap();
        prop_assert_eq!(&minimalize(once.generators(), 3).unwrap(), &once);
        let mut reversed = gens.clone();
        reversed.reverse();
        prop_assert_eq!(&minimalize(&reversed, 3).unwrap(), &once);
        for g in &gens {
            prop_assert!(once.contains_monomial(g));
        }
        for (a, b) in once.generators().iter().zip(once.generators().iter().skip(1)) {
            prop_assert!(a < b);
        }
    }

    #[test]
    fn colength_matches_inclusion_exclusion(j in (1usize..=3).prop_flat_map(|n| zero_dim_ideal(n, 8, 3))) {
        prop_assert_eq!(j.colength().unwrap() as i64, colength_by_inclusion_exclusion(&j));
    }

    #[test]
    fn colength_of_maximal_powers(n in 1usize..=4, q in 0u32..=7) {
        let m = MonomialIdeal::maximal_power(n, q);
        // monomials of degree < q in n variables
        prop_assert_eq!(m.colength().unwrap(), binomial(n as u64 + q as u64 - 1, n as u64));
    }

    #[test]
    fn closure_is_extensive_idempotent_monotone(j in ideal(2, 7, 5), extra in exponents(2, 7, 2)) {
        let c = j.integral_closure();
        prop_assert!(j.is_subset_of(&c));
        prop_assert_eq!(&c.integral_closure(), &c);
        let mut more = j.generators().to_vec();
        more.extend(extra);
        let k = MonomialIdeal::new(2, more).unwrap();
        prop_assert!(c.is_subset_of(&k.integral_closure()));
    }

    #[test]
    fn closure_matches_lp_scan(j in (2usize..=3).prop_flat_map(|n| ideal(n, 5, 4))) {
        prop_assert_eq!(j.integral_closure(), closure_by_lp(&j));
    }

    #[test]
    fn gcd_factorization_round_trips(j in ideal(3, 8, 6)) {
        let f = j.factor_out_gcd();
        prop_assert_eq!(&f.primitive.shift(&f.b), &j);
        for i in 0..3 {
            prop_assert_eq!(f.primitive.generators().iter().map(|g| g.coords()[i]).min(), Some(0));
        }
    }

    #[test]
    fn powers_add(j in ideal(2, 4, 4), s in 0u32..=4, t in 0u32..=4) {
        prop_assert_eq!(j.power(s + t), j.power(s).product(&j.power(t)).unwrap());
    }
}
