use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Exponent, MonomialIdeal};

/// Seeded random monomial ideal with every exponent at most `max_exp`.
///
/// With `force_zero_dim` one pure power of each variable (degree in `1..=max_exp`) is
/// included and at most `max_gens - n` further generators are drawn; otherwise between
/// 1 and `max_gens` generators are drawn. Drawn generators are never the unit.
pub fn random_ideal(seed: u64, n: usize, max_exp: u32, max_gens: usize, force_zero_dim: bool) -> MonomialIdeal {
    assert!(n >= 1 && max_exp >= 1 && max_gens >= 1, "arguments must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens = Vec::new();
    let extra = if force_zero_dim {
        for i in 0..n {
            gens.push(Exponent::pure_power(n, i, rng.gen_range(1..=max_exp)));
        }
        rng.gen_range(0..=max_gens.saturating_sub(n))
    } else {
        rng.gen_range(1..=max_gens)
    };
    for _ in 0..extra {
        gens.push(random_exponent(&mut rng, n, max_exp));
    }
    MonomialIdeal::new(n, gens).expect("generators are nonempty with length n")
}

/// Seeded random ideal of `K[x_1, x_2]` of the form `x^b * a`.
///
/// The monomial factor has entries in `0..=max_exp/2`; `a` is drawn by [`random_ideal`]
/// and is zero-dimensional about half the time, so the overall gcd may exceed `b`.
pub fn random_codim2_ideal(seed: u64, max_exp: u32, max_gens: usize) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let half = (max_exp / 2).max(1);
    let b = Exponent::new(vec![rng.gen_range(0..=half), rng.gen_range(0..=half)]);
    let zero_dim = rng.gen_bool(0.5);
    random_ideal(rng.gen(), 2, max_exp, max_gens.max(2), zero_dim).shift(&b)
}

fn random_exponent(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Exponent {
    loop {
        let e = Exponent::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
        if !e.is_zero() {
            return e;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        for seed in 0..50 {
            let a = random_ideal(seed, 3, 5, 6, true);
            assert_eq!(a, random_ideal(seed, 3, 5, 6, true));
            assert!(a.is_zero_dimensional());
            assert!(a.generators().len() <= 6);
            assert!(a.generators().iter().all(|g| g.coords().iter().all(|&c| c <= 5)));
        }
    }

    #[test]
    fn unforced_ideals_are_proper() {
        for seed in 0..50 {
            let a = random_ideal(seed, 2, 4, 3, false);
            assert!(!a.is_unit());
            assert!(a.generators().len() <= 3);
        }
    }

    #[test]
    fn codim2_corpus_has_monomial_factors() {
        let with_factor = (0..100)
            .filter(|&s| !random_codim2_ideal(s, 6, 4).factor_out_gcd().b.is_zero())
            .count();
        assert!(with_factor > 50);
    }
}
