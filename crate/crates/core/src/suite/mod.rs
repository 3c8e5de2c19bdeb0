//! Samuel multiplicity and the inequality checkers relating length, multiplicity and
//! `mu` for monomial ideals, together with seeded random corpora.

mod random;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{factorial, int, Exponent, MonomialIdeal, Rational};
use crate::error::{Error, Result};
use crate::polytope::{compute_mu, covolume};

pub use random::{random_codim2_ideal, random_ideal};

/// Largest power used by [`multiplicity_limit_estimate`].
pub const MAX_LIMIT_POWER: u32 = 8;

/// `e(J)`, equal to the covolume for zero-dimensional monomial ideals.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<Rational> {
    covolume(ideal)
}

/// The sequence `n! * l(R/J^t) / t^n` for `t = 1..=t_max`, which tends to `e(J)`.
pub fn multiplicity_limit_estimate(ideal: &MonomialIdeal, t_max: u32) -> Result<Vec<Rational>> {
    ideal.require_zero_dimensional()?;
    if t_max == 0 || t_max > MAX_LIMIT_POWER {
        return Err(Error::Domain(format!(
            "t_max must lie in 1..={MAX_LIMIT_POWER}, got {t_max}"
        )));
    }
    let n = ideal.n();
    let nf = factorial(n);
    (1..=t_max)
        .map(|t| {
            let l = ideal.power(t).colength()?;
            Ok(&nf * int(l as i64) / int(t as i64).pow(n as i32))
        })
        .collect()
}

/// One inequality `lhs > rhs` (strict) or `lhs >= rhs`, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: Rational,
    pub rhs: Rational,
    pub strict: bool,
}

impl Comparison {
    pub fn strict(lhs: Rational, rhs: Rational) -> Self {
        Comparison { lhs, rhs, strict: true }
    }

    pub fn weak(lhs: Rational, rhs: Rational) -> Self {
        Comparison { lhs, rhs, strict: false }
    }

    pub fn holds(&self) -> bool {
        if self.strict {
            self.lhs > self.rhs
        } else {
            self.lhs >= self.rhs
        }
    }

    pub fn slack(&self) -> Rational {
        &self.lhs - &self.rhs
    }

    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Invariants of a zero-dimensional monomial ideal and the inequalities between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimReport {
    pub ideal: MonomialIdeal,
    pub mu: Rational,
    pub length: u64,
    pub covol: Rational,
    pub mult: Rational,
    /// `n! * l(R/J) > Vol(J)`.
    pub covolume_bound: Comparison,
    /// `l(R/J) > n^n mu^n / n!`.
    pub length_bound: Comparison,
    /// `e(J) >= n^n mu^n`.
    pub multiplicity_bound: Comparison,
    pub multiplicity_equality: bool,
    /// `q` with `closure(J) = M^q`, if any.
    pub closure_power_q: Option<u32>,
}

impl ZeroDimReport {
    /// Human-readable descriptions of every failed check; empty when all hold.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.ideal.n();
        for (name, c) in [
            ("n!*length > covolume", &self.covolume_bound),
            ("length > n^n*mu^n/n!", &self.length_bound),
            ("multiplicity >= n^n*mu^n", &self.multiplicity_bound),
        ] {
            if !c.holds() {
                out.push(format!("{name} fails: {} vs {}", c.lhs, c.rhs));
            }
        }
        if self.mult != self.covol {
            out.push(format!("multiplicity {} differs from covolume {}", self.mult, self.covol));
        }
        let n_mu = int(n as i64) * &self.mu;
        let q_matches = self
            .closure_power_q
            .is_some_and(|q| n_mu == int(q as i64));
        if self.multiplicity_equality && !q_matches {
            out.push(format!(
                "multiplicity equals n^n*mu^n but closure is not M^{n_mu}"
            ));
        }
        if let Some(q) = self.closure_power_q {
            if !self.multiplicity_equality {
                out.push(format!("closure is M^{q} but multiplicity exceeds n^n*mu^n"));
            }
            if !q_matches {
                out.push(format!("closure is M^{q} but n*mu = {n_mu}"));
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Computes every invariant of a zero-dimensional, proper monomial ideal and evaluates
/// the length and multiplicity bounds in terms of `mu`, including the equality case.
pub fn verify_zero_dim(ideal: &MonomialIdeal) -> Result<ZeroDimReport> {
    ideal.require_zero_dimensional()?;
    if ideal.is_unit() {
        return Err(Error::Domain("the unit ideal has no singularity to measure".into()));
    }
    let n = ideal.n();
    let mu = compute_mu(ideal).mu;
    let length = ideal.colength()?;
    let covol = covolume(ideal)?;
    let mult = multiplicity(ideal)?;
    let nf = factorial(n);
    let n_mu_pow = (int(n as i64) * &mu).pow(n as i32);
    let l = int(length as i64);
    let covolume_bound = Comparison::strict(&nf * &l, covol.clone());
    let length_bound = Comparison::strict(l, &n_mu_pow / &nf);
    let multiplicity_bound = Comparison::weak(mult.clone(), n_mu_pow);
    let multiplicity_equality = multiplicity_bound.is_equality();
    Ok(ZeroDimReport {
        ideal: ideal.clone(),
        mu,
        length,
        covol,
        mult,
        covolume_bound,
        length_bound,
        multiplicity_bound,
        multiplicity_equality,
        closure_power_q: ideal.is_power_of_maximal(),
    })
}

/// Invariants of an ideal `I = x^b * a` of `K[x_1, x_2]` and the codimension-two bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codim2Report {
    pub ideal: MonomialIdeal,
    /// Monomial factor in the input coordinates.
    pub b: Exponent,
    /// `min(b)` and `max(b)`.
    pub b1: u32,
    pub b2: u32,
    /// Multiplicity of the monomial factor at the origin, `b1 + b2`.
    pub mult_f: u32,
    pub mu: Rational,
    pub primitive: MonomialIdeal,
    /// `l(R/a)`.
    pub length_a: u64,
    /// `e(a)`, zero when `a` is the unit ideal.
    pub e_a: Rational,
    /// `l(R/a) >= 2 (mu - b1)(mu - b2)`.
    pub primitive_length_bound: Comparison,
    /// `4 mu mult_f + e(a) >= 4 mu^2`.
    pub codim2_bound: Comparison,
    /// `4 mu mult_f - 4 b1 b2 + e(a) >= 4 mu^2`.
    pub sharp_codim2_bound: Comparison,
    pub sharp_equality: bool,
    /// In the equality case: whether `2 mu` is an integer and
    /// `closure(I) = x^b * closure(x1^(2mu - 2b_1), x2^(2mu - 2b_2))`.
    pub boundary_closure_ok: Option<bool>,
}

impl Codim2Report {
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, c) in [
            ("l(R/a) >= 2(mu-b1)(mu-b2)", &self.primitive_length_bound),
            ("4*mu*mult_f + e(a) >= 4*mu^2", &self.codim2_bound),
            ("4*mu*mult_f - 4*b1*b2 + e(a) >= 4*mu^2", &self.sharp_codim2_bound),
        ] {
            if !c.holds() {
                out.push(format!("{name} fails: {} vs {}", c.lhs, c.rhs));
            }
        }
        if self.sharp_codim2_bound.slack() > self.codim2_bound.slack() {
            out.push("sharpened bound has more slack than the basic one".into());
        }
        if self.boundary_closure_ok == Some(false) {
            out.push("equality holds but the closure formula fails".into());
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Factors `I = x^b * a` and evaluates the codimension-two bounds; `b1 <= b2` are the
/// two entries of `b` in increasing order.
pub fn verify_codim2(ideal: &MonomialIdeal) -> Result<Codim2Report> {
    if ideal.n() != 2 {
        return Err(Error::Dimension(format!(
            "codimension-two checks need 2 variables, got {}",
            ideal.n()
        )));
    }
    let split = ideal.factor_out_gcd();
    let b = split.b.clone();
    let (b1, b2) = {
        let c = b.coords();
        (c[0].min(c[1]), c[0].max(c[1]))
    };
    let mult_f = b1 + b2;
    let mu = compute_mu(ideal).mu;
    let primitive = split.primitive;
    let length_a = primitive.colength()?;
    let e_a = if primitive.is_unit() {
        Rational::zero()
    } else {
        multiplicity(&primitive)?
    };
    let (rb1, rb2, rf) = (int(b1 as i64), int(b2 as i64), int(mult_f as i64));
    let four = int(4);
    let four_mu_sq = &four * &mu * &mu;
    let primitive_length_bound = Comparison::weak(
        int(length_a as i64),
        int(2) * (&mu - &rb1) * (&mu - &rb2),
    );
    let codim2_bound = Comparison::weak(&four * &mu * &rf + &e_a, four_mu_sq.clone());
    let sharp_codim2_bound = Comparison::weak(
        &four * &mu * &rf - &four * &rb1 * &rb2 + &e_a,
        four_mu_sq,
    );
    let sharp_equality = sharp_codim2_bound.is_equality();
    let boundary_closure_ok = sharp_equality.then(|| boundary_closure_holds(ideal, &b, &mu));
    Ok(Codim2Report {
        ideal: ideal.clone(),
        b,
        b1,
        b2,
        mult_f,
        mu,
        primitive,
        length_a,
        e_a,
        primitive_length_bound,
        codim2_bound,
        sharp_codim2_bound,
        sharp_equality,
        boundary_closure_ok,
    })
}

fn boundary_closure_holds(ideal: &MonomialIdeal, b: &Exponent, mu: &Rational) -> bool {
    let two_mu = int(2) * mu;
    if !two_mu.is_integer() {
        return false;
    }
    let two_mu = two_mu.to_integer();
    let mut degrees = Vec::with_capacity(2);
    for &bi in b.coords() {
        let d = &two_mu - num_bigint::BigInt::from(2 * bi);
        match u32::try_from(&d) {
            Ok(d) => degrees.push(d),
            Err(_) => return false,
        }
    }
    let expected = MonomialIdeal::from_pure_powers(&degrees).integral_closure().shift(b);
    ideal.integral_closure() == expected
}

/// Verifies each ideal in parallel; results keep the input order.
pub fn verify_zero_dim_corpus(ideals: &[MonomialIdeal]) -> Vec<Result<ZeroDimReport>> {
    ideals.par_iter().map(verify_zero_dim).collect()
}

pub fn verify_codim2_corpus(ideals: &[MonomialIdeal]) -> Vec<Result<Codim2Report>> {
    ideals.par_iter().map(verify_codim2).collect()
}

/// Ideal `k` of the corpus uses seed `seed + k` and dimension `dims[k % dims.len()]`.
pub fn zero_dim_corpus(seed: u64, count: usize, dims: &[usize], max_exp: u32, max_gens: usize) -> Vec<MonomialIdeal> {
    assert!(!dims.is_empty(), "need at least one dimension");
    (0..count)
        .map(|k| {
            random_ideal(
                seed.wrapping_add(k as u64),
                dims[k % dims.len()],
                max_exp,
                max_gens,
                true,
            )
        })
        .collect()
}

pub fn codim2_corpus(seed: u64, count: usize, max_exp: u32, max_gens: usize) -> Vec<MonomialIdeal> {
    (0..count)
        .map(|k| random_codim2_ideal(seed.wrapping_add(k as u64), max_exp, max_gens))
        .collect()
}

/// `mu(J^t) = t mu(J)` and `n! l(R/J^t) / t^n >= e(J)` for `t = 1..=t_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingReport {
    pub ideal: MonomialIdeal,
    pub mu: Rational,
    pub mu_powers: Vec<Rational>,
    pub mult: Rational,
    pub estimates: Vec<Rational>,
}

impl ScalingReport {
    pub fn mu_scales(&self) -> bool {
        self.mu_powers
            .iter()
            .enumerate()
            .all(|(i, m)| *m == int(i as i64 + 1) * &self.mu)
    }

    pub fn estimates_bound_multiplicity(&self) -> bool {
        self.estimates.iter().all(|e| *e >= self.mult)
    }

    /// Whether the last estimate is strictly closer to `e(J)` than the first.
    pub fn gap_shrinks(&self) -> bool {
        let first = &self.estimates[0] - &self.mult;
        let last = self.estimates.last().expect("nonempty") - &self.mult;
        last < first || (first.is_zero() && last.is_zero())
    }

    /// Whether consecutive gaps never increase.
    pub fn is_monotone(&self) -> bool {
        self.estimates.windows(2).all(|w| w[1] <= w[0])
    }
}

pub fn verify_scaling(ideal: &MonomialIdeal, t_max: u32) -> Result<ScalingReport> {
    let estimates = multiplicity_limit_estimate(ideal, t_max)?;
    let mu = compute_mu(ideal).mu;
    let mu_powers = (1..=t_max).map(|t| compute_mu(&ideal.power(t)).mu).collect();
    Ok(ScalingReport {
        ideal: ideal.clone(),
        mu,
        mu_powers,
        mult: multiplicity(ideal)?,
        estimates,
    })
}

/// `mu(I) >= max(b)` for `I = x^b * a`.
pub fn mu_dominates_monomial_factor(ideal: &MonomialIdeal) -> bool {
    let b = ideal.factor_out_gcd().b;
    let top = b.coords().iter().copied().max().unwrap_or(0);
    compute_mu(ideal).mu >= int(top as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn mono(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(gens[0].len(), gens).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        for n in 1..=3 {
            for q in 1..=4u32 {
                let m = MonomialIdeal::maximal_power(n, q);
                assert_eq!(multiplicity(&m).unwrap(), int(q.pow(n as u32) as i64));
            }
        }
        assert_eq!(multiplicity(&mono(&[&[6, 0], &[0, 2]])).unwrap(), int(12));
        assert_eq!(multiplicity(&mono(&[&[4, 0], &[0, 4]])).unwrap(), int(16));
        assert!(multiplicity(&mono(&[&[1, 1]])).is_err());
    }

    #[test]
    fn limit_estimates() {
        let m2 = MonomialIdeal::maximal_power(2, 2);
        assert_eq!(
            multiplicity_limit_estimate(&m2, 3).unwrap(),
            vec![int(6), int(5), rat(14, 3)]
        );
        let j = mono(&[&[6, 0], &[0, 2]]);
        assert_eq!(multiplicity_limit_estimate(&j, 1).unwrap(), vec![int(24)]);
        assert!(multiplicity_limit_estimate(&j, 0).is_err());
        assert!(multiplicity_limit_estimate(&j, 9).is_err());
    }

    #[test]
    fn zero_dim_report_for_the_binomial_example() {
        let r = verify_zero_dim(&mono(&[&[6, 0], &[0, 2]])).unwrap();
        assert_eq!((r.covolume_bound.lhs.clone(), r.covolume_bound.rhs.clone()), (int(24), int(12)));
        assert_eq!((r.length_bound.lhs.clone(), r.length_bound.rhs.clone()), (int(12), rat(9, 2)));
        assert_eq!((r.multiplicity_bound.lhs.clone(), r.multiplicity_bound.rhs.clone()), (int(12), int(9)));
        assert!(!r.multiplicity_equality);
        assert_eq!(r.closure_power_q, None);
        assert!(r.passed());
    }

    #[test]
    fn equality_cases() {
        let r = verify_zero_dim(&mono(&[&[4, 0], &[0, 4]])).unwrap();
        assert!(r.multiplicity_equality);
        assert_eq!(r.closure_power_q, Some(4));
        assert_eq!(r.mu, int(2));
        assert!(r.passed());
        let r = verify_zero_dim(&MonomialIdeal::maximal_power(2, 3)).unwrap();
        assert_eq!(r.mult, int(9));
        assert!(r.multiplicity_equality);
        assert_eq!(r.closure_power_q, Some(3));
    }

    #[test]
    fn zero_dim_rejects_bad_input() {
        assert!(matches!(verify_zero_dim(&mono(&[&[1, 1]])), Err(Error::Dimension(_))));
        assert!(matches!(
            verify_zero_dim(&MonomialIdeal::unit(2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn codim2_shifted_example() {
        let r = verify_codim2(&mono(&[&[6, 2], &[0, 4]])).unwrap();
        assert_eq!(r.b, Exponent::new(vec![0, 2]));
        assert_eq!((r.b1, r.b2, r.mult_f), (0, 2, 2));
        assert_eq!(r.mu, int(3));
        assert_eq!(r.e_a, int(12));
        assert_eq!(r.sharp_codim2_bound.lhs, int(36));
        assert_eq!(r.sharp_codim2_bound.rhs, int(36));
        assert!(r.sharp_equality);
        assert_eq!(r.boundary_closure_ok, Some(true));
        assert!(r.passed());
    }

    #[test]
    fn codim2_with_x1_factor() {
        let r = verify_codim2(&mono(&[&[3, 0], &[1, 2]])).unwrap();
        assert_eq!(r.mu, rat(3, 2));
        assert_eq!((r.b1, r.b2), (0, 1));
        assert_eq!(r.length_a, 4);
        assert_eq!(r.primitive_length_bound.rhs, rat(3, 2));
        assert_eq!((r.codim2_bound.lhs.clone(), r.codim2_bound.rhs.clone()), (int(10), int(9)));
        assert!(r.passed());
    }

    #[test]
    fn codim2_principal() {
        let r = verify_codim2(&mono(&[&[2, 0]])).unwrap();
        assert!(r.primitive.is_unit());
        assert_eq!(r.e_a, int(0));
        assert_eq!(r.mu, int(2));
        assert_eq!(r.mult_f, 2);
        assert_eq!((r.codim2_bound.lhs.clone(), r.codim2_bound.rhs.clone()), (int(16), int(16)));
        assert_eq!((r.primitive_length_bound.lhs.clone(), r.primitive_length_bound.rhs.clone()), (int(0), int(0)));
        assert_eq!(r.boundary_closure_ok, Some(true));
        assert!(r.passed());
    }

    #[test]
    fn codim2_needs_two_variables() {
        let m = MonomialIdeal::maximal(3);
        assert!(matches!(verify_codim2(&m), Err(Error::Dimension(_))));
    }

    #[test]
    fn scaling_of_a_small_ideal() {
        let r = verify_scaling(&mono(&[&[6, 0], &[0, 2]]), 4).unwrap();
        assert!(r.mu_scales());
        assert!(r.estimates_bound_multiplicity());
        assert!(r.gap_shrinks());
    }

    #[test]
    fn corpora_are_deterministic() {
        let a = zero_dim_corpus(3, 20, &[1, 2, 3], 6, 5);
        assert_eq!(a, zero_dim_corpus(3, 20, &[1, 2, 3], 6, 5));
        assert!(a.iter().all(MonomialIdeal::is_zero_dimensional));
        let c = codim2_corpus(3, 20, 6, 4);
        assert_eq!(c, codim2_corpus(3, 20, 6, 4));
    }
}
