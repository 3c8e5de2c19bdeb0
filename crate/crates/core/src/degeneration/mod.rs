//! Polynomial ideals and their monomial degenerations: Gröbner initial ideals,
//! tangent cones, length preservation and upper bounds for `mu` of non-monomial ideals.

mod groebner;
mod order;
mod polynomial;
mod truncation;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{int, Exponent, MonomialIdeal, Rational};
use crate::error::{Error, Result};
use crate::polytope::compute_mu;

pub use groebner::GroebnerBudget;
pub use order::{MonomialOrder, OrderKind, TermOrder};
pub use polynomial::RationalPolynomial;
pub use truncation::{local_truncation, truncated_initial_ideal, LocalTruncation};

use groebner::groebner_basis as int_groebner_basis;
use order::HomogenizedLocal;

/// Largest truncation degree tried when certifying `M^N ⊆ I` at the origin.
pub const DEFAULT_TRUNCATION_BUDGET: u32 = 24;

/// Number of random coordinate changes tried by [`mu_upper_bound`] by default.
pub const DEFAULT_MU_TRIALS: usize = 8;

/// Nonzero ideal of `Q[x_1, ..., x_n]` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal {
    n: usize,
    generators: Vec<RationalPolynomial>,
}

impl PolyIdeal {
    pub fn new(n: usize, generators: Vec<RationalPolynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Format("polynomial ideal needs at least one generator".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(Error::Format(format!(
                    "generator {i} has {} variables, expected {n}",
                    g.n()
                )));
            }
            if g.is_zero() {
                return Err(Error::Format(format!("generator {i} is the zero polynomial")));
            }
        }
        Ok(PolyIdeal { n, generators })
    }

    pub fn from_monomial(ideal: &MonomialIdeal) -> Self {
        PolyIdeal {
            n: ideal.n(),
            generators: ideal
                .generators()
                .iter()
                .map(|e| RationalPolynomial::monomial(ideal.n(), e.clone(), Rational::one()))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[RationalPolynomial] {
        &self.generators
    }

    /// The monomial ideal with the same generators, if every generator is a monomial.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        let exps: Option<Vec<Exponent>> = self
            .generators
            .iter()
            .map(|g| g.as_monomial().cloned())
            .collect();
        MonomialIdeal::new(self.n, exps?).ok()
    }

    pub fn product(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        if self.n != other.n {
            return Err(Error::Format(format!(
                "cannot multiply ideals in {} and {} variables",
                self.n, other.n
            )));
        }
        let mut gens: Vec<RationalPolynomial> = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                let p = f.mul(g);
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        PolyIdeal::new(self.n, gens)
    }

    /// `I^t`; `I^0` is the unit ideal.
    pub fn power(&self, t: u32) -> PolyIdeal {
        let mut out = PolyIdeal {
            n: self.n,
            generators: vec![RationalPolynomial::constant(self.n, Rational::one())],
        };
        for _ in 0..t {
            out = out.product(self).expect("same ambient dimension");
        }
        out
    }

    /// Image under the substitution `x_i -> sum_j images[i][j] x_j`.
    pub fn apply_linear_change(&self, images: &[Vec<Rational>]) -> Result<PolyIdeal> {
        if images.len() != self.n || images.iter().any(|row| row.len() != self.n) {
            return Err(Error::Format(format!(
                "coordinate change must be a {0}x{0} matrix",
                self.n
            )));
        }
        let gens: Vec<RationalPolynomial> = self
            .generators
            .iter()
            .map(|g| g.substitute_linear(images))
            .filter(|g| !g.is_zero())
            .collect();
        PolyIdeal::new(self.n, gens)
    }
}

/// Reduced Gröbner basis of `ideal` under `ord`, with primitive integer coefficients.
pub fn groebner_basis(ideal: &PolyIdeal, ord: &MonomialOrder) -> Result<Vec<RationalPolynomial>> {
    check_order(ideal, ord)?;
    let basis = int_groebner_basis(ideal.generators(), ord, GroebnerBudget::default())?;
    Ok(basis.iter().map(|g| g.to_rational(ideal.n())).collect())
}

pub fn initial_ideal(ideal: &PolyIdeal, ord: &MonomialOrder) -> Result<MonomialIdeal> {
    initial_ideal_with_budget(ideal, ord, GroebnerBudget::default())
}

/// Leading exponents of a Gröbner basis computed by Buchberger's algorithm.
pub fn initial_ideal_with_budget(
    ideal: &PolyIdeal,
    ord: &MonomialOrder,
    budget: GroebnerBudget,
) -> Result<MonomialIdeal> {
    check_order(ideal, ord)?;
    let basis = int_groebner_basis(ideal.generators(), ord, budget)?;
    MonomialIdeal::new(ideal.n(), basis.iter().map(|g| g.lead().clone()))
}

/// Initial ideal, under `ord`, of the tangent cone of `ideal` at the origin.
///
/// Each generator is homogenized with a new last variable `t` and a Gröbner basis is
/// computed under [`HomogenizedLocal`]; the `x`-parts of its leading monomials generate
/// the initial ideal of the ideal of lowest-degree forms. Works for any ideal, zero
/// dimensional or not; an ideal not vanishing at the origin gives the unit ideal.
pub fn tangent_cone_initial(ideal: &PolyIdeal, ord: &MonomialOrder) -> Result<MonomialIdeal> {
    check_order(ideal, ord)?;
    if let Some(m) = ideal.as_monomial() {
        return Ok(m);
    }
    let n = ideal.n();
    let homogenized: Vec<RationalPolynomial> = ideal.generators().iter().map(homogenize).collect();
    let local = HomogenizedLocal { inner: ord };
    let basis = int_groebner_basis(&homogenized, &local, GroebnerBudget::default())?;
    MonomialIdeal::new(
        n,
        basis
            .iter()
            .map(|g| Exponent::new(g.lead().coords()[..n].to_vec())),
    )
}

fn homogenize(f: &RationalPolynomial) -> RationalPolynomial {
    let n = f.n();
    let top = f.degree().unwrap_or(0);
    let mut out = RationalPolynomial::zero(n + 1);
    for (e, c) in f.terms() {
        let mut coords = e.coords().to_vec();
        coords.push((top - e.degree()) as u32);
        out.add_term(Exponent::new(coords), c.clone());
    }
    out
}

fn check_order(ideal: &PolyIdeal, ord: &MonomialOrder) -> Result<()> {
    if ord.n() != ideal.n() {
        return Err(Error::Format(format!(
            "order on {} variables used with an ideal in {}",
            ord.n(),
            ideal.n()
        )));
    }
    Ok(())
}

/// `dim_K R_M / I R_M`, by truncated linear algebra.
pub fn local_length(ideal: &PolyIdeal, ord: &MonomialOrder) -> Result<u64> {
    check_order(ideal, ord)?;
    Ok(local_truncation(ideal, ord, DEFAULT_TRUNCATION_BUDGET)?.length)
}

/// Lengths before and after degenerating to the tangent-cone initial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthCheck {
    pub l_orig: u64,
    pub l_initial: u64,
    pub equal: bool,
}

/// Compares the local length of `ideal` (truncated linear algebra) with the colength of
/// its tangent-cone initial ideal (homogenized Buchberger).
pub fn check_length_preservation(ideal: &PolyIdeal, ord: &MonomialOrder) -> Result<LengthCheck> {
    let l_orig = local_length(ideal, ord)?;
    let initial = tangent_cone_initial(ideal, ord)?;
    let l_initial = initial.colength()?;
    Ok(LengthCheck {
        l_orig,
        l_initial,
        equal: l_orig == l_initial,
    })
}

/// One degeneration tried by [`mu_upper_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuTrial {
    pub description: String,
    pub initial: MonomialIdeal,
    pub mu: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBound {
    /// Minimum of the trial values; `mu(I)` is at most this.
    pub bound: Rational,
    pub trials: Vec<MuTrial>,
}

type TrialPlan = (String, Option<Vec<Vec<Rational>>>, MonomialOrder);

/// Upper bound for `mu(I)` from monomial degenerations.
///
/// The trial set is every lex and grevlex order for every variable priority, followed by
/// `trials` seeded random lower-triangular unimodular coordinate changes (entries in
/// `[-3, 3]`) under the default order. Each trial contributes `mu` of the tangent-cone
/// initial ideal; the trial set for `trials = k` is a prefix of the one for `k + 1`.
pub fn mu_upper_bound(ideal: &PolyIdeal, trials: usize, seed: u64) -> Result<MuBound> {
    let n = ideal.n();
    let mut plans: Vec<TrialPlan> = Vec::new();
    for priority in permutations(n) {
        for ord in [
            MonomialOrder::lex(priority.clone())?,
            MonomialOrder::grevlex(priority.clone())?,
        ] {
            plans.push((ord.describe(), None, ord));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..trials {
        let images = random_lower_triangular(&mut rng, n);
        let ord = MonomialOrder::default_for(n);
        plans.push((
            format!("{} after coordinate change {}", ord.describe(), k + 1),
            Some(images),
            ord,
        ));
    }
    let results: Vec<Result<MuTrial>> = plans
        .into_par_iter()
        .map(|(description, change, ord)| {
            let image = match &change {
                Some(images) => ideal.apply_linear_change(images)?,
                None => ideal.clone(),
            };
            let initial = tangent_cone_initial(&image, &ord)?;
            let mu = compute_mu(&initial).mu;
            Ok(MuTrial {
                description,
                initial,
                mu,
            })
        })
        .collect();
    let trials = results.into_iter().collect::<Result<Vec<_>>>()?;
    let bound = trials
        .iter()
        .map(|t| t.mu.clone())
        .min()
        .expect("at least one order is always tried");
    Ok(MuBound { bound, trials })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out.sort();
    out
}

/// `x_i -> x_i + sum_{j<i} a_ij x_j` with `a_ij` uniform in `[-3, 3]`.
fn random_lower_triangular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => int(rng.gen_range(-3..=3)),
                    std::cmp::Ordering::Equal => int(1),
                    std::cmp::Ordering::Greater => int(0),
                })
                .collect()
        })
        .collect()
}

/// Seeded random polynomial ideal with `V(I) = {0}`, all generators of degree at most
/// `max_deg` and coefficients in `[-3, 3]`.
///
/// Generator `i` is `x_i^{d_i}` plus random terms involving some `x_j` with `j < i`, so
/// the zero set is the origin; further random generators without constant term are
/// added, and the result is sent through a random unimodular (upper then lower
/// triangular) change of coordinates.
pub fn random_poly_ideal(seed: u64, n: usize, max_deg: u32, max_gens: usize) -> PolyIdeal {
    assert!(n >= 1 && max_deg >= 1, "need at least one variable and positive degree");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let monomials: Vec<Exponent> = (1..=max_deg)
        .flat_map(|d| crate::algebra::monomials_of_degree(n, d))
        .collect();
    let coefficient = |rng: &mut ChaCha8Rng| loop {
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            return int(c);
        }
    };
    let mut gens = Vec::new();
    for i in 0..n {
        let d = rng.gen_range(1..=max_deg);
        let mut g = RationalPolynomial::monomial(n, Exponent::pure_power(n, i, d), int(1));
        let tails: Vec<&Exponent> = monomials
            .iter()
            .filter(|m| m.coords()[..i].iter().any(|&a| a > 0))
            .collect();
        if !tails.is_empty() {
            for _ in 0..rng.gen_range(0..=2) {
                let m = tails[rng.gen_range(0..tails.len())].clone();
                let c = coefficient(&mut rng);
                g = g.add(&RationalPolynomial::monomial(n, m, c));
            }
        }
        if !g.is_zero() {
            gens.push(g);
        }
    }
    let extra = rng.gen_range(0..=max_gens.saturating_sub(n));
    for _ in 0..extra {
        let mut g = RationalPolynomial::zero(n);
        for _ in 0..rng.gen_range(1..=3) {
            let m = monomials[rng.gen_range(0..monomials.len())].clone();
            let c = coefficient(&mut rng);
            g = g.add(&RationalPolynomial::monomial(n, m, c));
        }
        if !g.is_zero() {
            gens.push(g);
        }
    }
    let lower = random_lower_triangular(&mut rng, n);
    let mut upper = random_lower_triangular(&mut rng, n);
    upper.reverse();
    upper.iter_mut().for_each(|row| row.reverse());
    let ideal = PolyIdeal::new(n, gens).expect("generators are nonzero");
    ideal
        .apply_linear_change(&upper)
        .and_then(|i| i.apply_linear_change(&lower))
        .expect("square invertible change")
}
