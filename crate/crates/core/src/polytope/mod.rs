//! Newton polytopes `P(J) = conv(generators) + R_+^n` of monomial ideals.

mod exact_int;
mod facets;
pub mod lp;
mod volume;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{factorial, Exponent, MonomialIdeal, Rational};
use crate::error::{Error, Result};
use facets::{enumerate_facets, Halfspace};
use lp::LpOutcome;

/// The inequality `sum c_i u_i >= rhs` with nonnegative coefficients.
///
/// Facets not through the origin are scaled to `rhs = 1`, so a bounded facet reads
/// `sum u_i / a_i >= 1` with intercepts `a_i`. Facets through the origin keep a
/// primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetInequality {
    pub coefficients: Vec<Rational>,
    pub rhs: Rational,
}

impl FacetInequality {
    fn from_halfspace(h: &Halfspace) -> Self {
        let scale = if h.rhs.is_zero() {
            BigInt::one()
        } else {
            h.rhs.clone()
        };
        FacetInequality {
            coefficients: h
                .normal
                .iter()
                .map(|c| Rational::new(c.clone(), scale.clone()))
                .collect(),
            rhs: Rational::new(h.rhs.clone(), scale),
        }
    }

    pub fn evaluate(&self, u: &[Rational]) -> Rational {
        self.coefficients.iter().zip(u).map(|(c, x)| c * x).sum()
    }

    pub fn is_satisfied(&self, u: &[Rational]) -> bool {
        self.evaluate(u) >= self.rhs
    }

    pub fn is_tight(&self, u: &[Rational]) -> bool {
        self.evaluate(u) == self.rhs
    }

    /// All coefficients positive: the facet is a bounded simplex face.
    pub fn is_bounded(&self) -> bool {
        self.coefficients.iter().all(Signed::is_positive)
    }

    /// Intercepts `a_i` of the normal form `sum u_i / a_i = 1`, for bounded facets.
    pub fn intercepts(&self) -> Option<Vec<Rational>> {
        if !self.is_bounded() || !self.rhs.is_positive() {
            return None;
        }
        Some(self.coefficients.iter().map(|c| &self.rhs / c).collect())
    }
}

/// `mu(J) = min { a > 0 : a * (1, ..., 1) in P(J) }` and `lct(J) = 1 / mu(J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuValue {
    pub mu: Rational,
    /// `None` only for the unit ideal, where `mu = 0`.
    pub lct: Option<Rational>,
    /// A facet tight at `mu * e`.
    pub witness_facet: Option<FacetInequality>,
}

struct FacetData {
    halfspaces: Vec<Halfspace>,
    facets: Vec<FacetInequality>,
}

/// `conv(points) + R_+^n`, with the facet description computed on first use.
pub struct NewtonPolytope {
    n: usize,
    points: Vec<Exponent>,
    facet_data: OnceLock<FacetData>,
}

impl NewtonPolytope {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        NewtonPolytope {
            n: ideal.n(),
            points: ideal.generators().to_vec(),
            facet_data: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Exponent] {
        &self.points
    }

    fn integer_points(&self) -> Vec<Vec<BigInt>> {
        self.points
            .iter()
            .map(|p| p.coords().iter().map(|&a| BigInt::from(a)).collect())
            .collect()
    }

    fn data(&self) -> &FacetData {
        self.facet_data.get_or_init(|| {
            let directions: Vec<usize> = (0..self.n).collect();
            let halfspaces = enumerate_facets(&self.integer_points(), &directions, self.n);
            let facets = halfspaces.iter().map(FacetInequality::from_halfspace).collect();
            FacetData { halfspaces, facets }
        })
    }

    pub(crate) fn halfspaces(&self) -> &[Halfspace] {
        &self.data().halfspaces
    }

    pub fn facets(&self) -> &[FacetInequality] {
        &self.data().facets
    }

    pub fn bounded_facets(&self) -> impl Iterator<Item = &FacetInequality> {
        self.facets().iter().filter(|f| f.is_bounded())
    }

    fn check_point(&self, u: &[Rational]) -> Result<()> {
        if u.len() != self.n {
            return Err(Error::Format(format!(
                "point has {} coordinates, polytope lives in dimension {}",
                u.len(),
                self.n
            )));
        }
        if u.iter().any(Signed::is_negative) {
            return Err(Error::Domain("point has a negative coordinate".into()));
        }
        Ok(())
    }

    /// Membership by evaluating the facet inequalities.
    pub fn contains_point(&self, u: &[Rational]) -> Result<bool> {
        self.check_point(u)?;
        Ok(self.facets().iter().all(|f| f.is_satisfied(u)))
    }

    /// Membership by exact LP feasibility of `sum l_i v_i <= u`, `l >= 0`, `sum l_i = 1`.
    pub fn contains_point_lp(&self, u: &[Rational]) -> Result<bool> {
        self.check_point(u)?;
        let m = self.points.len();
        let n = self.n;
        // variables: l_1..l_m, s_1..s_n
        let mut a = Vec::with_capacity(n + 1);
        let mut b = Vec::with_capacity(n + 1);
        for j in 0..n {
            let mut row: Vec<Rational> = self
                .points
                .iter()
                .map(|p| Rational::from_integer(p.coords()[j].into()))
                .collect();
            row.extend((0..n).map(|k| if k == j { Rational::one() } else { Rational::zero() }));
            a.push(row);
            b.push(u[j].clone());
        }
        let mut sum_row: Vec<Rational> = vec![Rational::one(); m];
        sum_row.extend((0..n).map(|_| Rational::zero()));
        a.push(sum_row);
        b.push(Rational::one());
        let cost = vec![Rational::zero(); m + n];
        Ok(matches!(lp::minimize(&a, &b, &cost), LpOutcome::Optimal { .. }))
    }

    pub fn contains_lattice_point(&self, u: &Exponent) -> bool {
        let point: Vec<BigInt> = u.coords().iter().map(|&a| BigInt::from(a)).collect();
        self.halfspaces().iter().all(|h| h.eval(&point) >= h.rhs)
    }

    /// `mu` from the facets: the diagonal `a * e` satisfies `c.u >= r` iff
    /// `a >= r / sum c`, so `mu` is the largest such ratio.
    pub fn mu(&self) -> MuValue {
        let mut best: Option<(Rational, &FacetInequality)> = None;
        for f in self.facets() {
            let total: Rational = f.coefficients.iter().sum();
            let ratio = &f.rhs / total;
            if best.as_ref().is_none_or(|(b, _)| ratio > *b) {
                best = Some((ratio, f));
            }
        }
        let (mu, witness) = best.expect("a nonzero ideal has at least one facet");
        let lct = if mu.is_zero() { None } else { Some(mu.recip()) };
        MuValue {
            mu,
            lct,
            witness_facet: Some(witness.clone()),
        }
    }

    /// `mu` as the optimum of the LP `min a` s.t. `sum l_i v_i <= a e`, `sum l_i = 1`.
    pub fn mu_by_lp(&self) -> Rational {
        let m = self.points.len();
        let n = self.n;
        // variables: l_1..l_m, s_1..s_n, a
        let mut a = Vec::with_capacity(n + 1);
        let mut b = Vec::with_capacity(n + 1);
        for j in 0..n {
            let mut row: Vec<Rational> = self
                .points
                .iter()
                .map(|p| Rational::from_integer(p.coords()[j].into()))
                .collect();
            row.extend((0..n).map(|k| if k == j { Rational::one() } else { Rational::zero() }));
            row.push(-Rational::one());
            a.push(row);
            b.push(Rational::zero());
        }
        let mut sum_row: Vec<Rational> = vec![Rational::one(); m];
        sum_row.extend((0..=n).map(|_| Rational::zero()));
        a.push(sum_row);
        b.push(Rational::one());
        let mut cost = vec![Rational::zero(); m + n];
        cost.push(Rational::one());
        match lp::minimize(&a, &b, &cost) {
            LpOutcome::Optimal { value, .. } => value,
            other => unreachable!("diagonal LP is feasible and bounded below: {other:?}"),
        }
    }

    /// `n! * vol(R_+^n \ P)`. The bounded complement is star-shaped from the origin,
    /// so it is the union of the cones from the origin over the facets missing it.
    pub fn covolume(&self) -> Rational {
        let points = self.integer_points();
        let mut volume = Rational::zero();
        for facet in self.halfspaces() {
            if facet.rhs.is_positive() {
                volume += volume::pyramid(&points, facet, facet.rhs.clone(), self.n);
            }
        }
        volume * factorial(self.n)
    }
}

impl std::fmt::Debug for NewtonPolytope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NewtonPolytope")
            .field("n", &self.n)
            .field("points", &self.points)
            .finish_non_exhaustive()
    }
}

pub fn build_polytope(ideal: &MonomialIdeal) -> NewtonPolytope {
    NewtonPolytope::new(ideal)
}

pub fn compute_mu(ideal: &MonomialIdeal) -> MuValue {
    NewtonPolytope::new(ideal).mu()
}

/// `Vol(J) = n! * vol(R_+^n \ P(J))` for zero-dimensional `J`.
pub fn covolume(ideal: &MonomialIdeal) -> Result<Rational> {
    ideal.require_zero_dimensional()?;
    Ok(NewtonPolytope::new(ideal).covolume())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(n, gens).unwrap()
    }

    fn point(v: &[Rational]) -> Vec<Rational> {
        v.to_vec()
    }

    #[test]
    fn facets_of_pure_power_ideal() {
        let p = build_polytope(&ideal(2, &[&[6, 0], &[0, 2]]));
        let bounded: Vec<_> = p.bounded_facets().collect();
        assert_eq!(bounded.len(), 1);
        assert_eq!(bounded[0].coefficients, vec![rat(1, 6), rat(1, 2)]);
        assert_eq!(bounded[0].rhs, int(1));
        assert_eq!(bounded[0].intercepts(), Some(vec![int(6), int(2)]));
    }

    #[test]
    fn principal_ideal_is_a_halfspace() {
        let p = build_polytope(&ideal(1, &[&[3]]));
        assert_eq!(p.facets().len(), 1);
        assert_eq!(p.facets()[0].coefficients, vec![rat(1, 3)]);
        let p2 = build_polytope(&ideal(2, &[&[3, 0]]));
        assert!(p2.facets().iter().any(|f| f.coefficients == vec![rat(1, 3), int(0)]));
        assert_eq!(p2.bounded_facets().count(), 0);
    }

    #[test]
    fn maximal_power_has_one_bounded_facet() {
        for n in 1..=4 {
            let p = build_polytope(&MonomialIdeal::maximal_power(n, 3));
            let bounded: Vec<_> = p.bounded_facets().collect();
            assert_eq!(bounded.len(), 1);
            assert!(bounded[0].coefficients.iter().all(|c| *c == rat(1, 3)));
        }
    }

    #[test]
    fn membership_examples() {
        let p = build_polytope(&ideal(2, &[&[6, 0], &[0, 2]]));
        assert!(p.contains_point(&point(&[int(3), int(1)])).unwrap());
        assert!(p.contains_point_lp(&point(&[int(3), int(1)])).unwrap());
        assert!(!p.contains_point(&point(&[int(2), int(1)])).unwrap());
        assert!(!p.contains_point_lp(&point(&[int(2), int(1)])).unwrap());
        for g in p.points() {
            assert!(p.contains_point(&g.to_rationals()).unwrap());
            assert!(p.contains_point_lp(&g.to_rationals()).unwrap());
        }
        assert!(matches!(
            p.contains_point(&point(&[int(-1), int(4)])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn mu_examples() {
        for n in 1..=3 {
            for q in 1..=4 {
                let mu = compute_mu(&MonomialIdeal::maximal_power(n, q));
                assert_eq!(mu.mu, rat(q as i64, n as i64));
                assert_eq!(mu.lct, Some(rat(n as i64, q as i64)));
            }
        }
        let j = ideal(2, &[&[6, 0], &[0, 2]]);
        assert_eq!(compute_mu(&j).mu, rat(3, 2));
        assert_eq!(NewtonPolytope::new(&j).mu_by_lp(), rat(3, 2));
        let shifted = ideal(2, &[&[6, 2], &[0, 4]]);
        let v = compute_mu(&shifted);
        assert_eq!(v.mu, int(3));
        let diag = vec![int(3), int(3)];
        assert!(v.witness_facet.unwrap().is_tight(&diag));
        let unit = compute_mu(&MonomialIdeal::unit(2));
        assert_eq!(unit.mu, int(0));
        assert_eq!(unit.lct, None);
    }

    #[test]
    fn covolume_examples() {
        assert_eq!(covolume(&ideal(2, &[&[6, 0], &[0, 2]])).unwrap(), int(12));
        for q in 1..=5 {
            assert_eq!(
                covolume(&MonomialIdeal::maximal_power(2, q)).unwrap(),
                int((q * q) as i64)
            );
        }
        assert_eq!(covolume(&ideal(1, &[&[7]])).unwrap(), int(7));
        assert_eq!(covolume(&MonomialIdeal::unit(3)).unwrap(), int(0));
        assert!(matches!(covolume(&ideal(2, &[&[1, 1]])), Err(Error::Dimension(_))));
    }
}
