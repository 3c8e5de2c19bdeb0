use std::fmt;

use num_traits::Zero;

use super::{for_each_in_box, monomials_of_degree, Exponent};
use crate::degeneration::RationalPolynomial;
use crate::error::{Error, Result};

/// Nonzero monomial ideal of `K[x_1, ..., x_n]`, stored as its minimal generators.
///
/// Generators form an antichain under divisibility and are sorted lexicographically,
/// so two values are equal exactly when the ideals are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Exponent>,
}

/// `I = x^b * a` with `a` free of monomial factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdFactorization {
    pub b: Exponent,
    pub primitive: MonomialIdeal,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing to minimal generators.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        let gens: Vec<Exponent> = gens.into_iter().collect();
        minimalize(&gens, n)
    }

    /// Convenience constructor from coordinate vectors.
    pub fn from_coords(n: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::new(n, gens.iter().map(|g| Exponent::new(g.to_vec())))
    }

    /// The unit ideal `(1)`.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![Exponent::zero(n)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::maximal_power(n, 1)
    }

    /// `(x_1, ..., x_n)^q`, generated by all monomials of degree `q`.
    pub fn maximal_power(n: usize, q: u32) -> Self {
        MonomialIdeal {
            n,
            generators: monomials_of_degree(n, q),
        }
    }

    /// `(x_1^d_1, ..., x_n^d_n)`.
    pub fn from_pure_powers(degrees: &[u32]) -> Self {
        let n = degrees.len();
        let gens = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| Exponent::pure_power(n, i, d));
        minimalize(&gens.collect::<Vec<_>>(), n).expect("pure powers have consistent length")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    /// Whether the monomial `x^u` lies in the ideal.
    pub fn contains_monomial(&self, u: &Exponent) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.generators.iter().all(|g| other.contains_monomial(g))
    }

    /// For each variable, the smallest `d` with `x_i^d` in the ideal, if every variable has one.
    pub fn pure_power_degrees(&self) -> Option<Vec<u32>> {
        if self.is_unit() {
            return Some(vec![0; self.n]);
        }
        let mut degrees = vec![None::<u32>; self.n];
        for g in &self.generators {
            if let Some((i, d)) = g.as_pure_power() {
                degrees[i] = Some(degrees[i].map_or(d, |e: u32| e.min(d)));
            }
        }
        degrees.into_iter().collect()
    }

    /// True iff some generator is a pure power of each variable (the quotient is finite).
    pub fn is_zero_dimensional(&self) -> bool {
        self.pure_power_degrees().is_some()
    }

    pub(crate) fn require_zero_dimensional(&self) -> Result<Vec<u32>> {
        self.pure_power_degrees().ok_or_else(|| {
            Error::Dimension(format!("{self} has no pure power of some variable"))
        })
    }

    /// Number of standard monomials, i.e. `dim_K R/J`.
    ///
    /// Walks the staircase: for each point of the box in the first `n-1` coordinates
    /// the standard monomials above it form a column whose height is the smallest last
    /// coordinate of a generator dividing it.
    pub fn colength(&self) -> Result<u64> {
        let degrees = self.require_zero_dimensional()?;
        if self.n == 0 {
            return Ok(0);
        }
        let (head, last) = degrees.split_at(self.n - 1);
        let mut total = 0u64;
        for_each_in_box(head, |prefix| {
            let height = self
                .generators
                .iter()
                .filter(|g| g.coords()[..self.n - 1].iter().zip(prefix).all(|(a, b)| a <= b))
                .map(|g| g.coords()[self.n - 1])
                .min()
                .unwrap_or(last[0]);
            total += height as u64;
        });
        Ok(total)
    }

    /// `J * K`, generated by pairwise exponent sums.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::Format(format!(
                "ambient dimensions differ: {} vs {}",
                self.n, other.n
            )));
        }
        let sums: Vec<Exponent> = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.add(b)))
            .collect();
        minimalize(&sums, self.n)
    }

    /// `J^t`; `J^0` is the unit ideal.
    pub fn power(&self, t: u32) -> MonomialIdeal {
        let mut result = MonomialIdeal::unit(self.n);
        let mut base = self.clone();
        let mut t = t;
        while t > 0 {
            if t & 1 == 1 {
                result = result.product(&base).expect("same ambient dimension");
            }
            t >>= 1;
            if t > 0 {
                base = base.product(&base).expect("same ambient dimension");
            }
        }
        result
    }

    /// Splits off the largest monomial factor: `b` is the componentwise minimum of
    /// the generators and `primitive` the ideal of the shifted generators.
    pub fn factor_out_gcd(&self) -> GcdFactorization {
        let b = self
            .generators
            .iter()
            .skip(1)
            .fold(self.generators[0].clone(), |acc, g| acc.meet(g));
        let primitive = MonomialIdeal {
            n: self.n,
            generators: self
                .generators
                .iter()
                .map(|g| g.checked_sub(&b).expect("b divides every generator"))
                .collect(),
        };
        GcdFactorization { b, primitive }
    }

    /// `x^b * J`.
    pub fn shift(&self, b: &Exponent) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            generators: self.generators.iter().map(|g| g.add(b)).collect(),
        }
    }

    /// A polynomial lies in a monomial ideal iff each of its terms does.
    pub fn contains_polynomial(&self, f: &RationalPolynomial) -> Result<bool> {
        if f.n() != self.n {
            return Err(Error::Format(format!(
                "polynomial has {} variables, ideal has {}",
                f.n(),
                self.n
            )));
        }
        Ok(f
            .terms()
            .filter(|(_, c)| !c.is_zero())
            .all(|(e, _)| self.contains_monomial(e)))
    }
}

/// Reduces `gens` to the inclusion-minimal antichain generating the same ideal,
/// sorted lexicographically.
pub fn minimalize(gens: &[Exponent], n: usize) -> Result<MonomialIdeal> {
    if gens.is_empty() {
        return Err(Error::Format("empty generator set (zero ideal)".into()));
    }
    if let Some(bad) = gens.iter().find(|g| g.len() != n) {
        return Err(Error::Format(format!(
            "exponent {bad} has length {}, expected {n}",
            bad.len()
        )));
    }
    let mut sorted: Vec<&Exponent> = gens.iter().collect();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut kept: Vec<Exponent> = Vec::new();
    for g in sorted {
        // anything dividing g has degree <= deg g and was seen first
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g.clone());
        }
    }
    kept.sort();
    Ok(MonomialIdeal {
        n,
        generators: kept,
    })
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(n, gens).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(
            ideal(2, &[&[2, 0], &[2, 1], &[0, 3]]).generators(),
            &[Exponent::new(vec![0, 3]), Exponent::new(vec![2, 0])]
        );
        assert_eq!(ideal(2, &[&[1, 1]]).generators(), &[Exponent::new(vec![1, 1])]);
        assert_eq!(ideal(2, &[&[6, 2], &[0, 4], &[3, 3]]).generators().len(), 3);
    }

    #[test]
    fn minimalize_errors() {
        assert!(matches!(MonomialIdeal::new(2, vec![]), Err(Error::Format(_))));
        assert!(matches!(
            MonomialIdeal::new(2, vec![Exponent::new(vec![1, 2, 3])]),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn zero_dimensionality() {
        assert!(ideal(2, &[&[6, 0], &[0, 2]]).is_zero_dimensional());
        assert!(!ideal(2, &[&[1, 1]]).is_zero_dimensional());
        assert!(!ideal(2, &[&[2, 0], &[1, 1]]).is_zero_dimensional());
        assert!(MonomialIdeal::unit(3).is_zero_dimensional());
    }

    #[test]
    fn colength_examples() {
        assert_eq!(ideal(2, &[&[6, 0], &[0, 2]]).colength().unwrap(), 12);
        for n in 1..=4 {
            assert_eq!(MonomialIdeal::maximal(n).colength().unwrap(), 1);
        }
        assert_eq!(MonomialIdeal::maximal_power(2, 3).colength().unwrap(), 6);
        assert_eq!(MonomialIdeal::unit(2).colength().unwrap(), 0);
        assert!(matches!(ideal(2, &[&[1, 1]]).colength(), Err(Error::Dimension(_))));
    }

    #[test]
    fn products_and_powers() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.product(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let j = ideal(2, &[&[6, 0], &[0, 2]]);
        assert_eq!(j.power(2), ideal(2, &[&[12, 0], &[6, 2], &[0, 4]]));
        assert_eq!(j.power(1), j);
        assert_eq!(j.power(0), MonomialIdeal::unit(2));
        assert!(matches!(
            j.product(&MonomialIdeal::maximal(3)),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn gcd_factorization() {
        let f = ideal(2, &[&[6, 2], &[0, 4]]).factor_out_gcd();
        assert_eq!(f.b, Exponent::new(vec![0, 2]));
        assert_eq!(f.primitive, ideal(2, &[&[6, 0], &[0, 2]]));
        let g = ideal(2, &[&[3, 0], &[1, 2]]).factor_out_gcd();
        assert_eq!(g.b, Exponent::new(vec![1, 0]));
        assert_eq!(g.primitive, ideal(2, &[&[2, 0], &[0, 2]]));
        let j = ideal(3, &[&[3, 0, 0], &[0, 2, 0], &[0, 0, 5], &[1, 1, 1]]);
        let h = j.factor_out_gcd();
        assert_eq!(h.b, Exponent::zero(3));
        assert_eq!(h.primitive, j);
        let principal = ideal(2, &[&[2, 0]]).factor_out_gcd();
        assert!(principal.primitive.is_unit());
    }

    #[test]
    fn polynomial_membership() {
        let f = RationalPolynomial::from_terms(2, [(vec![0, 2], 1), (vec![2, 1], 1)]);
        assert!(ideal(2, &[&[0, 1]]).contains_polynomial(&f).unwrap());
        assert!(!ideal(2, &[&[6, 0], &[0, 2]]).contains_polynomial(&f).unwrap());
        assert!(ideal(2, &[&[6, 0]])
            .contains_polynomial(&RationalPolynomial::zero(2))
            .unwrap());
    }
}
