use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Exponent, Rational};
use crate::error::{Error, Result};

/// Polynomial in `n` variables with rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    n: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl RationalPolynomial {
    pub fn zero(n: usize) -> Self {
        RationalPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(n, Exponent::zero(n), c)
    }

    pub fn monomial(n: usize, exp: Exponent, coeff: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(exp, coeff);
        p
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, i64)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(Exponent::new(e), Rational::from_integer(BigInt::from(c)));
        }
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeated exponents.
    pub fn try_from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Format(format!(
                    "exponent {e} has length {}, expected {n}",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.n);
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// Lowest degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::degree).min()
    }

    /// Sum of the terms of lowest degree.
    pub fn lowest_form(&self) -> RationalPolynomial {
        let Some(low) = self.order() else {
            return self.clone();
        };
        RationalPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == low)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.order() == self.degree()
    }

    /// The exponent of a single-term polynomial.
    pub fn as_monomial(&self) -> Option<&Exponent> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn add(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> RationalPolynomial {
        let mut out = Self::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.add(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> RationalPolynomial {
        let mut out = Self::constant(self.n, Rational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `x_i -> sum_j images[i][j] x_j` (a linear change of coordinates).
    pub fn substitute_linear(&self, images: &[Vec<Rational>]) -> RationalPolynomial {
        let n = self.n;
        let forms: Vec<RationalPolynomial> = images
            .iter()
            .map(|row| {
                let mut p = Self::zero(n);
                for (j, c) in row.iter().enumerate() {
                    p.add_term(Exponent::pure_power(n, j, 1), c.clone());
                }
                p
            })
            .collect();
        let mut powers: Vec<Vec<RationalPolynomial>> = forms
            .iter()
            .map(|_| vec![Self::constant(n, Rational::one())])
            .collect();
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            let mut term = Self::constant(n, c.clone());
            for (i, &a) in e.coords().iter().enumerate() {
                while powers[i].len() <= a as usize {
                    let next = powers[i].last().expect("nonempty").mul(&forms[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][a as usize]);
            }
            out = out.add(&term);
        }
        out
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &a) in e.coords().iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{a}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}
