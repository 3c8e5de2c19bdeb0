use std::fmt;

use super::Rational;

/// Exponent vector `(a_1, ..., a_n)` of the monomial `x_1^a_1 * ... * x_n^a_n`.
///
/// The derived ordering is lexicographic on the coordinates; it is the canonical
/// ordering of generator lists. Divisibility is the componentwise partial order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// `x_i^degree` in `n` variables.
    pub fn pure_power(n: usize, i: usize, degree: u32) -> Self {
        let mut coords = vec![0; n];
        coords[i] = degree;
        Exponent(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// `self | other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Product of monomials.
    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Quotient `other^-1 * self`, if `other` divides `self`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    /// Componentwise minimum (gcd of monomials).
    pub fn meet(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Componentwise maximum (lcm of monomials).
    pub fn join(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// If this is `x_i^d` with `d > 0`, returns `(i, d)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &a) in self.0.iter().enumerate() {
            if a > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, a));
            }
        }
        found
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&a| Rational::from_integer(a.into())).collect()
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_arithmetic() {
        let a = Exponent::new(vec![2, 0]);
        let b = Exponent::new(vec![2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.checked_sub(&a), Some(Exponent::new(vec![0, 1])));
        assert_eq!(a.checked_sub(&b), None);
        assert_eq!(a.add(&b), Exponent::new(vec![4, 1]));
        assert_eq!(a.meet(&Exponent::new(vec![0, 3])), Exponent::zero(2));
        assert_eq!(a.join(&Exponent::new(vec![0, 3])), Exponent::new(vec![2, 3]));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(Exponent::new(vec![0, 4, 0]).as_pure_power(), Some((1, 4)));
        assert_eq!(Exponent::new(vec![1, 1]).as_pure_power(), None);
        assert_eq!(Exponent::zero(3).as_pure_power(), None);
        assert_eq!(Exponent::pure_power(3, 2, 5).to_string(), "(0,0,5)");
    }
}
