//! Integral closure of monomial ideals: the monomials whose exponents lie in `P(J)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{for_each_in_box, ideal::minimalize, Exponent, MonomialIdeal};
use crate::polytope::NewtonPolytope;

impl MonomialIdeal {
    /// Minimal generators of the lattice points of the Newton polytope.
    ///
    /// A minimal lattice point never exceeds the componentwise maximum of the
    /// generators, so the first `n-1` coordinates range over that box and the last
    /// coordinate is the smallest integer height above the lower boundary of `P(J)`.
    pub fn integral_closure(&self) -> MonomialIdeal {
        let polytope = NewtonPolytope::new(self);
        let halfspaces = polytope.halfspaces();
        let small: Option<Vec<(Vec<i128>, i128)>> = halfspaces
            .iter()
            .map(|h| {
                let normal: Option<Vec<i128>> = h
                    .normal
                    .iter()
                    .map(|c| c.to_i64().map(i128::from))
                    .collect();
                Some((normal?, h.rhs.to_i64().map(i128::from)?))
            })
            .collect();
        let points = match small {
            Some(facets) => lattice_staircase(self, &facets),
            None => {
                let facets: Vec<(Vec<BigInt>, BigInt)> = halfspaces
                    .iter()
                    .map(|h| (h.normal.clone(), h.rhs.clone()))
                    .collect();
                lattice_staircase(self, &facets)
            }
        };
        minimalize(&points, self.n()).expect("closure contains the original generators")
    }

    /// `Some(q)` when the integral closure equals `(x_1, ..., x_n)^q`.
    pub fn is_power_of_maximal(&self) -> Option<u32> {
        let closure = self.integral_closure();
        let q = closure.generators().iter().map(Exponent::degree).min()?;
        let q = u32::try_from(q).ok()?;
        if q == 0 {
            return None;
        }
        (closure == MonomialIdeal::maximal_power(self.n(), q)).then_some(q)
    }

    /// Whether the ideal equals its integral closure.
    pub fn is_integrally_closed(&self) -> bool {
        self.integral_closure() == *self
    }
}

fn lattice_staircase<T>(ideal: &MonomialIdeal, facets: &[(Vec<T>, T)]) -> Vec<Exponent>
where
    T: Integer + Clone + From<u32> + ToPrimitive,
{
    let n = ideal.n();
    let mut upper = vec![0u32; n];
    for g in ideal.generators() {
        for (u, &a) in upper.iter_mut().zip(g.coords()) {
            *u = (*u).max(a);
        }
    }
    let bounds: Vec<u32> = upper[..n - 1].iter().map(|&m| m + 1).collect();
    let mut out = Vec::new();
    for_each_in_box(&bounds, |prefix| {
        let mut height = T::zero();
        for (normal, rhs) in facets {
            let partial = prefix
                .iter()
                .zip(normal)
                .fold(T::zero(), |acc, (&u, c)| acc + c.clone() * T::from(u));
            let last = &normal[n - 1];
            if last.is_zero() {
                if partial < *rhs {
                    return;
                }
            } else {
                let needed = (rhs.clone() - partial).div_ceil(last);
                if needed > height {
                    height = needed;
                }
            }
        }
        let mut coords = prefix.to_vec();
        coords.push(height.to_u32().expect("lattice height fits in u32"));
        out.push(Exponent::new(coords));
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(n, gens).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(
            ideal(2, &[&[4, 0], &[0, 4]]).integral_closure(),
            MonomialIdeal::maximal_power(2, 4)
        );
        let m3 = MonomialIdeal::maximal_power(3, 3);
        assert_eq!(m3.integral_closure(), m3);
        assert_eq!(
            ideal(2, &[&[6, 0], &[0, 2]]).integral_closure(),
            ideal(2, &[&[6, 0], &[3, 1], &[0, 2]])
        );
    }

    #[test]
    fn closure_of_non_zero_dimensional_ideals() {
        assert_eq!(
            ideal(2, &[&[6, 2], &[0, 4]]).integral_closure(),
            ideal(2, &[&[6, 2], &[3, 3], &[0, 4]])
        );
        let principal = ideal(2, &[&[2, 3]]);
        assert_eq!(principal.integral_closure(), principal);
        assert_eq!(ideal(1, &[&[5]]).integral_closure(), ideal(1, &[&[5]]));
    }

    #[test]
    fn powers_of_maximal_ideal() {
        assert_eq!(ideal(2, &[&[4, 0], &[0, 4]]).is_power_of_maximal(), Some(4));
        assert_eq!(ideal(2, &[&[6, 0], &[0, 2]]).is_power_of_maximal(), None);
        assert_eq!(MonomialIdeal::maximal(3).is_power_of_maximal(), Some(1));
        assert_eq!(MonomialIdeal::unit(2).is_power_of_maximal(), None);
        assert!(!ideal(2, &[&[2, 0], &[0, 2]]).is_integrally_closed());
    }
}
