//! Exact volumes by recursive pyramid decomposition over facets.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::facets::{enumerate_facets, Halfspace};
use crate::algebra::Rational;

/// Euclidean volume of `conv(points)`, which must be full-dimensional in `R^d`
/// (`d` = length of the points; `d = 0` gives 1).
///
/// Cones from the first point over every facet not containing it. A facet
/// `c.u >= r` is measured through its projection along a coordinate `j` with
/// `c_j != 0`, which keeps everything rational:
/// `vol(conv(p, F)) = |c.p - r| / (d |c_j|) * vol_{d-1}(proj_j F)`.
pub(crate) fn polytope_volume(points: &[Vec<BigInt>]) -> Rational {
    let d = points.first().map_or(0, Vec::len);
    if d == 0 {
        return Rational::from_integer(1.into());
    }
    if d == 1 {
        let lo = points.iter().map(|p| &p[0]).min().expect("nonempty");
        let hi = points.iter().map(|p| &p[0]).max().expect("nonempty");
        return Rational::from_integer(hi - lo);
    }
    let apex = &points[0];
    let mut total = Rational::zero();
    for facet in enumerate_facets(points, &[], d) {
        let height = facet.eval(apex) - &facet.rhs;
        if height.is_zero() {
            continue;
        }
        total += pyramid(points, &facet, height.abs(), d);
    }
    total
}

/// `vol(conv(apex, F))` for the facet `F` of the point set, given `|c.apex - r|`.
pub(crate) fn pyramid(points: &[Vec<BigInt>], facet: &Halfspace, height: BigInt, d: usize) -> Rational {
    let j = facet
        .normal
        .iter()
        .position(|c| !c.is_zero())
        .expect("facet normal is nonzero");
    let mut projected: Vec<Vec<BigInt>> = points
        .iter()
        .filter(|p| facet.eval(p) == facet.rhs)
        .map(|p| {
            p.iter()
                .enumerate()
                .filter(|(i, _)| *i != j)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect();
    projected.sort();
    projected.dedup();
    let base = polytope_volume(&projected);
    base * Rational::new(height, BigInt::from(d) * facet.normal[j].abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn pts(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn simplices_and_boxes() {
        assert_eq!(polytope_volume(&pts(&[&[0, 0], &[6, 0], &[0, 2]])), int(6));
        assert_eq!(
            polytope_volume(&pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
            rat(1, 6)
        );
        let cube = pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        assert_eq!(polytope_volume(&cube), int(1));
    }

    #[test]
    fn interior_points_do_not_change_volume() {
        let square = pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[1, 0]]);
        assert_eq!(polytope_volume(&square), int(4));
    }

    #[test]
    fn four_dimensional_simplex() {
        let s = pts(&[
            &[0, 0, 0, 0],
            &[2, 0, 0, 0],
            &[0, 3, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 4],
        ]);
        assert_eq!(polytope_volume(&s), int(1));
    }
}
