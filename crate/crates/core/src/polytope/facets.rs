//! Exact facet enumeration for small full-dimensional polyhedra
//! `conv(points) + cone(directions)`.
//!
//! Every facet is spanned by `k >= 1` affinely independent points together with
//! `n - k` recession directions, so testing all such subsets and keeping the
//! supporting hyperplanes yields the complete inequality description.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::exact_int::{cross_product, dot, ExactInt};

/// `normal . u >= rhs` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Halfspace {
    pub normal: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Halfspace {
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        self.normal.iter().zip(point).map(|(c, u)| c * u).sum()
    }
}

/// Facets of `conv(points) + cone(directions)` in dimension `n`.
///
/// The polyhedron must be full-dimensional. Directions are unit vectors given by
/// coordinate index.
pub(crate) fn enumerate_facets(points: &[Vec<BigInt>], directions: &[usize], n: usize) -> Vec<Halfspace> {
    let small: Option<Vec<Vec<i128>>> = points
        .iter()
        .map(|p| p.iter().map(i128::from_bigint).collect())
        .collect();
    if let Some(small) = small {
        if let Some(found) = enumerate_with::<i128>(&small, directions, n) {
            return found;
        }
    }
    enumerate_with::<BigInt>(points, directions, n).expect("BigInt arithmetic does not overflow")
}

fn enumerate_with<T: ExactInt>(points: &[Vec<T>], directions: &[usize], n: usize) -> Option<Vec<Halfspace>> {
    let mut found: BTreeSet<Halfspace> = BTreeSet::new();
    if n == 0 || points.is_empty() {
        return Some(Vec::new());
    }
    let unit = |j: usize| -> Vec<T> {
        (0..n)
            .map(|i| if i == j { T::from_u32(1) } else { T::zero() })
            .collect()
    };
    let max_points = points.len().min(n);
    for k in 1..=max_points {
        if n - k > directions.len() {
            continue;
        }
        for point_set in combinations(points.len(), k) {
            for dir_set in combinations(directions.len(), n - k) {
                let base = &points[point_set[0]];
                let mut rows: Vec<Vec<T>> = Vec::with_capacity(n - 1);
                for &p in &point_set[1..] {
                    let diff: Option<Vec<T>> = points[p]
                        .iter()
                        .zip(base)
                        .map(|(a, b)| a.sub_c(b))
                        .collect();
                    rows.push(diff?);
                }
                for &d in &dir_set {
                    rows.push(unit(directions[d]));
                }
                let normal = cross_product(&rows, n)?;
                if normal.iter().all(ExactInt::is_zero_int) {
                    continue;
                }
                if let Some(h) = supporting(points, directions, base, normal)? {
                    found.insert(h);
                }
            }
        }
    }
    Some(found.into_iter().collect())
}

/// Orients `normal` so every point and direction lies on the nonnegative side of the
/// hyperplane through `base`; `None` inside the option when the hyperplane cuts through.
fn supporting<T: ExactInt>(
    points: &[Vec<T>],
    directions: &[usize],
    base: &[T],
    normal: Vec<T>,
) -> Option<Option<Halfspace>> {
    let level = dot(&normal, base)?;
    let (mut pos, mut neg) = (false, false);
    for p in points {
        let v = dot(&normal, p)?.sub_c(&level)?;
        if v.is_negative_int() {
            neg = true;
        } else if !v.is_zero_int() {
            pos = true;
        }
    }
    for &d in directions {
        let v = &normal[d];
        if v.is_negative_int() {
            neg = true;
        } else if !v.is_zero_int() {
            pos = true;
        }
    }
    if pos && neg {
        return Some(None);
    }
    let flip = neg;
    let mut g = T::zero();
    for c in &normal {
        g = g.gcd_with(c);
    }
    let mut normal: Vec<BigInt> = normal.iter().map(|c| c.div_exact(&g).to_bigint()).collect();
    let mut rhs = level.to_bigint() / g.to_bigint();
    if flip {
        normal.iter_mut().for_each(|c| *c = -c.clone());
        rhs = -rhs;
    }
    Some(Some(Halfspace { normal, rhs }))
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub(crate) fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn hs(normal: &[i64], rhs: i64) -> Halfspace {
        Halfspace {
            normal: normal.iter().map(|&x| BigInt::from(x)).collect(),
            rhs: BigInt::from(rhs),
        }
    }

    #[test]
    fn combinations_enumerate_subsets() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).len(), 0);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn unbounded_newton_polygon() {
        let f = enumerate_facets(&pts(&[&[6, 0], &[0, 2]]), &[0, 1], 2);
        assert_eq!(f, vec![hs(&[0, 1], 0), hs(&[1, 0], 0), hs(&[1, 3], 6)]);
    }

    #[test]
    fn bounded_triangle() {
        let f = enumerate_facets(&pts(&[&[0, 0], &[2, 0], &[0, 2]]), &[], 2);
        assert_eq!(f.len(), 3);
        assert!(f.contains(&hs(&[-1, -1], -2)));
    }

    #[test]
    fn interval_in_one_dimension() {
        let f = enumerate_facets(&pts(&[&[1], &[4], &[2]]), &[], 1);
        assert_eq!(f, vec![hs(&[-1], -4), hs(&[1], 1)]);
    }
}
