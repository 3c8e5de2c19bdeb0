//! Integer arithmetic with an overflow-checked `i128` fast path and a `BigInt` fallback.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) trait ExactInt: Clone + Eq + Ord + Debug {
    fn zero() -> Self;
    fn from_u32(v: u32) -> Self;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
    fn add_c(&self, other: &Self) -> Option<Self>;
    fn sub_c(&self, other: &Self) -> Option<Self>;
    fn mul_c(&self, other: &Self) -> Option<Self>;
    fn neg_c(&self) -> Option<Self>;
    /// Exact quotient, `other` must divide `self`.
    fn div_exact(&self, other: &Self) -> Self;
    fn gcd_with(&self, other: &Self) -> Self;
    fn is_zero_int(&self) -> bool {
        *self == Self::zero()
    }
    fn is_negative_int(&self) -> bool {
        *self < Self::zero()
    }
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn from_u32(v: u32) -> Self {
        v as i128
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        num_traits::ToPrimitive::to_i128(v)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add_c(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn sub_c(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn mul_c(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn neg_c(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_u32(v: u32) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn add_c(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub_c(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn mul_c(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn neg_c(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other).abs()
    }
}

/// Dot product with overflow detection.
pub(crate) fn dot<T: ExactInt>(a: &[T], b: &[T]) -> Option<T> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.add_c(&x.mul_c(y)?)?;
    }
    Some(acc)
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub(crate) fn determinant<T: ExactInt>(mut m: Vec<Vec<T>>) -> Option<T> {
    let k = m.len();
    if k == 0 {
        return Some(T::from_u32(1));
    }
    let mut sign_flip = false;
    let mut prev = T::from_u32(1);
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !m[r][col].is_zero_int()) else {
            return Some(T::zero());
        };
        if p != col {
            m.swap(p, col);
            sign_flip = !sign_flip;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                let lhs = m[r][c].mul_c(&m[col][col])?;
                let rhs = m[r][col].mul_c(&m[col][c])?;
                m[r][c] = lhs.sub_c(&rhs)?.div_exact(&prev);
            }
            m[r][col] = T::zero();
        }
        prev = m[col][col].clone();
    }
    let det = m[k - 1][k - 1].clone();
    if sign_flip {
        det.neg_c()
    } else {
        Some(det)
    }
}

/// Normal vector of the hyperplane spanned by `rows` (n-1 vectors in dimension n):
/// the generalized cross product, zero when the rows are dependent.
pub(crate) fn cross_product<T: ExactInt>(rows: &[Vec<T>], n: usize) -> Option<Vec<T>> {
    debug_assert_eq!(rows.len() + 1, n);
    let mut normal = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let d = determinant(minor)?;
        normal.push(if j % 2 == 1 { d.neg_c()? } else { d });
    }
    Some(normal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants_agree_across_backends() {
        let m: Vec<Vec<i128>> = vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]];
        let big: Vec<Vec<BigInt>> = m
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(determinant(m), Some(6));
        assert_eq!(determinant(big), Some(BigInt::from(6)));
        assert_eq!(determinant(vec![vec![0i128, 1], vec![1, 0]]), Some(-1));
        assert_eq!(determinant(vec![vec![1i128, 2], vec![2, 4]]), Some(0));
    }

    #[test]
    fn cross_product_is_orthogonal() {
        let rows: Vec<Vec<i128>> = vec![vec![1, 2, 3], vec![0, 1, 4]];
        let c = cross_product(&rows, 3).unwrap();
        for r in &rows {
            assert_eq!(dot(r, &c), Some(0));
        }
        assert_ne!(c, vec![0, 0, 0]);
    }

    #[test]
    fn overflow_is_reported() {
        let big = i128::MAX / 2;
        assert_eq!(dot(&[big, big], &[3, 3]), None);
    }
}
