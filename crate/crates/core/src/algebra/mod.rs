//! Exponent vectors, monomial ideals and their combinatorial algebra.

mod closure;
mod exponent;
mod ideal;
mod rational;

pub use exponent::Exponent;
pub use ideal::{minimalize, GcdFactorization, MonomialIdeal};
pub use rational::{factorial, format_rational, int, parse_rational, rat, Rational};

/// Calls `visit` on every integer point of the box `[0, bounds[0]) x ... x [0, bounds[k-1])`
/// in lexicographic order. An empty `bounds` visits the single empty point.
pub(crate) fn for_each_in_box(bounds: &[u32], mut visit: impl FnMut(&[u32])) {
    if bounds.contains(&0) {
        return;
    }
    let mut point = vec![0u32; bounds.len()];
    loop {
        visit(&point);
        let mut i = bounds.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            point[i] += 1;
            if point[i] < bounds[i] {
                break;
            }
            point[i] = 0;
        }
    }
}

/// All exponent vectors of total degree `degree` in `n` variables, in lexicographic order.
pub(crate) fn monomials_of_degree(n: usize, degree: u32) -> Vec<Exponent> {
    fn fill(prefix: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<Exponent>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(Exponent::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=remaining {
            prefix.push(a);
            fill(prefix, remaining - a, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if degree == 0 {
            out.push(Exponent::new(Vec::new()));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(n), degree, n, &mut out);
    out.sort();
    out
}
