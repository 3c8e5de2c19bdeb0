//! Buchberger's algorithm over the rationals, run fraction-free on primitive integer
//! polynomials.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::TermOrder;
use super::polynomial::RationalPolynomial;
use crate::algebra::{Exponent, Rational};
use crate::error::{Error, Result};

/// Caps the number of S-pairs Buchberger may process.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerBudget {
    pub max_pairs: usize,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget { max_pairs: 200_000 }
    }
}

type Term = (Exponent, BigInt);

/// Terms sorted decreasingly; primitive with positive leading coefficient.
#[derive(Clone, Debug)]
pub(crate) struct IntPoly {
    pub terms: Vec<Term>,
}

impl IntPoly {
    pub fn from_rational<O: TermOrder>(p: &RationalPolynomial, ord: &O) -> IntPoly {
        let lcm = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(e, c)| (e.clone(), c.numer() * (&lcm / c.denom())))
            .collect();
        terms.sort_by(|a, b| ord.compare(b.0.coords(), a.0.coords()));
        let mut poly = IntPoly { terms };
        poly.make_primitive();
        poly
    }

    pub fn to_rational(&self, n: usize) -> RationalPolynomial {
        RationalPolynomial::try_from_terms(
            n,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), Rational::from_integer(c.clone()))),
        )
        .expect("exponents have the ambient length")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Exponent {
        &self.terms[0].0
    }

    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

/// `a * f - b * x^shift * g`, both inputs sorted decreasingly.
fn combine<O: TermOrder>(
    f: &[Term],
    a: &BigInt,
    g: &[Term],
    shift: &Exponent,
    b: &BigInt,
    ord: &O,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |k: usize| g[k].0.add(shift);
    let mut next_g = if g.is_empty() { None } else { Some(shifted(0)) };
    while i < f.len() || next_g.is_some() {
        let take = match (&next_g, f.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(ge), Some((fe, _))) => ord.compare(fe.coords(), ge.coords()),
        };
        match take {
            Ordering::Greater => {
                out.push((f[i].0.clone(), a * &f[i].1));
                i += 1;
            }
            Ordering::Less => {
                let e = next_g.take().expect("present");
                out.push((e, -(b * &g[j].1)));
                j += 1;
                next_g = (j < g.len()).then(|| shifted(j));
            }
            Ordering::Equal => {
                let e = next_g.take().expect("present");
                let c = a * &f[i].1 - b * &g[j].1;
                if !c.is_zero() {
                    out.push((e, c));
                }
                i += 1;
                j += 1;
                next_g = (j < g.len()).then(|| shifted(j));
            }
        }
    }
    out
}

/// Fully reduces `f` modulo `basis`, returning a primitive remainder.
pub(crate) fn reduce<O: TermOrder>(mut f: IntPoly, basis: &[IntPoly], ord: &O) -> IntPoly {
    let mut i = 0;
    let mut steps = 0usize;
    while i < f.terms.len() {
        let e = &f.terms[i].0;
        let Some(g) = basis.iter().find(|g| !g.is_zero() && g.lead().divides(e)) else {
            i += 1;
            continue;
        };
        let shift = e.checked_sub(g.lead()).expect("divides");
        let lead_g = &g.terms[0].1;
        let coef = &f.terms[i].1;
        let common = lead_g.gcd(coef);
        let a = lead_g / &common;
        let b = coef / &common;
        f.terms = combine(&f.terms, &a, &g.terms, &shift, &b, ord);
        steps += 1;
        if steps.is_multiple_of(8) {
            f.make_primitive();
        }
    }
    f.make_primitive();
    f
}

fn s_polynomial<O: TermOrder>(f: &IntPoly, g: &IntPoly, ord: &O) -> IntPoly {
    let lcm = f.lead().join(g.lead());
    let sf = lcm.checked_sub(f.lead()).expect("divides lcm");
    let sg = lcm.checked_sub(g.lead()).expect("divides lcm");
    let cf = &f.terms[0].1;
    let cg = &g.terms[0].1;
    let common = cf.gcd(cg);
    let a = cg / &common;
    let b = cf / &common;
    // a * x^sf * f - b * x^sg * g
    let shifted_f: Vec<Term> = f.terms.iter().map(|(e, c)| (e.add(&sf), c.clone())).collect();
    let mut s = IntPoly {
        terms: combine(&shifted_f, &a, &g.terms, &sg, &b, ord),
    };
    s.make_primitive();
    s
}

/// Reduced Gröbner basis of the ideal generated by `generators` (all in `n` variables).
pub(crate) fn groebner_basis<O: TermOrder>(
    generators: &[RationalPolynomial],
    ord: &O,
    budget: GroebnerBudget,
) -> Result<Vec<IntPoly>> {
    let mut basis: Vec<IntPoly> = Vec::new();
    for g in generators {
        let p = IntPoly::from_rational(g, ord);
        let r = reduce(p, &basis, ord);
        if !r.is_zero() {
            basis.push(r);
        }
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let mut processed = 0usize;
    while let Some(&(i, j)) = pending.iter().min_by(|&&p, &&q| {
        let lp = basis[p.0].lead().join(basis[p.1].lead());
        let lq = basis[q.0].lead().join(basis[q.1].lead());
        lp.degree()
            .cmp(&lq.degree())
            .then_with(|| ord.compare(lp.coords(), lq.coords()))
    }) {
        pending.remove(&(i, j));
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::Resource(format!(
                "Buchberger exceeded the budget of {} S-pairs",
                budget.max_pairs
            )));
        }
        let (li, lj) = (basis[i].lead(), basis[j].lead());
        let lcm = li.join(lj);
        if lcm == li.add(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = reduce(s, &basis, ord);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            for l in 0..k {
                pending.insert((l, k));
            }
        }
    }
    Ok(interreduce(basis, ord))
}

fn interreduce<O: TermOrder>(basis: Vec<IntPoly>, ord: &O) -> Vec<IntPoly> {
    let mut minimal: Vec<IntPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && h.lead().divides(g.lead()) && (h.lead() != g.lead() || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<IntPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(reduce(minimal[idx].clone(), &others, ord));
    }
    reduced.sort_by(|a, b| ord.compare(a.lead().coords(), b.lead().coords()));
    reduced
}
