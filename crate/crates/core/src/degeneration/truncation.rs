//! Finite linear algebra in `R / M^N`: Macaulay matrices of an ideal truncated at
//! degree `N`, row-reduced with the columns ranked by a monomial order.
//!
//! With the columns ranked by degree first (low degrees most significant) and then by
//! a global order, the pivot columns are exactly the monomials of degree `< N` in the
//! initial ideal of the tangent cone, independently of `N`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::TermOrder;
use super::{MonomialOrder, PolyIdeal};
use crate::algebra::{monomials_of_degree, Exponent, MonomialIdeal};
use crate::error::{Error, Result};

/// How the columns of the truncated Macaulay matrix are ranked.
#[derive(Clone, Copy)]
pub(crate) enum ColumnRanking<'a> {
    /// Lowest degree first, then `ord` decreasing: pivots are the tangent-cone initial ideal.
    Local(&'a MonomialOrder),
    /// `ord` decreasing: pivots are the global initial ideal once `M^N` lies in the ideal.
    Global(&'a MonomialOrder),
}

type SparseRow = Vec<(usize, BigInt)>;

fn primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a * r - b * p`, sparse rows sorted by column.
fn combine(r: &SparseRow, a: &BigInt, p: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        match (r.get(i), p.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                let v = a * vi - b * vj;
                if !v.is_zero() {
                    out.push((*ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                out.push((*ci, a * vi));
                i += 1;
            }
            (Some((ci, vi)), None) => {
                out.push((*ci, a * vi));
                i += 1;
            }
            (_, Some((cj, vj))) => {
                out.push((*cj, -(b * vj)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Pivot monomials of the Macaulay matrix of `ideal` truncated below degree `level`.
pub(crate) fn truncated_pivots(ideal: &PolyIdeal, level: u32, ranking: ColumnRanking<'_>) -> Vec<Exponent> {
    let n = ideal.n();
    let mut columns = monomials_below(n, level);
    match ranking {
        ColumnRanking::Local(ord) => columns.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| ord.compare(b.coords(), a.coords()))
        }),
        ColumnRanking::Global(ord) => columns.sort_by(|a, b| ord.compare(b.coords(), a.coords())),
    }
    let index: HashMap<Exponent, usize> = columns
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let mut pivots: Vec<Option<SparseRow>> = vec![None; columns.len()];

    for g in ideal.generators() {
        let lcm = g.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms: Vec<(Exponent, BigInt)> = g
            .terms()
            .map(|(e, c)| (e.clone(), c.numer() * (&lcm / c.denom())))
            .collect();
        let low = g.order().unwrap_or(0) as u32;
        if low >= level {
            continue;
        }
        for multiplier in monomials_below(n, level - low) {
            let mut row: SparseRow = terms
                .iter()
                .filter_map(|(e, c)| {
                    let m = e.add(&multiplier);
                    index.get(&m).map(|&col| (col, c.clone()))
                })
                .collect();
            row.sort_by_key(|(col, _)| *col);
            insert_row(&mut pivots, row);
        }
    }
    pivots
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_some())
        .map(|(i, _)| columns[i].clone())
        .collect()
}

fn insert_row(pivots: &mut [Option<SparseRow>], mut row: SparseRow) {
    while let Some(&(lead, _)) = row.first() {
        match &pivots[lead] {
            Some(p) => {
                let pl = &p[0].1;
                let rl = &row[0].1;
                let common = pl.gcd(rl);
                let a = pl / &common;
                let b = rl / &common;
                row = combine(&row, &a, p, &b);
                primitive(&mut row);
            }
            None => {
                primitive(&mut row);
                if row[0].1.is_negative() {
                    row.iter_mut().for_each(|(_, c)| *c = -c.clone());
                }
                pivots[lead] = Some(row);
                return;
            }
        }
    }
}

/// Result of the local truncation analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalTruncation {
    /// Smallest `d` with `M^d` contained in the ideal localized at the origin.
    pub certified_degree: u32,
    /// `dim_K R_M / I R_M`.
    pub length: u64,
    /// Truncation level that produced the certificate.
    pub level: u32,
    /// Initial ideal of the tangent cone under the supplied order.
    pub tangent_cone_initial: MonomialIdeal,
}

/// Certifies `M^d ⊆ I R_M` by finding a degree with no standard monomials in the
/// tangent-cone initial ideal, raising the truncation level up to `max_level`.
pub fn local_truncation(ideal: &PolyIdeal, ord: &MonomialOrder, max_level: u32) -> Result<LocalTruncation> {
    let n = ideal.n();
    let start = ideal
        .generators()
        .iter()
        .filter_map(|g| g.order())
        .max()
        .unwrap_or(0) as u32
        + 2;
    let mut level = start.clamp(2, max_level.max(2));
    loop {
        let pivots = truncated_pivots(ideal, level, ColumnRanking::Local(ord));
        let mut per_degree = vec![0u64; level as usize];
        for p in &pivots {
            per_degree[p.degree() as usize] += 1;
        }
        let mut length = 0u64;
        for d in 0..level {
            let standard = binomial(n as u64 + d as u64 - 1, d as u64) - per_degree[d as usize];
            if standard == 0 {
                let mut gens: Vec<Exponent> =
                    pivots.into_iter().filter(|p| (p.degree() as u32) < d).collect();
                gens.extend(monomials_of_degree(n, d));
                return Ok(LocalTruncation {
                    certified_degree: d,
                    length,
                    level,
                    tangent_cone_initial: MonomialIdeal::new(n, gens)?,
                });
            }
            length += standard;
        }
        if level >= max_level {
            return Err(Error::NotZeroDimensional(format!(
                "no power of the maximal ideal certified below degree {max_level}"
            )));
        }
        level = (level + (level / 2).max(1)).min(max_level);
    }
}

/// Global initial ideal by truncated linear algebra; requires `V(I) = {0}` so that the
/// local certificate `M^d ⊆ I R_M` upgrades to `M^d ⊆ I`.
pub fn truncated_initial_ideal(ideal: &PolyIdeal, ord: &MonomialOrder, max_level: u32) -> Result<MonomialIdeal> {
    let local = local_truncation(ideal, ord, max_level)?;
    let d = local.certified_degree;
    let n = ideal.n();
    let mut gens = if d == 0 {
        Vec::new()
    } else {
        truncated_pivots(ideal, d, ColumnRanking::Global(ord))
    };
    gens.extend(monomials_of_degree(n, d));
    MonomialIdeal::new(n, gens)
}

fn monomials_below(n: usize, level: u32) -> Vec<Exponent> {
    (0..level).flat_map(|d| monomials_of_degree(n, d)).collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k == 0 {
        return 1;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
