//! Dense two-phase simplex over exact rationals with Bland's anti-cycling rule.
//!
//! Solves `minimize c.x subject to A x = b, x >= 0`. Sizes here are tiny, so the
//! reduced costs are recomputed from scratch at every pivot.

use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, x: Vec<Rational> },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v /= &p;
        }
        self.rhs[row] /= &p;
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for c in 0..self.rows[r].len() {
                if !self.rows[row][c].is_zero() {
                    let delta = &factor * &self.rows[row][c];
                    self.rows[r][c] -= delta;
                }
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[r] -= delta;
        }
        self.basis[row] = col;
    }

    /// Runs the simplex on `cost` restricted to columns `< active`. Returns false when unbounded.
    fn optimize(&mut self, cost: &[Rational], active: usize) -> bool {
        loop {
            let entering = (0..active).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    reduced -= &cost[b] * &self.rows[r][j];
                }
                reduced.is_negative()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if a.is_positive() {
                    let ratio = &self.rhs[r] / a;
                    let better = match &best {
                        None => true,
                        Some((br, bv)) => {
                            ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br])
                        }
                    };
                    if better {
                        best = Some((r, ratio));
                    }
                }
            }
            let Some((row, _)) = best else {
                return false;
            };
            self.pivot(row, col);
        }
    }
}

pub fn minimize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut full: Vec<Rational> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        full.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        rows.push(full);
        rhs.push(if flip { -b[i].clone() } else { b[i].clone() });
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: (n..n + m).collect(),
    };

    let phase1: Vec<Rational> = (0..n + m)
        .map(|j| if j >= n { Rational::one() } else { Rational::zero() })
        .collect();
    t.optimize(&phase1, n + m);
    let infeasibility: Rational = t
        .basis
        .iter()
        .zip(&t.rhs)
        .filter(|(&bv, _)| bv >= n)
        .map(|(_, v)| v.clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }

    // drive artificials out of the basis; rows where that fails are redundant
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, col);
                r += 1;
            } else {
                t.rows.remove(r);
                t.rhs.remove(r);
                t.basis.remove(r);
            }
        } else {
            r += 1;
        }
    }

    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| Rational::zero()));
    if !t.optimize(&cost, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.rhs[r].clone();
        }
    }
    let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { value, x }
}
