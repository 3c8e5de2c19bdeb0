use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A total, multiplicative order on exponent vectors.
pub trait TermOrder: Sync {
    fn compare(&self, a: &[u32], b: &[u32]) -> Ordering;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Weighted degree, ties broken by grevlex.
    Weighted,
}

/// Global monomial order (`1` is the smallest monomial).
///
/// `priority[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    weights: Option<Vec<u32>>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>, weights: Option<Vec<u32>>) -> Result<Self> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &p in &priority {
            if p >= n || seen[p] {
                return Err(Error::Format(format!("{priority:?} is not a permutation")));
            }
            seen[p] = true;
        }
        match (kind, &weights) {
            (OrderKind::Weighted, Some(w)) if w.len() == n && w.iter().all(|&x| x > 0) => {}
            (OrderKind::Weighted, _) => {
                return Err(Error::Format("weighted order needs n positive weights".into()))
            }
            (_, None) => {}
            (_, Some(_)) => return Err(Error::Format("weights only apply to weighted orders".into())),
        }
        Ok(MonomialOrder {
            kind,
            priority,
            weights,
        })
    }

    pub fn lex(priority: Vec<usize>) -> Result<Self> {
        Self::new(OrderKind::Lex, priority, None)
    }

    pub fn grevlex(priority: Vec<usize>) -> Result<Self> {
        Self::new(OrderKind::Grevlex, priority, None)
    }

    pub fn weighted(weights: Vec<u32>, priority: Vec<usize>) -> Result<Self> {
        Self::new(OrderKind::Weighted, priority, Some(weights))
    }

    /// Variables ranked `x_n > x_{n-1} > ... > x_1`.
    pub fn reversed_priority(n: usize) -> Vec<usize> {
        (0..n).rev().collect()
    }

    /// Grevlex with `x_n > ... > x_1`; in two variables this is the `x_1 < x_2` convention
    /// used for the codimension-two workflows.
    pub fn default_for(n: usize) -> Self {
        Self::grevlex(Self::reversed_priority(n)).expect("valid permutation")
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn n(&self) -> usize {
        self.priority.len()
    }

    fn revlex_tail(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &i in self.priority.iter().rev() {
            if a[i] != b[i] {
                // smaller exponent in the least significant variable means larger monomial
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }

    pub fn describe(&self) -> String {
        let vars: Vec<String> = self.priority.iter().map(|i| format!("x{}", i + 1)).collect();
        let kind = match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::Grevlex => "grevlex",
            OrderKind::Weighted => "weighted",
        };
        format!("{kind}({})", vars.join(">"))
    }
}

impl TermOrder for MonomialOrder {
    fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| self.revlex_tail(a, b))
            }
            OrderKind::Weighted => {
                let w = self.weights.as_ref().expect("validated");
                let wa: u64 = a.iter().zip(w).map(|(&x, &y)| x as u64 * y as u64).sum();
                let wb: u64 = b.iter().zip(w).map(|(&x, &y)| x as u64 * y as u64).sum();
                wa.cmp(&wb).then_with(|| self.revlex_tail(a, b))
            }
        }
    }
}

/// Order on `K[x_1, ..., x_n, t]` (with `t` last) used for homogenized standard bases:
/// total degree first, then the larger power of `t`, then `inner` on the `x` part.
///
/// On homogeneous elements its leading term dehomogenizes to the leading term of the
/// lowest-degree form under `inner`.
pub(crate) struct HomogenizedLocal<'a> {
    pub inner: &'a MonomialOrder,
}

impl TermOrder for HomogenizedLocal<'_> {
    fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        let n = a.len() - 1;
        let da: u64 = a.iter().map(|&x| x as u64).sum();
        let db: u64 = b.iter().map(|&x| x as u64).sum();
        da.cmp(&db)
            .then_with(|| a[n].cmp(&b[n]))
            .then_with(|| self.inner.compare(&a[..n], &b[..n]))
    }
}
