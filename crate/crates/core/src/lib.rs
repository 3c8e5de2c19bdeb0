//! Exact invariants of monomial ideals.
//!
//! The crate computes, with exact rational arithmetic throughout:
//!
//! - minimal generators, products, powers, colength and integral closure of
//!   monomial ideals ([`algebra`]);
//! - the Newton polytope `P(J) = conv(J) + R_+^n`, its facets, the diagonal
//!   entry point `mu(J)` (so `lct(J) = 1/mu(J)`), and the covolume
//!   `n! * vol(R_+^n \ P(J))` ([`polytope`]);
//! - the Samuel multiplicity and checkers for the length, multiplicity and
//!   codimension-two inequalities relating them to `mu` ([`suite`]);
//! - Gröbner and tangent-cone degenerations of polynomial ideals, which
//!   reduce general ideals supported at the origin to the monomial case
//!   ([`degeneration`]).

pub mod algebra;
pub mod degeneration;
pub mod error;
pub mod polytope;
pub mod suite;

pub use algebra::{Exponent, GcdFactorization, MonomialIdeal, Rational};
pub use degeneration::{MonomialOrder, OrderKind, PolyIdeal, RationalPolynomial};
pub use error::{Error, Result};
pub use polytope::{FacetInequality, MuValue, NewtonPolytope};
pub use suite::{Codim2Report, ZeroDimReport};
