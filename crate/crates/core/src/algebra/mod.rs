//! Exact arithmetic: rationals, small number fields, univariate and sparse
//! bivariate polynomials, bihomogeneous/homogeneous forms and resultants.

mod field;
mod forms;
pub mod linalg;
mod parse;
mod poly2;
pub mod qpoly;
mod resultant;
mod upoly;

pub use field::{Fe, Field, NumberField};
pub use forms::{Base, BiForm, Form, ProjForm};
pub use parse::{parse_and_homogenize, parse_expr, ParseError};
pub use poly2::Poly2;
pub use resultant::{resultant, resultant_y, Var};
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("minimal polynomial is reducible: {0}")]
    ReduciblePolynomial(String),
    #[error("unsupported field degree {0} (must be 1..=4)")]
    UnsupportedDegree(usize),
    #[error("minimal polynomial must be monic")]
    NotMonic,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial passed where a nonzero one is required")]
    ZeroInput,
    #[error("monomial of degree {found} exceeds declared degree {declared}")]
    DegreeOverflow { found: String, declared: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Result of [`squarefree_and_gcd`].
#[derive(Debug, Clone, PartialEq)]
pub struct SquarefreeReport {
    pub gcd: Option<Poly2>,
    pub is_squarefree: bool,
}

/// gcd of `p` and `q` (when given) plus a squarefree test of `p` in the
/// affine chart it is written in.
///
/// Squarefreeness is tested through univariate specialisations: `p` is
/// squarefree iff it has no repeated factor, which is detected by
/// `gcd(p, ∂p/∂x, ∂p/∂y)` being constant. Bivariate gcds are computed via
/// [`Poly2::gcd`].
pub fn squarefree_and_gcd(p: &Poly2, q: Option<&Poly2>) -> SquarefreeReport {
    let gcd = q.map(|q| p.gcd(q));
    let g = p.gcd(&p.deriv_x()).gcd(&p.deriv_y());
    SquarefreeReport { gcd, is_squarefree: !p.is_zero() && g.total_degree() == Some(0) }
}
