//! Exact arithmetic over the rationals: polynomials, rational functions,
//! truncated power series, characteristic polynomials and square-free
//! decomposition.

mod charpoly;
mod poly;
mod ratfun;
mod series;
mod squarefree;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub use charpoly::{char_poly, sum_adjugate_ratio};
pub use poly::{PolyDisplay, Polynomial, PolynomialJson};
pub use ratfun::{ratfun_arith, ArithOp, RatFunDisplay, RationalFunction, RationalFunctionJson};
pub use series::PowerSeries;
pub use squarefree::{squarefree_decomposition, SquarefreeDecomposition};

/// `p(a*x + b)`.
pub fn poly_affine_substitute(p: &Polynomial, a: &Rational, b: &Rational) -> Polynomial {
    p.affine_substitute(a, b)
}

/// `p(r)` as a canonical rational function.
pub fn compose_poly_ratfun(p: &Polynomial, r: &RationalFunction) -> RationalFunction {
    RationalFunction::compose_poly(p, r)
}

/// Taylor coefficients of `r` at the origin up to `t^order`.
pub fn series_expand(r: &RationalFunction, order: usize) -> crate::Result<PowerSeries> {
    PowerSeries::expand(r, order)
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
