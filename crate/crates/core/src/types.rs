//! Shared type aliases for the field tower Q ⊂ Q(z) ⊂ Q(z)(x).

use crate::poly::Poly;
use crate::ratexpr::RatExpr;

/// Arbitrary-precision rational; always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

/// Univariate polynomial over Q (in z, x, or a formal variable).
pub type UPoly = Poly<Rat>;

/// Element of Q(z).
pub type RatFunc = RatExpr<Rat>;

/// Polynomial in x over Q(z).
pub type XPoly = Poly<RatFunc>;

/// Rational function in x over Q(z).
pub type XRat = RatExpr<RatFunc>;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// The generator z of Q(z).
pub fn zvar() -> RatFunc {
    RatFunc::var()
}

/// Embed a rational constant into Q(z).
pub fn rf_const(n: i64, d: i64) -> RatFunc {
    RatFunc::constant(rat(n, d))
}

/// Embed a z-polynomial into Q(z).
pub fn rf_poly(p: UPoly) -> RatFunc {
    RatFunc::from_poly(p)
}
