//! Exact-arithmetic classification of first-order algebraic ODEs
//! f(y', y, z) = 0 over Q(z): genus, Painlevé property, semi-autonomy,
//! strict equivalence of hyperelliptic equations, and algebraic solutions
//! of autonomous equations.

pub mod error;
pub mod field;
pub mod poly;
pub mod ratexpr;
pub mod types;

pub mod factor;
pub mod hermite;
pub mod linalg;
pub mod roots;

pub mod bipoly;
pub mod eq;

pub mod local;
pub mod moebius;

pub mod curve;
pub mod series;
pub mod pairs;
pub mod equivalence;
pub mod painleve;

pub use error::{Error, Result};
pub use types::{Rat, RatFunc, UPoly, XPoly, XRat};
