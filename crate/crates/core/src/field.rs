//! Minimal field abstraction so polynomial and fraction machinery can be
//! instantiated over Q, Q(z), Q(z)(x), ...

use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::types::Rat;

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::one() / self.clone()
    }

    /// Embedding of Q, available in every coefficient field we use.
    fn from_rat(q: &Rat) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(n.into()))
    }

    /// Exact square root within the field, when one exists.
    fn try_sqrt(c: &Self) -> Option<Self>;

    /// Derivative with respect to z. The first level of the rational-function
    /// tower is always Q(z), so `RatExpr<Rat>` differentiates formally and
    /// deeper levels differentiate coefficient-wise.
    fn d_z(&self) -> Self;

    /// True exactly for Q, the base of the tower.
    fn is_rat_base() -> bool {
        false
    }
}

impl Field for Rat {
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }

    fn try_sqrt(c: &Self) -> Option<Self> {
        crate::factor::rat_sqrt(c)
    }

    fn d_z(&self) -> Self {
        Rat::zero()
    }

    fn is_rat_base() -> bool {
        true
    }
}
