//! Fractions of polynomials over a field: Q(z) is `RatExpr<Rat>`, rational
//! functions in x over Q(z) are `RatExpr<RatFunc>`, and so on.
//!
//! Invariants: gcd(num, den) = 1, den monic and nonzero.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::field::Field;
use crate::poly::Poly;
use crate::types::Rat;

#[derive(Clone, PartialEq)]
pub struct RatExpr<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatExpr<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatExpr { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatExpr {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        RatExpr::from_poly(Poly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        RatExpr::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// The constant value, if this is one.
    pub fn as_constant(&self) -> Option<F> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g);
            self.den = self.den.exact_div(&g);
        }
        let lc_inv = self.den.lc().inv();
        if !self.den.lc().is_one() {
            self.num = self.num.scale(&lc_inv);
            self.den = self.den.scale(&lc_inv);
        }
    }

    /// Formal derivative with respect to the polynomial variable.
    pub fn derivative(&self) -> Self {
        let n = &self.num.derivative() * &self.den - &self.num * &self.den.derivative();
        let d = &self.den * &self.den;
        RatExpr::new(n, d)
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Substitute another rational expression for the variable.
    pub fn compose(&self, inner: &RatExpr<F>) -> RatExpr<F> {
        let n = self
            .num
            .eval_with(inner, |c| RatExpr::constant(c.clone()));
        let d = self
            .den
            .eval_with(inner, |c| RatExpr::constant(c.clone()));
        n / d
    }

    /// Order of vanishing at a finite point a (negative for a pole).
    pub fn order_at(&self, a: &F) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        fn root_mult<F: Field>(p: &Poly<F>, a: &F) -> i64 {
            let lin = Poly::new(vec![-a.clone(), F::one()]);
            let mut m = 0;
            let mut q = p.clone();
            loop {
                let (quot, rem) = q.div_rem(&lin);
                if rem.is_zero() {
                    m += 1;
                    q = quot;
                } else {
                    return m;
                }
            }
        }
        Some(root_mult(&self.num, a) - root_mult(&self.den, a))
    }

    /// Order of vanishing at infinity: deg den - deg num. None for zero.
    pub fn order_at_infinity(&self) -> Option<i64> {
        let n = self.num.degree()?;
        Some(self.den.deg() as i64 - n as i64)
    }

    pub fn to_string_var(&self, var: &str) -> String
    where
        F: fmt::Display,
    {
        if self.den.is_one() {
            self.num.to_string_var(var)
        } else {
            format!(
                "({})/({})",
                self.num.to_string_var(var),
                self.den.to_string_var(var)
            )
        }
    }
}

impl<F: Field> Zero for RatExpr<F> {
    fn zero() -> Self {
        RatExpr {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatExpr<F> {
    fn one() -> Self {
        RatExpr {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
}

impl<F: Field> Add for RatExpr<F> {
    type Output = RatExpr<F>;
    fn add(self, rhs: Self) -> Self {
        let n = &self.num * &rhs.den + &rhs.num * &self.den;
        let d = &self.den * &rhs.den;
        RatExpr::new(n, d)
    }
}

impl<F: Field> Sub for RatExpr<F> {
    type Output = RatExpr<F>;
    fn sub(self, rhs: Self) -> Self {
        let n = &self.num * &rhs.den - &rhs.num * &self.den;
        let d = &self.den * &rhs.den;
        RatExpr::new(n, d)
    }
}

impl<F: Field> Mul for RatExpr<F> {
    type Output = RatExpr<F>;
    fn mul(self, rhs: Self) -> Self {
        RatExpr::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<F: Field> Div for RatExpr<F> {
    type Output = RatExpr<F>;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        RatExpr::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<F: Field> Neg for RatExpr<F> {
    type Output = RatExpr<F>;
    fn neg(self) -> Self {
        RatExpr {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Field for RatExpr<F> {
    fn from_rat(q: &Rat) -> Self {
        RatExpr::constant(F::from_rat(q))
    }

    fn try_sqrt(c: &Self) -> Option<Self> {
        // num/den are coprime, den monic: a square has square num and den.
        let n = crate::factor::poly_sqrt(&c.num)?;
        let d = crate::factor::poly_sqrt(&c.den)?;
        Some(RatExpr::new(n, d))
    }

    fn d_z(&self) -> Self {
        if F::is_rat_base() {
            // this level of the tower is Q(z) itself
            self.derivative()
        } else {
            let dn = self.num.map_coeffs(|c| c.d_z());
            let dd = self.den.map_coeffs(|c| c.d_z());
            let num = &(&dn * &self.den) - &(&self.num * &dd);
            let den = &self.den * &self.den;
            RatExpr::new(num, den)
        }
    }

    fn is_rat_base() -> bool {
        false
    }
}

impl<F: Field + fmt::Display> fmt::Display for RatExpr<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl<F: Field> fmt::Debug for RatExpr<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatExpr({:?}/{:?})", self.num, self.den)
    }
}
