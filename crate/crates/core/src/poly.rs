//! Dense univariate polynomials over an arbitrary field.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and `degree()` returns `None` for it
//! (the spec's "minus infinity" marker).

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use crate::field::Field;
use crate::types::Rat;

#[derive(Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    /// c * X^k
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::new(vec![]);
        }
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Poly { coeffs: v }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&n| F::from_i64(n)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of X^k (zero if beyond the stored degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree as length - 1, panicking on zero. Use when zero is excluded.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate with the coefficients lifted into another field.
    pub fn eval_with<T: Field>(&self, x: &T, lift: impl Fn(&F) -> T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + lift(c);
        }
        acc
    }

    pub fn map_coeffs<T: Field>(&self, f: impl Fn(&F) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::new(vec![]);
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            v.push(c.clone() * F::from_i64(i as i64));
        }
        Poly::new(v)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero(); k];
        v.extend_from_slice(&self.coeffs);
        Poly { coeffs: v }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::constant(F::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let lc_inv = d.lc().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (Poly::new(vec![]), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].clone() * lc_inv.clone();
            quot[i - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = rem[i - dd + j].clone() - q.clone() * dc.clone();
                rem[i - dd + j] = t;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic greatest common divisor; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) monic with s*self + t*other = g.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::constant(F::one());
        let mut s1 = Poly::new(vec![]);
        let mut t0 = Poly::new(vec![]);
        let mut t1 = Poly::constant(F::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Classical resultant with the `det(Sylvester)` sign convention:
    /// `a`'s coefficients occupy the top rows.
    pub fn resultant(&self, other: &Self) -> F {
        let a = self;
        let b = other;
        match (a.degree(), b.degree()) {
            (None, _) | (_, None) => return F::zero(),
            (Some(0), Some(0)) => return F::one(),
            _ => {}
        }
        fn go<F: Field>(a: &Poly<F>, b: &Poly<F>) -> F {
            let m = a.deg();
            let n = b.deg();
            if n == 0 {
                return b.lc().pow_usize(m);
            }
            let sign = if (m * n) % 2 == 1 {
                -F::one()
            } else {
                F::one()
            };
            if m < n {
                return sign * go(b, a);
            }
            let r = a.div_rem(b).1;
            match r.degree() {
                None => F::zero(),
                Some(rd) => sign * b.lc().pow_usize(m - rd) * go(b, &r),
            }
        }
        go(a, b)
    }

    /// Squarefree decomposition: list of (factor, multiplicity) with factors
    /// monic, squarefree and pairwise coprime. Constant input gives [].
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        if self.is_constant() {
            return vec![];
        }
        let f = self.monic();
        let mut result = vec![];
        let mut g = f.gcd(&f.derivative());
        let mut w = f.exact_div(&g);
        let mut i = 1usize;
        while !w.is_constant() {
            let y = w.gcd(&g);
            let fac = w.exact_div(&y);
            if !fac.is_constant() {
                result.push((fac, i));
            }
            g = g.exact_div(&y);
            w = y;
            i += 1;
        }
        result
    }

    /// Monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return Poly::constant(F::one());
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.is_constant() || self.gcd(&self.derivative()).is_constant()
    }

    pub fn to_string_var(&self, var: &str) -> String
    where
        F: fmt::Display,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = vec![];
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let body = if i == 0 {
                cs
            } else {
                let xs = if i == 1 {
                    var.to_string()
                } else {
                    format!("{}^{}", var, i)
                };
                if cs == "1" {
                    xs
                } else if cs == "-1" {
                    format!("-{}", xs)
                } else {
                    format!("{}*{}", cs, xs)
                }
            };
            parts.push(body);
        }
        let mut out = String::new();
        for (k, p) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

/// Helper used by resultant: field exponentiation by usize.
trait PowUsize {
    fn pow_usize(&self, e: usize) -> Self;
}

impl<F: Field> PowUsize for F {
    fn pow_usize(&self, mut e: usize) -> F {
        let mut base = self.clone();
        let mut acc = F::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base.clone();
            }
        }
        acc
    }
}

impl<F: Field> Zero for Poly<F> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> One for Poly<F> {
    fn one() -> Self {
        Poly::constant(F::one())
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        &self + &rhs
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            v.push(a + b);
        }
        Poly::new(v)
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        &self - &rhs
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            v.push(a - b);
        }
        Poly::new(v)
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        &self * &rhs
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::new(vec![]);
        }
        let mut v = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = v[i + j].clone() + a.clone() * b.clone();
                v[i + j] = t;
            }
        }
        Poly::new(v)
    }
}

impl<F: Field> Div for Poly<F> {
    type Output = Poly<F>;
    fn div(self, rhs: Self) -> Poly<F> {
        self.div_rem(&rhs).0
    }
}

impl<F: Field> Rem for Poly<F> {
    type Output = Poly<F>;
    fn rem(self, rhs: Self) -> Poly<F> {
        self.div_rem(&rhs).1
    }
}

impl<F: Field + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// Convenience constructor for rational-coefficient polynomials in tests and
/// fixtures: coefficients lowest first.
pub fn upoly(cs: &[i64]) -> Poly<Rat> {
    Poly::from_i64s(cs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::UPoly;

    #[test]
    fn gcd_fixtures() {
        // (z^2 - 1, z - 1) -> z - 1
        let a = upoly(&[-1, 0, 1]);
        let b = upoly(&[-1, 1]);
        assert_eq!(a.gcd(&b), upoly(&[-1, 1]));
        // (z^3, z^2) -> z^2
        let a = upoly(&[0, 0, 0, 1]);
        let b = upoly(&[0, 0, 1]);
        assert_eq!(a.gcd(&b), upoly(&[0, 0, 1]));
        // (z^2 + 1, z^2 - 1) -> 1
        let a = upoly(&[1, 0, 1]);
        let b = upoly(&[-1, 0, 1]);
        assert_eq!(a.gcd(&b), UPoly::one());
        // gcd(0, 0) = 0
        assert!(UPoly::zero().gcd(&UPoly::zero()).is_zero());
    }

    #[test]
    fn resultant_fixtures() {
        // Res_X(X - 3, X - 5) = -2 with the det(Sylvester) convention
        let a = upoly(&[-3, 1]);
        let b = upoly(&[-5, 1]);
        assert_eq!(a.resultant(&b), Rat::from_integer((-2).into()));
        // Res_X(X^2 - z, X^2 - z) = 0: over Q use X^2 - 2 twice
        let a = upoly(&[-2, 0, 1]);
        assert!(a.resultant(&a).is_zero());
    }

    #[test]
    fn squarefree_decomposition_works() {
        // (x-1)^2 (x+2)^3
        let f = upoly(&[-1, 1]).pow(2) * upoly(&[2, 1]).pow(3);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (upoly(&[-1, 1]), 2));
        assert_eq!(dec[1], (upoly(&[2, 1]), 3));
    }

    #[test]
    fn extended_gcd_identity() {
        let a = upoly(&[2, 0, 1, 3]);
        let b = upoly(&[-1, 5, 1]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }
}
