//! Bivariate polynomials in (S, T) over Q(z), the carrier of equations
//! f(y', y, z) = 0 with S = y' and T = y.

use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::field::Field;
use crate::poly::Poly;
use crate::types::{Rat, RatFunc, UPoly, XRat};

/// Keys are (degree in S, degree in T); no zero coefficients stored.
#[derive(Clone, PartialEq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), RatFunc>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial(i: usize, j: usize, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn constant(c: RatFunc) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    pub fn s() -> Self {
        BiPoly::monomial(1, 0, RatFunc::one())
    }

    pub fn t() -> Self {
        BiPoly::monomial(0, 1, RatFunc::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: usize, j: usize) -> RatFunc {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, c: RatFunc) {
        if c.is_zero() {
            self.terms.remove(&(i, j));
        } else {
            self.terms.insert((i, j), c);
        }
    }

    pub fn deg_s(&self) -> usize {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> usize {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let v = out.coeff(k.0, k.1) + c.clone();
            out.set(k.0, k.1, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key = (ka.0 + kb.0, ka.1 + kb.1);
                let v = out.coeff(key.0, key.1) + ca.clone() * cb.clone();
                out.set(key.0, key.1, v);
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = BiPoly::constant(RatFunc::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial_s(&self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.set(i - 1, j, c.clone() * RatFunc::from_rat(&Rat::from_integer(i.into())));
            }
        }
        out
    }

    pub fn partial_t(&self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.set(i, j - 1, c.clone() * RatFunc::from_rat(&Rat::from_integer(j.into())));
            }
        }
        out
    }

    pub fn partial_z(&self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.set(i, j, c.derivative());
        }
        out
    }

    /// View as a polynomial in S with coefficients in Q(z)(T).
    pub fn as_s_poly(&self) -> Poly<XRat> {
        let n = self.deg_s();
        let mut coeffs = vec![XRat::zero(); n + 1];
        for (&(i, j), c) in &self.terms {
            let term = XRat::from_poly(Poly::monomial(c.clone(), j));
            coeffs[i] = coeffs[i].clone() + term;
        }
        Poly::new(coeffs)
    }

    /// View as a polynomial in T with coefficients in Q(z)(S).
    pub fn as_t_poly(&self) -> Poly<XRat> {
        let n = self.deg_t();
        let mut coeffs = vec![XRat::zero(); n + 1];
        for (&(i, j), c) in &self.terms {
            let term = XRat::from_poly(Poly::monomial(c.clone(), i));
            coeffs[j] = coeffs[j].clone() + term;
        }
        Poly::new(coeffs)
    }

    /// Rebuild from a polynomial in S over Q(z)[T]; denominators must be 1.
    pub fn from_s_poly(p: &Poly<XRat>) -> Self {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            assert!(c.is_poly(), "from_s_poly with nontrivial denominator");
            for (j, cj) in c.num().coeffs().iter().enumerate() {
                out.set(i, j, out.coeff(i, j) + cj.clone());
            }
        }
        out
    }

    /// f(ns/d, nt/d) * d^(total degree), all arguments polynomial.
    pub fn substitute_fraction(&self, ns: &BiPoly, nt: &BiPoly, d: &BiPoly) -> BiPoly {
        let big = self
            .terms
            .keys()
            .map(|&(i, j)| i + j)
            .max()
            .unwrap_or(0);
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            let term = ns.pow(i).mul(&nt.pow(j)).mul(&d.pow(big - i - j));
            out = out.add(&term.scale(c));
        }
        out
    }

    /// Canonical form: clear z-denominators, remove rational and z-polynomial
    /// content, and force a positive leading coefficient on the lex-largest
    /// (S, T) monomial. Returns the normalized polynomial.
    pub fn normalize(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        // Common z-denominator.
        let mut den = UPoly::one();
        for c in self.terms.values() {
            let g = den.gcd(c.den());
            den = &den * &c.den().exact_div(&g);
        }
        let cleared: BTreeMap<(usize, usize), UPoly> = self
            .terms
            .iter()
            .map(|(k, c)| (*k, c.num() * &den.exact_div(c.den())))
            .collect();
        // z-polynomial content (monic gcd).
        let mut zcontent = UPoly::zero();
        for c in cleared.values() {
            zcontent = zcontent.gcd(c);
            if zcontent.is_one() {
                break;
            }
        }
        let reduced: BTreeMap<(usize, usize), UPoly> = cleared
            .iter()
            .map(|(k, c)| (*k, c.exact_div(&zcontent)))
            .collect();
        // Rational content: lcm of denominators / gcd of numerators.
        let mut den_lcm = num_bigint::BigInt::one();
        let mut num_gcd = num_bigint::BigInt::zero();
        for c in reduced.values() {
            for q in c.coeffs() {
                den_lcm = num_integer::Integer::lcm(&den_lcm, q.denom());
                num_gcd = num_integer::Integer::gcd(&num_gcd, q.numer());
            }
        }
        let scale = Rat::new(den_lcm, num_gcd);
        let mut out = BiPoly::zero();
        for (k, c) in &reduced {
            out.set(k.0, k.1, RatFunc::from_poly(c.scale(&scale)));
        }
        // Sign: leading coefficient of the lex-greatest monomial positive.
        if let Some((_, c)) = out.terms.iter().next_back() {
            if c.num().lc().is_negative() {
                out = out.neg();
            }
        }
        out
    }

    /// Specialize z to a rational; None if any denominator vanishes there.
    pub fn specialize_z(&self, z0: &Rat) -> Option<BTreeMap<(usize, usize), Rat>> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = c.eval(z0)?;
            if !v.is_zero() {
                out.insert(*k, v);
            }
        }
        Some(out)
    }

    /// Grammar-compatible rendering (integer coefficients after normalize).
    pub fn to_input_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = vec![];
        for (&(i, j), c) in self.terms.iter().rev() {
            // c is a rational function; after normalize it is a z-polynomial.
            let zpolys: Vec<(usize, Rat)> = if c.is_poly() {
                c.num()
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, q)| !q.is_zero())
                    .map(|(k, q)| (k, q.clone()))
                    .rev()
                    .collect()
            } else {
                panic!("to_input_string on non-normalized BiPoly")
            };
            for (k, q) in zpolys {
                let mut factors: Vec<String> = vec![];
                let neg = q.is_negative();
                let qa = q.abs();
                if !qa.is_one() || (k == 0 && i == 0 && j == 0) {
                    if qa.denom().is_one() {
                        factors.push(format!("{}", qa.numer()));
                    } else {
                        factors.push(format!("{}/{}", qa.numer(), qa.denom()));
                    }
                }
                if k == 1 {
                    factors.push("z".into());
                } else if k > 1 {
                    factors.push(format!("z^{}", k));
                }
                if i == 1 {
                    factors.push("S".into());
                } else if i > 1 {
                    factors.push(format!("S^{}", i));
                }
                if j == 1 {
                    factors.push("T".into());
                } else if j > 1 {
                    factors.push(format!("T^{}", j));
                }
                if factors.is_empty() {
                    factors.push("1".into());
                }
                let body = factors.join("*");
                parts.push(if neg { format!("-{}", body) } else { body });
            }
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

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "BiPoly(0)");
        }
        let body: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| format!("[{}] S^{} T^{}", c.to_string_var("z"), i, j))
            .collect();
        write!(f, "BiPoly({})", body.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::upoly;
    use crate::types::rf_poly;

    fn sample() -> BiPoly {
        // S^2 - (T^6 - 1)
        let mut f = BiPoly::zero();
        f.set(2, 0, RatFunc::one());
        f.set(0, 6, -RatFunc::one());
        f.set(0, 0, RatFunc::one());
        f
    }

    #[test]
    fn partials() {
        let f = sample();
        let fs = f.partial_s();
        assert_eq!(fs.coeff(1, 0), RatFunc::from_rat(&crate::types::rat_i(2)));
        let ft = f.partial_t();
        assert_eq!(ft.coeff(0, 5), RatFunc::from_rat(&crate::types::rat_i(-6)));
        assert!(f.partial_z().is_zero());
    }

    #[test]
    fn normalize_clears_denominators() {
        // (1/z) S + T  ->  S + z T
        let mut f = BiPoly::zero();
        f.set(1, 0, RatFunc::new(upoly(&[1]), upoly(&[0, 1])));
        f.set(0, 1, RatFunc::one());
        let n = f.normalize();
        assert_eq!(n.coeff(1, 0), RatFunc::one());
        assert_eq!(n.coeff(0, 1), rf_poly(upoly(&[0, 1])));
    }

    #[test]
    fn input_string_roundtrippable() {
        let f = sample().normalize();
        assert_eq!(f.to_input_string(), "S^2 - T^6 + 1");
    }
}
