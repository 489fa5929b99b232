//! Truncated power series over a field, used for exact local expansions on
//! hyperelliptic curves (orders of functions at rational places).

#[allow(unused_imports)]
use num_traits::{One, Zero};

use crate::field::Field;
use crate::poly::Poly;
use crate::ratexpr::RatExpr;

/// sum coeffs[k] v^k + O(v^prec); coeffs.len() == prec.
#[derive(Clone, Debug, PartialEq)]
pub struct PSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> PSeries<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>, prec: usize) -> Self {
        coeffs.resize(prec, F::zero());
        PSeries { coeffs }
    }

    pub fn zero(prec: usize) -> Self {
        PSeries {
            coeffs: vec![F::zero(); prec],
        }
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, if any within precision.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn from_poly(p: &Poly<F>, prec: usize) -> Self {
        PSeries::from_coeffs(p.coeffs().to_vec(), prec)
    }

    /// Series of p(a + v).
    pub fn from_poly_at(p: &Poly<F>, a: &F, prec: usize) -> Self {
        // Horner in (a + v)
        let mut acc = PSeries::zero(prec);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul_by_linear(a).add(&PSeries::constant(c.clone(), prec));
        }
        acc
    }

    fn constant(c: F, prec: usize) -> Self {
        let mut v = vec![F::zero(); prec];
        if prec > 0 {
            v[0] = c;
        }
        PSeries { coeffs: v }
    }

    /// self * (a + v)
    fn mul_by_linear(&self, a: &F) -> Self {
        let prec = self.prec();
        let mut v = vec![F::zero(); prec];
        for k in 0..prec {
            let mut t = self.coeff(k) * a.clone();
            if k > 0 {
                t = t + self.coeff(k - 1);
            }
            v[k] = t;
        }
        PSeries { coeffs: v }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec().min(rhs.prec());
        PSeries {
            coeffs: (0..prec).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec().min(rhs.prec());
        let mut v = vec![F::zero(); prec];
        for i in 0..prec {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..prec - i {
                let t = v[i + j].clone() + self.coeff(i) * rhs.coeff(j);
                v[i + j] = t;
            }
        }
        PSeries { coeffs: v }
    }

    pub fn scale(&self, c: &F) -> Self {
        PSeries {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        PSeries {
            coeffs: self.coeffs.iter().map(|x| -x.clone()).collect(),
        }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn invert(&self) -> Self {
        let prec = self.prec();
        assert!(!self.coeff(0).is_zero(), "inverting a non-unit series");
        let c0_inv = self.coeff(0).inv();
        let mut v = vec![F::zero(); prec];
        v[0] = c0_inv.clone();
        for k in 1..prec {
            let mut acc = F::zero();
            for i in 1..=k {
                acc = acc + self.coeff(i) * v[k - i].clone();
            }
            v[k] = -(acc * c0_inv.clone());
        }
        PSeries { coeffs: v }
    }

    /// Square root with prescribed constant term `c0` (c0^2 = self(0)).
    pub fn sqrt_with(&self, c0: &F) -> Self {
        let prec = self.prec();
        assert!(c0.clone() * c0.clone() == self.coeff(0), "bad sqrt seed");
        let mut v = vec![F::zero(); prec];
        v[0] = c0.clone();
        let two = F::from_i64(2);
        let denom = (two.clone() * c0.clone()).inv();
        for k in 1..prec {
            // self[k] = 2 c0 v[k] + sum_{i=1..k-1} v[i] v[k-i]
            let mut acc = F::zero();
            for i in 1..k {
                acc = acc + v[i].clone() * v[k - i].clone();
            }
            v[k] = (self.coeff(k) - acc) * denom.clone();
        }
        PSeries { coeffs: v }
    }
}

/// Laurent expansion of a rational function at a finite point a:
/// returns (shift, unit series) with r = v^shift * unit, unit(0) != 0.
/// None when r = 0.
pub fn laurent_at<F: Field>(r: &RatExpr<F>, a: &F, prec: usize) -> Option<(i64, PSeries<F>)> {
    if r.is_zero() {
        return None;
    }
    fn strip<F: Field>(p: &Poly<F>, a: &F) -> (i64, Poly<F>) {
        let lin = Poly::new(vec![-a.clone(), F::one()]);
        let mut m = 0i64;
        let mut q = p.clone();
        loop {
            let (quot, rem) = q.div_rem(&lin);
            if rem.is_zero() && !q.is_zero() {
                m += 1;
                q = quot;
            } else {
                return (m, q);
            }
        }
    }
    let (mn, n) = strip(r.num(), a);
    let (md, d) = strip(r.den(), a);
    let ns = PSeries::from_poly_at(&n, a, prec);
    let ds = PSeries::from_poly_at(&d, a, prec);
    Some((mn - md, ns.mul(&ds.invert())))
}

/// Laurent expansion at infinity in the variable v = 1/x:
/// returns (shift, unit series) with r = v^shift * unit(v), unit(0) != 0.
pub fn laurent_at_infinity<F: Field>(r: &RatExpr<F>, prec: usize) -> Option<(i64, PSeries<F>)> {
    if r.is_zero() {
        return None;
    }
    let rev = |p: &Poly<F>| -> Poly<F> {
        let mut cs = p.coeffs().to_vec();
        cs.reverse();
        Poly::new(cs)
    };
    let n = rev(r.num());
    let d = rev(r.den());
    let shift = r.den().deg() as i64 - r.num().deg() as i64;
    let ns = PSeries::from_poly(&n, prec);
    let ds = PSeries::from_poly(&d, prec);
    Some((shift, ns.mul(&ds.invert())))
}
