//! Roots of polynomials in x over Q(z) that lie in Q(z) itself.
//!
//! A reduced root u/v of sum a_i(z) x^i (cleared to Q[z][x]) has u dividing
//! the trailing coefficient and v the leading one, so candidates come from
//! the divisor lattices of those two z-polynomials; the remaining scalar is
//! pinned down by a univariate condition over Q.

use num_traits::{One, Zero};

use crate::factor::{factor_univariate_rationals, rational_roots};
use crate::poly::Poly;
use crate::types::{Rat, RatFunc, UPoly, XPoly};

/// All monic divisors of a nonzero z-polynomial (including 1).
fn monic_divisors(p: &UPoly) -> Vec<UPoly> {
    let fac = factor_univariate_rationals(p);
    let mut out = vec![UPoly::one()];
    for (f, mult) in fac.factors {
        let fm = f.monic();
        let mut next = vec![];
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..mult {
                acc = &acc * &fm;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out
}

/// Every r in Q(z) with P(r) = 0, each listed once (empty when none).
pub fn rational_function_roots(p: &XPoly) -> Vec<RatFunc> {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    // Clear coefficient denominators to land in Q[z][x].
    let mut common = UPoly::one();
    for c in p.coeffs() {
        let g = common.gcd(c.den());
        common = &common * &c.den().exact_div(&g);
    }
    let zc: Vec<UPoly> = p
        .coeffs()
        .iter()
        .map(|c| c.num() * &common.exact_div(c.den()))
        .collect();

    let first_nonzero = zc.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = vec![];
    if first_nonzero > 0 {
        roots.push(RatFunc::zero());
    }
    let coeffs = &zc[first_nonzero..];
    let n = coeffs.len() - 1;
    if n == 0 {
        return roots;
    }

    let u_cands = monic_divisors(&coeffs[0]);
    let v_cands = monic_divisors(&coeffs[n]);
    for u in &u_cands {
        for v in &v_cands {
            if !u.gcd(v).is_one() {
                continue;
            }
            // Condition: sum_i coeffs[i] * (c u)^i * v^(n-i) = 0 in Q[z][c].
            // Collect, per z-degree, a polynomial in c; all must vanish.
            let mut terms: Vec<UPoly> = Vec::with_capacity(n + 1);
            for (i, a) in coeffs.iter().enumerate() {
                let t = &(a * &u.pow(i)) * &v.pow(n - i);
                terms.push(t);
            }
            let max_zdeg = terms
                .iter()
                .filter_map(|t| t.degree())
                .max()
                .unwrap_or(0);
            let mut g = UPoly::zero();
            for d in 0..=max_zdeg {
                let q = Poly::new(terms.iter().map(|t| t.coeff(d)).collect());
                g = g.gcd(&q);
                if g.is_one() {
                    break;
                }
            }
            if g.is_constant() {
                continue;
            }
            for c0 in rational_roots(&g) {
                if c0.is_zero() {
                    continue;
                }
                let cand = RatFunc::new(u.scale(&c0), v.clone());
                let val = p.eval(&cand);
                if val.is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort_by_key(|r| format!("{:?}", r));
    roots.dedup();
    roots
}

/// Roots in Q of a polynomial in x over Q(z) whose coefficients happen to be
/// constants would also be found by `rational_function_roots`; this helper
/// keeps call sites explicit about expecting constants only.
pub fn constant_roots(p: &XPoly) -> Vec<Rat> {
    rational_function_roots(p)
        .into_iter()
        .filter_map(|r| r.as_constant())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::upoly;
    use crate::types::{rf_poly, zvar};

    #[test]
    fn roots_fixtures() {
        let z = zvar();
        // prod_{j=1..3} (x - j z) -> [z, 2z, 3z]
        let mut p = XPoly::one();
        for j in 1..=3i64 {
            let r = z.clone() * RatFunc::constant(Rat::from_integer(j.into()));
            p = &p * &Poly::new(vec![-r, RatFunc::one()]);
        }
        let roots = rational_function_roots(&p);
        assert_eq!(roots.len(), 3);
        for j in 1..=3i64 {
            let r = z.clone() * RatFunc::constant(Rat::from_integer(j.into()));
            assert!(roots.contains(&r));
        }

        // x^2 - z -> []
        let p = Poly::new(vec![-z.clone(), RatFunc::zero(), RatFunc::one()]);
        assert!(rational_function_roots(&p).is_empty());

        // z x^2 - (z^2+z) x + z^2 -> [1, z]
        let p = Poly::new(vec![
            rf_poly(upoly(&[0, 0, 1])),
            -rf_poly(upoly(&[0, 1, 1])),
            rf_poly(upoly(&[0, 1])),
        ]);
        let roots = rational_function_roots(&p);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&RatFunc::one()));
        assert!(roots.contains(&z));
    }

    #[test]
    fn random_product_roundtrip() {
        // P built as prod (x - r_i) recovers exactly {r_i}
        let z = zvar();
        let rs = vec![
            RatFunc::new(upoly(&[1, 2]), upoly(&[3, 1])),
            z.clone() * z.clone(),
            RatFunc::constant(crate::types::rat(-5, 3)),
        ];
        let mut p = XPoly::one();
        for r in &rs {
            p = &p * &Poly::new(vec![-r.clone(), RatFunc::one()]);
        }
        let mut found = rational_function_roots(&p);
        let mut want = rs.clone();
        found.sort_by_key(|r| format!("{:?}", r));
        want.sort_by_key(|r| format!("{:?}", r));
        assert_eq!(found, want);
    }
}
