//! Hermite reduction (Ostrogradsky–Horowitz form) and the Rothstein–Trager
//! residue test for rational integrands over an arbitrary field.
//!
//! `hermite_reduce(r)` splits r = d/dv(g) + h where h is proper with
//! squarefree denominator; `residues_all_zero(h)` then decides whether the
//! leftover has a rational antiderivative at all (no logarithmic terms).

use num_traits::Zero;

use crate::field::Field;
use crate::linalg::Mat;
use crate::poly::Poly;
use crate::ratexpr::RatExpr;

/// r = derivative(rational part) + remainder, remainder proper with
/// squarefree denominator.
pub fn hermite_reduce<F: Field>(r: &RatExpr<F>) -> (RatExpr<F>, RatExpr<F>) {
    if r.is_zero() {
        return (RatExpr::zero(), RatExpr::zero());
    }
    let den = r.den().clone();
    let (poly_part, proper_num) = r.num().div_rem(&den);

    // Antiderivative of the polynomial part.
    let mut anti = vec![F::zero()];
    for (i, c) in poly_part.coeffs().iter().enumerate() {
        anti.push(c.clone() / F::from_i64(i as i64 + 1));
    }
    let mut rational_part = RatExpr::from_poly(Poly::new(anti));

    if proper_num.is_zero() {
        return (rational_part, RatExpr::zero());
    }

    // Horowitz: den = d1 * d2 with d2 = gcd(den, den'), proper = (B/d2)' + C/d1.
    let d2 = den.gcd(&den.derivative());
    if d2.is_constant() {
        return (
            rational_part,
            RatExpr::new(proper_num, den),
        );
    }
    let d1 = den.exact_div(&d2);
    // T = den'/d2 - d2' * d1 / d2... use the identity:
    // A = B' d1 - B * t + C d2, where t = (d1 * d2')/d2 is a polynomial.
    let t = (&d1 * &d2.derivative()).exact_div(&d2);
    let nb = d2.deg();
    let nc = d1.deg();
    let ncols = nb + nc;
    let arows = den.deg();
    let mut m = Mat::<F>::zero(arows, ncols);
    // columns 0..nb: coefficients of B (deg < nb); columns nb..: C (deg < nc)
    for j in 0..nb {
        // contribution of B = x^j: (x^j)' d1 - x^j t
        let bj = Poly::monomial(F::one(), j);
        let contrib = &(&bj.derivative() * &d1) - &(&bj * &t);
        for i in 0..arows {
            m.set(i, j, contrib.coeff(i));
        }
    }
    for j in 0..nc {
        let contrib = Poly::monomial(F::one(), j) * d2.clone();
        for i in 0..arows {
            m.set(i, nb + j, contrib.coeff(i));
        }
    }
    let rhs: Vec<F> = (0..arows).map(|i| proper_num.coeff(i)).collect();
    let sol = m
        .solve(&rhs)
        .expect("Horowitz system is always consistent");
    let b = Poly::new(sol[..nb].to_vec());
    let c = Poly::new(sol[nb..].to_vec());

    rational_part = rational_part + RatExpr::new(b, d2);
    let remainder = RatExpr::new(c, d1);
    (rational_part, remainder)
}

/// Rothstein–Trager resultant R(t) = Res_v(D, A - t D') for remainder A/D.
/// All residues vanish iff every root of R is zero, i.e. R is a monomial.
/// For a reduced proper remainder this is equivalent to remainder = 0.
pub fn residues_all_zero<F: Field>(remainder: &RatExpr<F>) -> bool {
    if remainder.is_zero() {
        return true;
    }
    let d = remainder.den().clone();
    if d.is_constant() {
        // polynomial remainder: integrates to a polynomial
        return true;
    }
    // Work over the rational function field F(t).
    type Ft<F> = RatExpr<F>;
    let lift = |p: &Poly<F>| -> Poly<Ft<F>> { p.map_coeffs(|c| RatExpr::constant(c.clone())) };
    let a_t = lift(remainder.num());
    let d_t = lift(&d);
    let dp_t = lift(&d.derivative());
    let tvar: Ft<F> = RatExpr::var();
    let shifted = &a_t - &dp_t.scale(&tvar);
    let res = d_t.resultant(&shifted);
    // res is a rational expression in t; all residues vanish iff its
    // numerator is a monomial in t.
    let num = res.num();
    match num.degree() {
        None => true,
        Some(deg) => (0..deg).all(|i| num.coeff(i).is_zero()),
    }
}

/// Antiderivative of r when it is rational: Some(g) with g' = r, else None.
pub fn rational_antiderivative<F: Field>(r: &RatExpr<F>) -> Option<RatExpr<F>> {
    let (g, h) = hermite_reduce(r);
    if h.is_zero() {
        Some(g)
    } else if residues_all_zero(&h) {
        // Residues can only vanish identically when h = 0 for a reduced
        // proper remainder; keep the branch for safety.
        Some(g)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::upoly;
    use crate::types::{rat, RatFunc};

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatExpr::new(upoly(num), upoly(den))
    }

    #[test]
    fn hermite_fixtures() {
        // 1/v^5 -> (-1/(4 v^4), 0)
        let r = rf(&[1], &[0, 0, 0, 0, 0, 1]);
        let (g, h) = hermite_reduce(&r);
        assert!(h.is_zero());
        let expected = RatFunc::new(
            Poly::constant(rat(-1, 4)),
            upoly(&[0, 0, 0, 0, 1]),
        );
        assert_eq!(g, expected);

        // 2v/(v^2+1)^2 -> (-1/(v^2+1), 0)
        let r = rf(&[0, 2], &[1, 0, 2, 0, 1]);
        let (g, h) = hermite_reduce(&r);
        assert!(h.is_zero());
        assert_eq!(g, RatFunc::new(upoly(&[-1]), upoly(&[1, 0, 1])));

        // 1/v -> (0, 1/v)
        let r = rf(&[1], &[0, 1]);
        let (g, h) = hermite_reduce(&r);
        assert!(g.is_zero());
        assert_eq!(h, r);
    }

    #[test]
    fn hermite_identity_randomish() {
        // exact identity r - g' - h = 0 on a few structured inputs
        let cases = vec![
            rf(&[1, 3, 5], &[0, 0, 1, 2, 1]),
            rf(&[2, 0, 1], &[1, 2, 1]),
            rf(&[7], &[0, 0, 0, 1, 0, 0, 2, 1]),
            rf(&[1, 1, 1, 1], &[0, 1]) ,
        ];
        for r in cases {
            let (g, h) = hermite_reduce(&r);
            let back = g.derivative() + h.clone();
            assert_eq!(back, r);
            if !h.is_zero() {
                assert!(h.den().is_squarefree());
                assert!(h.num().degree() < h.den().degree());
            }
        }
    }

    #[test]
    fn residue_fixtures() {
        assert!(residues_all_zero(&RatFunc::zero()));
        // 1/v has residue 1
        assert!(!residues_all_zero(&rf(&[1], &[0, 1])));
        // 1/(v^2-1) has residues +-1/2
        assert!(!residues_all_zero(&rf(&[1], &[-1, 0, 1])));
    }

    #[test]
    fn antiderivative() {
        // r = 3v^2 + v^{-2} = (3v^4 + 1)/v^2 integrates to v^3 - 1/v
        let r = rf(&[1, 0, 0, 0, 3], &[0, 0, 1]);
        let g = rational_antiderivative(&r).unwrap();
        assert_eq!(g.derivative(), r);
        // 1/(v^2-1) has no rational antiderivative
        assert!(rational_antiderivative(&rf(&[1], &[-1, 0, 1])).is_none());
    }
}
