//! Newton-polygon analysis: leading exponents and leading-coefficient
//! constraints of formal Puiseux solutions at a point, and ramification
//! indices of a plane-curve projection used by the genus computation.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::eq::DiffEq;
use crate::moebius::PPoint;
use crate::poly::Poly;
use crate::types::{Rat, RatFunc, UPoly, XPoly};

/// Point on the z-line where local solutions are expanded.
pub type LocalPoint = PPoint<Rat>;

/// One Newton-polygon edge worth of leading-term data.
#[derive(Clone, Debug, PartialEq)]
pub struct PuiseuxLead {
    /// Lowest exponent n/m of the branch (in z - a, or 1/z at infinity).
    pub exponent: Rat,
    /// Constraint polynomial satisfied by the leading coefficient; the
    /// constant polynomial 1 marks an unconstrained (generic) coefficient.
    pub constraint: UPoly,
    pub branch_count: usize,
}

/// Order of vanishing and leading Laurent coefficient at z = a.
fn order_and_lead_at(c: &RatFunc, a: &Rat) -> (i64, Rat) {
    fn strip(p: &UPoly, a: &Rat) -> (i64, UPoly) {
        let lin = Poly::new(vec![-a.clone(), Rat::one()]);
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
    let (mn, n) = strip(c.num(), a);
    let (md, d) = strip(c.den(), a);
    (mn - md, n.eval(a) / d.eval(a))
}

/// Order of vanishing and leading coefficient in the local variable 1/z.
fn order_and_lead_at_infinity(c: &RatFunc) -> (i64, Rat) {
    let w = c.order_at_infinity().expect("nonzero coefficient");
    (w, c.num().lc() / c.den().lc())
}

/// Lower convex hull of (m, q) points, m strictly increasing in the result.
fn lower_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort();
    // keep minimal q per m
    let mut uniq: Vec<(i64, i64)> = vec![];
    for p in pts {
        match uniq.last() {
            Some(&(m, _)) if m == p.0 => {}
            _ => uniq.push(p),
        }
    }
    let mut hull: Vec<(i64, i64)> = vec![];
    for p in uniq {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // drop b if it lies on or above segment a-p
            let lhs = (b.1 - a.1) * (p.0 - a.0);
            let rhs = (p.1 - a.1) * (b.0 - a.0);
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

fn rat_pow_int(base: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

/// Normalize a constraint polynomial: strip powers of X, clear denominators,
/// divide by integer content, make the leading coefficient positive.
fn normalize_constraint(phi: &UPoly) -> UPoly {
    if phi.is_zero() {
        return UPoly::zero();
    }
    let k = phi
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .unwrap();
    let stripped = Poly::new(phi.coeffs()[k..].to_vec());
    let mut den = num_bigint::BigInt::one();
    for c in stripped.coeffs() {
        den = num_integer::Integer::lcm(&den, c.denom());
    }
    let mut num = num_bigint::BigInt::zero();
    for c in stripped.coeffs() {
        num = num_integer::Integer::gcd(&num, &(c.numer() * (&den / c.denom())));
    }
    let mut scale = Rat::new(den, num);
    if stripped.lc().is_negative() {
        scale = -scale;
    }
    stripped.scale(&scale)
}

/// Leading exponents and coefficient constraints of formal Puiseux solutions
/// of the equation at a point of the z-line.
pub fn puiseux_leading(eq: &DiffEq, at: &LocalPoint) -> Result<Vec<PuiseuxLead>> {
    // term data: (i, j, m = i + j, q, gamma)
    let mut data: Vec<(usize, usize, i64, i64, Rat)> = vec![];
    for (&(i, j), c) in eq.f().terms() {
        let (w, gamma) = match at {
            PPoint::Finite(a) => order_and_lead_at(c, a),
            PPoint::Infinity => order_and_lead_at_infinity(c),
        };
        let q = match at {
            PPoint::Finite(_) => w - i as i64,
            PPoint::Infinity => w + i as i64,
        };
        data.push((i, j, (i + j) as i64, q, gamma));
    }
    let pts: Vec<(i64, i64)> = data.iter().map(|t| (t.2, t.3)).collect();
    let hull = lower_hull(&pts);

    let mut out = vec![];
    let mut slopes: Vec<Rat> = vec![];
    for win in hull.windows(2) {
        let (m1, q1) = win[0];
        let (m2, q2) = win[1];
        let rho = Rat::new((q1 - q2).into(), (m2 - m1).into());
        slopes.push(rho.clone());
        let level_num = |m: i64, q: i64| -> Rat {
            Rat::from_integer(m.into()) * rho.clone() + Rat::from_integer(q.into())
        };
        let level = level_num(m1, q1);
        let mut phi = UPoly::zero();
        for (i, _j, m, q, gamma) in &data {
            if level_num(*m, *q) != level {
                continue;
            }
            let chart = match at {
                PPoint::Finite(_) => rho.clone(),
                PPoint::Infinity => -rho.clone(),
            };
            let coef = gamma.clone() * rat_pow_int(&chart, *i);
            let mono = UPoly::monomial(coef, *m as usize);
            phi = &phi + &mono;
        }
        let constraint = normalize_constraint(&phi);
        if constraint.is_constant() {
            // every balancing coefficient vanished (only possible when the
            // S-chart factor rho^i killed all edge terms); no branch here
            continue;
        }
        let ell = constraint.deg();
        let mden: i64 = rho.denom().try_into().map_err(|_| {
            Error::UnsupportedLocalForm("exponent denominator too large".into())
        })?;
        let mden = mden.unsigned_abs() as usize;
        if ell % mden != 0 {
            return Err(Error::UnsupportedLocalForm(
                "edge support not aligned with exponent denominator".into(),
            ));
        }
        // separability of the characteristic polynomial in X^mden
        let psi = Poly::new(
            (0..=ell / mden)
                .map(|k| constraint.coeff(k * mden))
                .collect::<Vec<Rat>>(),
        );
        if !psi.is_squarefree() {
            return Err(Error::UnsupportedLocalForm(
                "inseparable characteristic polynomial".into(),
            ));
        }
        out.push(PuiseuxLead {
            exponent: rho,
            constraint,
            branch_count: ell / mden,
        });
    }

    // Exponent-0 branch when 0 is not already an edge slope.
    if !slopes.iter().any(|s| s.is_zero()) {
        let minq = data.iter().map(|t| t.3).min().unwrap();
        let at_min: Vec<_> = data.iter().filter(|t| t.3 == minq).collect();
        if at_min.iter().all(|t| t.0 >= 1) {
            out.push(PuiseuxLead {
                exponent: Rat::zero(),
                constraint: UPoly::one(),
                branch_count: 1,
            });
        } else {
            let mut phi0 = UPoly::zero();
            for t in &at_min {
                if t.0 == 0 {
                    phi0 = &phi0 + &UPoly::monomial(t.4.clone(), t.1);
                }
            }
            let constraint = normalize_constraint(&phi0);
            if !constraint.is_constant() {
                let cnt = constraint.deg();
                out.push(PuiseuxLead {
                    exponent: Rat::zero(),
                    constraint,
                    branch_count: cnt,
                });
            }
        }
    }

    out.sort_by(|a, b| a.exponent.cmp(&b.exponent));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Ramification of a plane-curve projection (algebraic Newton polygon)
// ---------------------------------------------------------------------------

/// Point on the x-line over Q(z).
pub type BasePoint = PPoint<RatFunc>;

fn xpoly_order_and_lead(b: &XPoly, at: &BasePoint) -> (i64, RatFunc) {
    match at {
        PPoint::Finite(alpha) => {
            let lin = Poly::new(vec![-alpha.clone(), RatFunc::one()]);
            let mut m = 0i64;
            let mut q = b.clone();
            loop {
                let (quot, rem) = q.div_rem(&lin);
                if rem.is_zero() && !q.is_zero() {
                    m += 1;
                    q = quot;
                } else {
                    return (m, q.eval(alpha));
                }
            }
        }
        PPoint::Infinity => (-(b.deg() as i64), b.lc()),
    }
}

/// Ramification indices of the degree-n covering w -> x over the point `at`,
/// where the curve is sum coeffs_w[i](x) w^i = 0. The indices sum to n.
pub fn ramification_indices(coeffs_w: &[XPoly], at: &BasePoint) -> Result<Vec<usize>> {
    let n = coeffs_w.len() - 1;
    assert!(n >= 1 && !coeffs_w[n].is_zero());
    if !coeffs_w[0].is_zero() {
        // usual case: no w factor
    } else {
        return Err(Error::UnsupportedLocalForm(
            "curve polynomial divisible by w".into(),
        ));
    }
    let mut data: Vec<(usize, i64, RatFunc)> = vec![];
    for (i, b) in coeffs_w.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let (u, gamma) = xpoly_order_and_lead(b, at);
        data.push((i, u, gamma));
    }
    let pts: Vec<(i64, i64)> = data.iter().map(|t| (t.0 as i64, t.1)).collect();
    let hull = lower_hull(&pts);
    let mut out = vec![];
    for win in hull.windows(2) {
        let (i1, u1) = win[0];
        let (i2, u2) = win[1];
        let g = num_integer::Integer::gcd(&(i2 - i1), &(u1 - u2).abs());
        let mden = ((i2 - i1) / g.max(1)) as usize;
        // edge characteristic polynomial in Y = c^mden
        let level = |i: i64, u: i64| -> Rat {
            Rat::new((u1 - u2).into(), (i2 - i1).into()) * Rat::from_integer(i.into())
                + Rat::from_integer(u.into())
        };
        let lv = level(i1, u1);
        let mut psi_coeffs = vec![RatFunc::zero(); ((i2 - i1) as usize) / mden + 1];
        for (i, u, gamma) in &data {
            let ii = *i as i64;
            if ii < i1 || ii > i2 {
                continue;
            }
            if level(ii, *u) != lv {
                continue;
            }
            let k = ((ii - i1) as usize) / mden;
            psi_coeffs[k] = psi_coeffs[k].clone() + gamma.clone();
        }
        let psi = Poly::new(psi_coeffs);
        if !psi.is_squarefree() {
            return Err(Error::UnsupportedLocalForm(
                "inseparable characteristic polynomial".into(),
            ));
        }
        let places = psi.deg();
        for _ in 0..places {
            out.push(mden);
        }
    }
    let total: usize = out.iter().sum();
    if total != n {
        return Err(Error::UnsupportedLocalForm(format!(
            "ramification indices sum to {total}, expected {n}"
        )));
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::upoly;
    use crate::types::{rat, rat_i, rf_poly};

    #[test]
    fn paper_example_finite_point() {
        // y' = y^3 + z at a finite point: exponent -1/2, constraint 2X^2 + 1
        let eq = DiffEq::parse("S - T^3 - z").unwrap();
        let leads = puiseux_leading(&eq, &PPoint::Finite(rat_i(2))).unwrap();
        let hit = leads.iter().find(|l| l.exponent == rat(-1, 2));
        let hit = hit.expect("missing exponent -1/2 branch");
        assert_eq!(hit.constraint, upoly(&[1, 0, 2]));
        assert_eq!(hit.branch_count, 1);
        // the generic holomorphic branch is reported too
        assert!(leads
            .iter()
            .any(|l| l.exponent.is_zero() && l.constraint.is_one()));
    }

    #[test]
    fn paper_example_infinity() {
        // y' = y^3 + z at infinity: exponent -1/3, constraint X^3 + 1
        let eq = DiffEq::parse("S - T^3 - z").unwrap();
        let leads = puiseux_leading(&eq, &PPoint::Infinity).unwrap();
        let hit = leads.iter().find(|l| l.exponent == rat(-1, 3));
        let hit = hit.expect("missing exponent -1/3 branch");
        assert_eq!(hit.constraint, upoly(&[1, 0, 0, 1]));
        assert_eq!(hit.branch_count, 1);
    }

    #[test]
    fn riccati_pole() {
        // y' = y^2: exponent -1, constraint X + 1
        let eq = DiffEq::parse("S - T^2").unwrap();
        let leads = puiseux_leading(&eq, &PPoint::Finite(rat_i(0))).unwrap();
        let hit = leads.iter().find(|l| l.exponent == rat_i(-1)).unwrap();
        assert_eq!(hit.constraint, upoly(&[1, 1]));
        assert_eq!(hit.branch_count, 1);
    }

    #[test]
    fn translation_invariance_for_autonomous() {
        let eq = DiffEq::parse("S^2 - (T^6 - 1)").unwrap();
        let a = puiseux_leading(&eq, &PPoint::Finite(rat_i(0))).unwrap();
        let b = puiseux_leading(&eq, &PPoint::Finite(rat(7, 3))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ramification_cases() {
        let one = RatFunc::one();
        // w^2 - (x - z) u(x) with u = x + 1 (u(z) != 0 generically): at x = z
        let z = crate::types::zvar();
        let px = Poly::new(vec![-z.clone(), one.clone()]); // x - z
        let ux = Poly::new(vec![one.clone(), one.clone()]); // x + 1
        let b0 = -(&px * &ux);
        let coeffs = vec![b0, XPoly::zero(), XPoly::one()];
        let e = ramification_indices(&coeffs, &PPoint::Finite(z.clone())).unwrap();
        assert_eq!(e, vec![2]);

        // w^3 - (x - z): total ramification at x = z
        let coeffs = vec![
            -Poly::new(vec![-z.clone(), one.clone()]),
            XPoly::zero(),
            XPoly::zero(),
            XPoly::one(),
        ];
        let e = ramification_indices(&coeffs, &PPoint::Finite(z.clone())).unwrap();
        assert_eq!(e, vec![3]);

        // unramified point: w^2 - (x - z)(x+1) at x = 1 (generic z)
        let px = Poly::new(vec![-z.clone(), one.clone()]);
        let ux = Poly::new(vec![one.clone(), one.clone()]);
        let coeffs = vec![-(&px * &ux), XPoly::zero(), XPoly::one()];
        let e = ramification_indices(&coeffs, &PPoint::Finite(RatFunc::one())).unwrap();
        assert_eq!(e, vec![1, 1]);

        // at infinity, w^2 - quintic: one totally ramified point
        let quintic = Poly::new(vec![
            -one.clone(),
            RatFunc::zero(),
            RatFunc::zero(),
            RatFunc::zero(),
            RatFunc::zero(),
            one.clone(),
        ]);
        let coeffs = vec![-quintic, XPoly::zero(), XPoly::one()];
        let e = ramification_indices(&coeffs, &PPoint::Infinity).unwrap();
        assert_eq!(e, vec![2]);
        let _ = rf_poly(upoly(&[1]));
    }
}
