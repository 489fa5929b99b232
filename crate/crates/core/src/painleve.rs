//! Painlevé-property classification through the genus trichotomy: quadratic
//! polynomial derivation in genus 0, the (y')^2 = h (y^3 + a y + b) normal
//! form in genus 1, and triviality of the transported derivation on an
//! isotrivial model in genus >= 2.

use num_traits::{One, Zero};

use crate::curve::{genus, hyperelliptic_model, CurveElem, GenusMethod};
use crate::eq::DiffEq;
use crate::equivalence::{semi_autonomous_test, FieldIso, RootSet};
use crate::error::Result;
use crate::field::Field;
use crate::local::puiseux_leading;
use crate::moebius::PPoint;
use crate::poly::Poly;
use crate::ratexpr::RatExpr;
use crate::types::{rat_i, Rat, RatFunc, XRat};

#[derive(Clone, Debug)]
pub enum PPVerdict {
    PP { normal_form: String },
    NotPP { witness: String },
    Unsupported(String),
}

impl PPVerdict {
    pub fn is_pp(&self) -> Option<bool> {
        match self {
            PPVerdict::PP { .. } => Some(true),
            PPVerdict::NotPP { .. } => Some(false),
            PPVerdict::Unsupported(_) => None,
        }
    }
}

fn eval_bipoly_st(f: &crate::bipoly::BiPoly, s_val: &XRat, t_val: &XRat) -> XRat {
    let mut acc = XRat::zero();
    for (&(i, j), c) in f.terms() {
        let mut term = XRat::constant(c.clone());
        for _ in 0..i {
            term = term * s_val.clone();
        }
        for _ in 0..j {
            term = term * t_val.clone();
        }
        acc = acc + term;
    }
    acc
}

/// The derivation coefficient g(u, z) of the rational parametrization when
/// the equation is linear in S or T.
pub fn genus0_vector_field(eq: &DiffEq) -> Option<XRat> {
    if eq.deg_s() == 1 {
        // f = A(T) S + B(T): u = t, u' = -B/A
        let sp = eq.f().as_s_poly();
        return Some(-(sp.coeff(0) / sp.coeff(1)));
    }
    if eq.deg_t() == 1 {
        // f = A(S) T + B(S): u = s, t = -B/A(u), and
        // u' = -(u f_T + f_z)/f_S at T = -B/A
        let tp = eq.f().as_t_poly();
        let tval = -(tp.coeff(0) / tp.coeff(1));
        let uvar = XRat::var();
        let f_t = eval_bipoly_st(&eq.f().partial_t(), &uvar, &tval);
        let f_z = eval_bipoly_st(&eq.f().partial_z(), &uvar, &tval);
        let f_s = eval_bipoly_st(&eq.f().partial_s(), &uvar, &tval);
        if f_s.is_zero() {
            return None;
        }
        return Some(-((uvar * f_t + f_z) / f_s));
    }
    None
}

fn branched_solution_witness(eq: &DiffEq) -> Option<String> {
    for a in [rat_i(1), rat_i(0), rat_i(2), rat_i(-1)] {
        if let Ok(leads) = puiseux_leading(eq, &PPoint::Finite(a.clone())) {
            for l in leads {
                if !l.exponent.denom().is_one() {
                    return Some(format!(
                        "branched local solution at z = {} with exponent {}",
                        a, l.exponent
                    ));
                }
            }
        }
    }
    None
}

/// Painlevé property via the genus trichotomy.
pub fn pp_check(eq: &DiffEq) -> Result<PPVerdict> {
    let rep = genus(eq)?;
    match rep.genus {
        0 => {
            if rep.method != GenusMethod::LinearInVariable {
                return Ok(PPVerdict::Unsupported(
                    "genus 0 without an explicit rational parametrization".into(),
                ));
            }
            let g = match genus0_vector_field(eq) {
                Some(g) => g,
                None => {
                    return Ok(PPVerdict::Unsupported(
                        "no rational parametrization available".into(),
                    ))
                }
            };
            if g.is_poly() && g.num().degree().unwrap_or(0) <= 2 {
                let n = g.num();
                Ok(PPVerdict::PP {
                    normal_form: format!(
                        "u' = a0 + a1 u + a2 u^2 with a0 = {}, a1 = {}, a2 = {}",
                        n.coeff(0).to_string_var("z"),
                        n.coeff(1).to_string_var("z"),
                        n.coeff(2).to_string_var("z"),
                    ),
                })
            } else {
                let mut witness = if g.is_poly() {
                    format!(
                        "derivation has degree {} > 2 in u",
                        g.num().degree().unwrap_or(0)
                    )
                } else {
                    "derivation has a pole in u".to_string()
                };
                if let Some(b) = branched_solution_witness(eq) {
                    witness.push_str("; ");
                    witness.push_str(&b);
                }
                Ok(PPVerdict::NotPP { witness })
            }
        }
        1 => {
            // match (y')^2 = h (y^3 + a y + b) with a, b in Q, h in Q(z)*
            if eq.deg_s() != 2 {
                return Ok(PPVerdict::Unsupported(
                    "genus-1 equation is not quadratic in y'".into(),
                ));
            }
            let sp = eq.f().as_s_poly();
            let e2 = sp.coeff(2);
            let e1 = sp.coeff(1);
            let e0 = sp.coeff(0);
            if !e1.is_zero() || !e2.is_constant() {
                return Ok(PPVerdict::Unsupported(
                    "genus-1 equation is not in reduced quadratic form".into(),
                ));
            }
            let cubic = -(e0 / e2.clone());
            if !cubic.is_poly() || cubic.num().degree() != Some(3) {
                return Ok(PPVerdict::Unsupported(
                    "genus-1 equation does not reduce to a cubic".into(),
                ));
            }
            let c = cubic.num();
            let h = c.coeff(3);
            // constant shift to depress the cubic
            let shift = c.coeff(2) / (RatFunc::from_rat(&rat_i(3)) * h.clone());
            if !shift.is_constant() {
                return Ok(PPVerdict::Unsupported(
                    "cubic requires a non-constant shift".into(),
                ));
            }
            let s0 = shift.as_constant().unwrap();
            // T -> T - s0
            let tshift = Poly::new(vec![
                RatFunc::from_rat(&-s0.clone()),
                RatFunc::one(),
            ]);
            let dep = c.eval_with(&XRat::from_poly(tshift), |cc| XRat::constant(cc.clone()));
            assert!(dep.is_poly());
            let dp = dep.num();
            debug_assert!(dp.coeff(2).is_zero());
            let a = dp.coeff(1) / h.clone();
            let b = dp.coeff(0) / h.clone();
            match (a.as_constant(), b.as_constant()) {
                (Some(ac), Some(bc)) => Ok(PPVerdict::PP {
                    normal_form: format!(
                        "(y')^2 = h (y^3 + a y + b) with h = {}, a = {}, b = {}",
                        h.to_string_var("z"),
                        ac,
                        bc
                    ),
                }),
                _ => Ok(PPVerdict::Unsupported(
                    "cubic coefficients are not constant; equivalence over an extension undecided"
                        .into(),
                )),
            }
        }
        _ => {
            let m = hyperelliptic_model(eq)?;
            let Some(roots) = &m.roots else {
                return Ok(PPVerdict::Unsupported(
                    "branch set does not split over Q(z)".into(),
                ));
            };
            let rootset = RootSet::new(roots.clone())?;
            let Some(a) = semi_autonomous_test(&rootset) else {
                return Ok(PPVerdict::NotPP {
                    witness: "curve family is not isotrivial (non-constant cross-ratio of \
                              branch points)"
                        .into(),
                });
            };
            // PP in genus >= 2 means strict equivalence to y' = 0: the
            // derivation must kill the normalized coordinate.
            let der = m.derivation();
            let a_xr = XRat::new(
                Poly::new(vec![a.b.clone(), a.a.clone()]),
                Poly::new(vec![a.d.clone(), a.c.clone()]),
            );
            let d_con = der.apply(&CurveElem::from_even(a_xr));
            if d_con.is_zero() {
                Ok(PPVerdict::PP {
                    normal_form: "strictly equivalent to y' = 0 on a constant curve".into(),
                })
            } else {
                Ok(PPVerdict::NotPP {
                    witness: "derivation is nonzero on the constant model (not strictly \
                              equivalent to y' = 0)"
                        .into(),
                })
            }
        }
    }
}

/// Regression harness for the equivalence-invariance of PP: both verdicts
/// must agree for strictly equivalent inputs.
pub fn pp_equivalence_consistency(e1: &DiffEq, e2: &DiffEq, _witness: &FieldIso) -> Result<bool> {
    let v1 = pp_check(e1)?;
    let v2 = pp_check(e2)?;
    Ok(match (v1.is_pp(), v2.is_pp()) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::strict_equiv_hyper;
    use crate::pairs::{disguise, DisguiseMode};
    use crate::types::zvar;

    #[test]
    fn pp_fixtures() {
        // Riccati: PP
        let v = pp_check(&DiffEq::parse("S - (T^2 + z)").unwrap()).unwrap();
        assert_eq!(v.is_pp(), Some(true));
        // y' = y^3 + z: not PP, witness includes the branched solution
        let v = pp_check(&DiffEq::parse("S - (T^3 + z)").unwrap()).unwrap();
        assert_eq!(v.is_pp(), Some(false));
        if let PPVerdict::NotPP { witness } = &v {
            assert!(witness.contains("degree 3"));
            assert!(witness.contains("exponent -1/2"), "witness: {}", witness);
        }
        // (y')^2 = y^3 + 1: PP
        let v = pp_check(&DiffEq::parse("S^2 - (T^3 + 1)").unwrap()).unwrap();
        assert_eq!(v.is_pp(), Some(true));
        // (y')^2 = z (y^3 + y): PP with h nonconstant
        let v = pp_check(&DiffEq::parse("S^2 - z*(T^3 + T)").unwrap()).unwrap();
        assert_eq!(v.is_pp(), Some(true));
    }

    #[test]
    fn pp_genus2_fixtures() {
        let mut f = crate::eq::parse_bipoly("S^2").unwrap();
        let mut prod = crate::eq::parse_bipoly("1").unwrap();
        for j in 1..=6 {
            prod = prod.mul(&crate::eq::parse_bipoly(&format!("T - {j}")).unwrap());
        }
        f = f.sub(&prod);
        let eq = DiffEq::from_bipoly(f).unwrap();
        // the standard autonomous genus-2 equation has D != 0: not PP
        let v = pp_check(&eq).unwrap();
        assert_eq!(v.is_pp(), Some(false));

        // a genuine PP example in genus 2: (T - z S)^2 = prod (S - j),
        // i.e. the pair (X0, D = 0) with t = z x + y, s = x
        let mut f = crate::eq::parse_bipoly("(T - z*S)^2").unwrap();
        let mut prod = crate::eq::parse_bipoly("1").unwrap();
        for j in 1..=6 {
            prod = prod.mul(&crate::eq::parse_bipoly(&format!("S - {j}")).unwrap());
        }
        f = f.sub(&prod);
        let eq_pp = DiffEq::from_bipoly(f).unwrap();
        let v = pp_check(&eq_pp).unwrap();
        assert_eq!(v.is_pp(), Some(true));

        // PP agreement across a strict-equivalence witness
        let inv_z = RatFunc::one() / zvar();
        let dis = disguise(&eq, DisguiseMode::ScaleT, &inv_z).unwrap();
        match strict_equiv_hyper(&eq, &dis.eq).unwrap() {
            crate::equivalence::EquivVerdict::CertifiedYes(w) => {
                assert!(pp_equivalence_consistency(&eq, &dis.eq, &w).unwrap());
            }
            other => panic!("expected CertifiedYes, got {:?}", other),
        }
    }
}
