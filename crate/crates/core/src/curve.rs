//! Curves attached to equations: hyperelliptic function-field arithmetic
//! y^2 = P(x), genus computation (three routes), and the j-invariant in
//! genus one.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::eq::DiffEq;
use crate::field::Field;
use crate::local::{ramification_indices, BasePoint};
use crate::moebius::PPoint;
use crate::poly::Poly;
use crate::ratexpr::RatExpr;
use crate::roots::rational_function_roots;
use crate::types::{Rat, RatFunc, XPoly, XRat};

// ---------------------------------------------------------------------------
// Elements a(x) + b(x) y of F(x)[y]/(y^2 - P)
// ---------------------------------------------------------------------------

#[derive(Clone)]
pub struct CurveElem<F> {
    pub even: RatExpr<F>,
    pub odd: RatExpr<F>,
}

impl<F: Field> PartialEq for CurveElem<F> {
    fn eq(&self, other: &Self) -> bool {
        self.even == other.even && self.odd == other.odd
    }
}

impl<F: Field> std::fmt::Debug for CurveElem<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}) + ({:?})*y", self.even, self.odd)
    }
}

impl<F: Field> CurveElem<F> {
    pub fn zero() -> Self {
        CurveElem {
            even: RatExpr::zero(),
            odd: RatExpr::zero(),
        }
    }

    pub fn from_even(e: RatExpr<F>) -> Self {
        CurveElem {
            even: e,
            odd: RatExpr::zero(),
        }
    }

    pub fn x() -> Self {
        CurveElem::from_even(RatExpr::var())
    }

    pub fn y() -> Self {
        CurveElem {
            even: RatExpr::zero(),
            odd: RatExpr::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        CurveElem {
            even: self.even.clone() + rhs.even.clone(),
            odd: self.odd.clone() + rhs.odd.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        CurveElem {
            even: self.even.clone() - rhs.even.clone(),
            odd: self.odd.clone() - rhs.odd.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        CurveElem {
            even: -self.even.clone(),
            odd: -self.odd.clone(),
        }
    }

    /// Hyperelliptic involution y -> -y.
    pub fn conjugate(&self) -> Self {
        CurveElem {
            even: self.even.clone(),
            odd: -self.odd.clone(),
        }
    }

    pub fn scale(&self, c: &RatExpr<F>) -> Self {
        CurveElem {
            even: self.even.clone() * c.clone(),
            odd: self.odd.clone() * c.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self, p: &Poly<F>) -> Self {
        let px = RatExpr::from_poly(p.clone());
        CurveElem {
            even: self.even.clone() * rhs.even.clone()
                + self.odd.clone() * rhs.odd.clone() * px,
            odd: self.even.clone() * rhs.odd.clone() + self.odd.clone() * rhs.even.clone(),
        }
    }

    /// Field norm e^2 - o^2 P down to F(x).
    pub fn norm(&self, p: &Poly<F>) -> RatExpr<F> {
        let px = RatExpr::from_poly(p.clone());
        self.even.clone() * self.even.clone() - self.odd.clone() * self.odd.clone() * px
    }

    pub fn inv(&self, p: &Poly<F>) -> Option<Self> {
        let n = self.norm(p);
        if n.is_zero() {
            return None;
        }
        Some(CurveElem {
            even: self.even.clone() / n.clone(),
            odd: -(self.odd.clone() / n),
        })
    }

    pub fn div(&self, rhs: &Self, p: &Poly<F>) -> Self {
        self.mul(&rhs.inv(p).expect("division by zero curve element"), p)
    }

    pub fn pow(&self, e: usize, p: &Poly<F>) -> Self {
        let mut acc = CurveElem::from_even(RatExpr::one());
        for _ in 0..e {
            acc = acc.mul(self, p);
        }
        acc
    }

    /// True when both components are free of z (constants of the tower).
    pub fn is_z_free(&self) -> bool {
        let zf = |r: &RatExpr<F>| {
            r.num().coeffs().iter().all(|c| c.d_z().is_zero())
                && r.den().coeffs().iter().all(|c| c.d_z().is_zero())
        };
        zf(&self.even) && zf(&self.odd)
    }
}

/// Coefficient-wise z-derivative of a rational function in x.
pub fn rx_dz<F: Field>(a: &RatExpr<F>) -> RatExpr<F> {
    let dn = a.num().map_coeffs(|c| c.d_z());
    let dd = a.den().map_coeffs(|c| c.d_z());
    let num = &(&dn * a.den()) - &(a.num() * &dd);
    let den = a.den() * a.den();
    RatExpr::new(num, den)
}

/// Derivation on F(x)[y]/(y^2 - P) determined by D(x) and D(z) = 1:
/// D(y) = (P'(x) D(x) + P_z(x)) / (2y).
#[derive(Clone)]
pub struct CurveDer<F> {
    pub p: Poly<F>,
    pub dx: CurveElem<F>,
}

impl<F: Field> std::fmt::Debug for CurveDer<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CurveDer{{ p: {:?}, dx: {:?} }}", self.p, self.dx)
    }
}

impl<F: Field> CurveDer<F> {
    pub fn dy(&self) -> CurveElem<F> {
        let pprime = CurveElem::from_even(RatExpr::from_poly(self.p.derivative()));
        let pz = CurveElem::from_even(RatExpr::from_poly(
            self.p.map_coeffs(|c| c.d_z()),
        ));
        let num = pprime.mul(&self.dx, &self.p).add(&pz);
        // 1/(2y) = y/(2P)
        let half_inv = CurveElem {
            even: RatExpr::zero(),
            odd: RatExpr::one()
                / (RatExpr::from_poly(self.p.clone()) * RatExpr::from_rat(&Rat::from_integer(2.into()))),
        };
        num.mul(&half_inv, &self.p)
    }

    pub fn apply(&self, u: &CurveElem<F>) -> CurveElem<F> {
        let e = &u.even;
        let o = &u.odd;
        let mut out = CurveElem::from_even(rx_dz(e));
        out = out.add(&CurveElem::from_even(e.derivative()).mul(&self.dx, &self.p));
        let oterm = CurveElem {
            even: RatExpr::zero(),
            odd: rx_dz(o),
        };
        out = out.add(&oterm);
        let oprime = CurveElem {
            even: RatExpr::zero(),
            odd: o.derivative(),
        };
        out = out.add(&oprime.mul(&self.dx, &self.p));
        out = out.add(&CurveElem::from_even(o.clone()).mul(&self.dy(), &self.p));
        out
    }
}

// ---------------------------------------------------------------------------
// Hyperelliptic model extraction from equations quadratic in S or T
// ---------------------------------------------------------------------------

/// Presentation y^2 = P(x) with the derivation transported.
#[derive(Clone, Debug)]
pub struct HyperModel {
    pub p: XPoly,
    pub genus: usize,
    /// D(x) as an element of Q(z)(x)[y]/(y^2 - P).
    pub dx: CurveElem<RatFunc>,
    /// Branch points in P^1(Q(z)) when P splits (infinity included for odd
    /// degree); None otherwise.
    pub roots: Option<Vec<BasePoint>>,
    /// x is the original T (false) or S (true).
    pub swapped: bool,
    /// y = (2 e2 V + e1)/sigma in terms of the original variable V.
    pub e1: XPoly,
    pub e2: XPoly,
    pub sigma: RatExpr<RatFunc>,
}

fn xrat_num(c: &XRat) -> XPoly {
    assert!(c.is_poly(), "expected polynomial coefficient");
    c.num().clone()
}

/// Res_S(f, df/dS) for f given by its S-coefficients in Q(z)[T], computed by
/// evaluation at T-points and Lagrange interpolation (avoids remainder
/// sequences over the nested fraction field).
pub fn resultant_s_interp(bvec: &[XPoly]) -> XPoly {
    let n = bvec.len() - 1;
    assert!(n >= 1 && !bvec[n].is_zero());
    if n == 1 {
        // Res(f, f') for linear f is the constant lc
        return Poly::constant(bvec[1].lc());
    }
    let max_t = bvec.iter().filter_map(|b| b.degree()).max().unwrap_or(0);
    let needed = (2 * n - 1) * max_t + 1;
    let mut pts: Vec<(RatFunc, RatFunc)> = vec![];
    let mut k: i64 = 0;
    while pts.len() < needed {
        let t0 = RatFunc::from_rat(&Rat::from_integer(k.into()));
        k = if k > 0 { -k } else { -k + 1 };
        // degree must not drop for either argument
        if bvec[n].eval(&t0).is_zero() {
            continue;
        }
        let fq: Poly<RatFunc> = Poly::new(bvec.iter().map(|b| b.eval(&t0)).collect());
        let dq = fq.derivative();
        if dq.degree() != Some(n - 1) {
            continue;
        }
        let r = fq.resultant(&dq);
        pts.push((t0, r));
    }
    lagrange_interpolate(&pts)
}

fn lagrange_interpolate<F: Field>(pts: &[(F, F)]) -> Poly<F> {
    let mut acc = Poly::<F>::zero();
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = Poly::constant(yi.clone());
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi.clone() - xj.clone();
            let lin = Poly::new(vec![-xj.clone() / denom.clone(), F::one() / denom]);
            basis = &basis * &lin;
        }
        acc = &acc + &basis;
    }
    acc
}

/// Evaluate a bivariate polynomial at curve elements for (S, T).
pub fn bipoly_eval_curve(
    f: &crate::bipoly::BiPoly,
    s_val: &CurveElem<RatFunc>,
    t_val: &CurveElem<RatFunc>,
    p: &XPoly,
) -> CurveElem<RatFunc> {
    let mut out = CurveElem::zero();
    for (&(i, j), c) in f.terms() {
        let term = s_val
            .pow(i, p)
            .mul(&t_val.pow(j, p), p)
            .scale(&XRat::constant(c.clone()));
        out = out.add(&term);
    }
    out
}

/// Complete the square on an equation quadratic in S or T. No genus bound.
pub fn quadratic_model(eq: &DiffEq) -> Result<HyperModel> {
    let (poly, swapped) = if eq.deg_s() == 2 {
        (eq.f().as_s_poly(), false)
    } else if eq.deg_t() == 2 {
        (eq.f().as_t_poly(), true)
    } else {
        return Err(Error::NotHyperellipticSupported);
    };
    let e2 = xrat_num(&poly.coeff(2));
    let e1 = xrat_num(&poly.coeff(1));
    let e0 = xrat_num(&poly.coeff(0));
    let delta = &(&e1 * &e1) - &(&(&e2 * &e0).scale(&RatFunc::from_rat(&Rat::from_integer(4.into()))));
    assert!(!delta.is_zero(), "degenerate discriminant for a valid equation");

    // delta = unit * prod d_k^k; split squares out.
    let unit = delta.lc();
    let mut sigma_poly = XPoly::one();
    let mut odd_part = XPoly::one();
    for (d, k) in delta.monic().squarefree_decomposition() {
        for _ in 0..(k / 2) {
            sigma_poly = &sigma_poly * &d;
        }
        if k % 2 == 1 {
            odd_part = &odd_part * &d;
        }
    }
    let (sig_c, unit_sf) = crate::factor::ratfunc_square_split(&unit);
    let p = odd_part.scale(&unit_sf);
    if p.is_constant() {
        return Err(Error::Unsupported(
            "discriminant is a perfect square; curve is not irreducible".into(),
        ));
    }
    let sigma = XRat::from_poly(sigma_poly) * XRat::constant(sig_c);
    let genus = (p.deg() + 1) / 2 - 1;

    // roots of P over Q(z), plus infinity for odd degree
    let rr = rational_function_roots(&p);
    let roots = if rr.len() == p.deg() {
        let mut v: Vec<BasePoint> = rr.into_iter().map(PPoint::Finite).collect();
        if p.deg() % 2 == 1 {
            v.push(PPoint::Infinity);
        }
        Some(v)
    } else {
        None
    };

    let e1x = XRat::from_poly(e1.clone());
    let e2x = XRat::from_poly(e2.clone());
    let two = XRat::from_rat(&Rat::from_integer(2.into()));
    let dx = if !swapped {
        // x = T, and D(x) = s = (sigma y - e1) / (2 e2)
        CurveElem {
            even: -(e1x.clone() / (two.clone() * e2x.clone())),
            odd: sigma.clone() / (two.clone() * e2x.clone()),
        }
    } else {
        // x = S; t = (sigma y - e1)/(2 e2); D(x) = s' = -(x f_T + f_z)/f_S
        let tau = CurveElem {
            even: -(e1x.clone() / (two.clone() * e2x.clone())),
            odd: sigma.clone() / (two.clone() * e2x.clone()),
        };
        let xelem = CurveElem::<RatFunc>::x();
        let f_t = bipoly_eval_curve(&eq.f().partial_t(), &xelem, &tau, &p);
        let f_z = bipoly_eval_curve(&eq.f().partial_z(), &xelem, &tau, &p);
        let f_s = bipoly_eval_curve(&eq.f().partial_s(), &xelem, &tau, &p);
        let num = xelem.mul(&f_t, &p).add(&f_z).neg();
        let inv = f_s
            .inv(&p)
            .expect("separant invertible on the curve");
        num.mul(&inv, &p)
    };

    Ok(HyperModel {
        p,
        genus,
        dx,
        roots,
        swapped,
        e1,
        e2,
        sigma,
    })
}

/// The spec operation: hyperelliptic presentation for genus >= 2 equations.
pub fn hyperelliptic_model(eq: &DiffEq) -> Result<HyperModel> {
    let m = quadratic_model(eq)?;
    if m.genus < 2 {
        return Err(Error::GenusTooSmall);
    }
    Ok(m)
}

impl HyperModel {
    pub fn derivation(&self) -> CurveDer<RatFunc> {
        CurveDer {
            p: self.p.clone(),
            dx: self.dx.clone(),
        }
    }

    pub fn dy(&self) -> CurveElem<RatFunc> {
        self.derivation().dy()
    }
}

// ---------------------------------------------------------------------------
// Genus
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub enum GenusMethod {
    LinearInVariable,
    HyperellipticNormalForm,
    RiemannHurwitz,
}

#[derive(Clone, Debug)]
pub enum GenusCertificate {
    /// The equation is linear in S or T; the curve is rational.
    Parametrization { solved_variable: char },
    /// y^2 = P(x) with P squarefree of the recorded degree.
    NormalForm { p: XPoly },
    /// Projection degree and the total sum of (e - 1) over all branches.
    BranchTable {
        degree: usize,
        contributions: usize,
    },
}

impl GenusCertificate {
    /// Re-derive the genus this certificate supports.
    pub fn claimed_genus(&self) -> Option<usize> {
        match self {
            GenusCertificate::Parametrization { .. } => Some(0),
            GenusCertificate::NormalForm { p } => Some((p.deg() + 1) / 2 - 1),
            GenusCertificate::BranchTable {
                degree,
                contributions,
            } => {
                let lhs = *contributions as i64 - 2 * *degree as i64 + 2;
                if lhs >= 0 && lhs % 2 == 0 {
                    Some((lhs / 2) as usize)
                } else {
                    None
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenusReport {
    pub genus: usize,
    pub method: GenusMethod,
    pub certificate: GenusCertificate,
}

/// Genus via Riemann-Hurwitz for the degree-n projection to the T-line.
pub fn genus_riemann_hurwitz(eq: &DiffEq) -> Result<GenusReport> {
    let sp = eq.as_s_poly();
    let n = sp.deg();
    let bvec: Vec<XPoly> = sp.coeffs().iter().map(xrat_num).collect();

    let res = resultant_s_interp(&bvec);
    let (dpoly, rem) = res.div_rem(&bvec[n]);
    assert!(rem.is_zero(), "discriminant is a polynomial");
    if dpoly.is_zero() {
        return Err(Error::UnsupportedBranchLocus(
            "vanishing discriminant".into(),
        ));
    }

    let mut contributions = 0usize;
    let lc_poly = bvec[n].monic();
    let decomp = dpoly.monic().squarefree_decomposition();
    let mut polygon_targets: Vec<XPoly> = vec![];
    for (d, k) in decomp {
        if k == 1 {
            let overlap = d.gcd(&lc_poly);
            let plain = d.exact_div(&overlap);
            contributions += plain.degree().unwrap_or(0);
            if !overlap.is_constant() {
                polygon_targets.push(overlap);
            }
        } else if !d.is_constant() {
            polygon_targets.push(d);
        }
    }
    for q in polygon_targets {
        let roots = rational_function_roots(&q);
        if roots.len() != q.deg() {
            return Err(Error::UnsupportedBranchLocus(format!(
                "non-rational multiple branch point (factor of degree {})",
                q.deg()
            )));
        }
        for alpha in roots {
            let es = ramification_indices(&bvec, &PPoint::Finite(alpha))?;
            contributions += es.iter().map(|e| e - 1).sum::<usize>();
        }
    }
    let es = ramification_indices(&bvec, &PPoint::Infinity)?;
    contributions += es.iter().map(|e| e - 1).sum::<usize>();

    let lhs = contributions as i64 - 2 * n as i64 + 2;
    if lhs < 0 || lhs % 2 != 0 {
        return Err(Error::UnsupportedBranchLocus(format!(
            "Riemann-Hurwitz bookkeeping failed (2g = {lhs})"
        )));
    }
    Ok(GenusReport {
        genus: (lhs / 2) as usize,
        method: GenusMethod::RiemannHurwitz,
        certificate: GenusCertificate::BranchTable {
            degree: n,
            contributions,
        },
    })
}

/// Genus of the smooth projective model of the curve attached to f.
pub fn genus(eq: &DiffEq) -> Result<GenusReport> {
    if eq.deg_s() == 1 || eq.deg_t() == 1 {
        let solved = if eq.deg_s() == 1 { 'S' } else { 'T' };
        return Ok(GenusReport {
            genus: 0,
            method: GenusMethod::LinearInVariable,
            certificate: GenusCertificate::Parametrization {
                solved_variable: solved,
            },
        });
    }
    if eq.deg_s() == 2 || eq.deg_t() == 2 {
        let m = quadratic_model(eq)?;
        return Ok(GenusReport {
            genus: m.genus,
            method: GenusMethod::HyperellipticNormalForm,
            certificate: GenusCertificate::NormalForm { p: m.p },
        });
    }
    genus_riemann_hurwitz(eq)
}

// ---------------------------------------------------------------------------
// j-invariant (genus 1)
// ---------------------------------------------------------------------------

/// j-invariant of a genus-1 equation reducible to w^2 = cubic/quartic.
pub fn j_invariant(eq: &DiffEq) -> Result<RatFunc> {
    let rep = genus(eq)?;
    if rep.genus != 1 {
        return Err(Error::Unsupported(format!(
            "j-invariant requires genus 1, got {}",
            rep.genus
        )));
    }
    let m = quadratic_model(eq)?;
    let p = m.p;
    let cubic: XPoly = match p.deg() {
        3 => p,
        4 => {
            // move a rational branch point to infinity: x = r + 1/u
            let roots = rational_function_roots(&p);
            let r = roots.first().cloned().ok_or(Error::NoRationalPoint)?;
            // C(u) = sum p_i u^(4-i) (r u + 1)^i
            let mut c = XPoly::zero();
            let ru1 = Poly::new(vec![RatFunc::one(), r.clone()]);
            for (i, pi) in p.coeffs().iter().enumerate() {
                let term = ru1.pow(i).shift_up(4 - i).scale(pi);
                c = &c + &term;
            }
            assert!(c.degree() == Some(3), "quartic shift must give a cubic");
            c
        }
        _ => {
            return Err(Error::Unsupported(
                "genus-1 model is not a cubic or quartic".into(),
            ))
        }
    };
    let c3 = cubic.coeff(3);
    let c2 = cubic.coeff(2);
    let c1 = cubic.coeff(1);
    let c0 = cubic.coeff(0);
    let three = RatFunc::from_rat(&crate::types::rat_i(3));
    let a = c1.clone() * c3.clone() - c2.clone() * c2.clone() / three.clone();
    let b = c0 * c3.clone() * c3.clone() - c1 * c2.clone() * c3 / three
        + RatFunc::from_rat(&crate::types::rat(2, 27)) * c2.clone() * c2.clone() * c2;
    let fourac = RatFunc::from_rat(&crate::types::rat_i(4)) * a.clone() * a.clone() * a.clone();
    let den = fourac.clone() + RatFunc::from_rat(&crate::types::rat_i(27)) * b.clone() * b;
    assert!(!den.is_zero(), "singular cubic for a genus-1 curve");
    Ok(RatFunc::from_rat(&crate::types::rat_i(1728)) * fourac / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::upoly;
    use crate::types::{rat_i, rf_poly, zvar};

    #[test]
    fn genus_fixtures() {
        let g = genus(&DiffEq::parse("S - T^3 - z").unwrap()).unwrap();
        assert_eq!(g.genus, 0);
        assert_eq!(g.method, GenusMethod::LinearInVariable);

        let g = genus(&DiffEq::parse("S^2 - (T^6 - 1)").unwrap()).unwrap();
        assert_eq!(g.genus, 2);
        assert_eq!(g.method, GenusMethod::HyperellipticNormalForm);

        let g = genus(&DiffEq::parse("S^2 - (T^3 + 1)").unwrap()).unwrap();
        assert_eq!(g.genus, 1);

        // certificate re-checks
        let g = genus(&DiffEq::parse("S^2 - (T^6 - 1)").unwrap()).unwrap();
        assert_eq!(g.certificate.claimed_genus(), Some(2));
    }

    #[test]
    fn model_standard_genus_two() {
        let eq = DiffEq::parse("S^2 - (T^6 - 1)").unwrap();
        let m = hyperelliptic_model(&eq).unwrap();
        // P = x^6 - 1, D(x) = y, D(y) = 3 x^5
        let expect_p: XPoly = upoly(&[-1, 0, 0, 0, 0, 0, 1]).map_coeffs(|c| RatFunc::constant(c.clone()));
        assert_eq!(m.p, expect_p);
        assert_eq!(m.dx, CurveElem::y());
        let dy = m.dy();
        let expect_dy = CurveElem::from_even(XRat::from_poly(
            upoly(&[0, 0, 0, 0, 0, 3]).map_coeffs(|c| RatFunc::constant(c.clone())),
        ));
        assert_eq!(dy, expect_dy);
        assert_eq!(m.genus, 2);
        // x^6 - 1 has only two rational roots, so the branch set does not
        // split over Q(z)
        assert!(m.roots.is_none());

        // prod (T - j) does split
        let mut f = crate::eq::parse_bipoly("S^2").unwrap();
        let mut prod = crate::eq::parse_bipoly("1").unwrap();
        for j in 1..=6 {
            prod = prod.mul(&crate::eq::parse_bipoly(&format!("T - {j}")).unwrap());
        }
        f = f.sub(&prod);
        let eq = DiffEq::from_bipoly(f).unwrap();
        let m = hyperelliptic_model(&eq).unwrap();
        let roots = m.roots.as_ref().expect("prod (T - j) splits");
        assert_eq!(roots.len(), 2 + 2 * m.genus);
    }

    #[test]
    fn model_disguised_example() {
        // (zS + T)^2 - prod_{j=1..6} (zT - j): P of degree 6 over Q(z)
        let mut f = crate::eq::parse_bipoly("(z*S + T)^2").unwrap();
        let mut prod = crate::eq::parse_bipoly("1").unwrap();
        for j in 1..=6 {
            prod = prod.mul(&crate::eq::parse_bipoly(&format!("z*T - {j}")).unwrap());
        }
        f = f.sub(&prod);
        let eq = DiffEq::from_bipoly(f).unwrap();
        let m = hyperelliptic_model(&eq).unwrap();
        assert_eq!(m.genus, 2);
        assert_eq!(m.p.deg(), 6);
        let roots = m.roots.as_ref().expect("P splits over Q(z)");
        // roots are j/z
        let z = zvar();
        for j in 1..=6i64 {
            let r = RatFunc::constant(rat_i(j)) / z.clone();
            assert!(roots.contains(&PPoint::Finite(r)));
        }
    }

    #[test]
    fn genus_too_small_guard() {
        let eq = DiffEq::parse("S^2 - (T^4 - 1)").unwrap();
        assert!(matches!(
            hyperelliptic_model(&eq),
            Err(Error::GenusTooSmall)
        ));
    }

    #[test]
    fn rh_agrees_with_normal_form() {
        for text in [
            "S^2 - (T^6 - 1)",
            "S^2 - (T^3 + 1)",
            "S^2 - (T^5 + z)",
            "S^2 - (T^4 + z*T + 1)",
        ] {
            let eq = DiffEq::parse(text).unwrap();
            let a = genus(&eq).unwrap();
            let b = genus_riemann_hurwitz(&eq).unwrap();
            assert_eq!(a.genus, b.genus, "mismatch for {}", text);
        }
    }

    #[test]
    fn genus_swap_invariance() {
        // swapping roles of S and T preserves the curve
        let e1 = DiffEq::parse("S^2 - (T^6 - 1)").unwrap();
        let e2 = DiffEq::parse("T^2 - (S^6 - 1)").unwrap();
        assert_eq!(genus(&e1).unwrap().genus, genus(&e2).unwrap().genus);
    }

    #[test]
    fn j_invariant_fixtures() {
        let j = j_invariant(&DiffEq::parse("S^2 - (T^3 + 1)").unwrap()).unwrap();
        assert!(j.is_zero());
        let j = j_invariant(&DiffEq::parse("S^2 - (T^3 + T)").unwrap()).unwrap();
        assert_eq!(j, RatFunc::from_rat(&rat_i(1728)));
        let j = j_invariant(&DiffEq::parse("S^2 - (T^3 + z*T)").unwrap()).unwrap();
        assert_eq!(j, RatFunc::from_rat(&rat_i(1728)));
        // nonconstant j
        let j = j_invariant(&DiffEq::parse("S^2 - (T^3 + z*T + 1)").unwrap()).unwrap();
        assert!(!j.is_constant());
        let z = zvar();
        let four_z3 = RatFunc::from_rat(&rat_i(4)) * z.clone() * z.clone() * z.clone();
        let expect = RatFunc::from_rat(&rat_i(1728)) * four_z3.clone()
            / (four_z3 + RatFunc::from_rat(&rat_i(27)));
        assert_eq!(j, expect);
    }

    #[test]
    fn j_scaling_invariance() {
        // x -> u^2 x, y -> u^3 y preserves j: y^2 = x^3 + a x + b becomes
        // y^2 = x^3 + a u^-4 x + b u^-6 after scaling; test with u = z
        let eq1 = DiffEq::parse("S^2 - (T^3 + z*T + 1)").unwrap();
        let j1 = j_invariant(&eq1).unwrap();
        // a' = z * z^-4? build directly: a = z, b = 1, u = z: a' = z^-3... use
        // integer u = 2: a' = z/16, b' = 1/64
        let eq2 = DiffEq::parse("S^2 - (T^3 + 1/16*z*T + 1/64)").unwrap();
        let j2 = j_invariant(&eq2).unwrap();
        assert_eq!(j1, j2);
    }

    #[test]
    fn curve_derivation_consistency() {
        // D(y^2 - P(x)) = 0 identically
        let eq = DiffEq::parse("S^2 - (T^6 - 1)").unwrap();
        let m = hyperelliptic_model(&eq).unwrap();
        let der = m.derivation();
        // check 2 y D(y) = P'(x) D(x) + P_z
        let two_y = CurveElem::y().scale(&XRat::from_rat(&rat_i(2)));
        let lhs = two_y.mul(&der.dy(), &m.p);
        let rhs = CurveElem::from_even(XRat::from_poly(m.p.derivative()))
            .mul(&m.dx, &m.p)
            .add(&CurveElem::from_even(XRat::from_poly(
                m.p.map_coeffs(|c| c.derivative()),
            )));
        assert_eq!(lhs, rhs);
        let _ = rf_poly(upoly(&[1]));
    }
}
