//! Parsing and validation of equations f(y', y, z) = 0, plus the induced
//! derivation on the generic-solution algebra K[s, t, 1/d]/(f).

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::types::{rat_i, Rat, RatFunc, UPoly, XRat};

// ---------------------------------------------------------------------------
// Parser. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := 'S' | 'T' | "y'" | 'y' | 'z' | rational | '(' expr ')'
//   rational := integer ('/' positive-integer)?
// Whitespace insignificant; no implicit multiplication.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    S,
    T,
    Z,
    Num(Rat),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = vec![];
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            'S' => {
                toks.push((i, Tok::S));
                i += 1;
            }
            'T' => {
                toks.push((i, Tok::T));
                i += 1;
            }
            'y' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'\'' {
                    toks.push((i, Tok::S));
                    i += 2;
                } else {
                    toks.push((i, Tok::T));
                    i += 1;
                }
            }
            'z' => {
                toks.push((i, Tok::Z));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: num_bigint::BigInt = text[start..i].parse().unwrap();
                // optional '/ positive-integer' forming a rational literal
                let mut denom = num_bigint::BigInt::one();
                if i < bytes.len() && bytes[i] == b'/' {
                    let mut j = i + 1;
                    let dstart = j;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == dstart {
                        return Err(Error::Syntax {
                            pos: i,
                            msg: "expected digits after '/'".into(),
                        });
                    }
                    denom = text[dstart..j].parse().unwrap();
                    if denom.is_zero() {
                        return Err(Error::Syntax {
                            pos: dstart,
                            msg: "zero denominator".into(),
                        });
                    }
                    i = j;
                }
                toks.push((start, Tok::Num(Rat::new(numer, denom))));
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{}'", c),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(Error::Syntax {
                pos,
                msg: format!("expected {}", what),
            }),
        }
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Num(q)) if q.denom().is_one() && !num_traits::Signed::is_negative(q.numer()) => {
                    let e: usize = q.numer().try_into().map_err(|_| Error::Syntax {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Syntax {
                    pos,
                    msg: "expected natural number exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<BiPoly> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::S) => Ok(BiPoly::s()),
            Some(Tok::T) => Ok(BiPoly::t()),
            Some(Tok::Z) => Ok(BiPoly::constant(RatFunc::var())),
            Some(Tok::Num(q)) => Ok(BiPoly::constant(RatFunc::constant(q))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(Error::Syntax {
                pos,
                msg: "expected S, T, y', y, z, a rational, or '('".into(),
            }),
        }
    }
}

pub fn parse_bipoly(text: &str) -> Result<BiPoly> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Syntax {
            pos: p.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Validated equations
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq)]
pub struct DiffEq {
    f: BiPoly,
    deg_s: usize,
    deg_t: usize,
}

impl std::fmt::Debug for DiffEq {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fm, "DiffEq({})", self.f.to_input_string())
    }
}

impl DiffEq {
    pub fn parse(text: &str) -> Result<DiffEq> {
        DiffEq::from_bipoly(parse_bipoly(text)?)
    }

    pub fn from_bipoly(raw: BiPoly) -> Result<DiffEq> {
        let f = raw.normalize();
        let deg_s = f.deg_s();
        let deg_t = f.deg_t();
        if deg_s == 0 {
            return Err(Error::DegenerateEquation("no S".into()));
        }
        if deg_t == 0 {
            return Err(Error::DegenerateEquation("no T".into()));
        }
        // No factor in Q(z)[T] alone: content as polynomial in S.
        let sp = f.as_s_poly();
        let mut content_t = Poly::<RatFunc>::zero();
        for c in sp.coeffs() {
            // coefficients are polynomials in T over Q(z)
            assert!(c.is_poly());
            content_t = content_t.gcd(c.num());
            if content_t.is_one() {
                break;
            }
        }
        if !content_t.is_constant() {
            return Err(Error::DegenerateEquation("factor in T alone".into()));
        }
        let tp = f.as_t_poly();
        let mut content_s = Poly::<RatFunc>::zero();
        for c in tp.coeffs() {
            assert!(c.is_poly());
            content_s = content_s.gcd(c.num());
            if content_s.is_one() {
                break;
            }
        }
        if !content_s.is_constant() {
            return Err(Error::DegenerateEquation("factor in S alone".into()));
        }
        // Squarefree as a polynomial in (S, T): with monovariate content
        // excluded it suffices that the S-discriminant does not vanish.
        if deg_s >= 2 {
            let bvec: Vec<crate::types::XPoly> = sp
                .coeffs()
                .iter()
                .map(|c| {
                    assert!(c.is_poly());
                    c.num().clone()
                })
                .collect();
            let res = crate::curve::resultant_s_interp(&bvec);
            if res.is_zero() {
                return Err(Error::NotSquarefree);
            }
        }
        let eq = DiffEq { f, deg_s, deg_t };
        eq.probable_irreducibility_check()?;
        Ok(eq)
    }

    /// Heuristic irreducibility screen from the design decisions: specialize
    /// z at three rationals; certify via a univariate specialization staying
    /// irreducible, and reject only when every specialization looks reducible.
    fn probable_irreducibility_check(&self) -> Result<()> {
        let z_points: [i64; 5] = [7, 11, 13, 17, 23];
        let mut tested = 0;
        let mut suspicious = 0;
        for &zi in z_points.iter() {
            if tested == 3 {
                break;
            }
            let z0 = rat_i(zi);
            let Some(spec) = self.f.specialize_z(&z0) else {
                continue;
            };
            let ds = spec.keys().map(|k| k.0).max().unwrap_or(0);
            let dt = spec.keys().map(|k| k.1).max().unwrap_or(0);
            if ds != self.deg_s || dt != self.deg_t {
                continue;
            }
            tested += 1;
            let mut certified = false;
            for cand in [0i64, 1, -1, 2, -2, 3, -3, 5, -5, 4] {
                let t0 = rat_i(cand);
                // f(S, t0, z0) in Q[S]
                let mut p = vec![Rat::zero(); ds + 1];
                for (&(i, j), c) in spec.iter() {
                    let mut pw = Rat::one();
                    for _ in 0..j {
                        pw = pw * t0.clone();
                    }
                    p[i] = p[i].clone() + c.clone() * pw;
                }
                let p = UPoly::new(p);
                if p.degree() == Some(ds) && ds >= 1 && crate::factor::is_irreducible(&p) {
                    certified = true;
                    break;
                }
                // also try specializing S and reading in T
                let s0 = t0;
                let mut q = vec![Rat::zero(); dt + 1];
                for (&(i, j), c) in spec.iter() {
                    let mut pw = Rat::one();
                    for _ in 0..i {
                        pw = pw * s0.clone();
                    }
                    q[j] = q[j].clone() + c.clone() * pw;
                }
                let q = UPoly::new(q);
                if q.degree() == Some(dt) && dt >= 1 && crate::factor::is_irreducible(&q) {
                    certified = true;
                    break;
                }
            }
            if !certified {
                suspicious += 1;
            }
        }
        if tested >= 1 && suspicious == tested {
            return Err(Error::ProbablyReducible(
                "all z-specializations factor".into(),
            ));
        }
        Ok(())
    }

    pub fn f(&self) -> &BiPoly {
        &self.f
    }

    pub fn separant(&self) -> BiPoly {
        self.f.partial_s()
    }

    pub fn deg_s(&self) -> usize {
        self.deg_s
    }

    pub fn deg_t(&self) -> usize {
        self.deg_t
    }

    pub fn is_autonomous(&self) -> bool {
        self.f.terms().all(|(_, c)| c.is_constant())
    }

    pub fn as_s_poly(&self) -> Poly<XRat> {
        self.f.as_s_poly()
    }

    pub fn to_input_string(&self) -> String {
        self.f.to_input_string()
    }

    /// Reduce an element of Q(z)(T)[S] modulo f.
    pub fn reduce(&self, p: &Poly<XRat>) -> Poly<XRat> {
        p.div_rem(&self.as_s_poly()).1
    }

    /// Inverse modulo f; f is irreducible over Q(z)(T), so this only fails
    /// for elements congruent to zero.
    pub fn inv_mod(&self, p: &Poly<XRat>) -> Result<Poly<XRat>> {
        let fpoly = self.as_s_poly();
        let red = p.div_rem(&fpoly).1;
        if red.is_zero() {
            return Err(Error::NonInvertibleDenominator);
        }
        let (g, s, _) = red.extended_gcd(&fpoly);
        if !g.is_constant() {
            return Err(Error::NonInvertibleDenominator);
        }
        let ginv = XRat::inv(&g.coeff(0));
        Ok(self.reduce(&s.scale(&ginv)))
    }
}

// ---------------------------------------------------------------------------
// Induced derivation
// ---------------------------------------------------------------------------

/// Derivation data on K[s, t, 1/d]/(f): t' = s and the reduced s' rule.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub eq: DiffEq,
    /// s' = -(s f_T + f_z)/f_S reduced modulo f (degree < deg_S f in S).
    pub s_prime: Poly<XRat>,
}

pub fn induced_derivation(eq: &DiffEq) -> Derivation {
    let f_t = eq.f().partial_t().as_s_poly();
    let f_z = eq.f().partial_z().as_s_poly();
    let f_s = eq.f().partial_s().as_s_poly();
    let s = Poly::<XRat>::var();
    let num = -(&(&s * &f_t) + &f_z);
    let inv = eq
        .inv_mod(&f_s)
        .expect("separant is invertible for a valid equation");
    let s_prime = eq.reduce(&(&eq.reduce(&num) * &inv));
    Derivation {
        eq: eq.clone(),
        s_prime,
    }
}

/// z-derivative of an element of Q(z)(T) (coefficient-wise on num and den).
pub fn xrat_dz(a: &XRat) -> XRat {
    let dnum = a.num().map_coeffs(|c: &RatFunc| c.derivative());
    let dden = a.den().map_coeffs(|c: &RatFunc| c.derivative());
    let num = &(&dnum * a.den()) - &(a.num() * &dden);
    let den = a.den() * a.den();
    XRat::new(num, den)
}

impl Derivation {
    /// Apply the derivation to an element written as a polynomial in S over
    /// Q(z)(T), reducing modulo f.
    pub fn apply(&self, elem: &Poly<XRat>) -> Poly<XRat> {
        let eq = &self.eq;
        let reduced = eq.reduce(elem);
        let s = Poly::<XRat>::var();
        let mut out = Poly::<XRat>::zero();
        for (i, a) in reduced.coeffs().iter().enumerate() {
            // coefficient part: d/dz + (dT) * t' with t' = s
            let coeff_part = Poly::constant(xrat_dz(a)) + Poly::constant(a.derivative()) * s.clone();
            out = out + coeff_part * s.pow(i);
            // power part: a * i * S^(i-1) * s'
            if i > 0 {
                let c = Poly::constant(a.clone() * XRat::from_i64(i as i64));
                out = out + c * s.pow(i - 1) * self.s_prime.clone();
            }
        }
        eq.reduce(&out)
    }

    /// Apply to a fraction p/q of elements; q must be invertible mod f.
    pub fn apply_fraction(
        &self,
        num: &Poly<XRat>,
        den: &Poly<XRat>,
    ) -> Result<(Poly<XRat>, Poly<XRat>)> {
        // (p/q)' = (p' q - p q') / q^2; q must be invertible mod f
        self.eq.inv_mod(den)?;
        let p = self.eq.reduce(num);
        let q = self.eq.reduce(den);
        let dp = self.apply(&p);
        let dq = self.apply(&q);
        let n = &(&dp * &q) - &(&p * &dq);
        let d = &q * &q;
        Ok((self.eq.reduce(&n), self.eq.reduce(&d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::upoly;

    fn xr_tpoly(cs: &[i64]) -> XRat {
        XRat::from_poly(Poly::new(
            cs.iter().map(|&n| RatFunc::from_rat(&rat_i(n))).collect(),
        ))
    }

    #[test]
    fn parse_fixtures() {
        let eq = DiffEq::parse("S - T^3 - z").unwrap();
        assert_eq!(eq.deg_s(), 1);
        assert_eq!(eq.deg_t(), 3);
        assert!(!eq.is_autonomous());

        let eq = DiffEq::parse("S^2 - (T^6 - 1)").unwrap();
        assert_eq!(eq.deg_s(), 2);
        assert_eq!(eq.deg_t(), 6);
        assert!(eq.is_autonomous());

        match DiffEq::parse("T^2 - z") {
            Err(Error::DegenerateEquation(m)) => assert_eq!(m, "no S"),
            other => panic!("expected DegenerateEquation, got {:?}", other),
        }

        // aliases: y' == S, y == T
        let eq2 = DiffEq::parse("y' - y^3 - z").unwrap();
        assert_eq!(eq2.f(), DiffEq::parse("S - T^3 - z").unwrap().f());

        // content over Q(z) removed: (z/z) S - T parses to S - T
        let eq3 = DiffEq::parse("z*S - z*T").unwrap();
        assert!(eq3.is_autonomous());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            DiffEq::parse("S + + T"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            DiffEq::parse("S T"),
            Err(Error::Syntax { .. })
        ));
        // squarefree rejection: (S - T)^2
        assert!(matches!(
            DiffEq::parse("(S - T)^2"),
            Err(Error::NotSquarefree)
        ));
        // reducible: (S - T)*(S + T) = S^2 - T^2
        assert!(matches!(
            DiffEq::parse("S^2 - T^2"),
            Err(Error::ProbablyReducible(_))
        ));
    }

    #[test]
    fn parse_print_parse_identity() {
        for text in ["S - T^3 - z", "S^2 - T^6 + 1", "2*S^2*T - 3*z*T^2 + 1/2"] {
            let eq = DiffEq::parse(text).unwrap();
            let printed = eq.to_input_string();
            let eq2 = DiffEq::parse(&printed).unwrap();
            assert_eq!(eq.f(), eq2.f(), "roundtrip failed for {}", text);
        }
    }

    #[test]
    fn induced_derivation_fixtures() {
        // f = S^2 - (T^6 - 1): s' = 3 t^5
        let eq = DiffEq::parse("S^2 - (T^6 - 1)").unwrap();
        let der = induced_derivation(&eq);
        let expected = Poly::constant(xr_tpoly(&[0, 0, 0, 0, 0, 3]));
        assert_eq!(der.s_prime, expected);

        // f = S - T^3 - z: s' = 3 t^2 s + 1 (mod f: s = t^3 + z)
        let eq = DiffEq::parse("S - T^3 - z").unwrap();
        let der = induced_derivation(&eq);
        let s = Poly::<XRat>::var();
        let direct = Poly::constant(xr_tpoly(&[0, 0, 3])) * s + Poly::constant(xr_tpoly(&[1]));
        assert_eq!(der.s_prime, eq.reduce(&direct));

        // f = S - T: s' = s
        let eq = DiffEq::parse("S - T").unwrap();
        let der = induced_derivation(&eq);
        let s = Poly::<XRat>::var();
        assert_eq!(der.s_prime, eq.reduce(&s));
    }

    #[test]
    fn apply_derivation_fixtures() {
        let eq = DiffEq::parse("S^2 - (T^6 - 1)").unwrap();
        let der = induced_derivation(&eq);
        let s = Poly::<XRat>::var();
        let t = Poly::constant(XRat::var());
        // D(t) = s
        assert_eq!(der.apply(&t), s);
        // D(t^2) = 2 t s
        let t2 = &t * &t;
        let expect = Poly::constant(XRat::var() * XRat::from_i64(2)) * s.clone();
        assert_eq!(der.apply(&t2), expect);
        // D(s) = 3 t^5
        assert_eq!(der.apply(&s), der.s_prime);
    }

    #[test]
    fn derivation_kills_f() {
        for text in ["S^2 - (T^6 - 1)", "S - T^3 - z", "S^2 - (T^3 + z*T + 1)"] {
            let eq = DiffEq::parse(text).unwrap();
            let der = induced_derivation(&eq);
            // D(f) = f_z + f_T s + f_S s' must vanish mod f
            let f_t = eq.f().partial_t().as_s_poly();
            let f_z = eq.f().partial_z().as_s_poly();
            let f_s = eq.f().partial_s().as_s_poly();
            let s = Poly::<XRat>::var();
            let df = &(&f_z + &(&s * &f_t)) + &(&f_s * &der.s_prime);
            assert!(eq.reduce(&df).is_zero(), "D(f) != 0 for {}", text);
        }
    }

    #[test]
    fn derivation_is_leibniz() {
        let eq = DiffEq::parse("S^2 - (T^3 + z*T + 1)").unwrap();
        let der = induced_derivation(&eq);
        let s = Poly::<XRat>::var();
        let t = Poly::constant(XRat::var());
        let a = &s + &(&t * &t);
        let b = &(&s * &t) + &Poly::constant(XRat::from_poly(upoly(&[0, 1]).map_coeffs(
            |c| RatFunc::from_rat(c),
        )));
        let lhs = der.apply(&eq.reduce(&(&a * &b)));
        let rhs = &(&der.apply(&a) * &eq.reduce(&b)) + &(&eq.reduce(&a) * &der.apply(&b));
        assert_eq!(lhs, eq.reduce(&rhs));
    }
}
