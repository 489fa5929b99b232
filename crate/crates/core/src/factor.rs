//! Complete factorization of univariate polynomials over Q.
//!
//! Classic Zassenhaus pipeline: squarefree decomposition, Berlekamp
//! factorization modulo a small prime, quadratic Hensel lifting to a Mignotte
//! bound, then subset recombination. Degrees at desk scale stay small, so the
//! exponential recombination corner is never hit in practice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::types::{Rat, UPoly};

/// unit * prod factors^multiplicity reproduces the input exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rat,
    /// Irreducible, primitive over Z, positive leading coefficient.
    pub factors: Vec<(UPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UPoly {
        let mut acc = UPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Z[x] helpers (dense, lowest degree first)
// ---------------------------------------------------------------------------

type ZPoly = Vec<BigInt>;

fn z_trim(mut v: ZPoly) -> ZPoly {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn z_deg(v: &ZPoly) -> usize {
    assert!(!v.is_empty());
    v.len() - 1
}

fn z_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

/// Division by a monic divisor; returns (quotient, remainder).
fn z_divrem_monic(a: &ZPoly, d: &ZPoly) -> (ZPoly, ZPoly) {
    assert!(d.last().map_or(false, |c| c.is_one()));
    let dd = z_deg(d);
    let mut rem = a.clone();
    if rem.len() < d.len() {
        return (vec![], z_trim(rem));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let q = rem[i].clone();
        if q.is_zero() {
            continue;
        }
        quot[i - dd] = q.clone();
        for (j, dc) in d.iter().enumerate() {
            let t = &rem[i - dd + j] - &q * dc;
            rem[i - dd + j] = t;
        }
    }
    (z_trim(quot), z_trim(rem))
}

fn z_content(v: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

fn upoly_to_z(p: &UPoly) -> (ZPoly, Rat) {
    // p = scale * primitive, primitive in Z[x] with positive leading coeff.
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: ZPoly = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut cont = z_content(&ints);
    if cont.is_zero() {
        return (vec![], Rat::zero());
    }
    if ints.last().unwrap().is_negative() {
        cont = -cont;
    }
    let prim: ZPoly = ints.iter().map(|c| c / &cont).collect();
    (prim, Rat::new(cont, den))
}

fn z_to_upoly(v: &ZPoly) -> UPoly {
    Poly::new(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

// ---------------------------------------------------------------------------
// F_p[x] helpers (small odd prime p)
// ---------------------------------------------------------------------------

type FpPoly = Vec<u64>;

fn fp_trim(mut v: FpPoly) -> FpPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_mulmod_scalar(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_pow_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mulmod_scalar(acc, a, p);
        }
        a = fp_mulmod_scalar(a, a, p);
        e >>= 1;
    }
    acc
}

fn fp_inv_scalar(a: u64, p: u64) -> u64 {
    fp_pow_scalar(a % p, p - 2, p)
}


fn fp_sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut v = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        v[i] = (x + p - y) % p;
    }
    fp_trim(v)
}

fn fp_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + x as u128 * y as u128) % p as u128;
        }
    }
    fp_trim(v.into_iter().map(|c| c as u64).collect())
}

fn fp_divrem(a: &FpPoly, d: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    assert!(!d.is_empty());
    let dd = d.len() - 1;
    let lc_inv = fp_inv_scalar(*d.last().unwrap(), p);
    let mut rem = a.clone();
    if rem.len() < d.len() {
        return (vec![], fp_trim(rem));
    }
    let mut quot = vec![0u64; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let q = fp_mulmod_scalar(rem[i], lc_inv, p);
        if q == 0 {
            continue;
        }
        quot[i - dd] = q;
        for (j, &dc) in d.iter().enumerate() {
            let t = (rem[i - dd + j] + p - fp_mulmod_scalar(q, dc, p)) % p;
            rem[i - dd + j] = t;
        }
    }
    (fp_trim(quot), fp_trim(rem))
}

fn fp_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

fn fp_monic(a: &FpPoly, p: u64) -> FpPoly {
    match a.last() {
        None => vec![],
        Some(&lc) => {
            let inv = fp_inv_scalar(lc, p);
            a.iter().map(|&c| fp_mulmod_scalar(c, inv, p)).collect()
        }
    }
}

fn fp_derivative(a: &FpPoly, p: u64) -> FpPoly {
    if a.len() <= 1 {
        return vec![];
    }
    let mut v = Vec::with_capacity(a.len() - 1);
    for (i, &c) in a.iter().enumerate().skip(1) {
        v.push(fp_mulmod_scalar(c, (i as u64) % p, p));
    }
    fp_trim(v)
}

/// Extended Euclid mod p: returns (s, t) with s*a + t*b = 1; requires gcd 1.
fn fp_bezout(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0: FpPoly = vec![1];
    let mut s1: FpPoly = vec![];
    let mut t0: FpPoly = vec![];
    let mut t1: FpPoly = vec![1];
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.len(), 1, "fp_bezout requires coprime inputs");
    let inv = fp_inv_scalar(r0[0], p);
    let s = s0.iter().map(|&c| fp_mulmod_scalar(c, inv, p)).collect();
    let t = t0.iter().map(|&c| fp_mulmod_scalar(c, inv, p)).collect();
    (s, t)
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a monic squarefree polynomial mod p
// ---------------------------------------------------------------------------

fn berlekamp(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.clone()];
    }
    // x^p mod f by repeated squaring.
    let mut xp: FpPoly = vec![0, 1];
    {
        let mut acc: FpPoly = vec![1];
        let mut base = xp.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_divrem(&fp_mul(&acc, &base, p), f, p).1;
            }
            base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
            e >>= 1;
        }
        xp = acc;
    }
    // rows[i] = coefficients of (x^p)^i mod f
    let mut rows: Vec<FpPoly> = Vec::with_capacity(n);
    let mut cur: FpPoly = vec![1];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // Matrix of v -> v^p - v; kernel via Gaussian elimination (columns = v_i).
    let mut m = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            let val = row.get(j).copied().unwrap_or(0);
            m[j][i] = val;
        }
        m[i][i] = (m[i][i] + p - 1) % p;
    }
    let kernel = fp_nullspace(m, p);
    let r = kernel.len();
    let mut factors = vec![fp_monic(f, p)];
    if r == 1 {
        return factors;
    }
    'split: for v in &kernel {
        let vpoly = fp_trim(v.clone());
        if vpoly.len() <= 1 {
            continue; // constant kernel vector splits nothing
        }
        for s in 0..p {
            let shifted = fp_sub(&vpoly, &vec![s], p);
            let mut next = vec![];
            for u in factors.drain(..) {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let g = fp_gcd(&u, &shifted, p);
                if g.len() > 1 && g.len() < u.len() {
                    let q = fp_divrem(&u, &g, p).0;
                    next.push(g);
                    next.push(fp_monic(&q, p));
                } else {
                    next.push(u);
                }
            }
            factors = next;
            if factors.len() == r {
                break 'split;
            }
        }
    }
    factors
}

/// Nullspace basis of an n x n matrix over F_p (vectors as length-n vecs).
fn fp_nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row = vec![];
    let mut row = 0;
    for col in 0..n {
        let mut piv = None;
        for r in row..n {
            if m[r][col] != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        m.swap(row, piv);
        let inv = fp_inv_scalar(m[row][col], p);
        for c in 0..n {
            m[row][c] = fp_mulmod_scalar(m[row][c], inv, p);
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..n {
                    let t = (m[r][c] + p - fp_mulmod_scalar(factor, m[row][c], p)) % p;
                    m[r][c] = t;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut basis = vec![];
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (p - m[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

fn zm_reduce(v: &ZPoly, m: &BigInt) -> ZPoly {
    z_trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn zm_mul(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    zm_reduce(&z_mul(a, b), m)
}

fn zm_sub(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut v = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        v[i] = (x - y).mod_floor(m);
    }
    z_trim(v)
}

fn zm_add(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut v = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        v[i] = (x + y).mod_floor(m);
    }
    z_trim(v)
}

/// Remainder modulo a monic divisor, coefficients mod m.
fn zm_rem_monic(a: &ZPoly, d: &ZPoly, m: &BigInt) -> ZPoly {
    assert!(d.last().map_or(false, |c| c.is_one()));
    let dd = z_deg(d);
    let mut rem: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    if rem.len() < d.len() {
        return z_trim(rem);
    }
    for i in (dd..rem.len()).rev() {
        let q = rem[i].mod_floor(m);
        if q.is_zero() {
            rem[i] = BigInt::zero();
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            let t = (&rem[i - dd + j] - &q * dc).mod_floor(m);
            rem[i - dd + j] = t;
        }
    }
    z_trim(rem)
}

fn fp_to_z(v: &FpPoly) -> ZPoly {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Symmetric representative in (-m/2, m/2].
fn zm_symmetric(v: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    z_trim(
        v.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lift f = g*h with Bezout pair from modulus q to q^2 (all monic).
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    q2: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = zm_sub(f, &z_mul(g, h), q2);
    let dg = zm_rem_monic(&zm_mul(t, &e, q2), g, q2);
    let dh = zm_rem_monic(&zm_mul(s, &e, q2), h, q2);
    let g1 = zm_add(g, &dg, q2);
    let h1 = zm_add(h, &dh, q2);
    let b = zm_sub(
        &zm_add(&zm_mul(s, &g1, q2), &zm_mul(t, &h1, q2), q2),
        &vec![BigInt::one()],
        q2,
    );
    let ds = zm_rem_monic(&zm_mul(s, &b, q2), &h1, q2);
    let dt = zm_rem_monic(&zm_mul(t, &b, q2), &g1, q2);
    let s1 = zm_sub(s, &ds, q2);
    let t1 = zm_sub(t, &dt, q2);
    (g1, h1, s1, t1)
}

/// Lift the factorization f = prod(fp_factors) from mod p to mod p^(2^j) >= target.
fn hensel_multi(f: &ZPoly, fp_factors: &[FpPoly], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if fp_factors.len() == 1 {
        return vec![zm_reduce(f, target)];
    }
    let mid = fp_factors.len() / 2;
    let (left, right) = fp_factors.split_at(mid);
    let mut g0: FpPoly = vec![1];
    for u in left {
        g0 = fp_mul(&g0, u, p);
    }
    let mut h0: FpPoly = vec![1];
    for u in right {
        h0 = fp_mul(&h0, u, p);
    }
    let (s0, t0) = fp_bezout(&g0, &h0, p);
    let mut g = fp_to_z(&g0);
    let mut h = fp_to_z(&h0);
    let mut s = fp_to_z(&s0);
    let mut t = fp_to_z(&t0);
    let mut q = BigInt::from(p);
    while &q < target {
        let q2 = &q * &q;
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &q2);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        q = q2;
    }
    let g = zm_reduce(&g, &q);
    let h = zm_reduce(&h, &q);
    let mut out = hensel_multi(&g, left, p, target);
    out.extend(hensel_multi(&h, right, p, target));
    // Normalize every lifted factor to the requested modulus.
    out.into_iter().map(|v| zm_reduce(&v, target)).collect()
}

// ---------------------------------------------------------------------------
// Zassenhaus driver
// ---------------------------------------------------------------------------

const SMALL_PRIMES: [u64; 21] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
];

/// Factor a primitive squarefree Z-polynomial with positive leading coeff.
fn factor_squarefree_z(g: &ZPoly) -> Vec<ZPoly> {
    let n = z_deg(g);
    if n <= 1 {
        return vec![g.clone()];
    }
    let lc = g.last().unwrap().clone();
    if lc.is_one() {
        return factor_monic_squarefree(g);
    }
    // Monicize: f*(x) = lc^(n-1) g(x/lc), factors map back via x -> lc x.
    let mut fstar = vec![BigInt::zero(); n + 1];
    fstar[n] = BigInt::one();
    let mut pow = BigInt::one();
    for i in (0..n).rev() {
        fstar[i] = &g[i] * &pow;
        pow *= &lc;
    }
    let factors = factor_monic_squarefree(&z_trim(fstar));
    factors
        .into_iter()
        .map(|h| {
            let mut pow = BigInt::one();
            let mut mapped = Vec::with_capacity(h.len());
            for c in h.iter() {
                mapped.push(c * &pow);
                pow *= &lc;
            }
            let mut cont = z_content(&mapped);
            if mapped.last().unwrap().is_negative() {
                cont = -cont;
            }
            z_trim(mapped.into_iter().map(|c| c / &cont).collect())
        })
        .collect()
}

fn factor_monic_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = z_deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    let (p, modular) = {
        let mut chosen = None;
        for &p in SMALL_PRIMES.iter() {
            let fp: FpPoly = fp_trim(
                f.iter()
                    .map(|c| u64::try_from(c.mod_floor(&BigInt::from(p))).unwrap())
                    .collect(),
            );
            if fp.len() != f.len() {
                continue; // degree dropped (cannot happen monic, but keep safe)
            }
            let d = fp_derivative(&fp, p);
            if fp_gcd(&fp, &d, p).len() == 1 {
                chosen = Some((p, berlekamp(&fp_monic(&fp, p), p)));
                break;
            }
        }
        chosen.expect("no small prime keeps the polynomial squarefree")
    };
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Mignotte-style bound on factor coefficients: 2^n * l2norm(f).
    let norm2: BigInt = f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = (BigInt::one() << n) * norm2;
    let target = BigInt::from(2) * &bound + 1;
    let mut modulus = BigInt::from(p);
    while modulus < target {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_multi(&zm_reduce(f, &modulus), &modular, p, &modulus);

    // Subset recombination.
    let mut pool = lifted;
    let mut result: Vec<ZPoly> = vec![];
    let mut current = f.clone();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let combos = combinations(pool.len(), size);
        let mut found = None;
        'combo: for combo in combos {
            let mut cand: ZPoly = vec![BigInt::one()];
            for &i in &combo {
                cand = zm_mul(&cand, &pool[i], &modulus);
            }
            let cand = zm_symmetric(&cand, &modulus);
            if cand.last().map_or(true, |c| !c.is_one()) {
                continue 'combo;
            }
            let (q, r) = z_divrem_monic(&current, &cand);
            if r.is_empty() {
                found = Some((combo, cand, q));
                break 'combo;
            }
        }
        match found {
            Some((combo, cand, q)) => {
                result.push(cand);
                current = q;
                let keep: Vec<ZPoly> = pool
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v)
                    .collect();
                pool = keep;
            }
            None => size += 1,
        }
    }
    if z_deg(&current) > 0 {
        result.push(current);
    }
    result
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

/// Complete factorization into irreducibles over Q. Input must be nonzero.
pub fn factor_univariate_rationals(p: &UPoly) -> Factorization {
    assert!(!p.is_zero(), "factorization of the zero polynomial");
    if p.is_constant() {
        return Factorization {
            unit: p.coeff(0),
            factors: vec![],
        };
    }
    let mut unit = p.lc();
    let monic = p.monic();
    let mut factors: Vec<(UPoly, usize)> = vec![];
    for (sf, mult) in monic.squarefree_decomposition() {
        let (zpoly, scale) = upoly_to_z(&sf);
        // sf is monic: sf = scale * primitive, so unit *= scale^mult.
        let mut sc = Rat::one();
        for _ in 0..mult {
            sc = sc * scale.clone();
        }
        unit = unit * sc;
        for irr in factor_squarefree_z(&zpoly) {
            factors.push((z_to_upoly(&irr), mult));
        }
    }
    // The primitive irreducible factors multiply to primitive polys; absorb
    // the leftover rational constant into the unit so expand() is exact.
    let mut check = UPoly::constant(unit.clone());
    for (f, m) in &factors {
        check = &check * &f.pow(*m);
    }
    // check should equal p up to a rational constant; fix the unit exactly.
    let correction = p.lc() / check.lc();
    unit = unit * correction;
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| format!("{:?}", a.0).cmp(&format!("{:?}", b.0)))
    });
    Factorization { unit, factors }
}

/// All roots of p lying in Q, with multiplicity collapsed (each root once).
pub fn rational_roots(p: &UPoly) -> Vec<Rat> {
    let fac = factor_univariate_rationals(p);
    let mut roots = vec![];
    for (f, _) in fac.factors {
        if f.deg() == 1 {
            roots.push(-f.coeff(0) / f.coeff(1));
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

pub fn is_irreducible(p: &UPoly) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => {
            let fac = factor_univariate_rationals(p);
            fac.factors.len() == 1 && fac.factors[0].1 == 1
        }
    }
}

/// n = a^2 * b with b squarefree (n > 0); returns (a, b).
pub fn int_square_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive());
    let mut rest = n.clone();
    let mut a = BigInt::one();
    let mut d = BigInt::from(2);
    let cap = BigInt::from(1u32 << 20);
    while &d * &d <= rest && d <= cap {
        let dd = &d * &d;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            a *= &d;
        }
        d += 1;
    }
    // catch a remaining perfect square beyond the trial-division cap
    let s = rest.sqrt();
    if &s * &s == rest {
        a *= &s;
        rest = BigInt::one();
    }
    (a, rest)
}

/// q = a^2 * b with b a squarefree rational (squarefree numerator and
/// denominator); sign stays in b.
pub fn rat_square_split(q: &Rat) -> (Rat, Rat) {
    assert!(!q.is_zero());
    let (an, _) = int_square_split(&q.numer().abs());
    let (ad, _) = int_square_split(&q.denom().abs());
    let a = Rat::new(an, ad);
    let b = q / (a.clone() * a.clone());
    (a, b)
}

/// c = sigma^2 * rest with rest having squarefree numerator and denominator
/// (as z-polynomials) and squarefree rational content.
pub fn ratfunc_square_split(c: &crate::types::RatFunc) -> (crate::types::RatFunc, crate::types::RatFunc) {
    use crate::types::RatFunc;
    assert!(!c.is_zero());
    let split_poly = |p: &UPoly| -> UPoly {
        // monic square part
        let mut sq = UPoly::one();
        for (f, m) in p.monic().squarefree_decomposition() {
            for _ in 0..(m / 2) {
                sq = &sq * &f;
            }
        }
        sq
    };
    let sn = split_poly(c.num());
    let sd = split_poly(c.den());
    let sigma_poly = RatFunc::new(sn, sd);
    let rest = c.clone() / (sigma_poly.clone() * sigma_poly.clone());
    // rest now has squarefree num/den up to a rational unit; split the unit
    let unit = rest.num().lc() / rest.den().lc();
    let (ua, _) = rat_square_split(&unit);
    let sigma = sigma_poly * RatFunc::constant(ua.clone());
    let rest = c.clone() / (sigma.clone() * sigma.clone());
    (sigma, rest)
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    if &(&ns * &ns) == q.numer() && &(&ds * &ds) == q.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Exact polynomial square root over any field, if the input is a square.
pub fn poly_sqrt<F: crate::field::Field>(p: &Poly<F>) -> Option<Poly<F>>
where
    F: Clone,
{
    if p.is_zero() {
        return Some(Poly::zero());
    }
    let n = p.deg();
    if n % 2 != 0 {
        return None;
    }
    // Over Q, extract the leading square root when possible; over other
    // fields of ours (Q(z) etc.) the caller splits num/den first, so the
    // leading coefficient is structured. We solve by undetermined
    // coefficients from the top and verify at the end.
    let half = n / 2;
    let lc = p.lc();
    let s = sqrt_in_field(&lc)?;
    let mut q = vec![F::zero(); half + 1];
    q[half] = s.clone();
    let two_s = s.clone() + s.clone();
    for k in (0..half).rev() {
        // coefficient of x^(half + k) in q^2 must equal p_(half + k)
        let mut acc = F::zero();
        for i in (k + 1)..=half {
            let j = half + k - i;
            if j > half || j <= k {
                continue;
            }
            acc = acc + q[i].clone() * q[j].clone();
        }
        // contributions q_i q_j with i + j = half + k, i,j < half+1; the pair
        // (half, k) appears twice.
        let target = p.coeff(half + k);
        q[k] = (target - acc) / two_s.clone();
    }
    let cand = Poly::new(q);
    if &(&cand * &cand) == p {
        Some(cand)
    } else {
        None
    }
}

/// Square root inside the coefficient field: implemented for Q and for
/// nested rational-function fields by recursion on num/den.
pub fn sqrt_in_field<F: crate::field::Field>(c: &F) -> Option<F> {
    F::try_sqrt(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::upoly;
    use crate::types::rat_i;

    #[test]
    fn factor_fixtures() {
        // x^2 - 1 -> (x-1)(x+1)
        let f = factor_univariate_rationals(&upoly(&[-1, 0, 1]));
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), upoly(&[-1, 0, 1]));

        // x^2 + 1 irreducible
        let f = factor_univariate_rationals(&upoly(&[1, 0, 1]));
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 1);

        // x^6 - 1 -> (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let p = upoly(&[-1, 0, 0, 0, 0, 0, 1]);
        let f = factor_univariate_rationals(&p);
        assert_eq!(f.factors.len(), 4);
        assert_eq!(f.expand(), p);
        let degs: Vec<usize> = f.factors.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn factor_with_multiplicity_and_unit() {
        // 6 (x-1)^2 (x^2+1)
        let p = upoly(&[-1, 1]).pow(2) * upoly(&[1, 0, 1]) * upoly(&[6]);
        let f = factor_univariate_rationals(&p);
        assert_eq!(f.expand(), p);
        assert_eq!(f.unit, rat_i(6));
    }

    #[test]
    fn factor_nonmonic() {
        // (2x+1)(3x-5)
        let p = upoly(&[1, 2]) * upoly(&[-5, 3]);
        let f = factor_univariate_rationals(&p);
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn rational_roots_works() {
        let p = upoly(&[1, 2]) * upoly(&[-5, 3]) * upoly(&[1, 0, 1]);
        let roots = rational_roots(&p);
        assert_eq!(roots, vec![crate::types::rat(-1, 2), crate::types::rat(5, 3)]);
    }

    #[test]
    fn sqrt_helpers() {
        assert_eq!(rat_sqrt(&crate::types::rat(9, 4)), Some(crate::types::rat(3, 2)));
        assert_eq!(rat_sqrt(&rat_i(2)), None);
        let sq = upoly(&[1, 2, 1]); // (x+1)^2
        assert_eq!(poly_sqrt(&sq), Some(upoly(&[1, 1])));
        assert_eq!(poly_sqrt(&upoly(&[0, 1])), None);
    }
}
