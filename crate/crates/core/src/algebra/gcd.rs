//! Multivariate polynomial gcd over the integers.
//!
//! The authoritative algorithm is the recursive subresultant polynomial
//! remainder sequence: a polynomial is viewed as univariate in its leading
//! variable with coefficients in the integer polynomial ring of the remaining
//! variables, contents are split off recursively, and the primitive parts are
//! run through the Brown–Collins subresultant PRS.
//!
//! Before falling back to the PRS we try the heuristic gcd (evaluation at a
//! large integer and ξ-adic reconstruction). Its answer is accepted only after
//! it is verified to divide both inputs, which together with the size bound on
//! the evaluation point certifies it as the gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::monomial::{Monomial, Var, MAX_VARS};
use super::poly::Polynomial;

/// Largest evaluation image (in bits) the heuristic gcd is allowed to build.
const HEU_BIT_LIMIT: u64 = 400_000;

/// Greatest common divisor, normalized to a positive lex-leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive_sign();
    }
    if b.is_zero() {
        return a.primitive_sign();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::constant(a.content().gcd(&b.content()));
    }
    if a == b {
        return a.primitive_sign();
    }
    if a.is_monomial() || b.is_monomial() {
        return monomial_gcd(a, b);
    }
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let pa = a.div_scalar_exact(&ca);
    let pb = b.div_scalar_exact(&cb);
    let g = primitive_gcd(&pa, &pb);
    g.primitive_part().scale(&c)
}

/// gcd via the subresultant PRS only (no heuristic shortcut).
pub fn gcd_subresultant(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive_sign();
    }
    if b.is_zero() {
        return a.primitive_sign();
    }
    let c = a.content().gcd(&b.content());
    let g = prs_gcd(&a.primitive_part(), &b.primitive_part());
    g.primitive_part().scale(&c)
}

impl Polynomial {
    /// `self` with a positive leading coefficient.
    pub(crate) fn primitive_sign(&self) -> Polynomial {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

fn monomial_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mono, other) = if a.is_monomial() { (a, b) } else { (b, a) };
    let (mut m, _) = mono.terms()[0].clone();
    for (t, _) in other.terms() {
        m = m.gcd(*t);
        if m.is_one() {
            break;
        }
    }
    let c = a.content().gcd(&b.content());
    Polynomial::term(c, m)
}

/// gcd of two nonzero polynomials with unit integer content.
fn primitive_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if let Some(g) = heuristic_gcd(a, b) {
        return g;
    }
    prs_gcd(a, b)
}

fn pick_var(mask: u8) -> Option<Var> {
    (0..MAX_VARS as u8).map(Var).find(|v| mask & (1 << v.0) != 0)
}

// ---------------------------------------------------------------------------
// Heuristic gcd

fn heuristic_gcd(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let g = heu_rec(a, b, 0)?;
    let g = g.primitive_part();
    if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
        Some(g)
    } else {
        None
    }
}

fn heu_rec(a: &Polynomial, b: &Polynomial, depth: usize) -> Option<Polynomial> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    if a.is_constant() || b.is_constant() {
        return Some(Polynomial::constant(a.content().gcd(&b.content())));
    }
    if depth > MAX_VARS {
        return None;
    }
    let v = pick_var(a.var_mask() | b.var_mask())?;
    let ha = a.height();
    let hb = b.height();
    let mut xi: BigInt = ha.min(hb) * 2 + 29;
    let deg = a.degree_in(v).max(b.degree_in(v)) as u64;
    for _ in 0..6 {
        if xi.bits() * (deg + 1) > HEU_BIT_LIMIT {
            return None;
        }
        let ia = a.eval_var_int(v, &xi);
        let ib = b.eval_var_int(v, &xi);
        if !ia.is_zero() && !ib.is_zero() {
            if let Some(gamma) = heu_rec(&ia, &ib, depth + 1) {
                let cand = xi_adic_reconstruct(&gamma, &xi, v).primitive_part();
                if !cand.is_zero() && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some()
                {
                    // the integer content of the images carries factors in v
                    return Some(cand.scale(&a.content().gcd(&b.content())));
                }
            }
        }
        xi = (&xi * BigInt::from(73794)) / BigInt::from(27011);
    }
    None
}

/// Interpret the integer coefficients of `gamma` in balanced base `xi` as the
/// coefficients of successive powers of `v`.
fn xi_adic_reconstruct(gamma: &Polynomial, xi: &BigInt, v: Var) -> Polynomial {
    let half = xi / 2;
    let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
    for (m, c) in gamma.terms() {
        let mut e = c.clone();
        let mut power = 0u32;
        while !e.is_zero() {
            let mut r = e.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                terms.push((m.mul(Monomial::var(v, power)), r.clone()));
            }
            e = (e - r) / xi;
            power += 1;
            if power > 4096 {
                break;
            }
        }
    }
    Polynomial::from_terms(terms)
}

// ---------------------------------------------------------------------------
// Subresultant PRS

type UPoly = Vec<Polynomial>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn udeg(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

fn lc(p: &UPoly) -> &Polynomial {
    p.last().expect("nonzero univariate polynomial")
}

/// gcd of the coefficients (the content with respect to the main variable).
fn ucontent(p: &UPoly) -> Polynomial {
    let mut g = Polynomial::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn udiv_coeffs(p: &UPoly, d: &Polynomial) -> UPoly {
    p.iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = udeg(b);
    let mut r = a.clone();
    trim(&mut r);
    if r.is_empty() || udeg(&r) < db {
        return r;
    }
    let e = udeg(&r) - db + 1;
    let lb = lc(b).clone();
    let mut steps = 0;
    while !r.is_empty() && udeg(&r) >= db {
        let shift = udeg(&r) - db;
        let lr = lc(&r).clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = bc * &lr;
            r[i + shift] = &r[i + shift] - &t;
        }
        trim(&mut r);
        steps += 1;
    }
    if steps < e {
        let f = lb.pow((e - steps) as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn prs_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive_sign();
    }
    if b.is_zero() {
        return a.primitive_sign();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::constant(a.content().gcd(&b.content()));
    }
    let mask_a = a.var_mask();
    let mask_b = b.var_mask();
    let v = pick_var(mask_a | mask_b).expect("non-constant");
    if mask_a & (1 << v.0) == 0 {
        // `a` is free of v: the gcd divides the content of b.
        let cb = ucontent(&b.to_univariate(v));
        return prs_gcd(a, &cb);
    }
    if mask_b & (1 << v.0) == 0 {
        let ca = ucontent(&a.to_univariate(v));
        return prs_gcd(&ca, b);
    }
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = ucontent(&ua);
    let cb = ucontent(&ub);
    let content = prs_gcd(&ca, &cb);
    let pa = udiv_coeffs(&ua, &ca);
    let pb = udiv_coeffs(&ub, &cb);
    let (mut f, mut g) = if udeg(&pa) >= udeg(&pb) { (pa, pb) } else { (pb, pa) };

    let mut gg = Polynomial::one();
    let mut h = Polynomial::one();
    loop {
        let d = udeg(&f) - udeg(&g);
        let r = prem(&f, &g);
        if r.is_empty() {
            break;
        }
        if udeg(&r) == 0 {
            g = vec![Polynomial::one()];
            break;
        }
        let divisor = &gg * &h.pow(d as u32);
        let next: UPoly = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        f = std::mem::replace(&mut g, next);
        gg = lc(&f).clone();
        h = if d == 0 {
            h
        } else {
            let num = gg.pow(d as u32);
            let den = h.pow(d as u32 - 1);
            num.div_exact(&den).expect("subresultant scaling is exact")
        };
    }
    let cg = ucontent(&g);
    let pg = udiv_coeffs(&g, &cg);
    let prim = Polynomial::from_univariate(v, &pg);
    (&prim * &content).primitive_part()
}
