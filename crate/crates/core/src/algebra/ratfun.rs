//! Normalized quotients of integer polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::monomial::{Monomial, Var};
use super::poly::{Polynomial, DEFAULT_NAMES};
use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// Default per-variable degree cap for intermediate results.
pub const DEFAULT_DEGREE_CAP: u32 = 200;

static DEGREE_CAP: AtomicU32 = AtomicU32::new(DEFAULT_DEGREE_CAP);

/// Change the process-wide degree cap used by [`RationalFunction::check_degree`].
pub fn set_degree_cap(cap: u32) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub fn degree_cap() -> u32 {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// A rational function `num / den` over the rationals, stored with integer
/// polynomials in canonical form:
///
/// * `gcd(num, den) = 1`,
/// * the integer content of `num` and `den` taken together is 1,
/// * the lex-leading coefficient of `den` is positive,
/// * zero is `0 / 1`.
///
/// Two rational functions are equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        RationalFunction { num: Polynomial::from_i64(n), den: Polynomial::one() }
    }

    pub fn from_scalar(s: &ExactScalar) -> Self {
        RationalFunction {
            num: Polynomial::constant(s.numer().clone()),
            den: Polynomial::constant(s.denom().clone()),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_scalar(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Polynomial::var(v))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    /// Build `num / den` in canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Malformed("zero denominator".into()));
        }
        Ok(Self::normalize_parts(num, den))
    }

    /// Canonical form of `num / den` (nonzero `den`).
    fn normalize_parts(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::fix_content(num, den)
    }

    /// Scale so that the joint integer content is 1 and `den` leads positively.
    fn fix_content(num: Polynomial, den: Polynomial) -> Self {
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().is_negative() {
            c = -c;
        }
        if c.is_one() {
            RationalFunction { num, den }
        } else {
            RationalFunction { num: num.div_scalar_exact(&c), den: den.div_scalar_exact(&c) }
        }
    }

    /// Re-normalize a possibly non-canonical value.
    pub fn normalize(&self) -> Self {
        Self::normalize_parts(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<ExactScalar> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    /// Largest exponent of any variable in numerator or denominator.
    pub fn max_degree(&self) -> u32 {
        self.num.max_degree().max(self.den.max_degree())
    }

    /// Fail with a resource error when the degree exceeds the configured cap.
    pub fn check_degree(&self) -> Result<()> {
        let cap = degree_cap();
        let d = self.max_degree();
        if d > cap {
            Err(Error::Resource { degree: d, cap })
        } else {
            Ok(())
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Malformed("inverse of the zero rational function".into()));
        }
        Ok(Self::fix_content(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        if s.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self::fix_content(self.num.scale(s.numer()), self.den.scale(s.denom()))
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    pub fn pow(&self, e: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        Self::fix_content(self.num.pow(e), self.den.pow(e))
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }

    pub fn derivative(&self, v: Var) -> Self {
        let dn = self.num.derivative(v);
        if self.den.is_constant() {
            return Self::fix_content(dn, self.den.clone());
        }
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return Self::normalize_parts(dn, self.den.clone());
        }
        // (n/d)' = (n' d - n d') / d^2; only factors of d can cancel.
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &self.den);
        let (num, d1) = if g.is_one() {
            (num, self.den.clone())
        } else {
            (num.div_exact(&g).unwrap(), self.den.div_exact(&g).unwrap())
        };
        let g2 = gcd(&num, &self.den);
        let (num, d2) = if g2.is_one() {
            (num, self.den.clone())
        } else {
            (num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        Self::fix_content(num, &d1 * &d2)
    }

    /// Evaluate at a point (one optional value per variable index).
    pub fn evaluate(&self, point: &[Option<ExactScalar>]) -> Result<ExactScalar> {
        let missing = || Error::UnknownVariable("unassigned variable in evaluation point".into());
        let d = self.den.evaluate(point).ok_or_else(missing)?;
        if d.is_zero() {
            return Err(Error::Pole { denominator: self.den.to_string() });
        }
        let n = self.num.evaluate(point).ok_or_else(missing)?;
        Ok(n / d)
    }

    /// Substitute a rational function for a variable.
    pub fn substitute(&self, v: Var, value: &RationalFunction) -> Result<Self> {
        let sub = |p: &Polynomial| -> RationalFunction {
            let coeffs = p.to_univariate(v);
            let mut acc = RationalFunction::zero();
            for c in coeffs.iter().rev() {
                acc = &(&acc * value) + &RationalFunction::from_poly(c.clone());
            }
            acc
        };
        let d = sub(&self.den);
        if d.is_zero() {
            return Err(Error::Pole { denominator: self.den.to_string() });
        }
        Ok(&sub(&self.num) / &d)
    }

    /// Exact square root, if this is the square of a rational function.
    pub fn sqrt(&self) -> Option<Self> {
        let n = poly_sqrt(&self.num)?;
        let d = poly_sqrt(&self.den)?;
        Some(Self::fix_content(n, d))
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> RatDisplay<'a> {
        RatDisplay { r: self, names }
    }
}

/// Square root of a perfect-square polynomial with positive leading coefficient.
pub fn poly_sqrt(p: &Polynomial) -> Option<Polynomial> {
    if p.is_zero() {
        return Some(Polynomial::zero());
    }
    let (lm, lc) = p.leading_term()?.clone();
    if lc.is_negative() {
        return None;
    }
    let half = |m: Monomial| -> Option<Monomial> {
        let exps = m.exponents();
        if exps.iter().any(|e| e % 2 == 1) {
            return None;
        }
        let h: Vec<u32> = exps.iter().map(|e| e / 2).collect();
        Some(Monomial::from_exponents(&h))
    };
    let root_c = lc.sqrt();
    if &root_c * &root_c != lc {
        return None;
    }
    let lead = (half(lm)?, root_c);
    let bound: Vec<u32> = (0..8).map(|i| p.degree_in(Var(i)) / 2).collect();
    let mut s = Polynomial::term(lead.1.clone(), lead.0);
    let two_lc = &lead.1 * 2;
    let mut r = p - &(&s * &s);
    let mut guard = 0usize;
    while !r.is_zero() {
        guard += 1;
        if guard > 100_000 {
            return None;
        }
        let (rm, rc) = r.leading_term()?.clone();
        let tm = rm.div(lead.0)?;
        if tm >= lead.0 || (0..8).any(|i| tm.exponent(Var(i)) > bound[i as usize]) {
            return None;
        }
        let (tc, rem) = rc.div_rem(&two_lc);
        if !rem.is_zero() {
            return None;
        }
        let t = Polynomial::term(tc, tm);
        // r -= 2 s t + t^2
        let update = &(&s * &t).scale(&BigInt::from(2)) + &(&t * &t);
        r = &r - &update;
        s = &s + &t;
    }
    Some(s)
}

pub struct RatDisplay<'a> {
    r: &'a RationalFunction,
    names: &'a [&'a str],
}

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.r.num.display_with(self.names);
        if self.r.den.is_one() {
            return write!(f, "{n}");
        }
        let d = self.r.den.display_with(self.names);
        let wrap_n = self.r.num.num_terms() > 1;
        let wrap_d = self.r.den.num_terms() > 1 || !self.r.den.is_constant();
        match (wrap_n, wrap_d) {
            (true, true) => write!(f, "({n})/({d})"),
            (true, false) => write!(f, "({n})/{d}"),
            (false, true) => write!(f, "{n}/({d})"),
            (false, false) => write!(f, "{n}/{d}"),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&DEFAULT_NAMES))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_constant() {
                return RationalFunction::fix_content(num, self.den.clone());
            }
            return RationalFunction::normalize_parts(num, self.den.clone());
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            let num = &self.num.scale(&rhs.den.leading_coeff()) + &rhs.num.scale(&self.den.leading_coeff());
            return RationalFunction::fix_content(num, &self.den * &rhs.den);
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_constant() {
            // Coprime denominators: any cancellation would need a common factor
            // of the sum with one denominator, which is impossible.
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RationalFunction::fix_content(num, &self.den * &rhs.den);
        }
        let da = self.den.div_exact(&g).unwrap();
        let db = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let den = &self.den * &db;
        let g2 = gcd(&num, &g);
        if g2.is_constant() {
            RationalFunction::fix_content(num, den)
        } else {
            RationalFunction::fix_content(num.div_exact(&g2).unwrap(), den.div_exact(&g2).unwrap())
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_constant() && rhs.is_constant() {
            return RationalFunction::from_scalar(
                &(self.constant_value().unwrap() * rhs.constant_value().unwrap()),
            );
        }
        let cancel = |n: &Polynomial, d: &Polynomial| -> (Polynomial, Polynomial) {
            if d.is_constant() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = gcd(n, d);
            if g.is_constant() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RationalFunction::fix_content(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by the zero function; use [`RationalFunction::inv`]
    /// to handle that case.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$f(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl From<&ExactScalar> for RationalFunction {
    fn from(s: &ExactScalar) -> Self {
        Self::from_scalar(s)
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> RationalFunction {
        RationalFunction::var(Var(0))
    }
    fn y() -> RationalFunction {
        RationalFunction::var(Var(1))
    }

    #[test]
    fn difference_of_squares_cancels() {
        let r = (&(&x() * &x()) - &(&y() * &y())) / (&x() - &y());
        assert_eq!(r, &x() + &y());
        assert!(r.denominator().is_one());
    }

    #[test]
    fn zero_numerator_normalizes_to_zero_over_one() {
        let r = RationalFunction::new(Polynomial::zero(), (&x() - &y()).numerator().clone()).unwrap();
        assert!(r.is_zero());
        assert!(r.denominator().is_one());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(matches!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn squared_factors_cancel_once() {
        let s = &x() + &y();
        let d = &x() - &y();
        let num = (&(&s * &s) * &d).numerator().clone();
        let den = (&(&s * &d) * &d).numerator().clone();
        let r = RationalFunction::new(num.clone(), den.clone()).unwrap();
        assert_eq!(r, &s / &d);
        // Cross-multiplication oracle.
        assert_eq!(&(r.numerator() * &den), &(&num * r.denominator()));
    }

    #[test]
    fn quotient_rule() {
        let r = (&x() * &x() * &y()).derivative(Var(0));
        assert_eq!(r, (&x() * &y()).scale_i64(2));
        let r = RationalFunction::one() / (&x() - &y());
        assert_eq!(r.derivative(Var(0)), -(RationalFunction::one() / (&x() - &y()).pow(2)));
        let q = (&x() + &y()) / (&x() - &y());
        assert_eq!(q.derivative(Var(1)), x().scale_i64(2) / (&x() - &y()).pow(2));
    }

    #[test]
    fn evaluation_and_poles() {
        let two = crate::algebra::scalar::scalar(2);
        let one = crate::algebra::scalar::scalar(1);
        let three = crate::algebra::scalar::scalar(3);
        let q = (&x() + &y()) / (&x() - &y());
        assert_eq!(q.evaluate(&[Some(two.clone()), Some(one.clone())]).unwrap(), three.clone());
        assert!(matches!(
            q.evaluate(&[Some(one.clone()), Some(one.clone())]),
            Err(Error::Pole { .. })
        ));
        let p = &RationalFunction::one() + &(&x() * &y());
        assert_eq!(p.evaluate(&[Some(two), Some(three)]).unwrap(), crate::algebra::scalar::scalar(7));
    }

    #[test]
    fn exact_square_roots() {
        let s = (&x() - &y().scale_i64(3)) / (&x() * &y() + &RationalFunction::from_i64(2));
        let sq = &s * &s;
        let r = sq.sqrt().unwrap();
        assert!(r == s || r == -&s);
        assert!((&x() * &y()).sqrt().is_none());
    }
}
