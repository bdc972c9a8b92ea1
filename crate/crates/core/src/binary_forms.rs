//! Binary forms: quadratic forms with the halved middle coefficient, the
//! Poisson bracket, discriminant and inner product, polarization, and
//! transvectants of polynomials in one variable.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{ExactScalar, Monomial, Polynomial, RationalFunction, Var};
use crate::error::{Error, Result};

/// `q(z) = q0 z^2 + 2 q1 z + q2`. Note the factor 2 on `q1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    pub q0: ExactScalar,
    pub q1: ExactScalar,
    pub q2: ExactScalar,
}

fn int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

impl QuadraticForm {
    pub fn new(q0: ExactScalar, q1: ExactScalar, q2: ExactScalar) -> Self {
        QuadraticForm { q0, q1, q2 }
    }

    pub fn from_ints(q0: i64, q1: i64, q2: i64) -> Self {
        Self::new(int(q0), int(q1), int(q2))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }

    /// `q(z) = 1`.
    pub fn parabolic() -> Self {
        Self::from_ints(0, 0, 1)
    }

    /// `q(z) = 2z`.
    pub fn hyperbolic() -> Self {
        Self::from_ints(0, 1, 0)
    }

    /// `q(z) = 1 + z^2`.
    pub fn elliptic() -> Self {
        Self::from_ints(1, 0, 1)
    }

    pub fn coeffs(&self) -> [&ExactScalar; 3] {
        [&self.q0, &self.q1, &self.q2]
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.q1.is_zero() && self.q2.is_zero()
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::new(&self.q0 * c, &self.q1 * c, &self.q2 * c)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.q0 + &o.q0, &self.q1 + &o.q1, &self.q2 + &o.q2)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.q0 - &o.q0, &self.q1 - &o.q1, &self.q2 - &o.q2)
    }

    /// Components `{q,w}_0 = 2q0w1 - 2q1w0`, `{q,w}_1 = q0w2 - q2w0`,
    /// `{q,w}_2 = 2q1w2 - 2q2w1`; as polynomials `{q,w} = q'w - w'q`.
    pub fn poisson_bracket(&self, w: &Self) -> Self {
        let two = int(2);
        Self::new(
            &two * (&self.q0 * &w.q1 - &self.q1 * &w.q0),
            &self.q0 * &w.q2 - &self.q2 * &w.q0,
            &two * (&self.q1 * &w.q2 - &self.q2 * &w.q1),
        )
    }

    /// `Q(q) = q1^2 - q0 q2`.
    pub fn discriminant(&self) -> ExactScalar {
        &self.q1 * &self.q1 - &self.q0 * &self.q2
    }

    /// `<q,p> = 2 q1 p1 - (q2 p0 + q0 p2)`.
    pub fn inner_product(&self, p: &Self) -> ExactScalar {
        int(2) * &self.q1 * &p.q1 - (&self.q2 * &p.q0 + &self.q0 * &p.q2)
    }

    /// Are `self` and `o` linearly dependent?
    pub fn is_parallel(&self, o: &Self) -> bool {
        let (a, b) = (self.coeffs(), o.coeffs());
        (0..3).all(|i| (i + 1..3).all(|j| (a[i] * b[j] - a[j] * b[i]).is_zero()))
    }

    /// The polarization `q(x,y) = q0 xy + q1 (x+y) + q2` in chart variables `x`, `y`.
    pub fn polarize_in(&self, x: Var, y: Var) -> RationalFunction {
        let xr = RationalFunction::var(x);
        let yr = RationalFunction::var(y);
        let c = |s: &ExactScalar| RationalFunction::from_scalar(s);
        &(&(&c(&self.q0) * &(&xr * &yr)) + &(&c(&self.q1) * &(&xr + &yr))) + &c(&self.q2)
    }

    /// The polarization in the default chart variables.
    pub fn polarize(&self) -> RationalFunction {
        self.polarize_in(Var(0), Var(1))
    }

    /// `q(v)` as a polynomial in the single variable `v`.
    pub fn eval_in(&self, v: Var) -> RationalFunction {
        self.to_binary_form().eval_in(v)
    }

    pub fn eval(&self, z: &ExactScalar) -> ExactScalar {
        &self.q0 * z * z + int(2) * &self.q1 * z + &self.q2
    }

    /// As a binary form of degree bound 2.
    pub fn to_binary_form(&self) -> BinaryForm {
        BinaryForm {
            m: 2,
            coeffs: vec![self.q2.clone(), int(2) * &self.q1, self.q0.clone()],
        }
        .trimmed()
    }

    /// Inverse of [`to_binary_form`](Self::to_binary_form).
    pub fn from_binary_form(b: &BinaryForm) -> Result<Self> {
        if b.degree().is_some_and(|d| d > 2) {
            return Err(Error::OutOfRange(format!("{b} is not quadratic")));
        }
        let c = |i: usize| b.coeff(i);
        Ok(Self::new(c(2), c(1) / int(2), c(0)))
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_binary_form())
    }
}

/// A polynomial of degree at most `m` in one variable, stored by ascending powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    m: u32,
    coeffs: Vec<ExactScalar>,
}

impl BinaryForm {
    /// Coefficients by ascending powers.
    pub fn new(m: u32, coeffs: Vec<ExactScalar>) -> Result<Self> {
        let f = BinaryForm { m, coeffs }.trimmed();
        if f.coeffs.len() > m as usize + 1 {
            return Err(Error::OutOfRange(format!("degree exceeds bound {m}")));
        }
        Ok(f)
    }

    pub fn from_ints(m: u32, ascending: &[i64]) -> Result<Self> {
        Self::new(m, ascending.iter().map(|&c| int(c)).collect())
    }

    /// A quartic from `a0 z^4 + a1 z^3 + a2 z^2 + a3 z + a4`, i.e. descending powers.
    pub fn quartic(descending: [ExactScalar; 5]) -> Self {
        let mut c = descending.to_vec();
        c.reverse();
        BinaryForm { m: 4, coeffs: c }.trimmed()
    }

    pub fn quartic_ints(descending: [i64; 5]) -> Self {
        Self::quartic(descending.map(int))
    }

    pub fn zero(m: u32) -> Self {
        BinaryForm { m, coeffs: Vec::new() }
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn degree_bound(&self) -> u32 {
        self.m
    }

    /// `None` for the zero form.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^i`.
    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// Coefficients `a0..am` in descending powers (`a0` multiplies `z^m`).
    pub fn descending(&self) -> Vec<ExactScalar> {
        (0..=self.m as usize).rev().map(|i| self.coeff(i)).collect()
    }

    pub fn with_bound(&self, m: u32) -> Result<Self> {
        Self::new(m, self.coeffs.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        BinaryForm { m: self.m.saturating_sub(1), coeffs }.trimmed()
    }

    fn nth_derivative(&self, k: u32) -> Self {
        (0..k).fold(self.clone(), |f, _| f.derivative())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect();
        BinaryForm { m: self.m.max(o.m), coeffs }.trimmed()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        BinaryForm { m: self.m, coeffs: self.coeffs.iter().map(|a| a * c).collect() }.trimmed()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.m + o.m);
        }
        let mut coeffs = vec![ExactScalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { m: self.m + o.m, coeffs }.trimmed()
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return r.iter().all(|c| c.is_zero()).then(|| Self::zero(0));
        }
        let lead = d.coeffs.last().unwrap().clone();
        let mut q = vec![ExactScalar::zero(); r.len() - dd as usize];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd as usize] / &lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let m = self.m.saturating_sub(dd);
        Some(BinaryForm { m, coeffs: q }.trimmed())
    }

    pub fn eval(&self, z: &ExactScalar) -> ExactScalar {
        self.coeffs.iter().rev().fold(ExactScalar::zero(), |acc, c| acc * z + c)
    }

    /// The form as a rational function of the single variable `v`.
    pub fn eval_in(&self, v: Var) -> RationalFunction {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let terms = self.coeffs.iter().enumerate().map(|(i, c)| {
            (Monomial::var(v, i as u32), c.numer() * (&den / c.denom()))
        });
        let num = Polynomial::from_terms(terms);
        RationalFunction::new(num, Polynomial::constant(den)).expect("nonzero denominator")
    }

    /// Transvectant of order `r`,
    /// `sum_j (-1)^j C(m-j, r-j) C(n-r+j, j) p^(j) q^(r-j)` with `m`, `n` the
    /// degree bounds of `p`, `q`. For `m = n` this is the same sum with the two
    /// binomials exchanged; for `m != n` only this pairing is equivariant.
    pub fn transvectant(p: &Self, q: &Self, r: u32) -> Result<Self> {
        let (m, n) = (p.m, q.m);
        if r > m.min(n) {
            return Err(Error::OutOfRange(format!(
                "transvectant order {r} exceeds min({m}, {n})"
            )));
        }
        let mut acc = Self::zero(m + n - 2 * r);
        for j in 0..=r {
            let c = binom(m - j, r - j) * binom(n - r + j, j);
            let mut term = p.nth_derivative(j).mul(&q.nth_derivative(r - j));
            term = term.scale(&BigRational::from_integer(c));
            if j % 2 == 1 {
                term = term.scale(&int(-1));
            }
            acc = acc.add(&term);
        }
        acc.m = m + n - 2 * r;
        Ok(acc)
    }

    /// `T(p, C) = p C'' - 3 p' C' + 6 p'' C`.
    pub fn curvature_bracket(p: &Self, c: &Self) -> Self {
        let (p1, p2) = (p.derivative(), p.derivative().derivative());
        let (c1, c2) = (c.derivative(), c.derivative().derivative());
        let t = p
            .mul(&c2)
            .sub(&p1.mul(&c1).scale(&int(3)))
            .add(&p2.mul(c).scale(&int(6)));
        BinaryForm { m: p.m + c.m, coeffs: t.coeffs }
    }
}

fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `T(p, C) = p C'' - 3 p' C' + 6 p'' C` for rational functions, differentiating
/// in `v` with every other variable treated as a parameter.
pub fn curvature_bracket_in(p: &RationalFunction, c: &RationalFunction, v: Var) -> RationalFunction {
    let p1 = p.derivative(v);
    let p2 = p1.derivative(v);
    let c1 = c.derivative(v);
    let c2 = c1.derivative(v);
    &(&(p * &c2) - &(&p1 * &c1).scale_i64(3)) + &(&p2 * c).scale_i64(6)
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_of_2z_and_z2() {
        let q = QuadraticForm::from_ints(0, 1, 0);
        let w = QuadraticForm::from_ints(1, 0, 0);
        assert_eq!(q.poisson_bracket(&w), QuadraticForm::from_ints(-2, 0, 0));
        assert!(q.poisson_bracket(&q).is_zero());
    }

    #[test]
    fn discriminants() {
        assert_eq!(QuadraticForm::hyperbolic().discriminant(), int(1));
        assert_eq!(QuadraticForm::elliptic().discriminant(), int(-1));
        assert_eq!(QuadraticForm::parabolic().discriminant(), int(0));
        let p = QuadraticForm::from_ints(-1, 0, 1);
        assert!(QuadraticForm::elliptic().inner_product(&p).is_zero());
    }

    #[test]
    fn polarizations() {
        let x = RationalFunction::var(Var(0));
        let y = RationalFunction::var(Var(1));
        assert_eq!(QuadraticForm::hyperbolic().polarize(), &x + &y);
        assert_eq!(QuadraticForm::elliptic().polarize(), &RationalFunction::one() + &(&x * &y));
        assert_eq!(QuadraticForm::parabolic().polarize(), RationalFunction::one());
    }

    #[test]
    fn transvectant_examples() {
        let z = BinaryForm::from_ints(1, &[0, 1]).unwrap();
        let z1 = BinaryForm::from_ints(1, &[1, 1]).unwrap();
        let prod = BinaryForm::transvectant(&z, &z1, 0).unwrap();
        assert_eq!(prod, BinaryForm::from_ints(2, &[0, 1, 1]).unwrap());
        let z2 = BinaryForm::from_ints(2, &[0, 0, 1]).unwrap();
        assert!(BinaryForm::transvectant(&z2, &z2, 2).unwrap().is_zero());
        assert!(BinaryForm::transvectant(&z2, &z2, 1).unwrap().is_zero());
        assert!(matches!(
            BinaryForm::transvectant(&z2, &z, 2),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn exact_division_of_forms() {
        let a = BinaryForm::quartic_ints([1, 0, 0, 0, -1]);
        let d = BinaryForm::from_ints(2, &[1, 0, 1]).unwrap();
        assert_eq!(a.div_exact(&d).unwrap(), BinaryForm::from_ints(2, &[-1, 0, 1]).unwrap());
        assert!(a.div_exact(&BinaryForm::from_ints(1, &[2, 1]).unwrap()).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(BinaryForm::quartic_ints([1, 0, -3, 1, 2]).to_string(), "z^4 - 3*z^2 + z + 2");
    }
}
