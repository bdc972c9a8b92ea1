//! Sparse multivariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var, MAX_VARS};

/// Multiplicative hasher for packed monomials.
#[derive(Default)]
pub(crate) struct MonoHasher(u64);

impl Hasher for MonoHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(5) ^ b as u64).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
        }
    }

    fn write_u128(&mut self, n: u128) {
        let folded = (n as u64) ^ ((n >> 64) as u64).rotate_left(29);
        self.0 = folded.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        self.0 ^= self.0 >> 31;
    }
}

pub(crate) type MonoMap<V> = HashMap<u128, V, BuildHasherDefault<MonoHasher>>;

/// A polynomial in `Z[v0, ..., v7]`.
///
/// Terms are kept sorted by decreasing monomial (lex order, `v0` first) and
/// never contain a zero coefficient, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(Monomial::ONE, c)] }
        }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigInt::one(), Monomial::var(v, 1))
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut acc: MonoMap<BigInt> = MonoMap::default();
        for (m, c) in terms {
            *acc.entry(m.0).or_default() += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: MonoMap<BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (Monomial(m), c))
            .collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Polynomial { terms }
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    /// Leading coefficient in lex order (zero for the zero polynomial).
    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    /// Largest exponent of any single variable.
    pub fn max_degree(&self) -> u32 {
        let mut best = [0u32; MAX_VARS];
        for (m, _) in &self.terms {
            for (b, e) in best.iter_mut().zip(m.exponents()) {
                *b = (*b).max(e);
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    /// Bitmask of the variables that occur.
    pub fn var_mask(&self) -> u8 {
        let mut mask = 0u8;
        for (m, _) in &self.terms {
            for v in m.vars() {
                mask |= 1 << v.0;
            }
        }
        mask
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    /// Maximum absolute value of a coefficient.
    pub fn height(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Divide every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Polynomial {
        if c.is_one() {
            return self.clone();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    debug_assert!((a % c).is_zero());
                    (*m, a / c)
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the integer content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(v);
                (e > 0).then(|| (m.dec(v), c * BigInt::from(e)))
            })
            .collect::<Vec<_>>();
        // Lowering one exponent preserves the relative order of the survivors.
        Polynomial::from_sorted_unchecked(terms)
    }

    /// Substitute the integer `value` for `v`.
    pub fn eval_var_int(&self, v: Var, value: &BigInt) -> Polynomial {
        let deg = self.degree_in(v) as usize;
        let mut powers = Vec::with_capacity(deg + 1);
        powers.push(BigInt::one());
        for i in 1..=deg {
            let p = &powers[i - 1] * value;
            powers.push(p);
        }
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.without(v), c * &powers[m.exponent(v) as usize])),
        )
    }

    /// Substitute a polynomial for `v`.
    pub fn substitute(&self, v: Var, value: &Polynomial) -> Polynomial {
        let coeffs = self.to_univariate(v);
        let mut acc = Polynomial::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Evaluate at a point given by one value per variable index; variables that
    /// do not occur may be left as `None`.
    pub fn evaluate(&self, point: &[Option<BigRational>]) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in m.vars() {
                let value = point.get(v.index())?.as_ref()?;
                t *= num_traits::pow(value.clone(), m.exponent(v) as usize);
            }
            total += t;
        }
        Some(total)
    }

    /// Coefficients with respect to `v`: entry `i` multiplies `v^i`.
    pub fn to_univariate(&self, v: Var) -> Vec<Polynomial> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exponent(v) as usize].push((m.without(v), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                // Removing `v` can reorder only when `v` is not the leading variable.
                ts.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
                Polynomial { terms: ts }
            })
            .collect()
    }

    pub fn from_univariate(v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            let m = Monomial::var(v, i as u32);
            terms.extend(c.terms.iter().map(|(a, k)| (a.mul(m), k.clone())));
        }
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Polynomial { terms }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `Z[vars]`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = d.constant_value() {
            if self.terms.iter().all(|(_, a)| (a % &c).is_zero()) {
                return Some(Polynomial {
                    terms: self.terms.iter().map(|(m, a)| (*m, a / &c)).collect(),
                });
            }
            return None;
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, a) in &self.terms {
                let q = m.div(*dm)?;
                let (qc, r) = a.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((q, qc));
            }
            return Some(Polynomial { terms: out });
        }
        // Quick rejections on degrees.
        for i in 0..MAX_VARS {
            let v = Var(i as u8);
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (dm, dc) = d.terms[0].clone();
        let mut rem: MonoMap<BigInt> = MonoMap::default();
        for (m, c) in &self.terms {
            rem.insert(m.0, c.clone());
        }
        // Max-heap of candidate leading monomials of the remainder.
        let mut heap: std::collections::BinaryHeap<u128> = rem.keys().copied().collect();
        let mut quotient: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some(top) = heap.pop() {
            let Some(c) = rem.get(&top) else { continue };
            if c.is_zero() {
                rem.remove(&top);
                continue;
            }
            // Duplicates may remain in the heap; skip stale ones.
            while heap.peek() == Some(&top) {
                heap.pop();
            }
            let m = Monomial(top);
            let qm = m.div(dm)?;
            let (qc, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            rem.remove(&top);
            for (tm, tc) in d.terms.iter().skip(1) {
                let key = tm.mul(qm).0;
                let prod = tc * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= prod;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -prod);
                        heap.push(key);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        if !rem.is_empty() {
            return None;
        }
        // Quotient terms were produced in decreasing order.
        Some(Polynomial { terms: quotient })
    }

    /// Render with the given variable names (index `i` uses `names[i]`).
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    /// First term in lex order, rendered with the given names.
    pub fn leading_term_string(&self, names: &[&str]) -> String {
        match self.terms.first() {
            None => "0".to_string(),
            Some((m, c)) => {
                let p = Polynomial { terms: vec![(*m, c.clone())] };
                p.display_with(names).to_string()
            }
        }
    }
}

pub const DEFAULT_NAMES: [&str; MAX_VARS] = ["x", "y", "z", "u", "v", "w", "s", "r"];

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [&'a str],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let vars: Vec<String> = m
                .vars()
                .map(|v| {
                    let name = self
                        .names
                        .get(v.index())
                        .copied()
                        .unwrap_or(DEFAULT_NAMES[v.index()]);
                    match m.exponent(v) {
                        1 => name.to_string(),
                        e => format!("{name}^{e}"),
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&DEFAULT_NAMES))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn merge(a: &Polynomial, b: &Polynomial, negate_b: bool) -> Polynomial {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ma.cmp(mb) {
            Ordering::Greater => {
                out.push((*ma, ca.clone()));
                i += 1;
            }
            Ordering::Less => {
                out.push((*mb, if negate_b { -cb } else { cb.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { ca - cb } else { ca + cb };
                if !c.is_zero() {
                    out.push((*ma, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(
        b.terms[j..]
            .iter()
            .map(|(m, c)| (*m, if negate_b { -c } else { c.clone() })),
    );
    Polynomial { terms: out }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        merge(self, rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        merge(self, rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return Polynomial {
                terms: large.terms.iter().map(|(a, k)| (a.mul(*m), k * c)).collect(),
            };
        }
        let mut acc: MonoMap<BigInt> = MonoMap::default();
        acc.reserve(small.terms.len() * large.terms.len() / 2 + 1);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let key = ma.mul(*mb).0;
                let prod = ca * cb;
                match acc.get_mut(&key) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        Polynomial::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var(Var(0))
    }
    fn y() -> Polynomial {
        Polynomial::var(Var(1))
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p.derivative(Var(0)).to_string(), "2*x");
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = &(&x() + &y()) * &(&x() - &y());
        let q = a.div_exact(&(&x() - &y())).unwrap();
        assert_eq!(q, &x() + &y());
        assert!(a.div_exact(&(&x() + &Polynomial::one())).is_none());
        let two = Polynomial::from_i64(2);
        assert!(x().div_exact(&two).is_none());
    }

    #[test]
    fn univariate_round_trip() {
        let p = &(&x() * &y()).pow(2) + &(&y() + &Polynomial::from_i64(3));
        let cs = p.to_univariate(Var(1));
        assert_eq!(cs.len(), 3);
        assert_eq!(Polynomial::from_univariate(Var(1), &cs), p);
    }
}
