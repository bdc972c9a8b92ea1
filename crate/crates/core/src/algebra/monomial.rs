//! Packed exponent vectors.
//!
//! A monomial in up to [`MAX_VARS`] variables is stored in a single `u128`,
//! sixteen bits per variable, with variable 0 in the most significant slot.
//! Integer comparison of the packed words is then lexicographic order with
//! `v0 > v1 > ... > v7`, and monomial multiplication is plain addition.

use std::fmt;

/// Number of variables a packed monomial can carry.
pub const MAX_VARS: usize = 8;

const BITS: u32 = 16;
const MASK: u128 = 0xFFFF;

/// Index of a polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u8);

impl Var {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    fn shift(self) -> u32 {
        (MAX_VARS as u32 - 1 - self.0 as u32) * BITS
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub(crate) u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(v: Var, exp: u32) -> Self {
        assert!(v.index() < MAX_VARS, "variable index out of range");
        assert!(exp <= MASK as u32, "exponent overflow");
        Monomial((exp as u128) << v.shift())
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        exps.iter()
            .enumerate()
            .fold(Monomial::ONE, |m, (i, &e)| m.mul(Monomial::var(Var(i as u8), e)))
    }

    #[inline]
    pub fn exponent(self, v: Var) -> u32 {
        ((self.0 >> v.shift()) & MASK) as u32
    }

    pub fn exponents(self) -> [u32; MAX_VARS] {
        let mut out = [0; MAX_VARS];
        for (i, e) in out.iter_mut().enumerate() {
            *e = self.exponent(Var(i as u8));
        }
        out
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn total_degree(self) -> u32 {
        self.exponents().iter().sum()
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        // Degrees are capped far below 2^16, so slots never carry.
        Monomial(self.0 + other.0)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        for i in 0..MAX_VARS {
            let v = Var(i as u8);
            if self.exponent(v) < other.exponent(v) {
                return None;
            }
        }
        Some(Monomial(self.0 - other.0))
    }

    /// Componentwise minimum.
    pub fn gcd(self, other: Monomial) -> Monomial {
        let mut out = 0u128;
        for i in 0..MAX_VARS {
            let v = Var(i as u8);
            let e = self.exponent(v).min(other.exponent(v)) as u128;
            out |= e << v.shift();
        }
        Monomial(out)
    }

    /// The monomial with the exponent of `v` set to zero.
    #[inline]
    pub fn without(self, v: Var) -> Monomial {
        Monomial(self.0 & !(MASK << v.shift()))
    }

    /// Lower the exponent of `v` by one; the caller guarantees it is positive.
    #[inline]
    pub fn dec(self, v: Var) -> Monomial {
        Monomial(self.0 - (1u128 << v.shift()))
    }

    pub fn vars(self) -> impl Iterator<Item = Var> {
        (0..MAX_VARS as u8)
            .map(Var)
            .filter(move |&v| self.exponent(v) > 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_orders_lexicographically() {
        let x = Monomial::var(Var(0), 1);
        let y3 = Monomial::var(Var(1), 3);
        assert!(x > y3);
        assert!(x.mul(y3) > x);
        assert_eq!(x.mul(y3).exponent(Var(1)), 3);
        assert_eq!(x.mul(y3).div(y3), Some(x));
        assert_eq!(x.div(y3), None);
        assert_eq!(x.mul(y3).without(Var(0)), y3);
    }
}
