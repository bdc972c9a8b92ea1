//! Exact rational scalars and their literal syntax.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;

/// The ground field of every computation.
pub type ExactScalar = BigRational;

/// Parse `n` or `n/d`, decimal digits only, optional leading `-`.
pub fn parse_scalar(text: &str) -> Result<ExactScalar, Error> {
    let bad = || Error::Malformed(format!("invalid rational literal `{text}`"));
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => {
            if !digits(n) || !digits(d) {
                return Err(bad());
            }
            (n, d)
        }
        None => {
            if !digits(body) {
                return Err(bad());
            }
            (body, "1")
        }
    };
    let mut n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Malformed(format!("zero denominator in `{text}`")));
    }
    if neg {
        n = -n;
    }
    Ok(BigRational::new(n, d))
}

pub fn scalar(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> ExactScalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_scalar("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_scalar("7").unwrap(), scalar(7));
        for bad in ["1//2", "1/0", "", "-", "1.5", "+2", "1/-2", "a"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }
}
