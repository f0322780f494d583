//! Exact rational scalars.
//!
//! Everything in this crate that is not an integer count is a `Rat`:
//! an arbitrary-precision rational from `num`. Half-integral weight
//! coordinates show up as soon as a Weyl vector does, so exactness here is
//! load-bearing, not cosmetic.

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational; panics on zero denominator.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Exact conversion to `i64`; `None` if not an integer or out of range.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    let n = r.numer();
    i64::try_from(n.clone()).ok()
}

/// Render as `p` or `p/q`, the form used by the JSON interfaces.
pub fn render(r: &Rat) -> String {
    r.to_string()
}

/// Parse `p` or `p/q` with optional leading minus.
pub fn parse(s: &str) -> Option<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().ok()?;
    let d: BigInt = den.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_roundtrip() {
        for s in ["0", "3", "-7", "1/2", "-5/3"] {
            let r = parse(s).unwrap();
            assert_eq!(render(&r), s);
        }
        assert_eq!(parse("2/4").unwrap(), ratio(1, 2));
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }

    #[test]
    fn integer_checks() {
        assert_eq!(to_i64(&rat(-9)), Some(-9));
        assert_eq!(to_i64(&ratio(1, 2)), None);
        assert!(is_integer(&ratio(4, 2)));
    }
}
