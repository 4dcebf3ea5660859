//! Exact number types: arbitrary-precision rationals, Gaussian rationals and
//! directions on the unit circle.

mod dir;
mod grat;

pub(crate) use dir::parse_pair;
pub use dir::{closed_halfplane_exists, open_halfplane_exists, Dir};
pub use grat::GRat;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rat = BigRational;

/// Builds `n/d` in lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"a"` or `"a/b"` (surrounding whitespace allowed).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t.as_str(), "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational literal `{s}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational literal `{s}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form: `"a"` for integers, `"a/b"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat(" -3 ").unwrap(), int(-3));
        assert_eq!(format_rat(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rat(&int(7)), "7");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn denominator_is_positive() {
        let r = rat(3, -6);
        assert_eq!(format_rat(&r), "-1/2");
        assert!(r.denom() > &BigInt::zero());
    }
}
