//! Exact rational scalars.
//!
//! Every algebraic computation in this crate runs over arbitrary-precision
//! rationals; nothing is ever rounded or compared with a tolerance. `Rat` is
//! `num_rational::BigRational`, which keeps values reduced with a positive
//! denominator, so equality of values is equality of representations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

/// Rational from an integer value.
pub fn rat<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// Rational p/q; panics if q = 0.
pub fn ratio<P: Into<BigInt>, Q: Into<BigInt>>(p: P, q: Q) -> Rat {
    Rat::new(p.into(), q.into())
}

/// Parse a rational written as "p" or "p/q" in decimal.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rat::from_integer)
            .map_err(|_| format!("`{s}` is not an integer")),
        Some((p, q)) => {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| format!("`{s}` has a malformed numerator"))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| format!("`{s}` has a malformed denominator"))?;
            if q.is_zero() {
                return Err(format!("`{s}` has denominator zero"));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Canonical rendering: "p/q" with q > 0 and gcd(p, q) = 1, or plain "p"
/// when the value is an integer.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integer_and_fraction() {
        assert_eq!(parse_rat("7").unwrap(), rat(7));
        assert_eq!(parse_rat("-3").unwrap(), rat(-3));
        assert_eq!(parse_rat("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rat("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rat("4/-6").unwrap(), ratio(-2, 3));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn canonical_format() {
        assert_eq!(fmt_rat(&rat(5)), "5");
        assert_eq!(fmt_rat(&rat(-5)), "-5");
        assert_eq!(fmt_rat(&ratio(6, 4)), "3/2");
        assert_eq!(fmt_rat(&ratio(6, -4)), "-3/2");
        assert_eq!(fmt_rat(&rat(0)), "0");
    }

    #[test]
    fn format_parse_round_trip() {
        for (p, q) in [(0i64, 1i64), (3, 1), (-7, 2), (22, 7), (-1, 9)] {
            let x = ratio(p, q);
            assert_eq!(parse_rat(&fmt_rat(&x)).unwrap(), x);
        }
    }
}
