//! Exact scalar arithmetic. All symbolic coefficients in this crate are
//! arbitrary-precision rationals; this module provides the shared alias and
//! small construction/formatting helpers around `num_rational::BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational scalar (reduced, positive denominator).
pub type Rat = BigRational;

/// Integer as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as a `Rat`.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Lossy conversion to `f64`.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Formats as `"num/den"`, or just `"num"` for integers.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"num"` or `"num/den"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidParameter(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::InvalidParameter(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Rising factorial `(x)_m = x (x+1) ... (x+m-1)` with exact arithmetic.
pub fn rising(x: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..m {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// `n!` as a `Rat`.
pub fn factorial(n: u32) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// `base^exp` for integer `exp` of either sign.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow::pow(base.clone(), (-exp) as usize).recip()
    }
}

/// `Some(-n)` if `r` is an integer `<= 0` (so the Pochhammer row dies past `n`).
pub fn as_nonpositive_int(r: &Rat) -> Option<u32> {
    if r.denom().is_one() && !r.is_positive() {
        (-r.numer()).to_u32()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-4", "2/3", "-7/5"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert_eq!(rat_to_string(&parse_rat("4/2").unwrap()), "2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn rising_factorial_small() {
        assert_eq!(rising(&rat_int(3), 2), rat_int(12));
        assert_eq!(rising(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(rising(&rat_int(5), 0), rat_int(1));
    }

    #[test]
    fn nonpositive_int_detection() {
        assert_eq!(as_nonpositive_int(&rat_int(0)), Some(0));
        assert_eq!(as_nonpositive_int(&rat_int(-3)), Some(3));
        assert_eq!(as_nonpositive_int(&rat_int(2)), None);
        assert_eq!(as_nonpositive_int(&rat(-1, 2)), None);
    }
}
