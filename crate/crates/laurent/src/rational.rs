use num::{BigInt, BigRational};

use crate::LaurentError;

/// Exact rational in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Result<Rational, LaurentError> {
    let s = s.trim();
    let bad = || LaurentError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = rat(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(rat(0, 5).to_string(), "0");
        assert_eq!(rat(4, 2).to_string(), "2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/2", "-1", "0", "-7/9"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
