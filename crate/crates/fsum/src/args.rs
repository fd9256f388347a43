//! Parsers for grid flags: integer sets (`1..5`, `2,3,7`, `-3..3`) and
//! rational sets (`1/2,-2/3,0..4`).

use std::str::FromStr;

use fsum_core::{BigInt, BigRational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?}: {reason}")]
pub struct ParseError {
    pub input: String,
    pub reason: &'static str,
}

fn err(input: &str, reason: &'static str) -> ParseError {
    ParseError {
        input: input.to_string(),
        reason,
    }
}

/// `a..b` (inclusive) split at the first `..` that is not a sign.
fn split_range(s: &str) -> Option<(&str, &str)> {
    let idx = s.find("..")?;
    Some((&s[..idx], &s[idx + 2..]))
}

/// Comma list whose items are integers or inclusive `a..b` ranges, in given order.
pub fn parse_int_set(s: &str) -> Result<Vec<i64>, ParseError> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        if item.is_empty() {
            return Err(err(s, "empty list item"));
        }
        match split_range(item) {
            Some((a, b)) => {
                let a = i64::from_str(a.trim()).map_err(|_| err(s, "bad range start"))?;
                let b = i64::from_str(b.trim()).map_err(|_| err(s, "bad range end"))?;
                if a > b {
                    return Err(err(s, "empty range"));
                }
                out.extend(a..=b);
            }
            None => out.push(i64::from_str(item).map_err(|_| err(s, "not an integer"))?),
        }
    }
    Ok(out)
}

/// Like [`parse_int_set`] but rejects negatives.
pub fn parse_nat_set(s: &str) -> Result<Vec<u64>, ParseError> {
    parse_int_set(s)?
        .into_iter()
        .map(|v| u64::try_from(v).map_err(|_| err(s, "negative value")))
        .collect()
}

/// `a` or `a/b` with `b ≠ 0`.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| err(s, "bad numerator"))?;
    let d = BigInt::from_str(d).map_err(|_| err(s, "bad denominator"))?;
    if d == BigInt::from(0) {
        return Err(err(s, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

/// Comma list of rationals and inclusive integer ranges.
pub fn parse_rational_set(s: &str) -> Result<Vec<BigRational>, ParseError> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        if split_range(item).is_some() {
            out.extend(
                parse_int_set(item)?
                    .into_iter()
                    .map(|v| BigRational::from_integer(v.into())),
            );
        } else {
            out.push(parse_rational(item)?);
        }
    }
    Ok(out)
}

pub fn parse_int_list(s: &str) -> Result<Vec<BigInt>, ParseError> {
    s.split(',')
        .map(|t| BigInt::from_str(t.trim()).map_err(|_| err(s, "not an integer")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn integer_sets() {
        assert_eq!(parse_int_set("-3..3").unwrap(), vec![-3, -2, -1, 0, 1, 2, 3]);
        assert_eq!(parse_int_set("2,3,5").unwrap(), vec![2, 3, 5]);
        assert_eq!(parse_int_set("1,4..6").unwrap(), vec![1, 4, 5, 6]);
        assert_eq!(parse_int_set("-5..-3").unwrap(), vec![-5, -4, -3]);
        assert!(parse_int_set("3..1").is_err());
        assert!(parse_int_set("1,,2").is_err());
        assert!(parse_nat_set("-1").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), q(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(
            parse_rational_set("1/2,-1..1").unwrap(),
            vec![q(1, 2), q(-1, 1), q(0, 1), q(1, 1)]
        );
    }
}
