//! Shared "t^3+2t+1" style term formatting and parsing.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::AlgError;

/// Writes nonzero `(exponent, coefficient)` terms in the order given.
pub(crate) fn format_terms<I>(terms: I) -> String
where
    I: IntoIterator<Item = (i64, BigInt)>,
{
    let mut out = String::new();
    for (exp, coeff) in terms {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if exp == 0 {
            out.push_str(&magnitude.to_string());
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push('t');
        if exp != 1 {
            out.push('^');
            out.push_str(&exp.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses a sum of monomials in `t`. Exponents may be negative when written
/// as `t^-k`. Repeated exponents are summed.
pub(crate) fn parse_terms(input: &str) -> Result<Vec<(i64, BigInt)>, AlgError> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || AlgError::Parse(input.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut terms = Vec::new();
    while pos < bytes.len() {
        let mut sign = BigInt::one();
        match bytes[pos] {
            b'+' if pos > 0 => pos += 1,
            b'-' => {
                sign = -sign;
                pos += 1;
            }
            _ if pos > 0 => return Err(bad()),
            _ => {}
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff = if pos > start {
            s[start..pos].parse::<BigInt>().map_err(|_| bad())?
        } else {
            BigInt::one()
        };
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
            if pos >= bytes.len() || bytes[pos] != b't' {
                return Err(bad());
            }
        }
        let exp = if pos < bytes.len() && bytes[pos] == b't' {
            pos += 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let estart = pos;
                if pos < bytes.len() && bytes[pos] == b'-' {
                    pos += 1;
                }
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                s[estart..pos].parse::<i64>().map_err(|_| bad())?
            } else {
                1
            }
        } else if pos == start {
            return Err(bad());
        } else {
            0
        };
        terms.push((exp, sign * coeff));
    }
    Ok(terms)
}
