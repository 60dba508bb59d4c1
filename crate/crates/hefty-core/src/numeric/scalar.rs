//! Exact rational scalars.
//!
//! Every coordinate, weight, and intermediate quantity in this crate is a
//! [`Scalar`], an arbitrary-precision rational kept in canonical reduced form
//! (positive denominator, gcd 1) by `num`. Arithmetic is exact: `(a+b)-b == a`
//! holds bit-for-bit.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Scalar = BigRational;

/// Scalar from a machine integer.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Scalar p/q from machine integers. Panics if q == 0.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parse an exact numeric token: an integer (`-12`), a fraction (`7/3`), or a
/// finite decimal (`0.125`, read as 1/8, never a binary float).
pub fn parse_scalar(token: &str) -> Result<Scalar, String> {
    let tok = token.trim();
    if tok.is_empty() {
        return Err("empty numeric token".to_string());
    }
    if let Some((num_part, den_part)) = tok.split_once('/') {
        let p = parse_decimal(num_part)?;
        let q = parse_decimal(den_part)?;
        if q.is_zero() {
            return Err(format!("zero denominator in `{tok}`"));
        }
        return Ok(p / q);
    }
    parse_decimal(tok)
}

fn parse_decimal(tok: &str) -> Result<Scalar, String> {
    let tok = tok.trim();
    let (sign, digits) = match tok.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, tok.strip_prefix('+').unwrap_or(tok)),
    };
    if digits.is_empty() {
        return Err(format!("malformed number `{tok}`"));
    }
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("malformed number `{tok}`"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(format!("malformed number `{tok}`"));
    }
    let mut numer = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse::<BigInt>().map_err(|e| e.to_string())?
    };
    let mut denom = BigInt::one();
    for c in frac_part.chars() {
        numer = numer * 10 + (c as u8 - b'0');
        denom *= 10;
    }
    Ok(Scalar::new(BigInt::from(sign) * numer, denom))
}

/// Canonical text form: plain integer when the denominator is 1, `p/q`
/// otherwise. Round-trips exactly through [`parse_scalar`].
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Fixed-point decimal rendering with `places` digits, truncated toward zero.
/// Used for SVG coordinates; pure integer arithmetic, so byte-deterministic.
pub fn format_fixed(s: &Scalar, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = (s.numer() * &scale) / s.denom();
    let neg = scaled.is_negative();
    let abs = scaled.abs();
    let digits = abs.to_string();
    let places = places as usize;
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = padded.len() - places;
    let (ip, fp) = padded.split_at(split);
    let sign = if neg && (ip != "0" || fp.bytes().any(|b| b != b'0')) {
        "-"
    } else {
        ""
    };
    format!("{sign}{ip}.{fp}")
}
