//! Exact numeric values for quantity arithmetic.
//!
//! All quantity values are `BigRational` internally, so equality checks are
//! exact and division never loses precision. Parsing accepts plain integers,
//! decimals, and comma-grouped digits; formatting prefers decimal notation
//! and falls back to `p/q` for non-terminating quotients.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Num = BigRational;

/// Parse a digit string (optionally comma-grouped, optionally with a decimal
/// point and leading sign) into an exact rational.
pub fn parse_decimal(s: &str) -> Option<Num> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let cleaned: String = body.chars().filter(|c| *c != ',').collect();
    if cleaned.is_empty() {
        return None;
    }
    let mut parts = cleaned.splitn(2, '.');
    let int_part = parts.next().unwrap_or("");
    let frac_part = parts.next().unwrap_or("");
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{}{}", int_part, frac_part);
    let numer: BigInt = digits.parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let mut value = BigRational::new(numer, denom);
    if sign < 0 {
        value = -value;
    }
    Some(value)
}

pub fn num_from_i64(v: i64) -> Num {
    BigRational::from_integer(BigInt::from(v))
}

/// True when the rational has a terminating decimal expansion.
fn terminates(n: &Num) -> bool {
    let mut d = n.denom().clone();
    for p in [2u32, 5u32] {
        let p = BigInt::from(p);
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    d.is_one()
}

/// Render a rational as a decimal string where the expansion terminates,
/// otherwise as `numer/denom`.
pub fn format_num(n: &Num) -> String {
    if n.is_integer() {
        return n.numer().to_string();
    }
    if terminates(n) {
        // Scale until integral; at most denom's factors of 2 and 5.
        let mut scale = 0u32;
        let ten = BigInt::from(10u32);
        let mut numer = n.numer().clone();
        let mut denom = n.denom().clone();
        while !denom.is_one() {
            numer *= &ten;
            scale += 1;
            let g = num::integer::gcd(numer.clone(), denom.clone());
            numer /= &g;
            denom /= g;
        }
        let negative = numer.is_negative();
        let digits = numer.abs().to_string();
        let (int_part, frac_part) = if digits.len() > scale as usize {
            let split = digits.len() - scale as usize;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            ("0".to_string(), format!("{:0>width$}", digits, width = scale as usize))
        };
        let frac_part = frac_part.trim_end_matches('0');
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&int_part);
        if !frac_part.is_empty() {
            out.push('.');
            out.push_str(frac_part);
        }
        out
    } else {
        format!("{}/{}", n.numer(), n.denom())
    }
}

/// Lossy conversion for report-level arithmetic (never used in comparisons).
pub fn num_to_f64(n: &Num) -> f64 {
    n.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_grouped() {
        assert_eq!(parse_decimal("158000").unwrap(), num_from_i64(158_000));
        assert_eq!(parse_decimal("7,000").unwrap(), num_from_i64(7_000));
        assert_eq!(parse_decimal("73.0").unwrap(), num_from_i64(73));
        assert_eq!(
            parse_decimal("99.6").unwrap(),
            BigRational::new(BigInt::from(996), BigInt::from(10))
        );
        assert_eq!(parse_decimal("-4").unwrap(), num_from_i64(-4));
    }

    #[test]
    fn rejects_non_numbers() {
        assert!(parse_decimal("").is_none());
        assert!(parse_decimal("abc").is_none());
        assert!(parse_decimal("1.2.3").is_none());
        assert!(parse_decimal("3/4").is_none());
    }

    #[test]
    fn formats_decimals() {
        assert_eq!(format_num(&num_from_i64(5855)), "5855");
        assert_eq!(format_num(&parse_decimal("99.6").unwrap()), "99.6");
        assert_eq!(format_num(&parse_decimal("-0.25").unwrap()), "-0.25");
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(format_num(&third), "1/3");
    }
}
