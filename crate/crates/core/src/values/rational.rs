use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always reduced with a positive denominator.
pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p/q`, `p`, or a finite decimal such as `-0.3`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let mut digits = String::from(whole_digits);
        digits.push_str(frac);
        let n: BigInt = digits.parse().ok()?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Some(if negative { -r } else { r });
    }
    t.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// Canonical text form: `p/q`, or `p` when `q = 1`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Height used for pivot selection: `|numerator| · denominator`.
pub(crate) fn height(q: &Rational) -> BigInt {
    q.numer().abs() * q.denom()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/10"), Some(rat(3, 10)));
        assert_eq!(parse_rational("6/20"), Some(rat(3, 10)));
        assert_eq!(parse_rational("-3/-10"), Some(rat(3, 10)));
        assert_eq!(parse_rational("0.3"), Some(rat(3, 10)));
        assert_eq!(parse_rational("-0.3"), Some(rat(-3, 10)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("1."), None);
    }

    #[test]
    fn canonical_text() {
        assert_eq!(format_rational(&rat(2, 4)), "1/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(1, -3)), "-1/3");
        assert_eq!(format_rational(&zero()), "0");
    }
}
