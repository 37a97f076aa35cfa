//! Exact rationals: parsing from `p/q`, integer or decimal strings, and
//! rendering as `p/q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"3"`, `"-2/5"` or `"6.7"` exactly.
pub fn parse(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Q::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{whole_digits}{frac}").parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let q = Q::new(digits, scale);
        return Some(if negative { -q } else { q });
    }
    s.parse::<BigInt>().ok().map(Q::from_integer)
}

/// Renders as `p/q` with `q > 0` in lowest terms, `q = 1` included.
pub fn render(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn is_unit(q: &Q) -> bool {
    q.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse("6.7"), Some(ratio(67, 10)));
        assert_eq!(parse("-0.4"), Some(ratio(-2, 5)));
        assert_eq!(parse("4/6"), Some(ratio(2, 3)));
        assert_eq!(parse(" 24 "), Some(int(24)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
        assert_eq!(parse("1."), None);
    }

    #[test]
    fn renders_lowest_terms() {
        assert_eq!(render(&ratio(4, -6)), "-2/3");
        assert_eq!(render(&int(24)), "24/1");
        assert_eq!(render(&ratio(67, 10)), "67/10");
    }
}
