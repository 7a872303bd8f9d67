//! String form of exact rationals.
//!
//! Every rational crossing a serialization boundary is written `"num/den"`
//! in lowest terms with positive denominator, or just `"num"` when the
//! denominator is 1. This keeps JSON free of floats.

use num_rational::Rational64;
use num_traits::One;

/// Formats a rational in canonical `num/den` form, dropping `/1`.
pub fn format_ratio(q: Rational64) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"num"` or `"num/den"` into a reduced rational.
pub fn parse_ratio(s: &str) -> Result<Rational64, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| format!("invalid rational numerator in {s:?}"))?;
    let den: i64 = den
        .parse()
        .map_err(|_| format!("invalid rational denominator in {s:?}"))?;
    if den == 0 {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational64::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(format_ratio(Rational64::new(4, 2)), "2");
        assert_eq!(format_ratio(Rational64::new(-4, 3)), "-4/3");
        assert_eq!(format_ratio(Rational64::new(4, -3)), "-4/3");
        assert_eq!(format_ratio(Rational64::new(0, 5)), "0");
    }

    #[test]
    fn round_trip() {
        for s in ["2", "-4/3", "0", "7/2"] {
            let q = parse_ratio(s).unwrap();
            assert_eq!(format_ratio(q), s);
        }
        assert_eq!(parse_ratio("6/4").unwrap(), Rational64::new(3, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("a/b").is_err());
        assert!(parse_ratio("").is_err());
    }
}
