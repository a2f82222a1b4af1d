//! Helpers around the arbitrary-precision rational type.

use malachite_base::num::arithmetic::traits::Sign;
use malachite_base::num::conversion::traits::RoundingFrom;
use malachite_base::rounding_modes::RoundingMode;
use std::cmp::Ordering;

pub use malachite_q::Rational;

pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::from_signeds(n, d)
}

pub fn int(n: i64) -> Rational {
    Rational::from(n)
}

pub fn is_zero(r: &Rational) -> bool {
    r.sign() == Ordering::Equal
}

pub fn is_negative(r: &Rational) -> bool {
    r.sign() == Ordering::Less
}

pub fn is_one(r: &Rational) -> bool {
    *r == Rational::from(1u32)
}

pub fn to_f64(r: &Rational) -> f64 {
    f64::rounding_from(r, RoundingMode::Nearest).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert!(is_negative(&r));
        assert_eq!(to_f64(&r), -1.5);
        assert!(is_zero(&rat(0, 7)));
        assert!(is_one(&rat(3, 3)));
    }
}
