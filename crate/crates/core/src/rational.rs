//! Exact dyadic rationals for off-diagonal elements and entropic measures.

use num_rational::Ratio;
use serde::Serialize;

/// Reduced fraction with a positive denominator.
pub type Rational = Ratio<i128>;

pub fn quarter() -> Rational {
    Rational::new(1, 4)
}

pub fn half() -> Rational {
    Rational::new(1, 2)
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Decimal with at most six significant digits, trailing zeros trimmed.
pub fn decimal(r: &Rational) -> String {
    let v = to_f64(r);
    if v == 0.0 {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let places = (5 - magnitude).max(0) as usize;
    let s = format!("{v:.places$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `p/q (decimal)`, or `p (p)` for integers.
pub fn render(r: &Rational) -> String {
    format!("{r} ({})", decimal(r))
}

/// JSON shape: exact numerator and denominator plus a decimal convenience.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalRecord {
    pub numerator: i128,
    pub denominator: i128,
    pub decimal: f64,
}

impl From<&Rational> for RationalRecord {
    fn from(r: &Rational) -> Self {
        RationalRecord {
            numerator: *r.numer(),
            denominator: *r.denom(),
            decimal: to_f64(r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_fractions() {
        assert_eq!(render(&Rational::new(3, 16)), "3/16 (0.1875)");
        assert_eq!(render(&Rational::new(-1, 4)), "-1/4 (-0.25)");
        assert_eq!(render(&Rational::new(0, 8)), "0 (0)");
        assert_eq!(decimal(&Rational::new(1, 3)), "0.333333");
        assert_eq!(decimal(&Rational::new(255, 1024)), "0.249023");
        assert_eq!(decimal(&Rational::new(1, 1)), "1");
    }

    #[test]
    fn stays_reduced() {
        let r = Rational::new(4, 16);
        assert_eq!((*r.numer(), *r.denom()), (1, 4));
        let neg = Rational::new(2, -8);
        assert_eq!((*neg.numer(), *neg.denom()), (-1, 4));
    }
}
