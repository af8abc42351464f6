//! File formats: SVG, OBJ, JSON and CSV. Every writer returns the document
//! as a string and formats floats with [`fmt_f64`], so output is
//! byte-identical for identical input.

mod csv;
mod json;
mod obj;
mod svg;

pub use csv::{group_csv, spectrum_csv};
pub use json::{
    hyperbolic_json, parse_tiles_json, tiles_json, OrientationRecord, TileRecord, TilesDocument,
};
pub use obj::tiles_obj;
pub use svg::{hyperbolic_svg, tiles_svg, HyperbolicStyle};

/// Plain decimal with exactly 12 significant digits.
pub fn fmt_f64(x: f64) -> String {
    const DIGITS: usize = 12;
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() {
            format!("0.{}", "0".repeat(DIGITS - 1))
        } else {
            "0".into()
        };
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific form");
    let exp: i64 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point as usize >= DIGITS {
        format!("{}{}", digits, "0".repeat(point as usize - DIGITS))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_f64(0.0), "0.00000000000");
        assert_eq!(fmt_f64(-0.0), "0.00000000000");
        assert_eq!(fmt_f64(1.0), "1.00000000000");
        assert_eq!(fmt_f64(-2.5), "-2.50000000000");
        assert_eq!(fmt_f64(5f64.sqrt()), "2.23606797750");
        assert_eq!(fmt_f64(1234.5), "1234.50000000");
        assert_eq!(fmt_f64(0.00125), "0.00125000000000");
        assert_eq!(fmt_f64(3e14), "300000000000000");
        assert_eq!(fmt_f64(999999999999.7), "1000000000000");
    }
}
