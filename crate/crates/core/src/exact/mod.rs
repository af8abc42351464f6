//! Exact arithmetic: rationals, the biquadratic field Q(sqrt2, sqrt3) and
//! dyadic rationals.

mod dyadic;
mod quad_field;

pub use dyadic::Dyadic;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use quad_field::QuadFieldElement;

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};

/// Lexicographic comparison of two rational vectors.
pub fn lex_compare(xs: &[BigRational], ys: &[BigRational]) -> Result<Ordering> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    Ok(xs
        .iter()
        .zip(ys)
        .map(|(x, y)| x.cmp(y))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal))
}

/// Builds `num/den` from machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `num/den` text form used by every serializer.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the `num/den` (or bare integer) text form.
pub fn rational_from_str(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Exact conversion of a finite double.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // very large terms: scale both down by the same power of two
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            if d == 0.0 {
                f64::INFINITY.copysign(n)
            } else {
                n / d
            }
        }
    }
}
