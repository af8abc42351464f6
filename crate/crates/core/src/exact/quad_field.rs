use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational_to_f64;
use crate::error::{Error, Result};

/// An element `a + b*sqrt2 + c*sqrt3 + d*sqrt6` of Q(sqrt2, sqrt3).
///
/// The four coefficients are kept in lowest terms, so equality is plain
/// component-wise equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadFieldElement {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl QuadFieldElement {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self {
            a,
            ..Self::zero()
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn sqrt2() -> Self {
        Self {
            b: BigRational::one(),
            ..Self::zero()
        }
    }

    pub fn sqrt3() -> Self {
        Self {
            c: BigRational::one(),
            ..Self::zero()
        }
    }

    pub fn sqrt6() -> Self {
        Self {
            d: BigRational::one(),
            ..Self::zero()
        }
    }

    pub fn zero() -> Self {
        Self::default_zero()
    }

    fn default_zero() -> Self {
        Self {
            a: BigRational::zero(),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn coefficients(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            d: &self.d * r,
        }
    }

    /// The automorphism sqrt2 -> -sqrt2 (fixes sqrt3).
    pub fn conj_sqrt2(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            d: -&self.d,
        }
    }

    /// The automorphism sqrt3 -> -sqrt3 (fixes sqrt2).
    pub fn conj_sqrt3(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Multiplicative inverse, rationalized through both conjugations.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // x * sigma2(x) lies in Q(sqrt3); times its sqrt3-conjugate it is rational.
        let s2 = self.conj_sqrt2();
        let n1 = self * &s2;
        let n1c = n1.conj_sqrt3();
        let norm = &n1 * &n1c;
        debug_assert!(norm.b.is_zero() && norm.c.is_zero() && norm.d.is_zero());
        let inv_norm = norm.a.recip();
        Ok((&s2 * &n1c).scale(&inv_norm))
    }

    /// Exact sign of the real number this element denotes.
    pub fn signum(&self) -> Ordering {
        // write x = p + sqrt3 * q with p, q in Q(sqrt2)
        let p = (&self.a, &self.b);
        let q = (&self.c, &self.d);
        let sp = sign_sqrt2(p.0, p.1);
        let sq = sign_sqrt2(q.0, q.1);
        if sq == Ordering::Equal || sp == sq {
            return if sp == Ordering::Equal { sq } else { sp };
        }
        if sp == Ordering::Equal {
            return sq;
        }
        // opposite signs: compare p^2 with 3 q^2, both in Q(sqrt2)
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let p2 = (p.0 * p.0 + &two * p.1 * p.1, &two * p.0 * p.1);
        let q2 = (
            &three * (q.0 * q.0 + &two * q.1 * q.1),
            &three * &two * q.0 * q.1,
        );
        let diff = sign_sqrt2(&(&p2.0 - &q2.0), &(&p2.1 - &q2.1));
        match diff {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a)
            + rational_to_f64(&self.b) * std::f64::consts::SQRT_2
            + rational_to_f64(&self.c) * 3f64.sqrt()
            + rational_to_f64(&self.d) * 6f64.sqrt()
    }
}

/// Sign of u + v*sqrt2.
fn sign_sqrt2(u: &BigRational, v: &BigRational) -> Ordering {
    let su = u.cmp(&BigRational::zero());
    let sv = v.cmp(&BigRational::zero());
    if sv == Ordering::Equal || su == sv {
        return if su == Ordering::Equal { sv } else { su };
    }
    if su == Ordering::Equal {
        return sv;
    }
    let two = BigRational::from_integer(2.into());
    // |u| vs |v| sqrt2
    match (u * u).cmp(&(&two * v * v)) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => Ordering::Equal,
    }
}

impl fmt::Debug for QuadFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coef, unit) in [(&self.a, ""), (&self.b, "√2"), (&self.c, "√3"), (&self.d, "√6")] {
            if coef.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if coef.is_negative() { '-' } else { '+' })?;
                write!(f, "{}{}", coef.abs(), unit)?;
            } else {
                write!(f, "{}{}", coef, unit)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a QuadFieldElement> for &'a QuadFieldElement {
    type Output = QuadFieldElement;
    fn add(self, o: &QuadFieldElement) -> QuadFieldElement {
        QuadFieldElement {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }
}

impl<'a> Sub<&'a QuadFieldElement> for &'a QuadFieldElement {
    type Output = QuadFieldElement;
    fn sub(self, o: &QuadFieldElement) -> QuadFieldElement {
        QuadFieldElement {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
            d: &self.d - &o.d,
        }
    }
}

impl<'a> Mul<&'a QuadFieldElement> for &'a QuadFieldElement {
    type Output = QuadFieldElement;
    fn mul(self, o: &QuadFieldElement) -> QuadFieldElement {
        // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2, sqrt6^2 = 6
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let six = BigRational::from_integer(6.into());
        QuadFieldElement {
            a: a1 * a2 + &two * (b1 * b2) + &three * (c1 * c2) + &six * (d1 * d2),
            b: a1 * b2 + b1 * a2 + &three * (c1 * d2 + d1 * c2),
            c: a1 * c2 + c1 * a2 + &two * (b1 * d2 + d1 * b2),
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
}

impl Neg for &QuadFieldElement {
    type Output = QuadFieldElement;
    fn neg(self) -> QuadFieldElement {
        QuadFieldElement {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadFieldElement {
            type Output = QuadFieldElement;
            fn $m(self, o: QuadFieldElement) -> QuadFieldElement {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QuadFieldElement {
    type Output = QuadFieldElement;
    fn neg(self) -> QuadFieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn qf(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> QuadFieldElement {
        QuadFieldElement::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1), rat(d.0, d.1))
    }

    #[test]
    fn basis_products() {
        let s2 = QuadFieldElement::sqrt2();
        let s3 = QuadFieldElement::sqrt3();
        let s6 = QuadFieldElement::sqrt6();
        assert_eq!(&s2 * &s3, s6);
        assert_eq!(&s2 * &s6, QuadFieldElement::sqrt3().scale(&rat(2, 1)));
        assert_eq!(&s3 * &s6, QuadFieldElement::sqrt2().scale(&rat(3, 1)));
        assert_eq!(&s6 * &s6, QuadFieldElement::from_integer(6));
    }

    #[test]
    fn conjugate_product() {
        let one = QuadFieldElement::one();
        let x = &one + &QuadFieldElement::sqrt2();
        let y = &one - &QuadFieldElement::sqrt2();
        assert_eq!(&x * &y, QuadFieldElement::from_integer(-1));
    }

    #[test]
    fn additive_identity() {
        let x = qf((1, 3), (-2, 5), (7, 1), (0, 1));
        assert_eq!(&x + &QuadFieldElement::zero(), x);
    }

    #[test]
    fn inverse_examples() {
        let inv = QuadFieldElement::sqrt2().inverse().unwrap();
        assert_eq!(inv, qf((0, 1), (1, 2), (0, 1), (0, 1)));
        assert_eq!(QuadFieldElement::one().inverse().unwrap(), QuadFieldElement::one());

        // (2 + sqrt6)^-1 = (sqrt6 - 2)/2, since (2 + sqrt6)(sqrt6 - 2) = 6 - 4 = 2
        let x = qf((2, 1), (0, 1), (0, 1), (1, 1));
        let inv = x.inverse().unwrap();
        assert_eq!(inv, qf((-1, 1), (0, 1), (0, 1), (1, 2)));
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(QuadFieldElement::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn signum_near_cancellation() {
        // 5 - 2 sqrt6 ~ 0.101, 2 sqrt6 - 5 negative
        let x = qf((5, 1), (0, 1), (0, 1), (-2, 1));
        assert_eq!(x.signum(), Ordering::Greater);
        assert_eq!((-&x).signum(), Ordering::Less);
        // sqrt2 + sqrt3 - sqrt6 - 1/2 ~ 0.2965
        let y = qf((-1, 2), (1, 1), (1, 1), (-1, 1));
        assert_eq!(y.signum(), Ordering::Greater);
        assert_eq!(QuadFieldElement::zero().signum(), Ordering::Equal);
    }

    fn small_rat() -> impl Strategy<Value = BigRational> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    fn element() -> impl Strategy<Value = QuadFieldElement> {
        (small_rat(), small_rat(), small_rat(), small_rat())
            .prop_map(|(a, b, c, d)| QuadFieldElement::new(a, b, c, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn field_axioms(x in element(), y in element(), z in element()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
        }

        #[test]
        fn float_embedding_is_a_ring_map(x in element(), y in element()) {
            let p = (&x * &y).to_f64();
            prop_assert!((p - x.to_f64() * y.to_f64()).abs() <= 1e-9 * (1.0 + p.abs()));
        }

        #[test]
        fn exact_sign_matches_float_sign(x in element()) {
            let v = x.to_f64();
            if v.abs() > 1e-9 {
                let expected = if v > 0.0 { Ordering::Greater } else { Ordering::Less };
                prop_assert_eq!(x.signum(), expected);
            }
            if x.is_zero() {
                prop_assert_eq!(x.signum(), Ordering::Equal);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn inverse_round_trip(x in element()) {
            prop_assume!(!x.is_zero());
            let inv = x.inverse().unwrap();
            prop_assert!((&x * &inv).is_one());
        }
    }
}
