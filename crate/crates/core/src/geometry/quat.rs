use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{lex_compare, rat, QuadFieldElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// A rotation of R^3 as a unit quaternion over Q(sqrt2, sqrt3).
///
/// `q` and `-q` denote the same rotation; the stored form is the one whose
/// 16 rational coefficients (w, x, y, z, each as a, b, c, d) are
/// lexicographically positive, so structural equality is rotation equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RotationQuat {
    w: QuadFieldElement,
    x: QuadFieldElement,
    y: QuadFieldElement,
    z: QuadFieldElement,
}

impl RotationQuat {
    /// Checks the unit norm exactly and canonicalizes the sign.
    pub fn new(
        w: QuadFieldElement,
        x: QuadFieldElement,
        y: QuadFieldElement,
        z: QuadFieldElement,
    ) -> Result<Self> {
        let q = Self { w, x, y, z };
        if !q.norm_squared().is_one() {
            return Err(Error::Degenerate(format!("quaternion {q:?} is not a unit")));
        }
        Ok(q.canonical())
    }

    pub fn identity() -> Self {
        Self {
            w: QuadFieldElement::one(),
            x: QuadFieldElement::zero(),
            y: QuadFieldElement::zero(),
            z: QuadFieldElement::zero(),
        }
    }

    /// Rotation by `2pi/order` about a coordinate axis.
    ///
    /// Only orders whose half-angle cosine and sine lie in Q(sqrt2, sqrt3)
    /// are representable.
    pub fn axis_rotation(axis: Axis, order: u32) -> Result<Self> {
        let (c, s) = half_angle(order)?;
        let zero = QuadFieldElement::zero;
        let (x, y, z) = match axis {
            Axis::X => (s, zero(), zero()),
            Axis::Y => (zero(), s, zero()),
            Axis::Z => (zero(), zero(), s),
        };
        Self::new(c, x, y, z)
    }

    /// `1/2 + (sqrt3/2) k`: rotation by 2pi/3 about the third axis.
    pub fn q3() -> Self {
        Self::axis_rotation(Axis::Z, 3).expect("order 3 is supported")
    }

    /// `(sqrt2/2)(1 + i)`: rotation by pi/2 about the first axis.
    pub fn q4() -> Self {
        Self::axis_rotation(Axis::X, 4).expect("order 4 is supported")
    }

    pub fn components(&self) -> [&QuadFieldElement; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// The 16 rational coefficients in (w, x, y, z) x (1, sqrt2, sqrt3, sqrt6) order.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.components()
            .iter()
            .flat_map(|e| e.coefficients().into_iter().cloned())
            .collect()
    }

    pub fn norm_squared(&self) -> QuadFieldElement {
        let sq = |e: &QuadFieldElement| e * e;
        &(&sq(&self.w) + &sq(&self.x)) + &(&sq(&self.y) + &sq(&self.z))
    }

    fn negated(&self) -> Self {
        Self {
            w: -&self.w,
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    fn canonical(self) -> Self {
        let v = self.coefficients();
        let neg: Vec<BigRational> = v.iter().map(|r| -r).collect();
        match lex_compare(&v, &neg).expect("equal lengths") {
            Ordering::Less => self.negated(),
            _ => self,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_one()
    }

    /// Exact Hamilton product `self * other`, re-canonicalized.
    pub fn mul(&self, o: &Self) -> Self {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&o.w, &o.x, &o.y, &o.z);
        let w = &(&(w1 * w2) - &(x1 * x2)) - &(&(y1 * y2) + &(z1 * z2));
        let x = &(&(w1 * x2) + &(x1 * w2)) + &(&(y1 * z2) - &(z1 * y2));
        let y = &(&(w1 * y2) - &(x1 * z2)) + &(&(y1 * w2) + &(z1 * x2));
        let z = &(&(w1 * z2) + &(x1 * y2)) - &(&(y1 * x2) - &(z1 * w2));
        Self { w, x, y, z }.canonical()
    }

    pub fn inverse(&self) -> Self {
        Self {
            w: self.w.clone(),
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
        .canonical()
    }

    /// Row-major rotation matrix in double precision.
    pub fn to_matrix(&self) -> [[f64; 3]; 3] {
        let (w, x, y, z) = (
            self.w.to_f64(),
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
        );
        [
            [
                1.0 - 2.0 * (y * y + z * z),
                2.0 * (x * y - w * z),
                2.0 * (x * z + w * y),
            ],
            [
                2.0 * (x * y + w * z),
                1.0 - 2.0 * (x * x + z * z),
                2.0 * (y * z - w * x),
            ],
            [
                2.0 * (x * z - w * y),
                2.0 * (y * z + w * x),
                1.0 - 2.0 * (x * x + y * y),
            ],
        ]
    }

    pub fn rotate(&self, p: [f64; 3]) -> [f64; 3] {
        mat_vec(&self.to_matrix(), p)
    }
}

pub(crate) fn mat_vec(m: &[[f64; 3]; 3], p: [f64; 3]) -> [f64; 3] {
    [
        m[0][0] * p[0] + m[0][1] * p[1] + m[0][2] * p[2],
        m[1][0] * p[0] + m[1][1] * p[1] + m[1][2] * p[2],
        m[2][0] * p[0] + m[2][1] * p[1] + m[2][2] * p[2],
    ]
}

/// cos and sin of pi/order.
fn half_angle(order: u32) -> Result<(QuadFieldElement, QuadFieldElement)> {
    let r = |n, d| QuadFieldElement::from_rational(rat(n, d));
    let s2 = |n, d| QuadFieldElement::sqrt2().scale(&rat(n, d));
    let s3 = |n, d| QuadFieldElement::sqrt3().scale(&rat(n, d));
    Ok(match order {
        2 => (r(0, 1), r(1, 1)),
        3 => (r(1, 2), s3(1, 2)),
        4 => (s2(1, 2), s2(1, 2)),
        6 => (s3(1, 2), r(1, 2)),
        _ => return Err(Error::UnsupportedOrder(order)),
    })
}

impl PartialOrd for RotationQuat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RotationQuat {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(&self.coefficients(), &other.coefficients()).expect("equal lengths")
    }
}

impl fmt::Debug for RotationQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}
