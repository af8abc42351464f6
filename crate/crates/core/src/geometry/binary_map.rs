use crate::exact::{BigRational, Dyadic};

/// The upper half-plane map `z -> 2^k z + t` with real dyadic `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryMap {
    pub level_shift: i32,
    pub offset: Dyadic,
}

impl BinaryMap {
    pub fn new(level_shift: i32, offset: Dyadic) -> Self {
        Self {
            level_shift,
            offset,
        }
    }

    pub fn identity() -> Self {
        Self::new(0, Dyadic::zero())
    }

    /// `(k1, t1) ∘ (k2, t2) = (k1 + k2, 2^k1 t2 + t1)`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(
            self.level_shift + other.level_shift,
            &other.offset.mul_pow2(self.level_shift as i64) + &self.offset,
        )
    }

    pub fn inverse(&self) -> Self {
        let k = -self.level_shift;
        Self::new(k, -&self.offset.mul_pow2(k as i64))
    }

    pub fn apply(&self, z: (f64, f64)) -> (f64, f64) {
        let s = 2f64.powi(self.level_shift);
        (s * z.0 + self.offset.to_f64(), s * z.1)
    }

    pub fn apply_exact(&self, x: &BigRational, y: &BigRational) -> (BigRational, BigRational) {
        let s = Dyadic::pow2(self.level_shift as i64).to_rational();
        (&s * x + self.offset.to_rational(), &s * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn composition_examples() {
        let f = BinaryMap::new(1, Dyadic::zero());
        let g = BinaryMap::new(0, Dyadic::from_integer(1));
        assert_eq!(f.compose(&g), BinaryMap::new(1, Dyadic::from_integer(2)));
        assert_eq!(BinaryMap::identity().compose(&g), g);
        let inv = BinaryMap::new(-1, Dyadic::zero());
        assert_eq!(inv.compose(&f), BinaryMap::identity());
    }

    proptest! {
        #[test]
        fn composition_matches_float(k1 in -20i32..=20, k2 in -20i32..=20,
                                     t1 in -1000i64..1000, t2 in -1000i64..1000,
                                     x in -10.0f64..10.0, y in 0.01f64..10.0) {
            let f = BinaryMap::new(k1, Dyadic::new(t1.into(), -3));
            let g = BinaryMap::new(k2, Dyadic::new(t2.into(), 2));
            let (cx, cy) = f.compose(&g).apply((x, y));
            let (sx, sy) = f.apply(g.apply((x, y)));
            prop_assert!((cx - sx).abs() <= 1e-12 * (1.0 + sx.abs()));
            prop_assert!((cy - sy).abs() <= 1e-12 * (1.0 + sy.abs()));
            prop_assert_eq!(f.compose(&f.inverse()), BinaryMap::identity());
        }
    }
}
