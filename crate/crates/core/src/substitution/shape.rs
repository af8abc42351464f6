/// Prototile geometry in unit (leaf) coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    /// Convex polygon, vertices counter-clockwise.
    Polygon(Vec<[f64; 2]>),
    /// Right prism over a convex counter-clockwise base, spanning `0 <= z <= height`.
    Prism { base: Vec<[f64; 2]>, height: f64 },
}

impl Shape {
    pub fn dimension(&self) -> usize {
        match self {
            Shape::Polygon(_) => 2,
            Shape::Prism { .. } => 3,
        }
    }

    pub fn base(&self) -> &[[f64; 2]] {
        match self {
            Shape::Polygon(v) => v,
            Shape::Prism { base, .. } => base,
        }
    }

    /// Area or volume.
    pub fn measure(&self) -> f64 {
        match self {
            Shape::Polygon(v) => polygon_area(v),
            Shape::Prism { base, height } => polygon_area(base) * height,
        }
    }

    /// Vertices in 3D (z = 0 for polygons; prisms list the bottom face then the top face).
    pub fn vertices(&self) -> Vec<[f64; 3]> {
        match self {
            Shape::Polygon(v) => v.iter().map(|p| [p[0], p[1], 0.0]).collect(),
            Shape::Prism { base, height } => base
                .iter()
                .map(|p| [p[0], p[1], 0.0])
                .chain(base.iter().map(|p| [p[0], p[1], *height]))
                .collect(),
        }
    }

    /// Vertex centroid.
    pub fn center(&self) -> [f64; 3] {
        let vs = self.vertices();
        let n = vs.len() as f64;
        let mut c = [0.0; 3];
        for v in &vs {
            for i in 0..3 {
                c[i] += v[i] / n;
            }
        }
        c
    }

    pub fn circumradius(&self, center: [f64; 3]) -> f64 {
        self.vertices()
            .iter()
            .map(|v| dist(*v, center))
            .fold(0.0, f64::max)
    }

    pub fn diameter(&self) -> f64 {
        let vs = self.vertices();
        let mut d: f64 = 0.0;
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                d = d.max(dist(*a, *b));
            }
        }
        d
    }

    /// Signed distance-like margin: positive inside, negative outside. For
    /// interior points it is the exact distance to the boundary; outside it
    /// is bounded in magnitude by the true distance.
    pub fn margin(&self, p: [f64; 3]) -> f64 {
        match self {
            Shape::Polygon(v) => polygon_margin(v, [p[0], p[1]]),
            Shape::Prism { base, height } => polygon_margin(base, [p[0], p[1]])
                .min(p[2])
                .min(height - p[2]),
        }
    }

    pub fn is_convex_ccw(&self) -> bool {
        let v = self.base();
        let n = v.len();
        n >= 3
            && (0..n).all(|i| {
                let (a, b, c) = (v[i], v[(i + 1) % n], v[(i + 2) % n]);
                cross(sub2(b, a), sub2(c, b)) > 0.0
            })
    }
}

pub(crate) fn polygon_area(v: &[[f64; 2]]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            a[0] * b[1] - b[0] * a[1]
        })
        .sum::<f64>()
        / 2.0
}

fn polygon_margin(v: &[[f64; 2]], p: [f64; 2]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            let e = sub2(b, a);
            let len = (e[0] * e[0] + e[1] * e[1]).sqrt();
            // inward normal of a counter-clockwise edge
            cross(e, sub2(p, a)) / len
        })
        .fold(f64::INFINITY, f64::min)
}

pub(crate) fn sub2(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

pub(crate) fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

pub(crate) fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_measures() {
        let t = Shape::Polygon(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0]]);
        assert_eq!(t.measure(), 1.0);
        assert!(t.is_convex_ccw());
        assert!((t.diameter() - 5f64.sqrt()).abs() < 1e-15);
        let p = Shape::Prism {
            base: vec![[0.0, 0.0], [3f64.sqrt(), 0.0], [0.0, 1.0]],
            height: 1.0,
        };
        assert!((p.measure() - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(p.vertices().len(), 6);
    }

    #[test]
    fn margins() {
        let sq = Shape::Polygon(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        assert!((sq.margin([0.5, 0.25, 0.0]) - 0.25).abs() < 1e-15);
        assert!(sq.margin([1.5, 0.5, 0.0]) < 0.0);
        let cw = Shape::Polygon(vec![[0.0, 0.0], [0.0, 1.0], [1.0, 0.0]]);
        assert!(!cw.is_convex_ccw());
    }
}
