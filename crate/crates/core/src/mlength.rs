//! The ℓ_T length functional on closed polygonal curves.
//!
//! For a polygonal curve the length with respect to a convex body T is the
//! sum of support values of the edge vectors, h_T(q_{j+1} - q_j). This uses
//! the identity between the gauge of the polar and the support function, so
//! T does not need the origin in its interior.

use crate::error::{Error, Result};
use crate::geom2::{ConvexBody2, Point2};
use serde::{Deserialize, Serialize};

/// A closed polygonal curve; the edge from the last vertex back to the
/// first is implicit. Two vertices encode a doubled segment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedPolyline {
    vertices: Vec<Point2>,
}

impl ClosedPolyline {
    /// Requires at least 2 vertices and distinct consecutive vertices
    /// (cyclically).
    pub fn new(vertices: impl Into<Vec<Point2>>) -> Result<Self> {
        let vertices: Vec<Point2> = vertices.into();
        if vertices.len() < 2 {
            return Err(Error::Degenerate("closed polyline needs >= 2 vertices".into()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::Degenerate("non-finite vertex".into()));
        }
        let m = vertices.len();
        for j in 0..m {
            if (vertices[(j + 1) % m] - vertices[j]).norm() == 0.0 {
                return Err(Error::Degenerate(format!("repeated consecutive vertex {j}")));
            }
        }
        Ok(ClosedPolyline { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cyclic edge vectors q_{j+1} - q_j.
    pub fn edges(&self) -> impl Iterator<Item = Point2> + '_ {
        let m = self.vertices.len();
        (0..m).map(move |j| self.vertices[(j + 1) % m] - self.vertices[j])
    }

    pub fn euclidean_perimeter(&self) -> f64 {
        self.edges().map(|e| e.norm()).sum()
    }

    pub fn centroid(&self) -> Point2 {
        let m = self.vertices.len() as f64;
        self.vertices
            .iter()
            .fold(Point2::ZERO, |acc, &v| acc + v)
            * (1.0 / m)
    }

    pub fn translate(&self, a: Point2) -> ClosedPolyline {
        ClosedPolyline {
            vertices: self.vertices.iter().map(|&v| v + a).collect(),
        }
    }

    /// Scale about a fixed point.
    pub fn scale_about(&self, center: Point2, lambda: f64) -> ClosedPolyline {
        ClosedPolyline {
            vertices: self
                .vertices
                .iter()
                .map(|&v| center + (v - center) * lambda)
                .collect(),
        }
    }

    pub fn scale(&self, lambda: f64) -> ClosedPolyline {
        ClosedPolyline {
            vertices: self.vertices.iter().map(|&v| v * lambda).collect(),
        }
    }
}

/// ℓ_T(q) = Σ_j h_T(q_{j+1} - q_j).
pub fn minkowski_length(q: &ClosedPolyline, t_body: &ConvexBody2) -> f64 {
    q.edges().map(|e| t_body.support(e)).sum()
}

/// Scale q (about its centroid) so that its ℓ_T length equals `alpha`.
pub fn rescale_to_length(
    q: &ClosedPolyline,
    t_body: &ConvexBody2,
    alpha: f64,
) -> Result<ClosedPolyline> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidParam(format!("alpha {alpha}")));
    }
    let len = minkowski_length(q, t_body);
    if !(len > 0.0) {
        return Err(Error::ZeroLength);
    }
    Ok(q.scale_about(q.centroid(), alpha / len))
}

/// Doubled segment between two points as a closed curve.
pub fn doubled_segment(a: Point2, b: Point2) -> Result<ClosedPolyline> {
    ClosedPolyline::new(vec![a, b])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn unit_square_loop() -> ClosedPolyline {
        ClosedPolyline::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn euclidean_case_is_perimeter() {
        let t = shapes::unit_disc();
        assert!((minkowski_length(&unit_square_loop(), &t) - 4.0).abs() < 1e-15);
        let seg = doubled_segment(Point2::ZERO, Point2::new(2.5, 0.0)).unwrap();
        assert!((minkowski_length(&seg, &t) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn square_t_uses_l1_support() {
        // h_{[-1,1]^2}(v) = |v_x| + |v_y| on each unit edge gives total 4.
        let t = shapes::square(1.0);
        assert!((minkowski_length(&unit_square_loop(), &t) - 4.0).abs() < 1e-15);
    }

    #[test]
    fn rescale_examples() {
        let t = shapes::unit_disc();
        let q = unit_square_loop();
        let r = rescale_to_length(&q, &t, 1.0).unwrap();
        assert!((minkowski_length(&r, &t) - 1.0).abs() < 1e-12);
        // alpha equal to the current length is the identity.
        let same = rescale_to_length(&q, &t, 4.0).unwrap();
        for (a, b) in same.vertices().iter().zip(q.vertices()) {
            assert!((*a - *b).norm() < 1e-12);
        }
        // Doubled segment of length a rescaled to 1 has |edge| = 1/2.
        let seg = doubled_segment(Point2::ZERO, Point2::new(3.0, 0.0)).unwrap();
        let r = rescale_to_length(&seg, &t, 1.0).unwrap();
        let e = r.vertices()[1] - r.vertices()[0];
        assert!((e.norm() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rescale_rejects_bad_input() {
        let t = shapes::unit_disc();
        let q = unit_square_loop();
        assert!(rescale_to_length(&q, &t, 0.0).is_err());
        assert!(ClosedPolyline::new(vec![Point2::ZERO]).is_err());
        assert!(ClosedPolyline::new(vec![Point2::ZERO, Point2::ZERO]).is_err());
    }
}
