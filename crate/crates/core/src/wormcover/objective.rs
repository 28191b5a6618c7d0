//! The hull-area objective for the Wetzel configuration: the convex hull of
//! a circle of perimeter 1, an equilateral triangle of side 1/3 and a
//! rectangle of perimeter 1, as a function of the triangle and rectangle
//! placements. Convex in the four translation coordinates.

use crate::error::{Error, Result};
use crate::geom2::{disc_points, hull_area_with_extra, Point2, PolygonizationMode};

/// Radius of the unit-perimeter circle.
pub const CIRCLE_RADIUS: f64 = 1.0 / (2.0 * std::f64::consts::PI);
/// Side of the unit-perimeter equilateral triangle.
pub const TRIANGLE_SIDE: f64 = 1.0 / 3.0;
/// Upper end of the triangle rotation range.
pub const THETA_MAX: f64 = 3.0 * std::f64::consts::FRAC_PI_4;

/// Corners of the equilateral triangle with mass point `(t1, t2)`, given
/// side length, and angle `theta` between one side and the horizontal.
pub fn triangle_corners(t1: f64, t2: f64, side: f64, theta: f64) -> [Point2; 3] {
    let v0 = Point2::ZERO;
    let v1 = Point2::unit(theta) * side;
    let v2 = Point2::unit(theta + std::f64::consts::FRAC_PI_3) * side;
    let c = (v0 + v1 + v2) * (1.0 / 3.0);
    let shift = Point2::new(t1, t2) - c;
    [v0 + shift, v1 + shift, v2 + shift]
}

/// Corners of the axis-aligned rectangle with middle point `(r1, r2)`,
/// given perimeter, and side-length quotient `q_hat`.
pub fn rectangle_corners(r1: f64, r2: f64, perimeter: f64, q_hat: f64) -> [Point2; 4] {
    let h = perimeter / (2.0 * (1.0 + q_hat));
    let w = q_hat * h;
    let c = Point2::new(r1, r2);
    [
        c + Point2::new(-w / 2.0, -h / 2.0),
        c + Point2::new(w / 2.0, -h / 2.0),
        c + Point2::new(w / 2.0, h / 2.0),
        c + Point2::new(-w / 2.0, h / 2.0),
    ]
}

/// Precomputed evaluator for the six-parameter hull objective.
pub struct WetzelObjective {
    circle_sorted: Vec<Point2>,
    pub resolution: usize,
    pub mode: PolygonizationMode,
}

impl WetzelObjective {
    pub fn new(resolution: usize, mode: PolygonizationMode) -> Self {
        let mut circle = disc_points(Point2::ZERO, CIRCLE_RADIUS, resolution, mode);
        circle.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        WetzelObjective { circle_sorted: circle, resolution, mode }
    }

    /// Hull area of {circle at origin, triangle at (t1, t2) with angle
    /// theta, rectangle at (r1, r2) with aspect q_hat}.
    pub fn eval(&self, t1: f64, t2: f64, r1: f64, r2: f64, theta: f64, q_hat: f64) -> Result<f64> {
        if !(q_hat > 0.0) {
            return Err(Error::InvalidParam(format!("q_hat {q_hat}")));
        }
        let tri = triangle_corners(t1, t2, TRIANGLE_SIDE, theta);
        let rect = rectangle_corners(r1, r2, 1.0, q_hat);
        let mut extra = [tri[0], tri[1], tri[2], rect[0], rect[1], rect[2], rect[3]];
        Ok(hull_area_with_extra(&self.circle_sorted, &mut extra))
    }

    /// Hull area of the circle alone.
    pub fn circle_area(&self) -> f64 {
        let mut none: [Point2; 0] = [];
        hull_area_with_extra(&self.circle_sorted, &mut none)
    }
}

/// The six-parameter objective at the default resolution (2048,
/// circumscribed sampling of the circle).
pub fn objective_f(t1: f64, t2: f64, r1: f64, r2: f64, theta: f64, q_hat: f64) -> Result<f64> {
    WetzelObjective::new(2048, PolygonizationMode::Circumscribed)
        .eval(t1, t2, r1, r2, theta, q_hat)
}
