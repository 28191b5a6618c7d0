//! Planar convex-geometry kernel: bodies, support functions, gauges,
//! polars, hulls, widths, areas, Hausdorff distance, linear images.

mod erosion;
mod hull;
mod metrics;
mod polygon;

pub use erosion::{
    chebyshev_center, erosion, erosion_halfspaces, min_enclosing_circle, ring_area, Halfspace,
};
pub use hull::{disc_points, hull_of_bodies, hull_of_bodies_mode, PolygonizationMode};
pub use metrics::{golden_max, golden_min_arg, hausdorff, min_width};
pub use polygon::{
    clip_halfspace, clip_ring_by_polygon, convex_hull, convex_hull_ring, hull_area_with_extra,
    hull_of_sorted, minkowski_sum, signed_area, Polygon,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point2 {
    fn from(v: [f64; 2]) -> Self {
        Point2 { x: v[0], y: v[1] }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl Point2 {
    pub const ZERO: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product `self × other`.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn normalized(self) -> Point2 {
        let n = self.norm();
        Point2::new(self.x / n, self.y / n)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn unit(angle: f64) -> Point2 {
        Point2::new(angle.cos(), angle.sin())
    }

    /// Rotation by 90 degrees counterclockwise.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// An invertible linear map of the plane.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LinearMap2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

impl LinearMap2 {
    pub const SINGULAR_TOL: f64 = 1e-12;

    pub fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Result<Self> {
        let m = LinearMap2 { m11, m12, m21, m22 };
        if m.det().abs() <= Self::SINGULAR_TOL {
            return Err(Error::SingularMap);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        LinearMap2 { m11: 1.0, m12: 0.0, m21: 0.0, m22: 1.0 }
    }

    pub fn rotation(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        LinearMap2 { m11: c, m12: -s, m21: s, m22: c }
    }

    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        Point2::new(self.m11 * p.x + self.m12 * p.y, self.m21 * p.x + self.m22 * p.y)
    }

    pub fn transpose(&self) -> Self {
        LinearMap2 { m11: self.m11, m12: self.m21, m21: self.m12, m22: self.m22 }
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.abs() <= Self::SINGULAR_TOL {
            return Err(Error::SingularMap);
        }
        Ok(LinearMap2 {
            m11: self.m22 / d,
            m12: -self.m12 / d,
            m21: -self.m21 / d,
            m22: self.m11 / d,
        })
    }

    /// (Φ^T)^{-1}, the map paired with Φ so that Φ × (Φ^T)^{-1} is symplectic.
    pub fn transpose_inverse(&self) -> Result<Self> {
        self.transpose().inverse()
    }
}

/// A planar convex body.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexBody2 {
    Polygon(Polygon),
    Disc { center: Point2, radius: f64 },
    /// Convex hull of the union of the parts.
    HullOfUnion(Vec<ConvexBody2>),
}

impl From<Polygon> for ConvexBody2 {
    fn from(p: Polygon) -> Self {
        ConvexBody2::Polygon(p)
    }
}

impl ConvexBody2 {
    pub fn disc(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() || !center.is_finite() {
            return Err(Error::InvalidParam(format!("disc radius {radius}")));
        }
        Ok(ConvexBody2::Disc { center, radius })
    }

    pub fn hull_of_union(parts: Vec<ConvexBody2>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Degenerate("empty hull-of-union".into()));
        }
        Ok(ConvexBody2::HullOfUnion(parts))
    }

    /// Support value h_B(u) = max over the body of <u, x>.
    pub fn support(&self, u: Point2) -> f64 {
        match self {
            ConvexBody2::Polygon(p) => p.support(u),
            ConvexBody2::Disc { center, radius } => center.dot(u) + radius * u.norm(),
            ConvexBody2::HullOfUnion(parts) => parts
                .iter()
                .map(|b| b.support(u))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }

    /// A point of the body attaining the support value in direction `u`.
    pub fn support_point(&self, u: Point2) -> Point2 {
        match self {
            ConvexBody2::Polygon(p) => p.support_point(u),
            ConvexBody2::Disc { center, radius } => {
                let n = u.norm();
                if n == 0.0 {
                    *center
                } else {
                    *center + u * (*radius / n)
                }
            }
            ConvexBody2::HullOfUnion(parts) => parts
                .iter()
                .map(|b| b.support_point(u))
                .max_by(|a, b| a.dot(u).total_cmp(&b.dot(u)))
                .expect("non-empty union"),
        }
    }

    /// Minkowski functional min{t >= 0 : x in t*body}; requires 0 interior.
    pub fn gauge(&self, x: Point2) -> Result<f64> {
        match self {
            ConvexBody2::Polygon(p) => p.gauge(x),
            ConvexBody2::Disc { center, radius } => {
                // Solve |x - t c| = t r for the smallest t >= 0.
                if center.norm() >= *radius {
                    return Err(Error::OriginNotInterior);
                }
                if x.norm() == 0.0 {
                    return Ok(0.0);
                }
                let a = center.dot(*center) - radius * radius;
                let b = -2.0 * x.dot(*center);
                let c = x.dot(x);
                // a < 0 since origin is interior; take the positive root.
                let disc = (b * b - 4.0 * a * c).sqrt();
                Ok((-b - disc) / (2.0 * a))
            }
            ConvexBody2::HullOfUnion(_) => self
                .polygonize(hull::DEFAULT_RESOLUTION, PolygonizationMode::Circumscribed)?
                .gauge(x),
        }
    }

    /// Polar body. Polygons map to polygons, origin-centered discs to discs;
    /// other variants are polygonized first.
    pub fn polar(&self) -> Result<ConvexBody2> {
        match self {
            ConvexBody2::Polygon(p) => Ok(ConvexBody2::Polygon(p.polar()?)),
            ConvexBody2::Disc { center, radius } if center.norm() == 0.0 => {
                ConvexBody2::disc(Point2::ZERO, 1.0 / radius)
            }
            _ => {
                let p = self.polygonize(hull::DEFAULT_RESOLUTION, PolygonizationMode::Inscribed)?;
                Ok(ConvexBody2::Polygon(p.polar()?))
            }
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            ConvexBody2::Polygon(p) => p.area(),
            ConvexBody2::Disc { radius, .. } => std::f64::consts::PI * radius * radius,
            ConvexBody2::HullOfUnion(_) => self
                .polygonize(hull::DEFAULT_RESOLUTION, PolygonizationMode::Circumscribed)
                .map(|p| p.area())
                .unwrap_or(0.0),
        }
    }

    /// Approximate the body by a polygon. `mode` controls whether circular
    /// parts are sampled on the boundary (inscribed) or by tangent lines
    /// (circumscribed, so the polygon contains the body).
    pub fn polygonize(&self, resolution: usize, mode: PolygonizationMode) -> Result<Polygon> {
        match self {
            ConvexBody2::Polygon(p) => Ok(p.clone()),
            _ => {
                let pts = hull::boundary_points(self, resolution.max(8), mode);
                convex_hull(&pts)
            }
        }
    }

    pub fn contains(&self, x: Point2, tol: f64) -> bool {
        match self {
            ConvexBody2::Polygon(p) => p.contains(x, tol),
            ConvexBody2::Disc { center, radius } => (x - *center).norm() <= radius + tol,
            ConvexBody2::HullOfUnion(_) => {
                // Membership in a hull of a union needs the polygonized hull.
                match self.polygonize(hull::DEFAULT_RESOLUTION, PolygonizationMode::Circumscribed) {
                    Ok(p) => p.contains(x, tol),
                    Err(_) => false,
                }
            }
        }
    }

    /// Image under an invertible linear map. Discs become sampled ellipse polygons.
    pub fn linear_image(&self, phi: &LinearMap2) -> Result<ConvexBody2> {
        if phi.det().abs() <= LinearMap2::SINGULAR_TOL {
            return Err(Error::SingularMap);
        }
        match self {
            ConvexBody2::Polygon(p) => {
                let mapped: Vec<Point2> = p.vertices().iter().map(|&v| phi.apply(v)).collect();
                Ok(ConvexBody2::Polygon(convex_hull(&mapped)?))
            }
            ConvexBody2::Disc { .. } => {
                let p = self.polygonize(hull::ELLIPSE_RESOLUTION, PolygonizationMode::Inscribed)?;
                let mapped: Vec<Point2> = p.vertices().iter().map(|&v| phi.apply(v)).collect();
                Ok(ConvexBody2::Polygon(convex_hull(&mapped)?))
            }
            ConvexBody2::HullOfUnion(parts) => {
                let mapped: Result<Vec<ConvexBody2>> =
                    parts.iter().map(|b| b.linear_image(phi)).collect();
                ConvexBody2::hull_of_union(mapped?)
            }
        }
    }

    pub fn translate(&self, a: Point2) -> ConvexBody2 {
        match self {
            ConvexBody2::Polygon(p) => ConvexBody2::Polygon(p.translate(a)),
            ConvexBody2::Disc { center, radius } => ConvexBody2::Disc {
                center: *center + a,
                radius: *radius,
            },
            ConvexBody2::HullOfUnion(parts) => {
                ConvexBody2::HullOfUnion(parts.iter().map(|b| b.translate(a)).collect())
            }
        }
    }

    pub fn scale(&self, lambda: f64) -> ConvexBody2 {
        match self {
            ConvexBody2::Polygon(p) => ConvexBody2::Polygon(p.scale(lambda)),
            ConvexBody2::Disc { center, radius } => ConvexBody2::Disc {
                center: *center * lambda,
                radius: *radius * lambda,
            },
            ConvexBody2::HullOfUnion(parts) => {
                ConvexBody2::HullOfUnion(parts.iter().map(|b| b.scale(lambda)).collect())
            }
        }
    }
}

/// Support value; free-function form of [`ConvexBody2::support`].
pub fn support(body: &ConvexBody2, u: Point2) -> f64 {
    body.support(u)
}

/// Gauge value; free-function form of [`ConvexBody2::gauge`].
pub fn gauge(body: &ConvexBody2, x: Point2) -> Result<f64> {
    body.gauge(x)
}

/// Polygon polar; free-function form of [`Polygon::polar`].
pub fn polar(poly: &Polygon) -> Result<Polygon> {
    poly.polar()
}

/// Area; free-function form of [`ConvexBody2::area`].
pub fn area(body: &ConvexBody2) -> f64 {
    body.area()
}

/// Linear image; free-function form of [`ConvexBody2::linear_image`].
pub fn linear_image(body: &ConvexBody2, phi: &LinearMap2) -> Result<ConvexBody2> {
    body.linear_image(phi)
}
