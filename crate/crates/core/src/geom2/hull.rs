use super::polygon::{convex_hull, Polygon};
use super::{ConvexBody2, Point2};
use crate::error::Result;

pub const DEFAULT_RESOLUTION: usize = 1024;
pub const ELLIPSE_RESOLUTION: usize = 1024;

/// How circular parts are turned into polygon vertices.
///
/// `Circumscribed` places vertices at tangent-line intersections so the
/// polygon contains the disc; `Inscribed` samples the boundary so the
/// polygon is contained in the disc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygonizationMode {
    Circumscribed,
    Inscribed,
}

/// Vertex generators for a body, suitable for a convex-hull pass.
pub(super) fn boundary_points(
    body: &ConvexBody2,
    resolution: usize,
    mode: PolygonizationMode,
) -> Vec<Point2> {
    let mut out = Vec::new();
    collect_points(body, resolution, mode, &mut out);
    out
}

fn collect_points(
    body: &ConvexBody2,
    resolution: usize,
    mode: PolygonizationMode,
    out: &mut Vec<Point2>,
) {
    match body {
        ConvexBody2::Polygon(p) => out.extend_from_slice(p.vertices()),
        ConvexBody2::Disc { center, radius } => {
            out.extend(disc_points(*center, *radius, resolution, mode))
        }
        ConvexBody2::HullOfUnion(parts) => {
            for part in parts {
                collect_points(part, resolution, mode, out);
            }
        }
    }
}

/// Polygonal approximation of a circle. Circumscribed vertices sit at
/// distance r / cos(pi/n) on the mid-angles so every tangent line at the
/// sampled angles supports the polygon.
pub fn disc_points(
    center: Point2,
    radius: f64,
    resolution: usize,
    mode: PolygonizationMode,
) -> Vec<Point2> {
    let n = resolution.max(3);
    let step = 2.0 * std::f64::consts::PI / n as f64;
    let r = match mode {
        PolygonizationMode::Inscribed => radius,
        PolygonizationMode::Circumscribed => radius / (step / 2.0).cos(),
    };
    let phase = match mode {
        PolygonizationMode::Inscribed => 0.0,
        PolygonizationMode::Circumscribed => step / 2.0,
    };
    (0..n)
        .map(|i| center + Point2::unit(phase + step * i as f64) * r)
        .collect()
}

/// Convex hull of a finite union of bodies as a polygon. Default mode is
/// circumscribed sampling of circular parts (the hull contains the true one).
pub fn hull_of_bodies(parts: &[ConvexBody2], resolution: usize) -> Result<Polygon> {
    hull_of_bodies_mode(parts, resolution, PolygonizationMode::Circumscribed)
}

pub fn hull_of_bodies_mode(
    parts: &[ConvexBody2],
    resolution: usize,
    mode: PolygonizationMode,
) -> Result<Polygon> {
    let resolution = resolution.max(16);
    let mut pts = Vec::new();
    for part in parts {
        collect_points(part, resolution, mode, &mut pts);
    }
    convex_hull(&pts)
}
