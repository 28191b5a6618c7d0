//! Named bodies used by the CLI and tests.

use crate::geom2::{ConvexBody2, Point2, Polygon};

/// Square [-r, r]^2.
pub fn square(r: f64) -> ConvexBody2 {
    ConvexBody2::Polygon(
        Polygon::new(vec![
            Point2::new(-r, -r),
            Point2::new(r, -r),
            Point2::new(r, r),
            Point2::new(-r, r),
        ])
        .unwrap(),
    )
}

/// Unit square [0, 1]^2.
pub fn unit_square() -> ConvexBody2 {
    ConvexBody2::Polygon(
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap(),
    )
}

/// Diamond conv{(±r, 0), (0, ±r)}.
pub fn diamond(r: f64) -> ConvexBody2 {
    ConvexBody2::Polygon(
        Polygon::new(vec![
            Point2::new(r, 0.0),
            Point2::new(0.0, r),
            Point2::new(-r, 0.0),
            Point2::new(0.0, -r),
        ])
        .unwrap(),
    )
}

/// Regular n-gon with given circumradius, one vertex on the positive x-axis.
pub fn regular_polygon(n: usize, circumradius: f64) -> ConvexBody2 {
    let vs: Vec<Point2> = (0..n)
        .map(|i| Point2::unit(2.0 * std::f64::consts::PI * i as f64 / n as f64) * circumradius)
        .collect();
    ConvexBody2::Polygon(Polygon::new(vs).unwrap())
}

/// Regular hexagon with circumradius 1 centered at the origin.
pub fn hexagon() -> ConvexBody2 {
    regular_polygon(6, 1.0)
}

/// Unit disc centered at the origin.
pub fn unit_disc() -> ConvexBody2 {
    ConvexBody2::disc(Point2::ZERO, 1.0).unwrap()
}

/// Reuleaux triangle of the given width, centered at its centroid, as an
/// arc-sampled polygon with `arc_samples` vertices per circular arc.
pub fn reuleaux(width: f64, arc_samples: usize) -> ConvexBody2 {
    let w = width;
    // Equilateral triangle of side w; each arc is centered at a vertex and
    // spans the opposite side.
    let h = w * 3.0_f64.sqrt() / 2.0;
    let corners = [
        Point2::new(-w / 2.0, -h / 3.0),
        Point2::new(w / 2.0, -h / 3.0),
        Point2::new(0.0, 2.0 * h / 3.0),
    ];
    let m = arc_samples.max(8);
    let mut vs = Vec::with_capacity(3 * m);
    for i in 0..3 {
        let c = corners[i];
        let a = corners[(i + 1) % 3];
        let b = corners[(i + 2) % 3];
        // Arc from a to b around c (both at distance w from c), CCW.
        let start = (a - c).angle();
        let mut end = (b - c).angle();
        while end < start {
            end += 2.0 * std::f64::consts::PI;
        }
        for k in 0..m {
            let t = start + (end - start) * k as f64 / m as f64;
            vs.push(c + Point2::unit(t) * w);
        }
    }
    ConvexBody2::Polygon(Polygon::new(vs).unwrap())
}
