use super::polygon::{clip_halfspace, signed_area, Polygon};
use super::Point2;

/// Halfspace { x : <n, x> <= h } with unit normal.
#[derive(Debug, Clone, Copy)]
pub struct Halfspace {
    pub n: Point2,
    pub h: f64,
}

/// The erosion of a polygon K by a point set Q: the feasible translations
/// a with Q + a ⊆ K, i.e. the intersection of the translates K - q. For a
/// polygon with unit edge normals n_i and offsets h_i this is the halfspace
/// system <n_i, x> <= h_i - max_j <n_i, q_j>.
pub fn erosion_halfspaces(k: &Polygon, q: &[Point2]) -> Vec<Halfspace> {
    k.normals()
        .iter()
        .zip(k.offsets())
        .map(|(&n, &h)| {
            let hq = q.iter().map(|&p| n.dot(p)).fold(f64::NEG_INFINITY, f64::max);
            Halfspace { n, h: h - hq }
        })
        .collect()
}

/// Vertex ring of the intersection of halfspaces, clipped inside a generous
/// bounding box. Empty result means an empty (or degenerate) intersection.
pub fn halfspace_intersection_ring(hs: &[Halfspace], extent: f64) -> Vec<Point2> {
    let e = extent.max(1.0);
    let mut ring = vec![
        Point2::new(-e, -e),
        Point2::new(e, -e),
        Point2::new(e, e),
        Point2::new(-e, e),
    ];
    for h in hs {
        ring = clip_halfspace(&ring, h.n, h.h);
        if ring.is_empty() {
            return ring;
        }
    }
    ring
}

/// Erosion of K by the points of q, as a (possibly degenerate) vertex ring.
pub fn erosion(k: &Polygon, q: &[Point2]) -> Vec<Point2> {
    let hs = erosion_halfspaces(k, q);
    let extent = k
        .vertices()
        .iter()
        .chain(q.iter())
        .map(|p| p.norm())
        .fold(1.0_f64, f64::max)
        * 4.0;
    halfspace_intersection_ring(&hs, extent)
}

/// Largest inscribed-circle radius of a halfspace intersection together with
/// its (approximate) Chebyshev center. Returns None when infeasible.
/// Bisection on the shrink radius; each probe is one polygon clip.
pub fn chebyshev_center(hs: &[Halfspace], extent: f64) -> Option<(Point2, f64)> {
    let base = halfspace_intersection_ring(hs, extent);
    if base.is_empty() {
        return None;
    }
    let feasible_ring = |rho: f64| -> Vec<Point2> {
        let shrunk: Vec<Halfspace> = hs
            .iter()
            .map(|h| Halfspace { n: h.n, h: h.h - rho })
            .collect();
        halfspace_intersection_ring(&shrunk, extent)
    };
    let mut lo = 0.0_f64;
    let mut hi = extent;
    if feasible_ring(hi).is_empty() {
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if feasible_ring(mid).is_empty() {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-14 * extent.max(1.0) {
                break;
            }
        }
    } else {
        // Unbounded inradius within the box; just use the box-clipped region.
        lo = hi;
    }
    let ring = if lo > 0.0 {
        let r = feasible_ring(lo);
        if r.is_empty() {
            base.clone()
        } else {
            r
        }
    } else {
        base.clone()
    };
    let center = ring
        .iter()
        .fold(Point2::ZERO, |acc, &p| acc + p)
        * (1.0 / ring.len() as f64);
    Some((center, lo))
}

/// Area of a possibly-degenerate vertex ring.
pub fn ring_area(ring: &[Point2]) -> f64 {
    if ring.len() < 3 {
        0.0
    } else {
        signed_area(ring).max(0.0)
    }
}

/// Minimal enclosing circle (center, radius) of a point set.
/// Welzl's algorithm with move-to-front, iterative style.
pub fn min_enclosing_circle(pts: &[Point2]) -> (Point2, f64) {
    assert!(!pts.is_empty());
    let mut c = (pts[0], 0.0_f64);
    for i in 1..pts.len() {
        if !in_circle(c, pts[i]) {
            c = (pts[i], 0.0);
            for j in 0..i {
                if !in_circle(c, pts[j]) {
                    c = circle_two(pts[i], pts[j]);
                    for k in 0..j {
                        if !in_circle(c, pts[k]) {
                            c = circle_three(pts[i], pts[j], pts[k]);
                        }
                    }
                }
            }
        }
    }
    c
}

fn in_circle(c: (Point2, f64), p: Point2) -> bool {
    (p - c.0).norm() <= c.1 * (1.0 + 1e-14) + 1e-14
}

fn circle_two(a: Point2, b: Point2) -> (Point2, f64) {
    let c = (a + b) * 0.5;
    (c, (a - c).norm())
}

fn circle_three(a: Point2, b: Point2, c: Point2) -> (Point2, f64) {
    let d = 2.0 * (a - c).cross(b - c);
    if d.abs() < 1e-300 {
        // Collinear fallback: widest pair.
        let mut best = circle_two(a, b);
        for (p, q) in [(a, c), (b, c)] {
            let cand = circle_two(p, q);
            if cand.1 > best.1 {
                best = cand;
            }
        }
        return best;
    }
    let a2 = (a - c).dot(a - c);
    let b2 = (b - c).dot(b - c);
    let ux = c.x + ((b.y - c.y) * -a2 + (a.y - c.y) * b2) / -d;
    let uy = c.y + ((b.x - c.x) * a2 - (a.x - c.x) * b2) / -d;
    let center = Point2::new(ux, uy);
    (center, (a - center).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom2::Polygon;

    fn unit_square() -> Polygon {
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn erosion_by_single_point_is_translate() {
        let k = unit_square();
        let ring = erosion(&k, &[Point2::new(0.25, 0.25)]);
        assert!((ring_area(&ring) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn erosion_by_own_vertices_is_degenerate() {
        let k = unit_square();
        let ring = erosion(&k, k.vertices());
        assert!(ring_area(&ring) < 1e-12);
    }

    #[test]
    fn chebyshev_center_of_square() {
        let k = unit_square();
        let hs: Vec<Halfspace> = k
            .normals()
            .iter()
            .zip(k.offsets())
            .map(|(&n, &h)| Halfspace { n, h })
            .collect();
        let (c, r) = chebyshev_center(&hs, 10.0).unwrap();
        assert!((c - Point2::new(0.5, 0.5)).norm() < 1e-6);
        assert!((r - 0.5).abs() < 1e-9);
    }

    #[test]
    fn miniball_of_square_corners() {
        let pts = [
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
            Point2::new(0.5, 0.5),
        ];
        let (c, r) = min_enclosing_circle(&pts);
        assert!((c - Point2::new(0.5, 0.5)).norm() < 1e-9);
        assert!((r - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
    }
}
