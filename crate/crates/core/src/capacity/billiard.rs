//! Minkowski billiard trajectory certificates.
//!
//! Strong form: the trajectory q on the boundary of K has a dual curve p on
//! the boundary of T with q_{j+1} - q_j in the outward normal cone of T at
//! p_j and p_{j+1} - p_j in the negative outward normal cone of K at
//! q_{j+1}. Weak form: each q_j minimizes the two-edge ℓ_T detour over some
//! K-supporting line through q_j.

use crate::error::{Error, Result};
use crate::geom2::{golden_min_arg, ConvexBody2, Point2, PolygonizationMode};
use crate::mlength::ClosedPolyline;
use serde::{Deserialize, Serialize};

/// A trajectory on the boundary of K paired with its dual on the boundary
/// of T (same vertex count).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BilliardPair {
    pub q: ClosedPolyline,
    pub p: ClosedPolyline,
}

impl BilliardPair {
    pub fn new(q: ClosedPolyline, p: ClosedPolyline) -> Result<Self> {
        if q.len() != p.len() {
            return Err(Error::InvalidParam(format!(
                "vertex count mismatch: {} vs {}",
                q.len(),
                p.len()
            )));
        }
        Ok(BilliardPair { q, p })
    }

    /// Largest distance of any vertex to the respective boundary.
    pub fn boundary_defect(&self, k_body: &ConvexBody2, t_body: &ConvexBody2) -> f64 {
        let defect = |body: &ConvexBody2, pts: &[Point2]| -> f64 {
            pts.iter()
                .map(|&x| boundary_distance(body, x))
                .fold(0.0_f64, f64::max)
        };
        defect(k_body, self.q.vertices()).max(defect(t_body, self.p.vertices()))
    }
}

fn boundary_distance(body: &ConvexBody2, x: Point2) -> f64 {
    match body {
        ConvexBody2::Disc { center, radius } => ((x - *center).norm() - radius).abs(),
        ConvexBody2::Polygon(p) => p.halfspace_excess(x).abs(),
        ConvexBody2::HullOfUnion(_) => body
            .polygonize(1024, PolygonizationMode::Inscribed)
            .map(|p| p.halfspace_excess(x).abs())
            .unwrap_or(f64::INFINITY),
    }
}

/// Outward normal cone at a boundary point as an angle interval [lo, hi]
/// (hi >= lo); None if the point is not within `tol` of the boundary.
fn normal_cone(body: &ConvexBody2, x: Point2, tol: f64) -> Option<(f64, f64)> {
    match body {
        ConvexBody2::Polygon(p) => p.normal_cone_at(x, tol),
        ConvexBody2::Disc { center, radius } => {
            if ((x - *center).norm() - radius).abs() > tol {
                None
            } else {
                let a = (x - *center).angle();
                Some((a, a))
            }
        }
        ConvexBody2::HullOfUnion(_) => body
            .polygonize(1024, PolygonizationMode::Inscribed)
            .ok()
            .and_then(|p| p.normal_cone_at(x, tol)),
    }
}

/// Angular distance from direction `v` to the cone interval [lo, hi].
fn cone_angle_defect(v: Point2, cone: (f64, f64)) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let (lo, hi) = cone;
    let mut a = v.angle();
    while a < lo - std::f64::consts::PI {
        a += two_pi;
    }
    while a > hi + std::f64::consts::PI {
        a -= two_pi;
    }
    if a >= lo && a <= hi {
        0.0
    } else {
        (lo - a).abs().min((a - hi).abs())
    }
}

/// Check the strong reflection system within angular tolerance `tol`.
pub fn verify_strong_billiard(
    pair: &BilliardPair,
    k_body: &ConvexBody2,
    t_body: &ConvexBody2,
    tol: f64,
) -> bool {
    let q = pair.q.vertices();
    let p = pair.p.vertices();
    let m = q.len();
    let scale = q.iter().chain(p.iter()).map(|v| v.norm()).fold(1.0_f64, f64::max);
    let spatial = tol * scale;
    for j in 0..m {
        let dq = q[(j + 1) % m] - q[j];
        let dp = p[(j + 1) % m] - p[j];
        let Some(cone_t) = normal_cone(t_body, p[j], spatial) else {
            return false;
        };
        if cone_angle_defect(dq, cone_t) > tol {
            return false;
        }
        let Some(cone_k) = normal_cone(k_body, q[(j + 1) % m], spatial) else {
            return false;
        };
        if cone_angle_defect(-dp, cone_k) > tol {
            return false;
        }
    }
    true
}

/// Check the weak condition: each q_j minimizes
/// h_T(x - q_{j-1}) + h_T(q_{j+1} - x) over some K-supporting line through
/// q_j. At polygon vertices every supporting line in the normal fan is
/// tried and any witness is accepted.
pub fn verify_weak_billiard(
    q: &ClosedPolyline,
    k_body: &ConvexBody2,
    t_body: &ConvexBody2,
    tol: f64,
) -> bool {
    let v = q.vertices();
    let m = v.len();
    let scale = v.iter().map(|p| p.norm()).fold(1.0_f64, f64::max);
    let reach = 4.0 * scale;
    for j in 0..m {
        let prev = v[(j + m - 1) % m];
        let next = v[(j + 1) % m];
        let Some((lo, hi)) = normal_cone(k_body, v[j], tol.max(1e-9) * scale) else {
            return false;
        };
        let candidates: Vec<f64> = if hi - lo < 1e-14 {
            vec![lo]
        } else {
            let n = 33;
            (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect()
        };
        let mut ok = false;
        for ang in candidates {
            let dir = Point2::unit(ang).perp();
            let g = |s: f64| {
                let x = v[j] + dir * s;
                t_body.support(x - prev) + t_body.support(next - x)
            };
            let (_, gmin) = golden_min_arg(&g, -reach, reach, 1e-12 * reach);
            if g(0.0) <= gmin + tol {
                ok = true;
                break;
            }
        }
        if !ok {
            return false;
        }
    }
    true
}
