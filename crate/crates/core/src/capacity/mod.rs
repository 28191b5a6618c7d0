//! EHZ capacity of Lagrangian products K x T in the plane, computed as the
//! minimal ℓ_T length over closed polygonal curves with at most 3 vertices
//! that cannot be translated into the interior of K, together with billiard
//! certificates and the conjecture cross-checks.

mod billiard;
mod solver;

pub use billiard::{verify_strong_billiard, verify_weak_billiard, BilliardPair};
pub use solver::min_escape_length;

use crate::error::{Error, Result};
use crate::geom2::{
    chebyshev_center, erosion_halfspaces, ConvexBody2, LinearMap2, PolygonizationMode,
};
use crate::mlength::ClosedPolyline;
use serde::{Deserialize, Serialize};

/// Default boundary grid for the solver.
pub const DEFAULT_GRID: usize = 512;

/// Interior-emptiness tolerance for the erosion test.
const EROSION_INTERIOR_TOL: f64 = 1e-9;

/// Result of a capacity computation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CapacityReport {
    /// c_EHZ(K x T).
    pub value: f64,
    /// The minimizing closed curve (2 or 3 vertices on the boundary of K).
    pub minimizer: ClosedPolyline,
    /// 2 or 3.
    pub bounce_count: u8,
    pub solver_grid: usize,
    pub refined: bool,
}

/// True iff the closed curve cannot be translated into the interior of K:
/// the erosion, the intersection of the translates K - q_j, has empty
/// interior.
pub fn is_in_fcp(q: &ClosedPolyline, k_body: &ConvexBody2) -> Result<bool> {
    let k = solver_polygon(k_body)?;
    let hs = erosion_halfspaces(&k, q.vertices());
    let extent = k
        .vertices()
        .iter()
        .chain(q.vertices())
        .map(|p| p.norm())
        .fold(1.0_f64, f64::max)
        * 4.0;
    match chebyshev_center(&hs, extent) {
        None => Ok(true),
        Some((_, inradius)) => Ok(inradius <= EROSION_INTERIOR_TOL),
    }
}

fn solver_polygon(k_body: &ConvexBody2) -> Result<crate::geom2::Polygon> {
    match k_body {
        ConvexBody2::Polygon(p) => Ok(p.clone()),
        _ => k_body.polygonize(4 * DEFAULT_GRID, PolygonizationMode::Inscribed),
    }
}

/// The escape length of K with respect to T: the largest alpha such that K
/// contains a translate of every closed curve of ℓ_T length alpha. Equal to
/// the capacity value.
pub fn escape_length(k_body: &ConvexBody2, t_body: &ConvexBody2, grid: usize) -> Result<f64> {
    Ok(min_escape_length(k_body, t_body, grid)?.value)
}

/// Measurement of the volume-capacity ratio for K x T (the planar case of
/// the product form of Viterbo's conjecture: ratio >= 1 expected).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViterboReport {
    pub volume: f64,
    pub capacity: f64,
    /// volume / (capacity^2 / 2).
    pub ratio: f64,
}

pub fn check_viterbo(k_body: &ConvexBody2, t_body: &ConvexBody2, grid: usize) -> Result<ViterboReport> {
    let volume = k_body.area() * t_body.area();
    let capacity = escape_length(k_body, t_body, grid)?;
    Ok(ViterboReport {
        volume,
        capacity,
        ratio: volume / (capacity * capacity / 2.0),
    })
}

/// Capacity of T x T° together with the Mahler volume product; for
/// centrally symmetric T the capacity is 4 and the product is >= 8.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MahlerReport {
    pub capacity: f64,
    pub volume_product: f64,
}

pub fn check_mahler(
    t_body: &ConvexBody2,
    centrally_symmetric: bool,
    grid: usize,
) -> Result<MahlerReport> {
    let polar = t_body.polar()?;
    if centrally_symmetric {
        if let ConvexBody2::Polygon(p) = t_body {
            for v in p.vertices() {
                let excess = p.halfspace_excess(-*v);
                if excess.abs() > 1e-9 {
                    return Err(Error::InvalidParam(
                        "body is not centrally symmetric".into(),
                    ));
                }
            }
        }
    }
    let capacity = escape_length(t_body, &polar, grid)?;
    Ok(MahlerReport {
        capacity,
        volume_product: t_body.area() * polar.area(),
    })
}

/// Capacity before and after the symplectic product map
/// (K, T) -> (Φ(K), (Φ^T)^{-1}(T)).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub before: f64,
    pub after: f64,
}

pub fn check_symplectic_invariance(
    k_body: &ConvexBody2,
    t_body: &ConvexBody2,
    phi: &LinearMap2,
    grid: usize,
) -> Result<InvarianceReport> {
    let before = escape_length(k_body, t_body, grid)?;
    let k2 = k_body.linear_image(phi)?;
    let t2 = t_body.linear_image(&phi.transpose_inverse()?)?;
    let after = escape_length(&k2, &t2, grid)?;
    Ok(InvarianceReport { before, after })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom2::Point2;
    use crate::mlength::{doubled_segment, minkowski_length};
    use crate::shapes;

    #[test]
    fn fcp_membership_examples() {
        let k = shapes::unit_square();
        let loop_q = ClosedPolyline::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(is_in_fcp(&loop_q, &k).unwrap());
        let tiny = ClosedPolyline::new(vec![
            Point2::new(0.45, 0.45),
            Point2::new(0.55, 0.45),
            Point2::new(0.5, 0.55),
        ])
        .unwrap();
        assert!(!is_in_fcp(&tiny, &k).unwrap());
        // Critical doubled segment across the min width.
        let crit = doubled_segment(Point2::new(0.0, 0.3), Point2::new(1.0, 0.3)).unwrap();
        assert!(is_in_fcp(&crit, &k).unwrap());
        let sub = doubled_segment(Point2::new(0.01, 0.3), Point2::new(0.99, 0.3)).unwrap();
        assert!(!is_in_fcp(&sub, &k).unwrap());
    }

    #[test]
    fn square_disc_capacity_is_two() {
        let rep = min_escape_length(&shapes::unit_square(), &shapes::unit_disc(), 128).unwrap();
        assert!((rep.value - 2.0).abs() < 1e-3, "value {}", rep.value);
        assert_eq!(rep.bounce_count, 2);
        assert!(is_in_fcp(&rep.minimizer, &shapes::unit_square()).unwrap());
        let l = minkowski_length(&rep.minimizer, &shapes::unit_disc());
        assert!((l - rep.value).abs() < 1e-9);
    }

    #[test]
    fn mahler_anchor_square() {
        let rep = check_mahler(&shapes::square(1.0), true, 128).unwrap();
        assert!((rep.capacity - 4.0).abs() < 1e-2);
        assert!((rep.volume_product - 8.0).abs() < 1e-9);
    }

    #[test]
    fn disc_capacity_is_doubled_diameter() {
        let k = ConvexBody2::disc(Point2::ZERO, 0.25).unwrap();
        let rep = min_escape_length(&k, &shapes::unit_disc(), 128).unwrap();
        assert!((rep.value - 1.0).abs() < 1e-3, "value {}", rep.value);
    }

    #[test]
    fn viterbo_equality_case() {
        let rep = check_viterbo(&shapes::square(1.0), &shapes::diamond(1.0), 128).unwrap();
        assert!((rep.volume - 8.0).abs() < 1e-9);
        assert!((rep.capacity - 4.0).abs() < 1e-2);
        assert!((rep.ratio - 1.0).abs() < 1e-2);
    }

    #[test]
    fn invariance_under_identity() {
        let rep = check_symplectic_invariance(
            &shapes::square(1.0),
            &shapes::diamond(1.0),
            &LinearMap2::identity(),
            96,
        )
        .unwrap();
        assert!((rep.before - rep.after).abs() < 1e-12);
    }

    #[test]
    fn escape_scales_linearly_in_k() {
        let k = shapes::unit_square();
        let t = shapes::unit_disc();
        let base = escape_length(&k, &t, 96).unwrap();
        let scaled = escape_length(&k.scale(1.7), &t, 96).unwrap();
        assert!((scaled - 1.7 * base).abs() < 1e-6 * scaled.abs());
    }
}
