//! Worm-cover lower bounds: every convex cover of all unit-length closed
//! curves must contain translates of a few canonical generators, so the
//! minimal hull area of well-placed generators bounds the cover area from
//! below.

pub mod objective;
pub mod optimize;

pub use objective::{objective_f, WetzelObjective, CIRCLE_RADIUS, THETA_MAX, TRIANGLE_SIDE};
pub use optimize::{inner_min, pattern_min, InnerMin, WetzelConfig};

use crate::error::{Error, Result};
use crate::geom2::{
    chebyshev_center, convex_hull_ring, disc_points, erosion_halfspaces, min_enclosing_circle,
    signed_area, ConvexBody2, Point2, Polygon, PolygonizationMode,
};
use crate::mlength::{doubled_segment, minkowski_length, rescale_to_length, ClosedPolyline};
use objective::{rectangle_corners, triangle_corners};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::time::Duration;

/// Normalization tolerance for generator lengths.
const LENGTH_TOL: f64 = 1e-9;

/// A closed curve of unit Euclidean length, up to translation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorKind {
    Circle { radius: f64 },
    EquilateralTriangle { side: f64, theta: f64 },
    Rectangle { perimeter: f64, q_hat: f64 },
    DoubledSegment { half_length: f64, angle: f64 },
    FreePolyline { curve: ClosedPolyline },
}

impl GeneratorKind {
    /// Euclidean length of the curve (closed form where available).
    pub fn euclidean_length(&self) -> f64 {
        match self {
            GeneratorKind::Circle { radius } => 2.0 * std::f64::consts::PI * radius,
            GeneratorKind::EquilateralTriangle { side, .. } => 3.0 * side,
            GeneratorKind::Rectangle { perimeter, .. } => *perimeter,
            GeneratorKind::DoubledSegment { half_length, .. } => 2.0 * half_length,
            GeneratorKind::FreePolyline { curve } => curve.euclidean_perimeter(),
        }
    }

    /// Vertex sample of the curve placed at the origin. `resolution` only
    /// affects the circle.
    pub fn polyline(&self, resolution: usize) -> Result<ClosedPolyline> {
        match self {
            GeneratorKind::Circle { radius } => ClosedPolyline::new(disc_points(
                Point2::ZERO,
                *radius,
                resolution.max(8),
                PolygonizationMode::Inscribed,
            )),
            GeneratorKind::EquilateralTriangle { side, theta } => {
                ClosedPolyline::new(triangle_corners(0.0, 0.0, *side, *theta).to_vec())
            }
            GeneratorKind::Rectangle { perimeter, q_hat } => {
                if !(*q_hat > 0.0) {
                    return Err(Error::InvalidParam(format!("q_hat {q_hat}")));
                }
                ClosedPolyline::new(rectangle_corners(0.0, 0.0, *perimeter, *q_hat).to_vec())
            }
            GeneratorKind::DoubledSegment { half_length, angle } => {
                // `half_length` is half the closed curve's length, i.e. the
                // segment's extent.
                let d = Point2::unit(*angle) * (*half_length / 2.0);
                doubled_segment(-d, d)
            }
            GeneratorKind::FreePolyline { curve } => Ok(curve.clone()),
        }
    }
}

/// A generator together with its placement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorCurve {
    pub kind: GeneratorKind,
    pub translation: Point2,
}

impl GeneratorCurve {
    /// Build a placed generator, checking unit Euclidean length.
    pub fn unit(kind: GeneratorKind, translation: Point2) -> Result<Self> {
        let len = kind.euclidean_length();
        if (len - 1.0).abs() > LENGTH_TOL {
            return Err(Error::NormalizationError(len));
        }
        Ok(GeneratorCurve { kind, translation })
    }

    pub fn polyline(&self, resolution: usize) -> Result<ClosedPolyline> {
        Ok(self.kind.polyline(resolution)?.translate(self.translation))
    }

    /// Point sample used for hull areas: like `polyline`, but the circle
    /// may be sampled circumscribed so hull bounds stay conservative.
    pub fn hull_points(&self, resolution: usize, mode: PolygonizationMode) -> Result<Vec<Point2>> {
        let pts = match &self.kind {
            GeneratorKind::Circle { radius } => {
                disc_points(Point2::ZERO, *radius, resolution.max(8), mode)
            }
            other => other.polyline(resolution)?.vertices().to_vec(),
        };
        Ok(pts.into_iter().map(|p| p + self.translation).collect())
    }
}

/// Outer shape parameters of the Wetzel configuration.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct OuterParams {
    pub theta: f64,
    pub q_hat: f64,
}

/// Output of a lower-bound search.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    /// Certified-by-construction lower bound for the cover area.
    pub lower_bound: f64,
    /// Generators at their optimal placements.
    pub generators: Vec<GeneratorCurve>,
    /// Optimal translations (one per generator, first pinned at origin).
    pub inner_translations: Vec<Point2>,
    /// Shape parameters at the outer maximum.
    pub outer_params: OuterParams,
    /// Inner minimizations performed across the outer search.
    pub iterations: usize,
    /// Inner-min step tolerance; the certificate is exact up to this.
    pub error_bar: f64,
    pub resolution: usize,
    /// Excluded from JSON so output is byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl BoundReport {
    /// Independently re-evaluate the hull area of the recorded
    /// configuration (certificate check).
    pub fn certificate_area(&self, mode: PolygonizationMode) -> Result<f64> {
        let mut pts = Vec::new();
        for g in &self.generators {
            pts.extend(g.hull_points(self.resolution, mode)?);
        }
        match convex_hull_ring(&pts) {
            Ok(h) if h.len() >= 3 => Ok(signed_area(&h)),
            _ => Ok(0.0),
        }
    }
}

/// The three-generator lower bound for Wetzel's problem: max over
/// (theta, q_hat) of the min over translations of the hull area of
/// {unit circle, side-1/3 equilateral triangle, unit-perimeter rectangle}.
pub fn wetzel_lower_bound(outer_grid: usize, refine_iters: usize) -> Result<BoundReport> {
    wetzel_lower_bound_with(&WetzelConfig {
        outer_grid,
        refine_iters,
        ..WetzelConfig::default()
    })
}

pub fn wetzel_lower_bound_with(cfg: &WetzelConfig) -> Result<BoundReport> {
    let start = std::time::Instant::now();
    let obj = WetzelObjective::new(cfg.resolution, cfg.mode);
    let (theta, q_hat, inner, iterations) = optimize::outer_max(&obj, cfg)?;
    let generators = vec![
        GeneratorCurve::unit(GeneratorKind::Circle { radius: CIRCLE_RADIUS }, Point2::ZERO)?,
        GeneratorCurve::unit(
            GeneratorKind::EquilateralTriangle { side: TRIANGLE_SIDE, theta },
            inner.t,
        )?,
        GeneratorCurve::unit(GeneratorKind::Rectangle { perimeter: 1.0, q_hat }, inner.r)?,
    ];
    let inner_translations = vec![Point2::ZERO, inner.t, inner.r];
    Ok(BoundReport {
        lower_bound: inner.value,
        generators,
        inner_translations,
        outer_params: OuterParams { theta, q_hat },
        iterations,
        error_bar: cfg.inner_tol,
        resolution: cfg.resolution,
        wall_time: start.elapsed(),
    })
}

/// Idealized ℓ_T length of a generator: exact for polygonal curves; for
/// the circle, radius times the perimeter of T (the polyline sample would
/// understate it).
pub fn minkowski_length_ideal(kind: &GeneratorKind, t_body: &ConvexBody2) -> Result<f64> {
    match kind {
        GeneratorKind::Circle { radius } => {
            let per = match t_body {
                ConvexBody2::Polygon(p) => p.perimeter(),
                ConvexBody2::Disc { radius: r, .. } => 2.0 * std::f64::consts::PI * r,
                ConvexBody2::HullOfUnion(_) => t_body
                    .polygonize(4096, PolygonizationMode::Inscribed)?
                    .perimeter(),
            };
            Ok(radius * per)
        }
        other => Ok(minkowski_length(&other.polyline(0)?, t_body)),
    }
}

/// Lower bound from an arbitrary set of generators of ℓ_T length `alpha`:
/// the first is pinned at the origin; the hull area is minimized over the
/// remaining translations.
pub fn generic_lower_bound(
    kinds: &[GeneratorKind],
    t_body: &ConvexBody2,
    alpha: f64,
    resolution: usize,
    inner_tol: f64,
) -> Result<BoundReport> {
    let start = std::time::Instant::now();
    if kinds.is_empty() {
        return Err(Error::InvalidParam("no generators".into()));
    }
    for k in kinds {
        let len = minkowski_length_ideal(k, t_body)?;
        if (len - alpha).abs() > LENGTH_TOL {
            return Err(Error::NormalizationError(len));
        }
    }
    // Per-generator base points, each presorted; sorted order is invariant
    // under translation, so evaluation only merges.
    let bases: Vec<Vec<Point2>> = kinds
        .iter()
        .map(|k| {
            let mut pts = k.polyline(resolution)?.vertices().to_vec();
            pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
            Ok(pts)
        })
        .collect::<Result<_>>()?;
    let eval = |x: &[f64]| -> f64 {
        let mut merged: Vec<Point2> = Vec::with_capacity(bases.iter().map(Vec::len).sum());
        for (i, base) in bases.iter().enumerate() {
            let off = if i == 0 {
                Point2::ZERO
            } else {
                Point2::new(x[2 * (i - 1)], x[2 * i - 1])
            };
            let mut cur = Vec::with_capacity(merged.len() + base.len());
            let (mut a, mut b) = (0usize, 0usize);
            while a < merged.len() || b < base.len() {
                let take_a = b >= base.len()
                    || (a < merged.len() && {
                        let p = merged[a];
                        let q = base[b] + off;
                        p.x < q.x || (p.x == q.x && p.y <= q.y)
                    });
                if take_a {
                    cur.push(merged[a]);
                    a += 1;
                } else {
                    cur.push(base[b] + off);
                    b += 1;
                }
            }
            merged = cur;
        }
        match crate::geom2::hull_of_sorted(&merged) {
            Ok(h) if h.len() >= 3 => signed_area(&h),
            _ => 0.0,
        }
    };
    let dims = 2 * (kinds.len() - 1);
    let (x, value) = if dims == 0 {
        (Vec::new(), eval(&[]))
    } else {
        pattern_min(&eval, &vec![0.0; dims], 0.25, inner_tol, 0x5eed_0002, 600_000)?
    };
    let translations: Vec<Point2> = (0..kinds.len())
        .map(|i| {
            if i == 0 {
                Point2::ZERO
            } else {
                Point2::new(x[2 * (i - 1)], x[2 * i - 1])
            }
        })
        .collect();
    let generators = kinds
        .iter()
        .zip(&translations)
        .map(|(k, &t)| GeneratorCurve {
            kind: k.clone(),
            translation: t,
        })
        .collect();
    Ok(BoundReport {
        lower_bound: value,
        generators,
        inner_translations: translations,
        outer_params: OuterParams { theta: 0.0, q_hat: 0.0 },
        iterations: 1,
        error_bar: inner_tol,
        resolution,
        wall_time: start.elapsed(),
    })
}

/// If some translate of q lies in K, return the translation vector,
/// verified pointwise within 1e-9.
pub fn fits_by_translation(q: &ClosedPolyline, k_body: &ConvexBody2) -> Option<Point2> {
    match k_body {
        ConvexBody2::Disc { center, radius } => {
            let (c, r) = min_enclosing_circle(q.vertices());
            if r <= radius + 1e-12 {
                Some(*center - c)
            } else {
                None
            }
        }
        ConvexBody2::Polygon(k) => fits_in_polygon(q, k),
        ConvexBody2::HullOfUnion(_) => {
            // Over-approximate the body so a reported failure is real.
            let k = k_body
                .polygonize(1024, PolygonizationMode::Circumscribed)
                .ok()?;
            fits_in_polygon(q, &k)
        }
    }
}

fn fits_in_polygon(q: &ClosedPolyline, k: &Polygon) -> Option<Point2> {
    let hs = erosion_halfspaces(k, q.vertices());
    let extent = k
        .vertices()
        .iter()
        .chain(q.vertices())
        .map(|p| p.norm())
        .fold(1.0_f64, f64::max)
        * 4.0;
    let (a, _) = chebyshev_center(&hs, extent)?;
    let ok = q
        .vertices()
        .iter()
        .all(|&v| k.halfspace_excess(v + a) <= 1e-9);
    ok.then_some(a)
}

/// Randomized cover falsification: sample closed curves from five families,
/// rescale each to ℓ_T length 1, and look for one that admits no translate
/// inside K. Returns the first counterexample, if any.
pub fn falsify_cover(
    k_body: &ConvexBody2,
    t_body: &ConvexBody2,
    samples: usize,
    seed: u64,
) -> Result<Option<ClosedPolyline>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two_pi = 2.0 * std::f64::consts::PI;
    for i in 0..samples {
        let raw = match i % 5 {
            0 => {
                let ang = rng.gen_range(0.0..two_pi);
                GeneratorKind::DoubledSegment { half_length: 0.5, angle: ang }.polyline(0)?
            }
            1 => {
                let theta = rng.gen_range(0.0..two_pi);
                GeneratorKind::EquilateralTriangle { side: 1.0 / 3.0, theta }.polyline(0)?
            }
            2 => {
                let q_hat = rng.gen_range(0.05..1.0);
                let ang = rng.gen_range(0.0..two_pi);
                let pts: Vec<Point2> = rectangle_corners(0.0, 0.0, 1.0, q_hat)
                    .iter()
                    .map(|p| {
                        Point2::new(
                            p.x * ang.cos() - p.y * ang.sin(),
                            p.x * ang.sin() + p.y * ang.cos(),
                        )
                    })
                    .collect();
                ClosedPolyline::new(pts)?
            }
            3 => GeneratorKind::Circle { radius: 1.0 / two_pi }.polyline(64)?,
            _ => loop {
                let pts: Vec<Point2> = (0..5)
                    .map(|_| Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect();
                if let Ok(h) = convex_hull_ring(&pts) {
                    if h.len() >= 3 {
                        if let Ok(q) = ClosedPolyline::new(h) {
                            break q;
                        }
                    }
                }
            },
        };
        let q = rescale_to_length(&raw, t_body, 1.0)?;
        debug_assert!((minkowski_length(&q, t_body) - 1.0).abs() < 1e-9);
        if fits_by_translation(&q, k_body).is_none() {
            return Ok(Some(q));
        }
    }
    Ok(None)
}
