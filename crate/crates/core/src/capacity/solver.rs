//! Shortest non-translatable closed curve solver.
//!
//! The capacity of K x T at n = 2 is the minimal ℓ_T length over closed
//! polygonal curves with at most 3 vertices that cannot be translated into
//! the interior of K. The search splits by bounce count:
//!
//! * 2 bounces: a doubled chord is non-translatable iff its edge vector v
//!   lies outside the interior of the difference body D = K + (-K), so the
//!   minimum is a one-dimensional scan over directions of
//!   (h_T(v) + h_T(-v)) / gauge_D(v) evaluated on the boundary of D.
//! * 3 bounces: triangles with vertices on the boundary of K whose outward
//!   normal cones do not fit in an open halfplane. The mesh enumeration
//!   restricts the third vertex to the antipodal window of each pair's
//!   normal-cone span, then refines arc parameters by coordinate descent.

use super::CapacityReport;
use crate::error::{Error, Result};
use crate::geom2::{
    clip_ring_by_polygon, golden_min_arg, minkowski_sum, ConvexBody2, Point2, Polygon,
    PolygonizationMode,
};
use crate::mlength::ClosedPolyline;
use rayon::prelude::*;

const REFINE_ITERS: usize = 200;
const REFINE_REL_STEP: f64 = 1e-10;
const TIE_TOL: f64 = 1e-9;
const INFEASIBLE_PENALTY: f64 = 1e30;

/// Boundary mesh of a convex polygon: arc positions, points, and outward
/// normal cones as unwrapped angle intervals (lo non-decreasing around the
/// boundary).
pub(super) struct BoundaryMesh {
    pub arcs: Vec<f64>,
    pub pts: Vec<Point2>,
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoundaryMesh {
    pub fn build(poly: &Polygon, grid: usize) -> Self {
        let per = poly.perimeter();
        let vert_arcs = poly.vertex_arcs();
        let nv = vert_arcs.len();
        let mut arcs: Vec<f64> = (0..grid).map(|i| per * i as f64 / grid as f64).collect();
        if nv <= grid {
            arcs.extend_from_slice(vert_arcs);
        }
        arcs.sort_by(f64::total_cmp);
        arcs.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * per);
        let mesh_tol = 1e-9 * per.max(1.0);
        let mut pts = Vec::with_capacity(arcs.len());
        let mut lo = Vec::with_capacity(arcs.len());
        let mut hi = Vec::with_capacity(arcs.len());
        for &s in &arcs {
            let (p, (l, h)) = cone_at_arc(poly, s, mesh_tol);
            pts.push(p);
            lo.push(l);
            hi.push(h);
        }
        // Unwrap cone angles so lo (and hi) are non-decreasing around the
        // boundary.
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut offset = 0.0;
        let mut prev_lo = f64::NEG_INFINITY;
        for i in 0..lo.len() {
            let width = hi[i] - lo[i];
            let mut l = lo[i] + offset;
            while l < prev_lo - 1e-12 {
                offset += two_pi;
                l += two_pi;
            }
            lo[i] = l;
            hi[i] = l + width;
            prev_lo = l;
        }
        BoundaryMesh { arcs, pts, lo, hi }
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    /// Indices k whose normal cone meets the closed angular arc [alpha, beta]
    /// (beta >= alpha, beta - alpha <= pi), as up to a few contiguous ranges.
    pub fn cone_ranges(&self, alpha: f64, beta: f64, out: &mut Vec<(usize, usize)>) {
        out.clear();
        let two_pi = 2.0 * std::f64::consts::PI;
        let n = self.len();
        let base_lo = self.lo[0];
        let top_hi = self.hi[n - 1];
        // Try period-shifted copies of the query against the unwrapped cones.
        let mut k0 = ((base_lo - beta) / two_pi).floor();
        loop {
            let a = alpha + k0 * two_pi;
            let b = beta + k0 * two_pi;
            if a > top_hi {
                break;
            }
            // Feasible: hi_k >= a && lo_k <= b. hi and lo are non-decreasing.
            let start = self.hi.partition_point(|&h| h < a);
            let end = self.lo.partition_point(|&l| l <= b);
            if start < end {
                out.push((start, end));
            }
            k0 += 1.0;
        }
    }
}

/// Point and normal cone at an arc-length position; vertex cones apply
/// within `tol` of a vertex.
fn cone_at_arc(poly: &Polygon, s: f64, tol: f64) -> (Point2, (f64, f64)) {
    let per = poly.perimeter();
    let s = s.rem_euclid(per);
    let arcs = poly.vertex_arcs();
    let n = arcs.len();
    let i = match arcs.partition_point(|&a| a <= s) {
        0 => 0,
        k => k - 1,
    };
    // Distance to nearest vertex along the edge.
    let seg_start = arcs[i];
    let seg_end = if i + 1 < n { arcs[i + 1] } else { per };
    let angles = poly_normal_angles(poly);
    if s - seg_start <= tol {
        // At vertex i: cone between the incoming and outgoing edge normals.
        let prev = angles[(i + n - 1) % n];
        let mut cur = angles[i];
        while cur < prev {
            cur += 2.0 * std::f64::consts::PI;
        }
        (poly.vertices()[i], (prev, cur))
    } else if seg_end - s <= tol {
        let j = (i + 1) % n;
        let prev = angles[i];
        let mut cur = angles[j];
        while cur < prev {
            cur += 2.0 * std::f64::consts::PI;
        }
        (poly.vertices()[j], (prev, cur))
    } else {
        let a = angles[i];
        (poly.point_at(s), (a, a))
    }
}

fn poly_normal_angles(poly: &Polygon) -> Vec<f64> {
    poly.normals().iter().map(|n| n.angle()).collect()
}

/// Does the union of the given closed cone intervals avoid every open
/// halfplane? (That is the non-translatability condition for a curve whose
/// vertices touch the boundary with those outward normal cones.)
pub(super) fn cones_block_translation(intervals: &[(f64, f64)]) -> bool {
    // Fits in an open halfplane iff some rotation places every interval
    // strictly inside an open half-circle. Candidate half-circle starts are
    // the interval los.
    let two_pi = 2.0 * std::f64::consts::PI;
    'candidates: for &(cand, _) in intervals {
        // Open halfplane of directions (cand - eps, cand + pi): every
        // interval must fit with its canonical representative.
        for &(lo, hi) in intervals {
            let width = hi - lo;
            if width >= std::f64::consts::PI {
                return true;
            }
            // Shift lo into [cand, cand + 2pi).
            let lo_n = lo - two_pi * ((lo - cand) / two_pi).floor();
            let hi_n = lo_n + width;
            if hi_n >= cand + std::f64::consts::PI - 1e-15 {
                continue 'candidates;
            }
        }
        return false;
    }
    true
}

pub(super) fn polygonize_k(k_body: &ConvexBody2, grid: usize) -> Result<Polygon> {
    let poly = match k_body {
        ConvexBody2::Polygon(p) => p.clone(),
        _ => k_body.polygonize(4 * grid, PolygonizationMode::Inscribed)?,
    };
    if poly.area() <= 0.0 {
        return Err(Error::DegenerateBody);
    }
    Ok(poly)
}

/// Minimal ℓ_T length over non-translatable closed curves with at most 3
/// vertices on the boundary of K.
pub fn min_escape_length(
    k_body: &ConvexBody2,
    t_body: &ConvexBody2,
    grid: usize,
) -> Result<CapacityReport> {
    let grid = grid.max(64);
    let k = polygonize_k(k_body, grid)?;
    let (w2, chord) = best_two_bounce(&k, t_body, grid)?;
    let three = best_three_bounce(&k, t_body, grid);
    let (value, minimizer, bounces) = match three {
        Some((w3, tri)) if w3 < w2 - TIE_TOL => (w3, tri, 3),
        _ => (w2, chord, 2),
    };
    Ok(CapacityReport {
        value,
        minimizer: ClosedPolyline::new(minimizer)?,
        bounce_count: bounces,
        solver_grid: grid,
        refined: true,
    })
}

/// 2-bounce minimum via the difference body D = K + (-K).
fn best_two_bounce(
    k: &Polygon,
    t_body: &ConvexBody2,
    grid: usize,
) -> Result<(f64, Vec<Point2>)> {
    let neg = k.scale(-1.0);
    let d = minkowski_sum(k, &neg)?;
    let objective = |theta: f64| -> f64 {
        let u = Point2::unit(theta);
        let g = d.gauge(u).expect("difference body has origin interior");
        let v = u * (1.0 / g);
        t_body.support(v) + t_body.support(-v)
    };
    let samples = 4 * grid;
    let step = std::f64::consts::PI / samples as f64; // period pi by symmetry of D
    let vals: Vec<f64> = (0..samples).map(|i| objective(step * i as f64)).collect();
    let mut best_val = f64::INFINITY;
    let mut best_theta = 0.0;
    for i in 0..samples {
        let prev = vals[(i + samples - 1) % samples];
        let next = vals[(i + 1) % samples];
        if vals[i] <= prev && vals[i] <= next {
            let (theta, val) = golden_min_arg(
                &objective,
                step * (i as f64 - 1.0),
                step * (i as f64 + 1.0),
                1e-12,
            );
            if val < best_val {
                best_val = val;
                best_theta = theta;
            }
        }
    }
    // Reconstruct a maximal chord in the optimal direction.
    let u = Point2::unit(best_theta);
    let g = d.gauge(u).expect("origin interior");
    let v = u * (1.0 / g);
    let chord = maximal_chord(k, v);
    Ok((best_val, chord))
}

/// Endpoints of a maximal chord of K with difference vector v (|v| equal to
/// the maximal chord length in its direction).
fn maximal_chord(k: &Polygon, v: Point2) -> Vec<Point2> {
    // K ∩ (K - v) degenerates to the feasible start points; shrink v a hair
    // so the clip survives floating point.
    let vv = v * (1.0 - 1e-9);
    let shifted = k.translate(-vv);
    let ring = clip_ring_by_polygon(k.vertices(), &shifted);
    let a = if ring.is_empty() {
        // Fall back to the support point against the chord normal.
        k.support_point(v.perp())
    } else {
        ring.iter().fold(Point2::ZERO, |acc, &p| acc + p) * (1.0 / ring.len() as f64)
    };
    vec![a, a + v]
}

/// 3-bounce minimum over mesh triples with the antipodal-window pruning,
/// then coordinate-descent refinement of the arc parameters.
fn best_three_bounce(k: &Polygon, t_body: &ConvexBody2, grid: usize) -> Option<(f64, Vec<Point2>)> {
    let mesh = BoundaryMesh::build(k, grid);
    let n = mesh.len();
    let pi = std::f64::consts::PI;

    let best = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut local: Option<(f64, [usize; 3])> = None;
            let mut ranges: Vec<(usize, usize)> = Vec::new();
            for j in (i + 1)..n {
                // Minimal closed arc containing both cones: forward from i
                // to j, or backward from j around to i.
                let span_fwd = mesh.hi[j] - mesh.lo[i];
                let span_bwd = mesh.hi[i] + 2.0 * pi - mesh.lo[j];
                let (a, b) = if span_fwd <= span_bwd {
                    (mesh.lo[i], mesh.hi[j])
                } else {
                    (mesh.lo[j], mesh.hi[i] + 2.0 * pi)
                };
                if b - a >= pi {
                    // The pair alone blocks translation: every triangle on it
                    // is dominated by the doubled chord, which the 2-bounce
                    // scan covers.
                    continue;
                }
                mesh.cone_ranges(a + pi, b + pi, &mut ranges);
                for &(s, e) in &ranges {
                    for kk in s.max(j + 1)..e {
                        let l = triangle_length(t_body, mesh.pts[i], mesh.pts[j], mesh.pts[kk]);
                        if local.map_or(true, |(bv, _)| l < bv) {
                            local = Some((l, [i, j, kk]));
                        }
                    }
                }
            }
            local
        })
        .reduce(
            || None,
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                (x, None) => x,
                (None, y) => y,
            },
        )?;

    let (_, idx) = best;
    let arcs0 = [mesh.arcs[idx[0]], mesh.arcs[idx[1]], mesh.arcs[idx[2]]];
    let (val, tri) = refine_triangle(k, t_body, arcs0, grid);
    Some((val, tri))
}

/// Oriented ℓ_T length of the triangle, minimized over the two traversal
/// orientations.
fn triangle_length(t: &ConvexBody2, a: Point2, b: Point2, c: Point2) -> f64 {
    let fwd = t.support(b - a) + t.support(c - b) + t.support(a - c);
    let bwd = t.support(c - a) + t.support(b - c) + t.support(a - b);
    fwd.min(bwd)
}

/// Cyclic coordinate descent on the three arc parameters; infeasible
/// configurations (cones fit in an open halfplane) are penalized.
fn refine_triangle(
    k: &Polygon,
    t_body: &ConvexBody2,
    mut arcs: [f64; 3],
    grid: usize,
) -> (f64, Vec<Point2>) {
    let per = k.perimeter();
    let tol = 1e-9 * per.max(1.0);
    let eval = |arcs: &[f64; 3]| -> f64 {
        let mut pts = [Point2::ZERO; 3];
        let mut cones = [(0.0, 0.0); 3];
        for (m, &s) in arcs.iter().enumerate() {
            let (p, c) = cone_at_arc(k, s, tol);
            pts[m] = p;
            cones[m] = c;
        }
        if !cones_block_translation(&cones) {
            return INFEASIBLE_PENALTY;
        }
        triangle_length(t_body, pts[0], pts[1], pts[2])
    };
    let mut window = 2.0 * per / grid as f64;
    let mut best = eval(&arcs);
    for _ in 0..REFINE_ITERS {
        let mut improved = false;
        for m in 0..3 {
            let f = |s: f64| {
                let mut a = arcs;
                a[m] = s;
                eval(&a)
            };
            let (s, v) = golden_min_arg(&f, arcs[m] - window, arcs[m] + window, 1e-13 * per);
            if v < best - 1e-15 {
                best = v;
                arcs[m] = s;
                improved = true;
            }
        }
        if !improved {
            window *= 0.5;
        }
        if window < REFINE_REL_STEP * per {
            break;
        }
    }
    let mut pts = Vec::with_capacity(3);
    for &s in &arcs {
        pts.push(cone_at_arc(k, s, tol).0);
    }
    (best, pts)
}
