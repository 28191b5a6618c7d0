//! Derivative-free optimization: inner convex minimization over the
//! generator translations and outer maximization over the shape parameters
//! (theta, q_hat).

use crate::error::{Error, Result};
use crate::geom2::{Point2, PolygonizationMode};
use crate::wormcover::objective::{WetzelObjective, THETA_MAX};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Pattern search minimization. Coordinate directions plus a deterministic
/// batch of random directions per contraction (the objective has hull
/// kinks, so coordinate moves alone can stall). The seed fixes the random
/// directions, so results are reproducible.
pub fn pattern_min<F: Fn(&[f64]) -> f64 + Sync>(
    f: F,
    x0: &[f64],
    step0: f64,
    tol: f64,
    seed: u64,
    max_evals: usize,
) -> Result<(Vec<f64>, f64)> {
    let n = x0.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = x0.to_vec();
    let mut fx = f(&x);
    let mut evals = 1usize;
    let mut step = step0;
    let mut dirs: Vec<Vec<f64>> = Vec::new();
    let refresh = |rng: &mut ChaCha8Rng, dirs: &mut Vec<Vec<f64>>| {
        dirs.clear();
        for i in 0..n {
            for s in [1.0, -1.0] {
                let mut d = vec![0.0; n];
                d[i] = s;
                dirs.push(d);
            }
        }
        for _ in 0..2 * n {
            let d: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm = d.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm > 1e-9 {
                dirs.push(d.iter().map(|v| v / norm).collect());
            }
        }
    };
    refresh(&mut rng, &mut dirs);
    while step > tol {
        let mut improved = false;
        for d in &dirs {
            let y: Vec<f64> = x.iter().zip(d).map(|(xi, di)| xi + step * di).collect();
            let fy = f(&y);
            evals += 1;
            if fy < fx - 1e-15 {
                x = y;
                fx = fy;
                improved = true;
                // Greedy line acceleration along the winning direction.
                loop {
                    let y2: Vec<f64> =
                        x.iter().zip(d).map(|(xi, di)| xi + step * di).collect();
                    let fy2 = f(&y2);
                    evals += 1;
                    if evals > max_evals {
                        return Err(Error::NonConvergence);
                    }
                    if fy2 < fx - 1e-15 {
                        x = y2;
                        fx = fy2;
                    } else {
                        break;
                    }
                }
                break;
            }
            if evals > max_evals {
                return Err(Error::NonConvergence);
            }
        }
        if !improved {
            step *= 0.5;
            refresh(&mut rng, &mut dirs);
        }
        if evals > max_evals {
            return Err(Error::NonConvergence);
        }
    }
    Ok((x, fx))
}

/// Result of the inner translation minimization.
#[derive(Debug, Clone, Copy)]
pub struct InnerMin {
    pub value: f64,
    /// Triangle mass point.
    pub t: Point2,
    /// Rectangle middle point.
    pub r: Point2,
}

/// Minimize the hull objective over the four translation coordinates for
/// fixed (theta, q_hat). The objective is convex in these coordinates.
pub fn inner_min(obj: &WetzelObjective, theta: f64, q_hat: f64, tol: f64) -> Result<InnerMin> {
    let f = |x: &[f64]| {
        obj.eval(x[0], x[1], x[2], x[3], theta, q_hat)
            .unwrap_or(f64::INFINITY)
    };
    let (x, value) = pattern_min(f, &[0.0; 4], 0.25, tol, 0x5eed_0001, 400_000)?;
    Ok(InnerMin {
        value,
        t: Point2::new(x[0], x[1]),
        r: Point2::new(x[2], x[3]),
    })
}

/// Configuration for the Wetzel lower-bound search.
#[derive(Debug, Clone)]
pub struct WetzelConfig {
    pub resolution: usize,
    pub mode: PolygonizationMode,
    /// Grid points per outer parameter.
    pub outer_grid: usize,
    /// Pattern-search contractions in the outer refinement.
    pub refine_iters: usize,
    pub inner_tol: f64,
}

impl Default for WetzelConfig {
    fn default() -> Self {
        WetzelConfig {
            resolution: 2048,
            mode: PolygonizationMode::Circumscribed,
            outer_grid: 24,
            refine_iters: 20,
            inner_tol: 1e-7,
        }
    }
}

pub const Q_HAT_MIN: f64 = 0.02;
pub const Q_HAT_MAX: f64 = 1.0;

/// Best cell of the outer (theta, q_hat) sweep plus local refinement.
/// Returns (theta, q_hat, inner minimum at that point, inner-min calls).
pub fn outer_max(
    obj: &WetzelObjective,
    cfg: &WetzelConfig,
) -> Result<(f64, f64, InnerMin, usize)> {
    let g = cfg.outer_grid.max(2);
    let thetas: Vec<f64> = (0..g)
        .map(|i| THETA_MAX * i as f64 / (g - 1) as f64)
        .collect();
    let qs: Vec<f64> = (0..g)
        .map(|i| {
            let t = i as f64 / (g - 1) as f64;
            Q_HAT_MIN * (Q_HAT_MAX / Q_HAT_MIN).powf(t)
        })
        .collect();
    let cells: Vec<(f64, f64)> = thetas
        .iter()
        .flat_map(|&th| qs.iter().map(move |&q| (th, q)))
        .collect();
    // A coarser inner tolerance suffices to rank cells; the winner is
    // re-solved tightly during refinement.
    let scan_tol = cfg.inner_tol.max(1e-5);
    let values: Vec<Result<InnerMin>> = cells
        .par_iter()
        .map(|&(th, q)| inner_min(obj, th, q, scan_tol))
        .collect();
    let mut best_i = 0usize;
    let mut best_v = f64::NEG_INFINITY;
    for (i, v) in values.iter().enumerate() {
        let v = v.as_ref().map_err(|_| Error::NonConvergence)?;
        if v.value > best_v {
            best_v = v.value;
            best_i = i;
        }
    }
    let (mut th, mut q) = cells[best_i];
    // Local pattern refinement of the outer maximum (minimize the negative
    // inner value), clamped to the parameter box.
    let mut iterations = cells.len();
    let mut step_th = THETA_MAX / (g - 1) as f64;
    let mut step_q = q * ((Q_HAT_MAX / Q_HAT_MIN).powf(1.0 / (g - 1) as f64) - 1.0);
    let mut best = inner_min(obj, th, q, cfg.inner_tol)?;
    iterations += 1;
    for _ in 0..cfg.refine_iters {
        let mut improved = false;
        for (dth, dq) in [
            (step_th, 0.0),
            (-step_th, 0.0),
            (0.0, step_q),
            (0.0, -step_q),
        ] {
            let th2 = (th + dth).clamp(0.0, THETA_MAX);
            let q2 = (q + dq).clamp(Q_HAT_MIN, Q_HAT_MAX);
            if (th2 - th).abs() < 1e-15 && (q2 - q).abs() < 1e-15 {
                continue;
            }
            let cand = inner_min(obj, th2, q2, cfg.inner_tol)?;
            iterations += 1;
            if cand.value > best.value + 1e-15 {
                th = th2;
                q = q2;
                best = cand;
                improved = true;
                break;
            }
        }
        if !improved {
            step_th *= 0.5;
            step_q *= 0.5;
        }
    }
    Ok((th, q, best, iterations))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_min_quadratic() {
        let f = |x: &[f64]| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 2.0).powi(2);
        let (x, v) = pattern_min(f, &[0.0, 0.0], 0.5, 1e-9, 7, 100_000).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-7);
        assert!((x[1] + 2.0).abs() < 1e-7);
        assert!(v < 1e-12);
    }

    #[test]
    fn pattern_min_nonsmooth_kink() {
        let f = |x: &[f64]| (x[0] + x[1]).abs() + 0.1 * (x[0] - x[1] - 4.0).abs();
        let (x, _) = pattern_min(f, &[3.0, 3.0], 1.0, 1e-9, 11, 200_000).unwrap();
        assert!((x[0] + x[1]).abs() < 1e-6, "{x:?}");
        assert!((x[0] - x[1] - 4.0).abs() < 1e-6, "{x:?}");
    }

    #[test]
    fn pattern_min_reports_nonconvergence() {
        let f = |x: &[f64]| x[0];
        assert!(matches!(
            pattern_min(f, &[0.0], 1.0, 1e-12, 1, 50),
            Err(Error::NonConvergence)
        ));
    }

    #[test]
    fn pattern_min_is_deterministic() {
        let f = |x: &[f64]| (x[0].sin() - x[1]).powi(2) + 0.01 * x[0].abs();
        let a = pattern_min(f, &[2.0, 0.0], 0.5, 1e-8, 42, 100_000).unwrap();
        let b = pattern_min(f, &[2.0, 0.0], 0.5, 1e-8, 42, 100_000).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1.to_bits(), b.1.to_bits());
    }

    #[test]
    fn inner_min_centers_overlapping_shapes() {
        // At the optimum both shapes overlap the circle; the value must be
        // below the sum of the separate areas and at least the circle area.
        let obj = WetzelObjective::new(512, PolygonizationMode::Circumscribed);
        let m = inner_min(&obj, 0.2, 0.5, 1e-5).unwrap();
        assert!(m.value >= obj.circle_area() - 1e-12);
        assert!(m.value < 0.2);
        assert!(m.t.norm() < 0.5 && m.r.norm() < 0.5);
    }
}
