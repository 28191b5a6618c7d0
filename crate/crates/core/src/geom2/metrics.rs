use super::{ConvexBody2, Point2};

const HAUSDORFF_SAMPLES: usize = 4096;
const WIDTH_SAMPLES: usize = 4096;
const GOLDEN_TOL: f64 = 1e-10;

/// Hausdorff distance between convex bodies: sup over unit directions of
/// |h_a(u) - h_b(u)|, by dense angular sampling with golden-section polish.
pub fn hausdorff(a: &ConvexBody2, b: &ConvexBody2) -> f64 {
    let gap = |theta: f64| {
        let u = Point2::unit(theta);
        (a.support(u) - b.support(u)).abs()
    };
    scan_maximize(gap, HAUSDORFF_SAMPLES)
}

/// Minimal width: min over directions of h(u) + h(-u).
pub fn min_width(body: &ConvexBody2) -> f64 {
    let width = |theta: f64| {
        let u = Point2::unit(theta);
        body.support(u) + body.support(-u)
    };
    -scan_maximize(|t| -width(t), WIDTH_SAMPLES)
}

/// Maximize a periodic function over [0, 2pi) by scanning and refining the
/// best cells with golden-section search.
fn scan_maximize(f: impl Fn(f64) -> f64, samples: usize) -> f64 {
    let step = 2.0 * std::f64::consts::PI / samples as f64;
    let vals: Vec<f64> = (0..samples).map(|i| f(step * i as f64)).collect();
    let mut best = f64::NEG_INFINITY;
    // Refine around every local maximum of the scan.
    for i in 0..samples {
        let prev = vals[(i + samples - 1) % samples];
        let next = vals[(i + 1) % samples];
        if vals[i] >= prev && vals[i] >= next {
            let lo = step * (i as f64 - 1.0);
            let hi = step * (i as f64 + 1.0);
            best = best.max(golden_max(&f, lo, hi, GOLDEN_TOL));
        }
        best = best.max(vals[i]);
    }
    best
}

/// Golden-section maximization on [lo, hi].
pub fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = 0.618_033_988_749_894_9_f64;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    f1.max(f2)
}

/// Golden-section minimization on [lo, hi]; returns (argmin, min).
pub fn golden_min_arg(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = 0.618_033_988_749_894_9_f64;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 > f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}
