use super::Point2;
use crate::error::{Error, Result};

/// Vertices closer than this are merged during construction.
const MERGE_TOL: f64 = 1e-12;
/// Turning angles below this (in the cross-product sense, relative to edge
/// lengths) drop the middle vertex as collinear.
const TURN_TOL: f64 = 1e-10;

/// A convex polygon with counterclockwise vertices in strictly convex position.
#[derive(Debug, Clone)]
pub struct Polygon {
    vertices: Vec<Point2>,
    /// Unit outward normal of edge i (from vertex i to vertex i+1).
    normals: Vec<Point2>,
    /// Support offsets h_i = <n_i, v_i>.
    offsets: Vec<f64>,
    /// Normal angles, unwrapped to be strictly increasing; angles[0] in (-pi, pi].
    angles: Vec<f64>,
    /// Cumulative arc length up to the start of edge i; last entry is the perimeter.
    arc: Vec<f64>,
}

impl PartialEq for Polygon {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Polygon {
    /// Build a polygon from vertices of a convex shape in either orientation.
    /// Near-duplicate and collinear vertices are merged; the result is CCW.
    pub fn new(vertices: impl Into<Vec<Point2>>) -> Result<Self> {
        let mut vs: Vec<Point2> = vertices.into();
        if vs.iter().any(|v| !v.is_finite()) {
            return Err(Error::Degenerate("non-finite vertex".into()));
        }
        if vs.len() < 3 {
            return Err(Error::Degenerate("fewer than 3 vertices".into()));
        }
        if signed_area(&vs) < 0.0 {
            vs.reverse();
        }
        let vs = clean_ring(&vs)?;
        // Strict convexity after cleanup.
        let n = vs.len();
        for i in 0..n {
            let a = vs[i];
            let b = vs[(i + 1) % n];
            let c = vs[(i + 2) % n];
            if (b - a).cross(c - b) <= 0.0 {
                return Err(Error::Degenerate("vertices not in convex position".into()));
            }
        }
        Ok(Self::from_clean_ccw(vs))
    }

    fn from_clean_ccw(vertices: Vec<Point2>) -> Self {
        let n = vertices.len();
        let mut normals = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        let mut arc = Vec::with_capacity(n + 1);
        let mut s = 0.0;
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let e = b - a;
            let nrm = Point2::new(e.y, -e.x).normalized();
            normals.push(nrm);
            offsets.push(nrm.dot(a));
            arc.push(s);
            s += e.norm();
        }
        arc.push(s);
        let mut angles = Vec::with_capacity(n);
        let mut prev = f64::NEG_INFINITY;
        for nrm in &normals {
            let mut a = nrm.angle();
            while a <= prev {
                a += 2.0 * std::f64::consts::PI;
            }
            angles.push(a);
            prev = a;
        }
        Polygon { vertices, normals, offsets, angles, arc }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Unit outward edge normals, in edge order.
    pub fn normals(&self) -> &[Point2] {
        &self.normals
    }

    /// Support offsets h_i = <n_i, v_i> matching [`Polygon::normals`].
    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    pub fn perimeter(&self) -> f64 {
        *self.arc.last().unwrap()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn centroid(&self) -> Point2 {
        let n = self.vertices.len() as f64;
        let mut c = Point2::ZERO;
        for &v in &self.vertices {
            c = c + v;
        }
        c * (1.0 / n)
    }

    /// Index of the vertex maximizing <u, v>.
    pub fn support_index(&self, u: Point2) -> usize {
        let n = self.vertices.len();
        if n <= 24 {
            let mut best = 0;
            let mut best_val = self.vertices[0].dot(u);
            for (i, &v) in self.vertices.iter().enumerate().skip(1) {
                let val = v.dot(u);
                if val > best_val {
                    best_val = val;
                    best = i;
                }
            }
            return best;
        }
        // Vertex i is extreme iff angle(u) lies in [angles[i-1], angles[i]].
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut theta = u.angle();
        let lo = self.angles[0];
        while theta <= lo - two_pi {
            theta += two_pi;
        }
        while theta > lo + two_pi {
            theta -= two_pi;
        }
        // Normalize into (angles[0] - 2pi, angles[0]] + (0, 2pi] window:
        if theta <= lo {
            theta += two_pi;
        }
        // theta in (angles[0], angles[0] + 2pi]
        if theta > *self.angles.last().unwrap() {
            // Cone of vertex 0 is [angles[n-1], angles[0] + 2pi].
            0
        } else {
            // Cone of vertex i is [angles[i-1], angles[i]].
            self.angles.partition_point(|&a| a < theta)
        }
    }

    pub fn support(&self, u: Point2) -> f64 {
        self.vertices[self.support_index(u)].dot(u)
    }

    pub fn support_point(&self, u: Point2) -> Point2 {
        self.vertices[self.support_index(u)]
    }

    /// Gauge (Minkowski functional); requires the origin strictly interior.
    pub fn gauge(&self, x: Point2) -> Result<f64> {
        if !self.origin_interior() {
            return Err(Error::OriginNotInterior);
        }
        let mut g: f64 = 0.0;
        for (n, &h) in self.normals.iter().zip(&self.offsets) {
            g = g.max(n.dot(x) / h);
        }
        Ok(g.max(0.0))
    }

    pub fn origin_interior(&self) -> bool {
        self.offsets.iter().all(|&h| h > 0.0)
    }

    /// Polar polygon: the CCW edge with unit normal n_i and offset h_i > 0
    /// maps to the vertex n_i / h_i.
    pub fn polar(&self) -> Result<Polygon> {
        if !self.origin_interior() {
            return Err(Error::OriginNotInterior);
        }
        let vs: Vec<Point2> = self
            .normals
            .iter()
            .zip(&self.offsets)
            .map(|(&n, &h)| n * (1.0 / h))
            .collect();
        Polygon::new(vs)
    }

    pub fn contains(&self, x: Point2, tol: f64) -> bool {
        self.normals
            .iter()
            .zip(&self.offsets)
            .all(|(n, &h)| n.dot(x) <= h + tol)
    }

    /// max_i (<n_i, x> - h_i); non-positive inside, and for points outside it
    /// lower-bounds the distance to the polygon.
    pub fn halfspace_excess(&self, x: Point2) -> f64 {
        self.normals
            .iter()
            .zip(&self.offsets)
            .map(|(n, &h)| n.dot(x) - h)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn translate(&self, a: Point2) -> Polygon {
        Polygon::from_clean_ccw(self.vertices.iter().map(|&v| v + a).collect())
    }

    pub fn scale(&self, lambda: f64) -> Polygon {
        // Negative lambda is a point reflection (rotation by pi), which
        // preserves CCW orientation; no reversal in either case.
        let vs: Vec<Point2> = self.vertices.iter().map(|&v| v * lambda).collect();
        Polygon::from_clean_ccw(vs)
    }

    /// Point on the boundary at arc-length parameter `s` (mod perimeter).
    pub fn point_at(&self, s: f64) -> Point2 {
        let per = self.perimeter();
        let mut s = s.rem_euclid(per);
        let i = match self.arc[..self.arc.len() - 1].partition_point(|&a| a <= s) {
            0 => 0,
            k => k - 1,
        };
        s -= self.arc[i];
        let a = self.vertices[i];
        let b = self.vertices[(i + 1) % self.vertices.len()];
        let e = b - a;
        let len = e.norm();
        a + e * (s / len)
    }

    /// Arc-length positions of the vertices.
    pub fn vertex_arcs(&self) -> &[f64] {
        &self.arc[..self.arc.len() - 1]
    }

    /// Outward normal cone at a boundary point `x`, as an angle interval
    /// `[lo, hi]` with `hi - lo < pi`. Points within `tol` of a vertex get the
    /// vertex cone, points on an edge the single edge normal.
    pub fn normal_cone_at(&self, x: Point2, tol: f64) -> Option<(f64, f64)> {
        let n = self.vertices.len();
        let two_pi = 2.0 * std::f64::consts::PI;
        // Vertex check first.
        for i in 0..n {
            if (x - self.vertices[i]).norm() <= tol {
                let prev = self.angles[(i + n - 1) % n];
                let mut cur = self.angles[i];
                // Unwrap so the interval is increasing.
                let mut lo = prev;
                while lo > cur {
                    cur += two_pi;
                }
                while cur - lo >= two_pi {
                    lo += two_pi;
                }
                return Some((lo, cur));
            }
        }
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let e = b - a;
            let len = e.norm();
            let t = (x - a).dot(e) / (len * len);
            if (-tol..=1.0 + tol).contains(&t) {
                let foot = a + e * t.clamp(0.0, 1.0);
                if (x - foot).norm() <= tol {
                    let ang = self.angles[i];
                    return Some((ang, ang));
                }
            }
        }
        None
    }
}

/// Signed area of a closed vertex ring (positive for CCW).
pub fn signed_area(vs: &[Point2]) -> f64 {
    let n = vs.len();
    let mut s = 0.0;
    for i in 0..n {
        s += vs[i].cross(vs[(i + 1) % n]);
    }
    s / 2.0
}

/// Merge near-duplicate and collinear vertices of a CCW ring.
fn clean_ring(vs: &[Point2]) -> Result<Vec<Point2>> {
    let scale = vs
        .iter()
        .map(|v| v.norm())
        .fold(0.0_f64, f64::max)
        .max(1.0);
    let mut out: Vec<Point2> = Vec::with_capacity(vs.len());
    for &v in vs {
        if let Some(&last) = out.last() {
            if (v - last).norm() <= MERGE_TOL * scale {
                continue;
            }
        }
        out.push(v);
    }
    while out.len() >= 2 && (out[0] - *out.last().unwrap()).norm() <= MERGE_TOL * scale {
        out.pop();
    }
    // Drop collinear middles until stable.
    loop {
        let n = out.len();
        if n < 3 {
            return Err(Error::Degenerate("polygon collapsed during cleanup".into()));
        }
        let mut removed = false;
        let mut kept: Vec<Point2> = Vec::with_capacity(n);
        for i in 0..n {
            let a = out[(i + n - 1) % n];
            let b = out[i];
            let c = out[(i + 1) % n];
            let e1 = b - a;
            let e2 = c - b;
            if e1.cross(e2) <= TURN_TOL * e1.norm() * e2.norm() {
                removed = true;
            } else {
                kept.push(b);
            }
        }
        if !removed {
            return Ok(kept);
        }
        out = kept;
    }
}

/// Convex hull of a point set (Andrew's monotone chain), CCW.
pub fn convex_hull(points: &[Point2]) -> Result<Polygon> {
    let ring = convex_hull_ring(points)?;
    Polygon::new(ring)
}

/// Hull vertex ring without constructing the `Polygon` (CCW order).
pub fn convex_hull_ring(points: &[Point2]) -> Result<Vec<Point2>> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup_by(|a, b| a == b);
    hull_of_sorted(&pts)
}

/// Monotone chain over points already sorted lexicographically by (x, y).
pub fn hull_of_sorted(pts: &[Point2]) -> Result<Vec<Point2>> {
    if pts.len() < 3 {
        return Err(Error::Degenerate("fewer than 3 distinct points".into()));
    }
    let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in pts {
        while lower.len() >= 2 {
            let a = lower[lower.len() - 2];
            let b = lower[lower.len() - 1];
            if (b - a).cross(p - a) <= 0.0 {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 {
            let a = upper[upper.len() - 2];
            let b = upper[upper.len() - 1];
            if (b - a).cross(p - a) <= 0.0 {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::Degenerate("all points collinear".into()));
    }
    Ok(lower)
}

/// Area of the convex hull of `static_sorted ∪ extra`, where `static_sorted`
/// is pre-sorted lexicographically. Avoids re-sorting the large static part.
pub fn hull_area_with_extra(static_sorted: &[Point2], extra: &mut [Point2]) -> f64 {
    extra.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    let mut merged: Vec<Point2> = Vec::with_capacity(static_sorted.len() + extra.len());
    let (mut i, mut j) = (0, 0);
    while i < static_sorted.len() && j < extra.len() {
        let a = static_sorted[i];
        let b = extra[j];
        if (a.x, a.y) <= (b.x, b.y) {
            merged.push(a);
            i += 1;
        } else {
            merged.push(b);
            j += 1;
        }
    }
    merged.extend_from_slice(&static_sorted[i..]);
    merged.extend_from_slice(&extra[j..]);
    match hull_of_sorted(&merged) {
        Ok(ring) => signed_area(&ring),
        Err(_) => 0.0,
    }
}

/// Minkowski sum of two convex polygons (CCW edge-vector merge).
pub fn minkowski_sum(p: &Polygon, q: &Polygon) -> Result<Polygon> {
    let start = |poly: &Polygon| -> usize {
        let vs = poly.vertices();
        let mut best = 0;
        for i in 1..vs.len() {
            if (vs[i].y, vs[i].x) < (vs[best].y, vs[best].x) {
                best = i;
            }
        }
        best
    };
    let (pi0, qi0) = (start(p), start(q));
    let pv = p.vertices();
    let qv = q.vertices();
    let (np, nq) = (pv.len(), qv.len());
    let mut out: Vec<Point2> = Vec::with_capacity(np + nq);
    let mut cur = pv[pi0] + qv[qi0];
    let (mut i, mut j) = (0, 0);
    while i < np || j < nq {
        out.push(cur);
        let ep = if i < np {
            Some(pv[(pi0 + i + 1) % np] - pv[(pi0 + i) % np])
        } else {
            None
        };
        let eq = if j < nq {
            Some(qv[(qi0 + j + 1) % nq] - qv[(qi0 + j) % nq])
        } else {
            None
        };
        let step = match (ep, eq) {
            (Some(a), Some(b)) => {
                let c = a.cross(b);
                if c > 0.0 {
                    i += 1;
                    a
                } else if c < 0.0 {
                    j += 1;
                    b
                } else {
                    i += 1;
                    j += 1;
                    a + b
                }
            }
            (Some(a), None) => {
                i += 1;
                a
            }
            (None, Some(b)) => {
                j += 1;
                b
            }
            (None, None) => unreachable!(),
        };
        cur = cur + step;
    }
    Polygon::new(out)
}

/// Clip a convex vertex ring by all halfspaces of a convex polygon.
pub fn clip_ring_by_polygon(ring: &[Point2], poly: &Polygon) -> Vec<Point2> {
    let mut out = ring.to_vec();
    for (n, &h) in poly.normals().iter().zip(poly.offsets()) {
        out = clip_halfspace(&out, *n, h);
        if out.is_empty() {
            break;
        }
    }
    out
}

/// Clip a convex vertex ring by the halfspace { x : <n, x> <= h }.
pub fn clip_halfspace(ring: &[Point2], n: Point2, h: f64) -> Vec<Point2> {
    if ring.is_empty() {
        return Vec::new();
    }
    let mut out: Vec<Point2> = Vec::with_capacity(ring.len() + 2);
    let m = ring.len();
    for i in 0..m {
        let a = ring[i];
        let b = ring[(i + 1) % m];
        let da = n.dot(a) - h;
        let db = n.dot(b) - h;
        if da <= 0.0 {
            out.push(a);
        }
        if (da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0) {
            let t = da / (da - db);
            out.push(a + (b - a) * t);
        }
    }
    out
}
