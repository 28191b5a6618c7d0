//! Output formatting: canonical JSON shapes, CSV sweep rows, and SVG
//! illustrations. All float formatting is fixed-width so identical reports
//! serialize byte-identically.

use serde::Serialize;
use wormlab_core::geom2::PolygonizationMode;
use wormlab_core::wormcover::BoundReport;
use wormlab_core::{CapacityReport, ConvexBody2, Error, Point2, Result};

/// Wire form of a capacity report.
#[derive(Serialize)]
pub struct CapacityJson {
    pub value: f64,
    pub minimizer: Vec<[f64; 2]>,
    pub bounces: u8,
    pub grid: usize,
}

impl CapacityJson {
    pub fn from_report(r: &CapacityReport) -> CapacityJson {
        CapacityJson {
            value: r.value,
            minimizer: r.minimizer.vertices().iter().map(|v| [v.x, v.y]).collect(),
            bounces: r.bounce_count,
            grid: r.solver_grid,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(Error::from)?;
    s.push('\n');
    Ok(s)
}

/// One-row CSV for the Wetzel/bound sweep result.
pub fn bound_csv(report: &BoundReport) -> String {
    format!(
        "theta,q_hat,value\n{},{},{}\n",
        report.outer_params.theta, report.outer_params.q_hat, report.lower_bound
    )
}

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

struct SvgFrame {
    min: Point2,
    max: Point2,
}

impl SvgFrame {
    fn around(points: impl Iterator<Item = Point2>) -> SvgFrame {
        let mut min = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        let pad = 0.1 * ((max.x - min.x).max(max.y - min.y)).max(1e-6);
        SvgFrame {
            min: Point2::new(min.x - pad, min.y - pad),
            max: Point2::new(max.x + pad, max.y + pad),
        }
    }

    fn header(&self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" \
             viewBox=\"{} {} {} {}\">\n<g transform=\"translate(0,{}) scale(1,-1)\">\n",
            fmt(self.min.x),
            fmt(self.min.y),
            fmt(self.max.x - self.min.x),
            fmt(self.max.y - self.min.y),
            fmt(self.min.y + self.max.y),
        )
    }

    fn footer(label: &str, at: Point2) -> String {
        format!(
            "</g>\n<text x=\"{}\" y=\"{}\" font-size=\"{}\">{}</text>\n</svg>\n",
            fmt(at.x),
            fmt(at.y),
            fmt(0.001),
            label
        )
    }
}

fn polyline_path(pts: &[Point2], stroke: &str, width: f64) -> String {
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        d.push_str(if i == 0 { "M" } else { "L" });
        d.push_str(&fmt(p.x));
        d.push(' ');
        d.push_str(&fmt(p.y));
    }
    d.push('Z');
    format!(
        "<path d=\"{d}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{}\"/>\n",
        fmt(width)
    )
}

fn body_outline(body: &ConvexBody2, stroke: &str, width: f64) -> Result<String> {
    let p = body.polygonize(256, PolygonizationMode::Inscribed)?;
    Ok(polyline_path(p.vertices(), stroke, width))
}

/// SVG of a capacity result: the body K and the minimizing trajectory.
pub fn capacity_svg(report: &CapacityReport, k_body: &ConvexBody2) -> Result<String> {
    if report.minimizer.vertices().is_empty() {
        return Err(Error::Degenerate("empty minimizer".into()));
    }
    let kp = k_body.polygonize(256, PolygonizationMode::Inscribed)?;
    let frame = SvgFrame::around(
        kp.vertices()
            .iter()
            .chain(report.minimizer.vertices())
            .copied(),
    );
    let mut s = frame.header();
    s.push_str(&body_outline(k_body, "black", 0.004)?);
    s.push_str(&polyline_path(report.minimizer.vertices(), "crimson", 0.006));
    s.push_str(&SvgFrame::footer(
        &format!("value {}", fmt(report.value)),
        Point2::new(frame.min.x, frame.min.y),
    ));
    Ok(s)
}

/// SVG of a bound configuration: generators and their hull.
pub fn bound_svg(report: &BoundReport) -> Result<String> {
    if report.generators.is_empty() {
        return Err(Error::Degenerate("empty generator set".into()));
    }
    let mut rings: Vec<Vec<Point2>> = Vec::new();
    let mut all: Vec<Point2> = Vec::new();
    for g in &report.generators {
        let pts = g.hull_points(256, PolygonizationMode::Inscribed)?;
        all.extend(&pts);
        rings.push(pts);
    }
    let hull = wormlab_core::geom2::convex_hull_ring(&all)
        .map_err(|_| Error::Degenerate("degenerate hull".into()))?;
    let frame = SvgFrame::around(all.iter().copied());
    let mut s = frame.header();
    s.push_str(&polyline_path(&hull, "black", 0.004));
    for (ring, color) in rings.iter().zip(["steelblue", "seagreen", "darkorange", "crimson"].iter().cycle()) {
        s.push_str(&polyline_path(ring, color, 0.003));
    }
    s.push_str(&SvgFrame::footer(
        &format!("lower bound {}", fmt(report.lower_bound)),
        Point2::new(frame.min.x, frame.min.y),
    ));
    Ok(s)
}
