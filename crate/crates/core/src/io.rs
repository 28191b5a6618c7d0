//! JSON file formats for bodies and curves, plus the named-body shorthand
//! used on the command line.

use crate::error::{Error, Result};
use crate::geom2::{ConvexBody2, Point2, Polygon};
use crate::mlength::ClosedPolyline;
use crate::shapes;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// On-disk body representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BodyFile {
    Polygon { vertices: Vec<[f64; 2]> },
    Disc { center: [f64; 2], radius: f64 },
    Hull { parts: Vec<BodyFile> },
}

impl BodyFile {
    pub fn into_body(self) -> Result<ConvexBody2> {
        match self {
            BodyFile::Polygon { vertices } => {
                let vs: Vec<Point2> = vertices.into_iter().map(Point2::from).collect();
                Ok(ConvexBody2::Polygon(Polygon::new(vs)?))
            }
            BodyFile::Disc { center, radius } => {
                ConvexBody2::disc(Point2::from(center), radius)
            }
            BodyFile::Hull { parts } => {
                let bodies: Vec<ConvexBody2> = parts
                    .into_iter()
                    .map(BodyFile::into_body)
                    .collect::<Result<_>>()?;
                if bodies.is_empty() {
                    return Err(Error::DegenerateBody);
                }
                Ok(ConvexBody2::HullOfUnion(bodies))
            }
        }
    }

    pub fn from_body(body: &ConvexBody2) -> BodyFile {
        match body {
            ConvexBody2::Polygon(p) => BodyFile::Polygon {
                vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
            },
            ConvexBody2::Disc { center, radius } => BodyFile::Disc {
                center: [center.x, center.y],
                radius: *radius,
            },
            ConvexBody2::HullOfUnion(parts) => BodyFile::Hull {
                parts: parts.iter().map(BodyFile::from_body).collect(),
            },
        }
    }
}

/// On-disk closed-curve representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveFile {
    pub vertices: Vec<[f64; 2]>,
}

impl CurveFile {
    pub fn into_curve(self) -> Result<ClosedPolyline> {
        ClosedPolyline::new(
            self.vertices
                .into_iter()
                .map(Point2::from)
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_curve(q: &ClosedPolyline) -> CurveFile {
        CurveFile {
            vertices: q.vertices().iter().map(|v| [v.x, v.y]).collect(),
        }
    }
}

pub fn read_body(path: &Path) -> Result<ConvexBody2> {
    let text = std::fs::read_to_string(path)?;
    let file: BodyFile = serde_json::from_str(&text)?;
    file.into_body()
}

pub fn read_curve(path: &Path) -> Result<ClosedPolyline> {
    let text = std::fs::read_to_string(path)?;
    let file: CurveFile = serde_json::from_str(&text)?;
    file.into_curve()
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Resolve a body argument: a named shape (`square`, `disc`, `diamond`,
/// `hexagon`, `reuleaux:<width>`) or a path to a JSON body file.
pub fn resolve_body(arg: &str) -> Result<ConvexBody2> {
    match arg {
        "square" => return Ok(shapes::square(1.0)),
        "disc" => return Ok(shapes::unit_disc()),
        "diamond" => return Ok(shapes::diamond(1.0)),
        "hexagon" => return Ok(shapes::hexagon()),
        _ => {}
    }
    if let Some(w) = arg.strip_prefix("reuleaux:") {
        let width: f64 = w
            .parse()
            .map_err(|_| Error::InvalidParam(format!("reuleaux width {w:?}")))?;
        if !(width > 0.0) {
            return Err(Error::InvalidParam(format!("reuleaux width {width}")));
        }
        return Ok(shapes::reuleaux(width, 512));
    }
    read_body(Path::new(arg))
}
