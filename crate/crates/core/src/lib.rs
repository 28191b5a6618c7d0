//! Planar Minkowski length, escape length and worm-cover toolkit.
//!
//! The crate is organized around four questions about a convex body K and a
//! convex gauge body T in the plane:
//!
//! * how long is a closed polygonal curve when edge lengths are measured by
//!   the support function of T ([`mlength`]);
//! * what is the shortest closed curve that cannot be translated into the
//!   interior of K, i.e. the escape length of K with respect to T, which
//!   equals the EHZ capacity of the product K x T ([`capacity`]);
//! * does a candidate cover K really contain a translate of every closed
//!   curve of unit T-length ([`wormcover`]);
//! * and the supporting planar geometry: support/gauge functions, polars,
//!   hulls, erosions and polygonization ([`geom2`]).

pub mod capacity;
pub mod error;
pub mod geom2;
pub mod io;
pub mod mlength;
pub mod shapes;
pub mod wormcover;

pub use capacity::{
    check_mahler, check_symplectic_invariance, check_viterbo, escape_length, is_in_fcp,
    min_escape_length, verify_strong_billiard, verify_weak_billiard, BilliardPair,
    CapacityReport, InvarianceReport, MahlerReport, ViterboReport, DEFAULT_GRID,
};
pub use error::{Error, Result};
pub use geom2::{ConvexBody2, LinearMap2, Point2, Polygon, PolygonizationMode};
pub use mlength::{doubled_segment, minkowski_length, rescale_to_length, ClosedPolyline};
pub use wormcover::{
    falsify_cover, fits_by_translation, generic_lower_bound, objective_f, wetzel_lower_bound,
    BoundReport, GeneratorCurve, GeneratorKind,
};
