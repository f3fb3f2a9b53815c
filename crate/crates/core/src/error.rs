use thiserror::Error;

use crate::geometry::{Point, TriangleKind, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate in point {0}")]
    NonFinite(Point),

    #[error("degenerate triangle: area {area:e} is below the threshold {threshold:e}")]
    Degenerate { area: f64, threshold: f64 },

    #[error("triangle is {kind}, not acute: angle at vertex {vertex} is {angle} rad")]
    NotAcute {
        kind: TriangleKind,
        vertex: Vertex,
        angle: f64,
    },

    #[error("angles alpha={alpha}, beta={beta} do not form a triangle")]
    InvalidAngles { alpha: f64, beta: f64 },

    #[error("parameter {name}={value} must lie strictly inside (0, 1)")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
