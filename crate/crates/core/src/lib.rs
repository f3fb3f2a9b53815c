//! Orthic triangles and Fagnano's minimal inscribed triangle.
//!
//! * [`geometry`]: points, triangles, altitude feet, orthic triangle, centres.
//! * [`optimizer`]: numerical minimization of inscribed-triangle perimeter.
//! * [`theorem`]: checks that the orthic triangle is right-angled exactly when
//!   the parent has a single π/4 angle, with the right angle at the foot of the
//!   altitude from that vertex.
//! * [`golden`]: the golden-rectangle instance of that characterization.
//! * [`json`], [`render`], [`cli`]: deterministic reports, SVG figures, and the
//!   `fagnano` command line tool.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod geometry;
pub mod golden;
pub mod json;
pub mod optimizer;
pub mod render;
pub mod theorem;

pub use error::{Error, Result};
pub use geometry::{
    AngleTriple, OrthicResult, Point, Triangle, TriangleClass, TriangleKind, Vertex,
};
pub use optimizer::{InscribedConfig, MinimizeResult};
