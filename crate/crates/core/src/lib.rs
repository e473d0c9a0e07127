//! Shaped link diagrams and the SL₂(ℂ)-structures they carry.
//!
//! The pipeline: parse an oriented link diagram ([`diagram`]), assign shape
//! triples to its segments and braid them through crossings ([`shape`]),
//! build the segment/region gluing systems ([`gluing`]) and solve them
//! numerically ([`solver`]), then verify the solutions geometrically against
//! the octahedral decomposition ([`octahedra`]) and extract boundary data
//! ([`decoration`]). The [`weyl`] module re-derives the braiding from the
//! quantum Weyl algebra and serves as an independent oracle, and [`twist`]
//! holds the closed forms for twist regions and (2,N) torus knots.

pub mod cplx;
pub mod decoration;
pub mod diagram;
pub mod dilog;
pub mod gluing;
pub mod holonomy;
pub mod octahedra;
pub mod poly;
pub mod report;
pub mod shape;
pub mod solver;
pub mod twist;
pub mod weyl;

pub use decoration::{segment_eta, EigenDecoration, SegmentClass};
pub use diagram::{Crossing, LinkDiagram, Region, Sign};
pub use gluing::{RationalSystem, RegionAssignment};
pub use holonomy::{GroupoidPath, Mat2C};
pub use octahedra::{ExtC, OctahedronShapes, TetShape};
pub use report::ResidualReport;
pub use shape::{CrossingShapes, Shape, Shaping};
pub use solver::{SolutionSet, SolveConfig};
pub use twist::TorusKnotFamily;
pub use weyl::CentralCharacter;

use thiserror::Error;

/// Relative tolerance below which rational-function formulas are treated as
/// singular. Double precision loses a few digits at generic points of these
/// formulas, so the guard sits well above machine epsilon.
pub const EPS_SING: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("singular braiding: {0}")]
    SingularBraiding(String),
    #[error("inconsistent crossing data: {0}")]
    InconsistentCrossing(String),
    #[error("pinched crossing: {0}")]
    PinchedCrossing(String),
    #[error("degenerate crossing: {0}")]
    DegenerateCrossing(String),
    #[error("inconsistent propagation: {0}")]
    InconsistentPropagation(String),
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("invalid groupoid path: {0}")]
    InvalidPath(String),
    #[error("degenerate tetrahedron: {0}")]
    DegenerateTetrahedron(String),
    #[error("singular twist region: {0}")]
    SingularTwist(String),
    #[error("Riley polynomial residual too large: {0}")]
    RileyResidual(String),
}

pub type Result<T> = std::result::Result<T, Error>;
