//! Geometric evidence for discreteness: isometric spheres, the cusp lattice,
//! Ford patterns, Shimizu scans, and exact relation checks.

mod enumerate;
mod lattice;
mod pattern;
mod relations;
mod shimizu;
mod sphere;
mod svg;

use thiserror::Error;

use crate::algebra::{AlgebraError, FreeWord};
use crate::prep::PrepError;

pub use enumerate::{dedup_spheres, enumerate_spheres, representation_lattice, DEDUP_TOL};
pub use lattice::{cusp_lattice, CuspLattice, DEGENERATE_TOL};
pub use pattern::{ford_pattern, Arc, FordPattern, DEFAULT_SAMPLES, MIN_SAMPLES};
pub use relations::{
    build_relation_fixture, eight_eleven_factor, verify_relations, FixtureWords, RelationCheck,
    RelationFixture, RelationReport,
};
pub use shimizu::{shimizu_scan, ShimizuWitness, BAND as SHIMIZU_BAND, MAX_SCAN_LEN};
pub use sphere::{isometric_sphere, IsometricSphere};
pub use svg::render_svg;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FordError {
    #[error("element {label} fixes infinity and has no isometric sphere")]
    NoIsometricSphere { label: FreeWord },
    #[error("no spheres to build a pattern from")]
    EmptyPattern,
    #[error("need at least 256 samples per circle, got {samples}")]
    TooFewSamples { samples: usize },
    #[error(transparent)]
    Prep(#[from] PrepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
