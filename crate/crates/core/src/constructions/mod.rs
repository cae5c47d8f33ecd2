//! Builders for the standard algebroid constructions: tangent and zero
//! algebroids, bundles of Lie algebras, transformation algebroids, Poisson
//! cotangent algebroids, infinitesimal actions, semi-direct products and
//! split extensions.

mod action;
mod basic;
mod extension;
mod lie_algebra;
mod poisson;
mod semidirect;

pub use action::AlgebroidAction;
pub use basic::{anchor_morphism, lie_algebra_bundle, tangent_algebroid, vector_bundle, zero_algebroid};
pub use extension::{Curvature, Reconstruction, SplitExtension};
pub use lie_algebra::{transformation_algebroid, InfinitesimalGroupAction, LieAlgebraPresentation};
pub use poisson::{poisson_cotangent, PoissonBivector};
pub use semidirect::{inclusion_morphism, projection_morphism, semidirect_product};

use crate::algebroid::AlgebroidError;
use crate::exactpoly::PolyError;
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Algebroid(#[from] AlgebroidError),
    #[error("q must be a coordinate projection onto the acting base chart")]
    NotProjection,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("action check failed; pass force to build anyway")]
    InvalidAction(Box<CheckReport>),
    #[error("extension sub-block does not reproduce the subalgebroid: {0}")]
    SubMismatch(String),
    #[error("curvature is nonzero on frame pairs {0:?}")]
    KappaNonzero(Vec<(usize, usize)>),
    #[error("frame name '{0}' is used by both factors")]
    FrameNameClash(String),
}

impl From<PolyError> for ConstructionError {
    fn from(e: PolyError) -> Self {
        ConstructionError::Algebroid(e.into())
    }
}
