//! Exact linear algebra over finite-dimensional algebras given by structure
//! constants: representations, Hom and Ext, minimal resolutions and the
//! homological dimensions read off from them.
//!
//! Everything here is independent of the interval calculus in
//! [`crate::kupisch`]; for Nakayama algebras the two are compared against
//! each other.
//!
//! Algebras are basic with a Peirce-homogeneous basis: every basis element
//! lies in some `e_s B e_t`. Representations are stored graded by vertex, so
//! the action of a basis element in `e_s B e_t` is a single block
//! `M e_s -> M e_t`.

mod algebra;
mod homological;
mod matrix;
mod nakayama;
mod rep;
mod scalar;
mod tilting;

use thiserror::Error;

pub use algebra::{ProductJson, SCAlgebra, SCAlgebraJson, SparseVec};
pub use homological::{Engine, EngineGorenstein, EngineResolution, EngineStep};
pub use matrix::{Matrix, Subspace};
pub use nakayama::{interval_positions, interval_to_rep, nakayama_to_sc, path_index};
pub use rep::{hom_dim, hom_space, ModuleMap, Representation, RepresentationJson};
pub use scalar::{Field, Scalar, DEFAULT_PRIME};
pub use tilting::{tilting_check, ExtCache, TiltingReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("vertex {vertex} out of range for {n} idempotents")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the zero module has no resolution")]
    ZeroModule,
    #[error("Ext degree must be at least 1")]
    InvalidExtDegree,
}

pub type Result<T, E = EngineError> = std::result::Result<T, E>;
