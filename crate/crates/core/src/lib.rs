//! Matroids over tracts and hyperfields, computed exactly.

pub mod axioms;
pub mod compose;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod fmatroid;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod num;
pub mod properties;
pub mod tract;
pub mod vector;
pub mod verdict;

pub use axioms::{check_circuit_axioms, AxiomMode};
pub use compose::CompositionOp;
pub use error::{Error, Result};
pub use fmatroid::{FMatroid, Rref, DEFAULT_MAX_ENUM};
pub use linalg::Matrix;
pub use matroid::Matroid;
pub use properties::SumProperty;
pub use tract::{Morphism, Scalar, Tract};
pub use vector::{FVector, GroundSet, Mask};
pub use verdict::{PropertyVerdict, Status, Witness};
