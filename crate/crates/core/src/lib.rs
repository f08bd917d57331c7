//! Exact computation in the partition category `P(n)` and the jellyfish
//! partition category `JP(n)`.

mod dsu;
pub mod error;
pub mod exec;
mod text;

pub mod diagram;
pub mod foundations;

pub use diagram::{PartitionDiagram, Vertex};
pub use error::{Error, Result};
pub use exec::Exec;
pub use foundations::{FieldKind, FieldSpec, Scalar, SetPartition};
pub mod pcat;

pub use pcat::Morphism;
pub mod jellycat;

pub use jellycat::{JellyDiagram, JellyMorphism};
pub mod repn;
pub use repn::TensorMap;
pub mod verify;
pub use verify::SuiteReport;
