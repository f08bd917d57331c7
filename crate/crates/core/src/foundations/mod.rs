//! Exact scalars, canonical set partitions with their refinement order,
//! permutations, and the Stirling/Bell counts.

mod combinatorics;
mod field;
pub mod perm;
mod partition;
mod scalar;

pub use combinatorics::{bell, stirling2};
pub use field::{FieldKind, FieldSpec};
pub use partition::{enumerate_set_partitions, is_coarsening, SetPartition};
pub use scalar::Scalar;

pub(crate) use scalar::{inv_mod, mul_mod};
