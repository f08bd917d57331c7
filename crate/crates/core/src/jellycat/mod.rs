//! The jellyfish partition category `JP(n)`: jellyfish diagrams with signed
//! canonical forms, morphisms, and rewriting to normal form.

mod diagram;
mod morphism;
mod reduce;
mod relations;

pub use diagram::{JellyDiagram, LegTarget, RawJelly, Signed};
pub use morphism::JellyMorphism;
pub use reduce::{
    first_two, four_jelly_diagram, four_jelly_expansion, is_basis_element, normal_basis, normalize_single_jelly,
    reduce_pair, reduce_parts, y_expansion, PairStrategy,
};
pub use relations::{jelly_relations, shuffle, signed_crosscap_sum, JellyRelation};
