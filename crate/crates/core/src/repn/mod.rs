//! Linear maps between tensor powers of the permutation representation.

mod functor;
mod linalg;
mod orbits;
mod tensor;

#[cfg(test)]
mod tests;

pub use functor::{det_map, phi, phi_morphism, phi_with, psi, psi_diagram, psi_diagram_with, psi_with};
pub use linalg::rank;
pub use orbits::{
    brute_force_orbits, classify_orbits, f_functional, f_plus_minus, hom_dim, hom_dim_bruteforce,
    jelly_functional, pattern, Orbit,
};
pub use tensor::{fraction_text, tuple_at, tuple_count, tuple_rank, TensorMap};
