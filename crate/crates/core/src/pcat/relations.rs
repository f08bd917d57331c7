//! The defining relations of `P(n)` in terms of `μ, η, Δ, ε, s`.

use crate::diagram::PartitionDiagram;
use crate::error::Result;
use crate::foundations::{FieldSpec, Scalar};

use super::Morphism;

/// A relation asserting that every entry of `sides` is the same morphism.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub sides: Vec<Morphism>,
}

impl Relation {
    /// Index of the first side differing from `sides[0]`, if any.
    pub fn first_violation(&self) -> Option<usize> {
        (1..self.sides.len()).find(|&i| self.sides[i] != self.sides[0])
    }
}

/// Compose a chain written as `a ∘ b ∘ c`.
pub(crate) fn chain(ms: &[Morphism]) -> Result<Morphism> {
    let mut iter = ms.iter().rev();
    let mut acc = iter.next().expect("non-empty chain").clone();
    for m in iter {
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

/// The twelve generating relations, in the order they are usually listed.
pub fn generating_relations(n: usize, field: FieldSpec) -> Vec<Relation> {
    let m = |d: PartitionDiagram| Morphism::from_diagram(d, field, n);
    let s = m(PartitionDiagram::swap());
    let mu = m(PartitionDiagram::mu());
    let eta = m(PartitionDiagram::eta());
    let delta = m(PartitionDiagram::delta());
    let eps = m(PartitionDiagram::epsilon());
    let one = Morphism::identity(1, field, n);
    let o = |x: &Morphism| one.tensor(x).unwrap();
    let t = |x: &Morphism| x.tensor(&one).unwrap();
    let c = |xs: &[Morphism]| chain(xs).unwrap();
    let rel = |name: &str, sides: Vec<Morphism>| Relation {
        name: name.to_string(),
        sides,
    };
    let n_empty = Morphism::identity(0, field, n)
        .scale(&Scalar::from_int(field, n as i64))
        .unwrap();
    vec![
        rel("s∘s = 1_2", vec![c(&[s.clone(), s.clone()]), Morphism::identity(2, field, n)]),
        rel(
            "braid",
            vec![c(&[o(&s), t(&s), o(&s)]), c(&[t(&s), o(&s), t(&s)])],
        ),
        rel("s∘(1⊗η) = η⊗1", vec![c(&[s.clone(), o(&eta)]), t(&eta)]),
        rel(
            "(1⊗μ)∘(s⊗1)∘(1⊗s) = s∘(μ⊗1)",
            vec![c(&[o(&mu), t(&s), o(&s)]), c(&[s.clone(), t(&mu)])],
        ),
        rel("(1⊗ε)∘s = ε⊗1", vec![c(&[o(&eps), s.clone()]), t(&eps)]),
        rel(
            "(1⊗s)∘(s⊗1)∘(1⊗Δ) = (Δ⊗1)∘s",
            vec![c(&[o(&s), t(&s), o(&delta)]), c(&[t(&delta), s.clone()])],
        ),
        rel("μ∘(1⊗η) = 1_1", vec![c(&[mu.clone(), o(&eta)]), one.clone()]),
        rel(
            "(1⊗ε)∘Δ = 1_1 = (ε⊗1)∘Δ",
            vec![
                c(&[o(&eps), delta.clone()]),
                one.clone(),
                c(&[t(&eps), delta.clone()]),
            ],
        ),
        rel(
            "Frobenius",
            vec![
                c(&[t(&mu), o(&delta)]),
                c(&[delta.clone(), mu.clone()]),
                c(&[o(&mu), t(&delta)]),
            ],
        ),
        rel("μ∘s = μ", vec![c(&[mu.clone(), s.clone()]), mu.clone()]),
        rel("μ∘Δ = 1_1", vec![c(&[mu.clone(), delta.clone()]), one.clone()]),
        rel("ε∘η = n", vec![c(&[eps.clone(), eta.clone()]), n_empty]),
    ]
}
