//! The three relations that `JP(n)` adds to the presentation of `P(n)`.

use super::JellyMorphism;
use crate::diagram::PartitionDiagram;
use crate::error::Result;
use crate::foundations::{perm, FieldSpec, Scalar};
use crate::pcat::Morphism;

/// A relation asserting that every entry of `sides` is the same morphism.
#[derive(Clone, Debug)]
pub struct JellyRelation {
    pub name: String,
    pub sides: Vec<JellyMorphism>,
}

impl JellyRelation {
    /// Index of the first side whose normal form differs from that of
    /// `sides[0]`.
    pub fn first_violation(&self) -> Result<Option<usize>> {
        let first = self.sides[0].reduce()?;
        for (i, s) in self.sides.iter().enumerate().skip(1) {
            if s.reduce()? != first {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// `s_1 ∘ s_2 ∘ ⋯ ∘ s_n` on `n + 1` strands.
pub fn shuffle(n: usize, field: FieldSpec) -> Morphism {
    let mut acc = Morphism::identity(n + 1, field, n);
    for i in 1..=n {
        let s = Morphism::from_diagram(PartitionDiagram::s_i(n + 1, i).unwrap(), field, n);
        acc = acc.compose(&s).unwrap();
    }
    acc
}

/// `Σ_σ (-1)^σ ⊠_n ∘ (σ ⊗ 1_n)`.
pub fn signed_crosscap_sum(n: usize, field: FieldSpec) -> Morphism {
    let cross = Morphism::from_diagram(PartitionDiagram::crosscap(n), field, n);
    let id = Morphism::identity(n, field, n);
    let mut acc = Morphism::zero(2 * n, 0, field, n);
    for sigma in perm::all_permutations(n) {
        let p = Morphism::from_diagram(PartitionDiagram::permutation(&sigma).unwrap(), field, n);
        let term = cross
            .compose(&p.tensor(&id).unwrap())
            .unwrap()
            .scale(&Scalar::from_int(field, perm::sign(&sigma) as i64))
            .unwrap();
        acc = acc.add(&term).unwrap();
    }
    acc
}

pub fn jelly_relations(n: usize, field: FieldSpec) -> Vec<JellyRelation> {
    let j = JellyMorphism::generator(n, field);
    let one = JellyMorphism::identity(1, field, n);
    let embed = |m: &Morphism| JellyMorphism::embed(m);
    let symmetry = JellyRelation {
        name: "j⊗1 = (1⊗j)∘s_1∘⋯∘s_n".into(),
        sides: vec![
            j.tensor(&one).unwrap(),
            one.tensor(&j)
                .unwrap()
                .compose(&embed(&shuffle(n, field)))
                .unwrap(),
        ],
    };
    let mut skew = vec![j.neg()];
    for i in 1..n {
        let s = Morphism::from_diagram(PartitionDiagram::s_i(n, i).unwrap(), field, n);
        skew.push(j.compose(&embed(&s)).unwrap());
    }
    let skew = JellyRelation {
        name: "j∘s_i = -j".into(),
        sides: skew,
    };
    let pair = JellyRelation {
        name: "j⊗j = Σ(-1)^σ ⊠∘(σ⊗1)".into(),
        sides: vec![j.tensor(&j).unwrap(), embed(&signed_crosscap_sum(n, field))],
    };
    vec![symmetry, skew, pair]
}
