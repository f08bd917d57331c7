use super::{matrix_witness, Check, SuiteReport};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::foundations::{FieldSpec, Scalar};
use crate::jellycat::{jelly_relations, shuffle, signed_crosscap_sum};
use crate::pcat::{generating_relations, Morphism, Relation};
use crate::repn::{det_map, phi, phi_morphism, psi_with, TensorMap};

/// A relation as a morphism identity.
pub fn relation_check(rel: &Relation) -> Check {
    let desc = format!("morphism identity: {}", rel.name);
    match rel.first_violation() {
        None => Check::pass(desc),
        Some(i) => Check::fail(
            desc,
            format!("side 0: {:?}\nside {i}: {:?}", rel.sides[0], rel.sides[i]),
        ),
    }
}

/// Negative control: `μ∘s = -μ`, which must be reported as false.
pub fn mutated_relation(n: usize, field: FieldSpec) -> Relation {
    let mu = Morphism::from_diagram(PartitionDiagram::mu(), field, n);
    let s = Morphism::from_diagram(PartitionDiagram::swap(), field, n);
    Relation {
        name: "μ∘s = -μ (mutated)".into(),
        sides: vec![mu.compose(&s).unwrap(), mu.neg()],
    }
}

fn matrices_agree(desc: String, sides: &[TensorMap]) -> Check {
    match sides.iter().position(|m| *m != sides[0]) {
        None => Check::pass(desc),
        Some(i) => Check::fail(desc, format!("side 0 vs side {i}: {}", matrix_witness(&sides[0], &sides[i]))),
    }
}

/// All generating relations as morphism identities and as matrix identities
/// under the functors, the three determinant identities, and a mutated
/// relation that must be rejected.
pub fn check_relations(n: usize, field: FieldSpec, exec: Exec) -> Result<SuiteReport> {
    if n < 2 {
        return Err(Error::OutOfRange("relation suites need n >= 2".into()));
    }
    field.require_rewriting(n)?;
    let mut report = SuiteReport::new("relations", Some(n), field);
    let p_relations = generating_relations(n, field);
    for rel in &p_relations {
        report.push(relation_check(rel));
    }
    for rel in &p_relations {
        let sides = rel
            .sides
            .iter()
            .map(|m| phi_morphism(m, exec))
            .collect::<Result<Vec<_>>>()?;
        report.push(matrices_agree(format!("matrix identity: {}", rel.name), &sides));
    }
    for rel in jelly_relations(n, field) {
        let sides = rel
            .sides
            .iter()
            .map(|m| psi_with(m, exec))
            .collect::<Result<Vec<_>>>()?;
        report.push(matrices_agree(format!("matrix identity: {}", rel.name), &sides));
        let desc = format!("normal forms agree: {}", rel.name);
        report.push(match rel.first_violation()? {
            None => Check::pass(desc),
            Some(i) => Check::fail(
                desc,
                format!("side 0: {:?}\nside {i}: {:?}", rel.sides[0].reduce()?, rel.sides[i].reduce()?),
            ),
        });
    }

    let det = det_map(n, field)?;
    let id = TensorMap::identity(n, 1, field)?;
    let lhs = det.kron(&id)?;
    let rhs = id.kron(&det)?.compose(&phi_morphism(&shuffle(n, field), exec)?)?;
    report.push(matrices_agree("det ⊗ 1 = (1 ⊗ det)∘Φ(s_1∘⋯∘s_n)".into(), &[lhs, rhs]));
    let minus = det.scale(&Scalar::from_int(field, -1));
    let mut skew = vec![minus];
    for i in 1..n {
        skew.push(det.compose(&phi(&PartitionDiagram::s_i(n, i)?, n, field)?)?);
    }
    report.push(matrices_agree("det∘Φ(s_i) = -det".into(), &skew));
    let pair = phi_morphism(&signed_crosscap_sum(n, field), exec)?;
    report.push(matrices_agree("det ⊗ det = Φ(Σ(-1)^σ ⊠∘(σ⊗1))".into(), &[det.kron(&det)?, pair]));

    let mutated = mutated_relation(n, field);
    let control = relation_check(&mutated);
    let images = mutated
        .sides
        .iter()
        .map(|m| phi_morphism(m, exec))
        .collect::<Result<Vec<_>>>()?;
    let matrix_control = matrices_agree(String::new(), &images);
    report.push(Check::expect(
        "negative control: mutated relation μ∘s = -μ is rejected",
        !control.passed && !matrix_control.passed,
        || "the mutated relation was accepted".into(),
    ));
    Ok(report)
}
