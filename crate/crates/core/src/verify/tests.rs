use super::*;
use crate::exec::Exec;
use crate::foundations::FieldSpec;

const Q: FieldSpec = FieldSpec::RATIONALS;

fn assert_passes(r: &SuiteReport) {
    assert!(r.passed(), "{r}");
}

#[test]
fn relation_suites() {
    assert_passes(&check_relations(2, Q, Exec::default()).unwrap());
    assert_passes(&check_relations(3, FieldSpec::prime(5).unwrap(), Exec::default()).unwrap());
    assert!(matches!(
        check_relations(5, FieldSpec::prime(3).unwrap(), Exec::default()),
        Err(crate::Error::Characteristic(_))
    ));
}

#[test]
fn mutated_relation_is_reported_with_witness() {
    let c = relation_check(&mutated_relation(2, Q));
    assert!(!c.passed);
    let w = c.witness.unwrap();
    assert!(w.contains("side 0") && w.contains("side 1"), "{w}");
}

#[test]
fn phi_kernel_examples() {
    let r = check_phi_kernel(2, 1, 1, Exec::default()).unwrap();
    assert_passes(&r);
    assert!(r.checks[1].description.contains("= 2"));
    assert_passes(&check_phi_kernel(2, 3, 0, Exec::default()).unwrap());
    let r = check_phi_kernel(3, 2, 2, Exec::default()).unwrap();
    assert_passes(&r);
    assert!(r.checks[1].description.contains("= 14"));
}

#[test]
fn fullness_examples() {
    for (n, k, l, dim) in [(2, 1, 1, "4"), (3, 1, 1, "3"), (3, 2, 1, "9")] {
        let r = check_fullness(n, k, l, Exec::default()).unwrap();
        assert_passes(&r);
        assert!(r.checks[1].description.contains(&format!("dimension {dim}")), "{r}");
    }
}

#[test]
fn faithfulness_examples() {
    assert_passes(&check_faithfulness(2, 3, Q, DEFAULT_SEED, 20, Exec::default()).unwrap());
    assert_passes(&check_faithfulness(3, 3, Q, 7, 20, Exec::default()).unwrap());
    assert!(check_faithfulness(5, 2, FieldSpec::prime(3).unwrap(), 1, 1, Exec::default()).is_err());
}

#[test]
fn golden_suite() {
    assert_passes(&golden_examples(Exec::default()).unwrap());
}

#[test]
fn associativity_and_combinatorics() {
    assert_passes(&check_associativity(2, 2, DEFAULT_SEED, 10, Exec::default()).unwrap());
    assert_passes(&check_combinatorics(6));
}

#[test]
fn reports_are_deterministic_and_serialize() {
    let a = check_faithfulness(2, 2, Q, 99, 10, Exec::Sequential).unwrap();
    let b = check_faithfulness(2, 2, Q, 99, 10, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    let json = serde_json::to_string(&a).unwrap();
    let back: SuiteReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, a);
    assert!(json.contains("\"seed\":99"));
    assert!(a.to_string().starts_with("suite faithfulness n=2 k=2 l=0 field=Q seed=99"));
}

#[test]
fn random_generation_is_seeded() {
    use rand::SeedableRng;
    let draw = |seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..5).map(|_| random_jelly_morphism(&mut rng, 3, 2, 1, Q, 3, 3)).collect::<Vec<_>>()
    };
    assert_eq!(draw(1), draw(1));
    assert_ne!(draw(1), draw(2));
    assert!(draw(3).iter().chain(&draw(4)).any(|m| m.max_jellies() >= 2));
}


