use super::*;
use crate::foundations::is_coarsening;
use proptest::prelude::*;

fn p(s: &str) -> PartitionDiagram {
    s.parse().unwrap()
}

fn all_upto(total: usize) -> Vec<PartitionDiagram> {
    let mut out = Vec::new();
    for m in 0..=total {
        for k in 0..=m {
            out.extend(PartitionDiagram::all(k, m - k));
        }
    }
    out
}

/// Compose a chain written left to right as in `a ∘ b ∘ c`, summing β.
fn chain(ds: &[PartitionDiagram]) -> (usize, PartitionDiagram) {
    let mut iter = ds.iter().rev();
    let mut acc = (0, iter.next().unwrap().clone());
    for d in iter {
        let (b, s) = PartitionDiagram::compose(d, &acc.1).unwrap();
        acc = (acc.0 + b, s);
    }
    acc
}

#[test]
fn worked_composition() {
    let d1 = p("P(4->7)[{2,1',5'},{2',3'},{1,4},{3,7'},{4'},{6'}]");
    let d2 = p("P(7->5)[{1,1'},{2,4},{2',4'},{3},{5,3',5'},{6},{7}]");
    let (beta, star) = PartitionDiagram::compose(&d2, &d1).unwrap();
    assert_eq!(beta, 2);
    assert_eq!(star, p("P(4->5)[{2,1',3',5'},{1,4},{3},{2',4'}]"));
}

#[test]
fn compose_type_mismatch() {
    let err = PartitionDiagram::compose(&PartitionDiagram::mu(), &PartitionDiagram::mu());
    assert!(matches!(err, Err(Error::TypeMismatch(_))));
}

#[test]
fn identity_law() {
    for d in all_upto(4) {
        let (b, s) = PartitionDiagram::compose(&PartitionDiagram::identity(d.top()), &d).unwrap();
        assert_eq!((b, &s), (0, &d));
        let (b, s) =
            PartitionDiagram::compose(&d, &PartitionDiagram::identity(d.bottom())).unwrap();
        assert_eq!((b, &s), (0, &d));
    }
}

#[test]
fn counit_after_unit_is_closed_loop() {
    let (b, s) =
        PartitionDiagram::compose(&PartitionDiagram::epsilon(), &PartitionDiagram::eta()).unwrap();
    assert_eq!(b, 1);
    assert_eq!(s, PartitionDiagram::empty());
}

#[test]
fn tensor_basics() {
    let e = PartitionDiagram::empty();
    for d in all_upto(3) {
        assert_eq!(d.tensor(&e), d);
        assert_eq!(e.tensor(&d), d);
    }
    let i1 = PartitionDiagram::identity(1);
    assert_eq!(i1.tensor(&i1), PartitionDiagram::identity(2));
    let small = all_upto(3);
    for a in &small {
        for b in &small {
            assert_eq!(a.tensor(b).part_count(), a.part_count() + b.part_count());
        }
    }
}

#[test]
fn tensor_layout() {
    let t = PartitionDiagram::mu().tensor(&PartitionDiagram::eta());
    assert_eq!(t, p("P(2->2)[{1,2,1'},{2'}]"));
}

#[test]
fn flip_examples() {
    assert_eq!(PartitionDiagram::mu().flip(), p("P(1->2)[{1,1',2'}]"));
    assert_eq!(PartitionDiagram::swap().flip(), PartitionDiagram::swap());
    for d in all_upto(4) {
        assert_eq!(d.flip().flip(), d);
    }
}

#[test]
fn permutations() {
    assert_eq!(
        PartitionDiagram::permutation(&[0, 1, 2]).unwrap(),
        PartitionDiagram::identity(3)
    );
    assert_eq!(
        PartitionDiagram::s_i(2, 1).unwrap(),
        p("P(2->2)[{1,2'},{2,1'}]")
    );
    assert!(PartitionDiagram::s_i(2, 2).is_err());
    assert!(PartitionDiagram::s_i(2, 0).is_err());
    assert!(PartitionDiagram::permutation(&[0, 0]).is_err());
    let s3 = perm::all_permutations(3);
    for a in &s3 {
        for b in &s3 {
            let (beta, star) = PartitionDiagram::compose(
                &PartitionDiagram::permutation(a).unwrap(),
                &PartitionDiagram::permutation(b).unwrap(),
            )
            .unwrap();
            assert_eq!(beta, 0);
            assert_eq!(
                star,
                PartitionDiagram::permutation(&perm::compose(a, b)).unwrap()
            );
        }
    }
}

#[test]
fn crosscaps() {
    assert_eq!(PartitionDiagram::crosscap(1), p("P(2->0)[{1,2}]"));
    assert_eq!(PartitionDiagram::crosscap(2), p("P(4->0)[{1,3},{2,4}]"));
    for n in 1..=5 {
        assert_eq!(PartitionDiagram::crosscap(n).part_count(), n);
    }
}

#[test]
fn bending() {
    assert_eq!(PartitionDiagram::identity(1).bend(), p("P(2->0)[{1,2}]"));
    assert_eq!(PartitionDiagram::swap().bend(), PartitionDiagram::crosscap(2));
    // Top row order reverses.
    assert_eq!(
        p("P(1->2)[{1,1'},{2'}]").bend(),
        p("P(3->0)[{1,3},{2}]")
    );
    let small = all_upto(4);
    for d in &small {
        let b = d.bend();
        assert_eq!(b.unbend(d.top()).unwrap(), *d);
        assert_eq!(b.part_count(), d.part_count());
    }
    for a in &small {
        for b in &small {
            if (a.bottom(), a.top()) == (b.bottom(), b.top()) {
                assert_eq!(
                    is_coarsening(a.parts(), b.parts()).unwrap(),
                    is_coarsening(a.bend().parts(), b.bend().parts()).unwrap()
                );
            }
        }
    }
    assert!(PartitionDiagram::crosscap(1).unbend(3).is_err());
    assert!(PartitionDiagram::mu().unbend(0).is_err());
}

#[test]
fn associativity_with_beta() {
    let types: Vec<usize> = (0..=2).collect();
    for &k in &types {
        for &l in &types {
            for &m in &types {
                for &r in &types {
                    let d1s = PartitionDiagram::all(k, l);
                    let d2s = PartitionDiagram::all(l, m);
                    let d3s = PartitionDiagram::all(m, r);
                    for d1 in d1s.iter().step_by(3) {
                        for d2 in d2s.iter().step_by(2) {
                            for d3 in d3s.iter().step_by(3) {
                                let (b12, s12) = PartitionDiagram::compose(d2, d1).unwrap();
                                let (b_l, left) = PartitionDiagram::compose(d3, &s12).unwrap();
                                let (b23, s23) = PartitionDiagram::compose(d3, d2).unwrap();
                                let (b_r, right) = PartitionDiagram::compose(&s23, d1).unwrap();
                                assert_eq!(left, right);
                                assert_eq!(b12 + b_l, b23 + b_r);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn interchange() {
    let small: Vec<_> = all_upto(2);
    for a in &small {
        for c in small.iter().filter(|c| c.top() == a.bottom()) {
            for b in small.iter().step_by(2) {
                for d in small.iter().filter(|d| d.top() == b.bottom()).step_by(2) {
                    let (b1, lhs) = PartitionDiagram::compose(&a.tensor(b), &c.tensor(d)).unwrap();
                    let (ba, ac) = PartitionDiagram::compose(a, c).unwrap();
                    let (bb, bd) = PartitionDiagram::compose(b, d).unwrap();
                    assert_eq!(lhs, ac.tensor(&bd));
                    assert_eq!(b1, ba + bb);
                }
            }
        }
    }
}

#[test]
fn generating_relations() {
    let s = PartitionDiagram::swap();
    let mu = PartitionDiagram::mu();
    let eta = PartitionDiagram::eta();
    let delta = PartitionDiagram::delta();
    let eps = PartitionDiagram::epsilon();
    let one = PartitionDiagram::identity(1);
    let id = |k| (0, PartitionDiagram::identity(k));
    let o = |d: &PartitionDiagram| one.tensor(d);
    let t = |d: &PartitionDiagram| d.tensor(&one);

    assert_eq!(chain(&[s.clone(), s.clone()]), id(2));
    assert_eq!(
        chain(&[o(&s), t(&s), o(&s)]),
        chain(&[t(&s), o(&s), t(&s)])
    );
    assert_eq!(chain(&[s.clone(), o(&eta)]), (0, t(&eta)));
    assert_eq!(chain(&[o(&mu), t(&s), o(&s)]), chain(&[s.clone(), t(&mu)]));
    assert_eq!(chain(&[o(&eps), s.clone()]), (0, t(&eps)));
    assert_eq!(
        chain(&[o(&s), t(&s), o(&delta)]),
        chain(&[t(&delta), s.clone()])
    );
    assert_eq!(chain(&[mu.clone(), o(&eta)]), id(1));
    assert_eq!(chain(&[o(&eps), delta.clone()]), id(1));
    assert_eq!(chain(&[t(&eps), delta.clone()]), id(1));
    assert_eq!(
        chain(&[t(&mu), o(&delta)]),
        chain(&[delta.clone(), mu.clone()])
    );
    assert_eq!(
        chain(&[o(&mu), t(&delta)]),
        chain(&[delta.clone(), mu.clone()])
    );
    assert_eq!(chain(&[mu.clone(), s.clone()]), (0, mu.clone()));
    assert_eq!(chain(&[mu.clone(), delta.clone()]), id(1));
    assert_eq!(chain(&[eps.clone(), eta.clone()]), (1, PartitionDiagram::empty()));
}

#[test]
fn text_round_trip() {
    assert_eq!(p("P(2->1)[{1,2,1'}]"), PartitionDiagram::mu());
    assert_eq!(p("P(2->1)[{1',2,1}]").to_string(), "P(2->1)[{1,2,1'}]");
    assert_eq!(p("P(0->0)[]"), PartitionDiagram::empty());
    for d in all_upto(4) {
        assert_eq!(p(&d.to_string()), d);
    }
}

#[test]
fn text_errors() {
    for bad in [
        "P(2->1)[{1,2}]",
        "P(2->1)[{1,2,1'},{1}]",
        "P(2->1)[{3,2,1'}]",
        "P(2->1)[{1,2,2'}]",
        "P(2->1)[{1,2,1'}",
        "P(2->1)[{1,2,1'}]x",
        "P(1->0)[{}]",
        "Q(1->0)[{1}]",
    ] {
        assert!(bad.parse::<PartitionDiagram>().is_err(), "{bad}");
    }
    match "P(2->1)[{1,2,5'}]".parse::<PartitionDiagram>() {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 14)),
        other => panic!("{other:?}"),
    }
}

fn arb_diagram(max: usize) -> impl Strategy<Value = PartitionDiagram> {
    (0..=max)
        .prop_flat_map(move |m| (0..=m, Just(m), proptest::collection::vec(0..m.max(1), m)))
        .prop_map(|(k, m, labels)| {
            PartitionDiagram::new(k, m - k, SetPartition::from_labels(&labels)).unwrap()
        })
}

proptest! {
    #[test]
    fn bend_round_trip(d in arb_diagram(7)) {
        prop_assert_eq!(d.bend().unbend(d.top()).unwrap(), d.clone());
        prop_assert_eq!(d.bend().part_count(), d.part_count());
    }

    #[test]
    fn flip_reverses_composition(a in arb_diagram(5), b in arb_diagram(5)) {
        let b = PartitionDiagram::new(b.bottom(), a.bottom(), SetPartition::from_labels(
            &(0..b.bottom() + a.bottom()).map(|v| b.parts().labels().get(v).copied().unwrap_or(v)).collect::<Vec<_>>()
        )).unwrap();
        let (beta, s) = PartitionDiagram::compose(&a, &b).unwrap();
        let (beta_f, s_f) = PartitionDiagram::compose(&b.flip(), &a.flip()).unwrap();
        prop_assert_eq!(beta, beta_f);
        prop_assert_eq!(s.flip(), s_f);
    }
}
