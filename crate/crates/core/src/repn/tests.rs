use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;
use crate::diagram::PartitionDiagram;
use crate::exec::Exec;
use crate::foundations::{perm, FieldSpec, Scalar};
use crate::jellycat::{jelly_relations, normal_basis, signed_crosscap_sum, JellyDiagram, JellyMorphism, LegTarget, RawJelly};
use crate::pcat::{generating_relations, Morphism};

const Q: FieldSpec = FieldSpec::RATIONALS;

fn int(v: i64) -> Scalar {
    Scalar::from_int(Q, v)
}

fn d(s: &str) -> PartitionDiagram {
    s.parse().unwrap()
}

fn jm(s: &str, n: usize) -> JellyMorphism {
    JellyMorphism::parse(&format!("1*{s}"), Some(Q), Some(n)).unwrap()
}

/// Dense matrix oracle from an entry function over tuples.
fn dense(n: usize, k: usize, l: usize, f: impl Fn(&[usize], &[usize]) -> i64) -> TensorMap {
    let columns = (0..tuple_count(n, k).unwrap())
        .map(|c| {
            let i = tuple_at(n, k, c);
            (0..tuple_count(n, l).unwrap())
                .map(|r| (r, int(f(&tuple_at(n, l, r), &i))))
                .collect::<BTreeMap<_, _>>()
        })
        .collect();
    TensorMap::from_columns(n, k, l, Q, columns).unwrap()
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

#[test]
fn tuple_ranks() {
    assert_eq!(tuple_rank(3, &[]), 0);
    assert_eq!(tuple_rank(3, &[2, 1, 3]), 9 + 2);
    for r in 0..27 {
        assert_eq!(tuple_rank(3, &tuple_at(3, 3, r)), r);
    }
}

#[test]
fn phi_generators() {
    let eta = phi(&PartitionDiagram::eta(), 3, Q).unwrap();
    assert_eq!((eta.rows(), eta.cols()), (3, 1));
    assert_eq!(eta, dense(3, 0, 1, |_, _| 1));
    let mu = phi(&PartitionDiagram::mu(), 2, Q).unwrap();
    assert_eq!((mu.rows(), mu.cols()), (2, 4));
    assert_eq!(mu, dense(2, 2, 1, |o, i| delta(i[0], i[1]) * delta(o[0], i[0])));
    let swap = phi(&PartitionDiagram::swap(), 3, Q).unwrap();
    assert_eq!(swap, dense(3, 2, 2, |o, i| delta(o[0], i[1]) * delta(o[1], i[0])));
}

#[test]
fn phi_of_five_to_three_example() {
    let e = d("P(5->3)[{1,2,2'},{3,5},{4,1'},{3'}]");
    for n in [2, 3] {
        let oracle = dense(n, 5, 3, |o, i| {
            delta(i[0], i[1]) * delta(i[2], i[4]) * delta(o[0], i[3]) * delta(o[1], i[0])
        });
        assert_eq!(phi(&e, n, Q).unwrap(), oracle);
    }
}

#[test]
fn determinant_row() {
    let d2 = det_map(2, Q).unwrap();
    assert_eq!(d2.get(0, tuple_rank(2, &[1, 2])), int(1));
    assert_eq!(d2.get(0, tuple_rank(2, &[2, 1])), int(-1));
    assert_eq!(d2.get(0, tuple_rank(2, &[1, 1])), int(0));
    let d3 = det_map(3, Q).unwrap();
    assert_eq!(d3.get(0, tuple_rank(3, &[2, 3, 1])), int(1));
    for i in 1..=2 {
        let s = phi(&PartitionDiagram::s_i(3, i).unwrap(), 3, Q).unwrap();
        assert_eq!(d3.compose(&s).unwrap(), d3.scale(&int(-1)));
    }
}

#[test]
fn functional_for_unit_and_tensor() {
    // det ∘ (η ⊗ 1) vanishes for n = 2: the first relation for det.
    let d2 = det_map(2, Q).unwrap();
    let eta = phi(&PartitionDiagram::eta(), 2, Q).unwrap();
    let id = TensorMap::identity(2, 1, Q).unwrap();
    let v = d2.compose(&eta.kron(&id).unwrap()).unwrap();
    assert_eq!(v, dense(2, 1, 0, |_, i| if i[0] == 1 { -1 } else { 1 }));
    let d3 = det_map(3, Q).unwrap();
    let eta3 = phi(&PartitionDiagram::eta(), 3, Q).unwrap();
    let id3 = TensorMap::identity(3, 2, Q).unwrap();
    assert!(!d3.compose(&eta3.kron(&id3).unwrap()).unwrap().is_zero());
    let mu = phi(&PartitionDiagram::delta(), 3, Q).unwrap();
    let id1 = TensorMap::identity(3, 1, Q).unwrap();
    assert!(d3.compose(&mu.kron(&id1).unwrap()).unwrap().is_zero());
}

#[test]
fn psi_restricts_to_phi() {
    for n in [2, 3] {
        for t in 0..=3 {
            for k in 0..=t {
                for e in PartitionDiagram::all(k, t - k) {
                    let j = JellyDiagram::from_partition(&e, n);
                    assert_eq!(psi_diagram(&j, Q).unwrap(), phi(&e, n, Q).unwrap(), "{e}");
                }
            }
        }
    }
}

#[test]
fn psi_of_generator_is_det() {
    for n in 1..=4 {
        let j = JellyMorphism::generator(n, Q);
        assert_eq!(psi(&j).unwrap(), det_map(n, Q).unwrap());
    }
}

fn signed_permutation_sum(n: usize) -> TensorMap {
    let mut acc = TensorMap::zero(n, n, n, Q).unwrap();
    for sigma in perm::all_permutations(n) {
        let p = phi(&PartitionDiagram::permutation(&sigma).unwrap(), n, Q).unwrap();
        acc = acc.add(&p.scale(&int(perm::sign(&sigma) as i64))).unwrap();
    }
    acc
}

#[test]
fn dual_generator_squared() {
    for n in [2, 3] {
        let j = JellyMorphism::generator(n, Q);
        let sq = j.dual().compose(&j).unwrap();
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        let want = signed_permutation_sum(n).scale(&int(sign));
        assert_eq!(psi(&sq).unwrap(), want);
        assert_eq!(psi(&sq.reduce().unwrap()).unwrap(), want);
    }
    let j = JellyMorphism::generator(2, Q);
    let s = phi(&PartitionDiagram::swap(), 2, Q).unwrap();
    let want = s.sub(&TensorMap::identity(2, 2, Q).unwrap()).unwrap();
    assert_eq!(psi(&j.dual().compose(&j).unwrap()).unwrap(), want);
}

#[test]
fn crosscap_sum_is_det_squared() {
    for n in [2, 3] {
        let lhs = phi_morphism(&signed_crosscap_sum(n, Q), Exec::default()).unwrap();
        let det = det_map(n, Q).unwrap();
        assert_eq!(lhs, det.kron(&det).unwrap());
    }
}

#[test]
fn all_relations_hold_under_psi() {
    for n in [2, 3, 4] {
        for rel in generating_relations(n, Q) {
            let first = phi_morphism(&rel.sides[0], Exec::default()).unwrap();
            for side in &rel.sides[1..] {
                assert_eq!(phi_morphism(side, Exec::default()).unwrap(), first, "{} n={n}", rel.name);
            }
        }
        for rel in jelly_relations(n, Q) {
            let first = psi(&rel.sides[0]).unwrap();
            for side in &rel.sides[1..] {
                assert_eq!(psi(side).unwrap(), first, "{} n={n}", rel.name);
            }
        }
    }
}

#[test]
fn f_functional_examples() {
    let f = f_functional(&d("P(2->0)[{1,2}]"), 2, Q).unwrap();
    assert_eq!(f.as_row(), vec![(0, int(1)), (3, int(1))]);
    assert!(f_functional(&d("P(3->0)[{1},{2},{3}]"), 2, Q).unwrap().is_zero());
    for e in PartitionDiagram::all(3, 0) {
        let x = Morphism::x_element(&e, Q, 2);
        assert_eq!(phi_morphism(&x, Exec::default()).unwrap(), f_functional(&e, 2, Q).unwrap(), "{e}");
    }
}

#[test]
fn jelly_functional_examples() {
    let (j, row) = jelly_functional(&d("P(2->0)[{1},{2}]"), 2, Q, Exec::default()).unwrap();
    assert_eq!(j, JellyDiagram::generator(2));
    assert_eq!(row, det_map(2, Q).unwrap());
    let (_, row) = jelly_functional(&d("P(1->0)[{1}]"), 2, Q, Exec::default()).unwrap();
    assert_eq!(row.as_row(), vec![(0, int(1)), (1, int(-1))]);
    // Independent route: det after the diagram with the legs cut loose.
    let cut = phi(&d("P(1->2)[{1,1'},{2'}]"), 2, Q).unwrap();
    assert_eq!(det_map(2, Q).unwrap().compose(&cut).unwrap(), row);
    assert!(jelly_functional(&d("P(3->0)[{1,2,3}]"), 3, Q, Exec::default()).is_err());
}

#[test]
fn jelly_functional_support_is_the_orbit() {
    for e in PartitionDiagram::all(3, 0) {
        if e.part_count() > 2 {
            continue;
        }
        let (_, row) = jelly_functional(&e, 2, Q, Exec::default()).unwrap();
        for c in 0..8 {
            let t = tuple_at(2, 3, c);
            let v = row.get(0, c);
            assert_eq!(!v.is_zero(), pattern(&t) == e, "{e} {t:?}");
            assert!(v.is_zero() || v == int(1) || v == int(-1));
        }
    }
}

#[test]
fn jelly_functionals_alternate() {
    for n in [2, 3] {
        for k in 0..=4 {
            for e in PartitionDiagram::all(k, 0) {
                let Ok((_, row)) = jelly_functional(&e, n, Q, Exec::default()) else {
                    continue;
                };
                for sigma in perm::all_permutations(n) {
                    let s = int(perm::sign(&sigma) as i64);
                    for c in 0..row.cols() {
                        let t = tuple_at(n, k, c);
                        let u: Vec<usize> = t.iter().map(|&i| sigma[i - 1] + 1).collect();
                        assert_eq!(row.get(0, tuple_rank(n, &u)), &s * &row.get(0, c));
                    }
                }
            }
        }
    }
}

#[test]
fn orbit_examples() {
    let o = classify_orbits(3, 1, Exec::default()).unwrap();
    assert_eq!(o.len(), 1);
    assert_eq!(o[0].members.len(), 3);
    assert_eq!(o[0].sign, None);
    assert_eq!(classify_orbits(2, 2, Exec::default()).unwrap().len(), 4);
    let o = classify_orbits(3, 3, Exec::default()).unwrap();
    let injective: Vec<_> = o.iter().filter(|x| x.diagram.part_count() == 3).collect();
    assert_eq!(injective.len(), 2);
    assert!(injective.iter().all(|x| x.members.len() == 3));
    assert!(classify_orbits(1, 2, Exec::default()).is_err());
}

#[test]
fn orbits_match_brute_force() {
    for n in 2..=4 {
        for k in 0..=4 {
            let ours: BTreeSet<BTreeSet<Vec<usize>>> = classify_orbits(n, k, Exec::default())
                .unwrap()
                .into_iter()
                .map(|o| o.members.into_iter().collect())
                .collect();
            let brute = brute_force_orbits(n, k).unwrap();
            assert_eq!(ours, brute, "n={n} k={k}");
            assert_eq!(BigUint::from(brute.len()), hom_dim(n, k, 0));
        }
    }
}

#[test]
fn dimension_examples() {
    assert_eq!(hom_dim(2, 1, 1), BigUint::from(4u8));
    assert_eq!(hom_dim(3, 1, 1), BigUint::from(3u8));
    assert_eq!(hom_dim(4, 2, 1), BigUint::from(6u8));
    assert_eq!(hom_dim(3, 2, 1), BigUint::from(9u8));
    assert_eq!(hom_dim_bruteforce(3, 1, 1, Q, Exec::default()).unwrap(), 3);
    assert_eq!(hom_dim_bruteforce(4, 2, 1, Q, Exec::default()).unwrap(), 6);
    let f5 = FieldSpec::prime(5).unwrap();
    assert!(matches!(
        hom_dim_bruteforce(2, 1, 1, f5, Exec::default()),
        Err(crate::Error::Characteristic(_))
    ));
}

#[test]
fn dimension_formula_matches_brute_force() {
    for n in 2..=4 {
        for m in 0..=5 {
            let b = hom_dim_bruteforce(n, m, 0, Q, Exec::default()).unwrap();
            assert_eq!(BigUint::from(b), hom_dim(n, m, 0), "n={n} m={m}");
        }
    }
}

#[test]
fn plus_minus_functionals_form_a_basis() {
    for n in [2, 3] {
        for k in 0..=4 {
            let mut rows = Vec::new();
            for e in PartitionDiagram::all(k, 0) {
                let p = e.part_count();
                if p + 2 <= n {
                    rows.push(f_functional(&e, n, Q).unwrap().as_row());
                } else if p <= n {
                    let (plus, minus) = f_plus_minus(&e, n, Q, Exec::default()).unwrap();
                    rows.push(plus.as_row());
                    rows.push(minus.as_row());
                }
            }
            assert_eq!(BigUint::from(rows.len()), hom_dim(n, k, 0));
            assert_eq!(rank(&rows, Q), rows.len(), "n={n} k={k}");
        }
    }
}

#[test]
fn normal_basis_is_independent_under_psi() {
    for (n, k, size) in [(2, 3, 8), (3, 3, 9)] {
        let basis = normal_basis(n, k);
        assert_eq!(basis.len(), size);
        let rows: Vec<_> = basis.iter().map(|b| psi_diagram(b, Q).unwrap().as_row()).collect();
        assert_eq!(rank(&rows, Q), size);
    }
}

#[test]
fn rank_over_each_field() {
    let f3 = FieldSpec::prime(3).unwrap();
    let v = |f: FieldSpec, xs: &[i64]| -> Vec<(usize, Scalar)> {
        xs.iter().enumerate().map(|(i, &x)| (i, Scalar::from_int(f, x))).collect()
    };
    let rows = |f| vec![v(f, &[1, 2, 3]), v(f, &[4, 5, 6]), v(f, &[7, 8, 9])];
    assert_eq!(rank(&rows(Q), Q), 2);
    assert_eq!(rank(&rows(f3), f3), 1);
    // Determinant 2 over Q, invertible mod 3.
    let rows = |f| vec![v(f, &[1, 1, 0]), v(f, &[0, 1, 1]), v(f, &[1, 0, 1])];
    assert_eq!(rank(&rows(Q), Q), 3);
    assert_eq!(rank(&rows(f3), f3), 3);
    let g = vec![v(Q, &[1, 1]), v(Q, &[1, -2])];
    assert_eq!(rank(&g, Q), 2);
    assert_eq!(rank(&[v(f3, &[1, 1]), v(f3, &[1, -2])], f3), 1);
    let half = Scalar::from_ratio(Q, &2.into(), &4.into()).unwrap();
    assert_eq!(rank(&[vec![(0, half), (1, int(1))], v(Q, &[1, 2])], Q), 1);
}

#[test]
fn json_export() {
    let mu = phi(&PartitionDiagram::mu(), 2, Q).unwrap();
    let j = mu.to_json();
    assert_eq!(j["rows"], 2);
    assert_eq!(j["cols"], 4);
    assert_eq!(j["field"], "Q");
    assert_eq!(j["entries"], serde_json::json!([[0, 0, "1/1"], [1, 3, "1/1"]]));
}

#[test]
fn reduce_preserves_psi_on_golden_inputs() {
    let alpha = jm("JP(2->2; n=2)[{1},{2,2'},{1'}]J(#3,#1)", 2);
    let beta = jm("JP(2->2; n=2)[{1,1'},{2},{2'}]J(#3,#2)", 2);
    let aba = alpha.compose(&beta.compose(&alpha).unwrap()).unwrap();
    let e1 = jm("JP(2->2; n=2)[{1,1'},{2},{2'}]J(#2,#3)", 2);
    let reduced = aba.reduce().unwrap();
    assert_eq!(psi(&reduced).unwrap(), psi(&aba).unwrap());
    assert_eq!(reduced, e1.reduce().unwrap());
    for n in [2, 3] {
        let four = crate::jellycat::four_jelly_diagram(n);
        let mut m = JellyMorphism::zero(n + 1, 0, Q, n);
        let s = four.to_raw().canonicalize().unwrap();
        if let Some((sign, c)) = s {
            m = JellyMorphism::from_terms(n + 1, 0, Q, n, [(c, int(sign as i64))]).unwrap();
        }
        assert_eq!(psi(&m.reduce().unwrap()).unwrap(), psi(&m).unwrap());
    }
}

#[test]
fn sequential_and_parallel_psi_agree() {
    let m = JellyMorphism::embed(&signed_crosscap_sum(3, Q)).add(&{
        let j = JellyMorphism::generator(3, Q);
        j.tensor(&j).unwrap()
    });
    let m = m.unwrap();
    assert_eq!(psi_with(&m, Exec::Sequential).unwrap(), psi_with(&m, Exec::Parallel).unwrap());
}

fn arb_diagram(k: usize, l: usize) -> impl Strategy<Value = PartitionDiagram> {
    let all = PartitionDiagram::all(k, l);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// Random jellyfish diagrams `k -> l` with up to three jellyfish.
fn arb_jelly(k: usize, l: usize, n: usize) -> impl Strategy<Value = JellyMorphism> {
    let m = k + l;
    (
        proptest::collection::vec(0..m.max(1), m),
        0usize..=2,
        proptest::collection::vec(proptest::collection::vec(0usize..m + 3, n), 0..=3),
        -3i64..4,
    )
        .prop_filter_map("raw data is zero or malformed", move |(labels, internal, jellies, c)| {
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); m.max(1)];
            for (v, &b) in labels.iter().enumerate() {
                blocks[b].push(v + 1);
            }
            blocks.retain(|b| !b.is_empty());
            blocks.extend(std::iter::repeat_with(Vec::new).take(internal));
            let count = blocks.len();
            let jellies = jellies
                .into_iter()
                .map(|legs| {
                    legs.into_iter()
                        .map(|t| if t < count { LegTarget::Block(t) } else { LegTarget::Dangling })
                        .collect()
                })
                .collect();
            let raw = RawJelly { bottom: k, top: l, n, blocks, jellies };
            let (sign, d) = raw.canonicalize().ok()??;
            JellyMorphism::from_terms(k, l, Q, n, [(d, int(sign as i64 * c))]).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn phi_is_functorial(
        n in 2usize..=3,
        (a, b) in (0usize..=2, 0usize..=2, 0usize..=2).prop_flat_map(|(k, l, m)| (arb_diagram(l, m), arb_diagram(k, l))),
        (c, e) in (arb_diagram(1, 2), arb_diagram(2, 1)),
    ) {
        let ma = Morphism::from_diagram(a.clone(), Q, n);
        let mb = Morphism::from_diagram(b.clone(), Q, n);
        let lhs = phi_morphism(&ma.compose(&mb).unwrap(), Exec::default()).unwrap();
        prop_assert_eq!(lhs, phi(&a, n, Q).unwrap().compose(&phi(&b, n, Q).unwrap()).unwrap());
        let t = phi(&c.tensor(&e), n, Q).unwrap();
        prop_assert_eq!(t, phi(&c, n, Q).unwrap().kron(&phi(&e, n, Q).unwrap()).unwrap());
    }

    #[test]
    fn psi_is_functorial(a in arb_jelly(2, 1, 2), b in arb_jelly(1, 2, 2)) {
        prop_assert_eq!(psi(&a.compose(&b).unwrap()).unwrap(), psi(&a).unwrap().compose(&psi(&b).unwrap()).unwrap());
        prop_assert_eq!(psi(&a.tensor(&b).unwrap()).unwrap(), psi(&a).unwrap().kron(&psi(&b).unwrap()).unwrap());
    }

    #[test]
    fn psi_functorial_for_three(a in arb_jelly(2, 1, 3), b in arb_jelly(1, 2, 3), c in arb_jelly(1, 1, 3)) {
        prop_assert_eq!(psi(&a.compose(&b).unwrap()).unwrap(), psi(&a).unwrap().compose(&psi(&b).unwrap()).unwrap());
        prop_assert_eq!(psi(&c.tensor(&a).unwrap()).unwrap(), psi(&c).unwrap().kron(&psi(&a).unwrap()).unwrap());
    }

    #[test]
    fn reduce_preserves_psi(m in (0usize..=2, 0usize..=2, 2usize..=3).prop_flat_map(|(k, l, n)| arb_jelly(k, l, n))) {
        let r = m.reduce().unwrap();
        prop_assert!(r.is_normal());
        prop_assert_eq!(psi(&r).unwrap(), psi(&m).unwrap());
    }

    #[test]
    fn reduce_preserves_psi_random(m in arb_jelly(2, 1, 3)) {
        let r = m.reduce().unwrap();
        prop_assert_eq!(psi(&r).unwrap(), psi(&m).unwrap());
    }

    #[test]
    fn reduce_preserves_psi_random_two(m in arb_jelly(2, 2, 2)) {
        let r = m.reduce().unwrap();
        prop_assert_eq!(psi(&r).unwrap(), psi(&m).unwrap());
    }
}
