use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random::random_jelly_morphism;
use super::{Check, SuiteReport};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::foundations::{bell, enumerate_set_partitions, perm, stirling2, FieldSpec, Scalar};
use crate::jellycat::{first_two, four_jelly_diagram, four_jelly_expansion, JellyDiagram, JellyMorphism};
use crate::pcat::Morphism;
use crate::repn::psi_with;

const Q: FieldSpec = FieldSpec::RATIONALS;

fn terms(n: usize, k: usize, l: usize, ts: &[(i64, &str)]) -> JellyMorphism {
    let parsed = ts.iter().map(|(c, s)| {
        let m = JellyMorphism::parse(&format!("{c}*{s}"), Some(Q), Some(n)).expect("golden text parses");
        m.terms().iter().next().map(|(d, c)| (d.clone(), c.clone())).expect("nonzero golden term")
    });
    JellyMorphism::from_terms(k, l, Q, n, parsed.collect::<Vec<_>>()).unwrap()
}

/// The five-term combination of diagrams `3 -> 0` that vanishes for `n = 2`.
pub fn vanishing_combination() -> JellyMorphism {
    terms(
        2,
        3,
        0,
        &[
            (1, "P(3->0)[{1},{2},{3}]"),
            (-1, "P(3->0)[{1,3},{2}]"),
            (-1, "P(3->0)[{1,2},{3}]"),
            (-1, "P(3->0)[{1},{2,3}]"),
            (2, "P(3->0)[{1,2,3}]"),
        ],
    )
}

fn pinned(pair: (usize, usize), at: usize) -> impl Fn(&JellyDiagram) -> (usize, usize) + Sync {
    move |d: &JellyDiagram| if d.jelly_count() == at { pair } else { first_two(d) }
}

fn equal_check(desc: impl Into<String>, a: &JellyMorphism, b: &JellyMorphism) -> Check {
    Check::expect(desc, a == b, || format!("{a:?}\nvs\n{b:?}"))
}

fn four_jelly_checks(report: &mut SuiteReport, exec: Exec) -> Result<()> {
    let top_bottom = JellyMorphism::embed(&four_jelly_expansion(2, (0, 1), Q)?);
    let left_right = JellyMorphism::embed(&four_jelly_expansion(2, (0, 2), Q)?);
    let diff = top_bottom.sub(&left_right)?;
    let v = vanishing_combination();
    report.push(Check::expect(
        "four jellyfish: the two evaluation orders differ by the five-term combination",
        diff == v || diff == v.neg(),
        || format!("difference {diff:?}"),
    ));
    let reduced = v.reduce_with(&first_two, exec)?;
    report.push(Check::expect(
        "four jellyfish: the five-term combination reduces to 0",
        reduced.is_zero(),
        || format!("{reduced:?}"),
    ));
    report.push(Check::expect(
        "four jellyfish: the five-term combination has Ψ = 0",
        psi_with(&v, exec)?.is_zero(),
        || "nonzero matrix".into(),
    ));
    report.push(equal_check(
        "four jellyfish: both evaluations share a normal form",
        &top_bottom.reduce_with(&first_two, exec)?,
        &left_right.reduce_with(&first_two, exec)?,
    ));
    let mut m = JellyMorphism::zero(3, 0, Q, 2);
    let (sign, d) = four_jelly_diagram(2).to_raw().canonicalize()?.expect("nonzero");
    m = m.add(&JellyMorphism::from_terms(3, 0, Q, 2, [(d, Scalar::from_int(Q, sign as i64))])?)?;
    let base = m.reduce_with(&first_two, exec)?;
    let mut agree = true;
    for pair in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        agree &= m.reduce_with(&pinned(pair, 4), exec)? == base;
    }
    report.push(Check::expect(
        "four jellyfish: every first pairing gives the same normal form",
        agree,
        || format!("{m:?}"),
    ));
    Ok(())
}

fn grood_checks(report: &mut SuiteReport, exec: Exec) -> Result<()> {
    let one = |s: &str| terms(2, 2, 2, &[(1, s)]);
    let alpha = one("JP(2->2; n=2)[{1},{2,2'},{1'}]J(#3,#1)");
    let beta = one("JP(2->2; n=2)[{1,1'},{2},{2'}]J(#3,#2)");
    let aba = alpha.compose(&beta.compose(&alpha)?)?;
    let orders = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .map(|pair| aba.reduce_with(&pinned(pair, 3), exec))
        .collect::<Result<Vec<_>>>()?;
    report.push(Check::expect(
        "α∘β∘α: the three pairing orders agree",
        orders.iter().all(|r| *r == orders[0]),
        || orders.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>().join("\n"),
    ));
    let e = |s: &str| one(s).reduce_with(&first_two, exec);
    let e1 = e("JP(2->2; n=2)[{1,1'},{2},{2'}]J(#2,#3)")?;
    let e2 = e("JP(2->2; n=2)[{1,2},{1'},{2'}]J(#2,#3)")?;
    let e3 = e("JP(2->2; n=2)[{1,2'},{2},{1'}]J(#3,#2)")?;
    let e4 = e("JP(2->2; n=2)[{1},{2,1'},{2'}]J(#1,#3)")?;
    let e5 = e("JP(2->2; n=2)[{1},{2},{1',2'}]J(#1,#2)")?;
    report.push(equal_check("α∘β∘α reduces to E1", &orders[0], &e1));
    report.push(equal_check("E2 - E3 = E1", &e2.sub(&e3)?, &e1));
    report.push(equal_check("E4 - E5 = E1", &e4.sub(&e5)?, &e1));
    report.push(Check::expect(
        "α∘β∘α and its normal form have the same Ψ",
        psi_with(&aba, exec)? == psi_with(&orders[0], exec)?,
        || format!("{aba:?}"),
    ));
    Ok(())
}

fn dual_square_checks(report: &mut SuiteReport, n: usize, exec: Exec) -> Result<()> {
    let j = JellyMorphism::generator(n, Q);
    let sq = j.dual().compose(&j)?;
    let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
    let mut want = Morphism::zero(n, n, Q, n);
    for sigma in perm::all_permutations(n) {
        let p = Morphism::from_diagram(PartitionDiagram::permutation(&sigma)?, Q, n);
        want = want.add(&p.scale(&Scalar::from_int(Q, sign * perm::sign(&sigma) as i64))?)?;
    }
    let want = JellyMorphism::embed(&want);
    report.push(equal_check(
        format!("j*∘j = (-1)^⌊n/2⌋ Σ(-1)^σ σ after reduction, n = {n}"),
        &sq.reduce_with(&first_two, exec)?,
        &want,
    ));
    report.push(Check::expect(
        format!("j*∘j = (-1)^⌊n/2⌋ Σ(-1)^σ σ under Ψ, n = {n}"),
        psi_with(&sq, exec)? == psi_with(&want, exec)?,
        || "matrices differ".into(),
    ));
    Ok(())
}

/// The worked examples: the four-jellyfish evaluation, the triple product
/// `α∘β∘α`, and `j*∘j` for `n = 2, 3`.
pub fn golden_examples(exec: Exec) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("golden", Some(2), Q);
    four_jelly_checks(&mut report, exec)?;
    grood_checks(&mut report, exec)?;
    for n in [2, 3] {
        dual_square_checks(&mut report, n, exec)?;
    }
    Ok(report)
}

/// `(a·b)·c = a·(b·c)` for the product `reduce(x∘y)` on random reduced
/// endomorphisms of `k`.
pub fn check_associativity(n: usize, k: usize, seed: u64, samples: usize, exec: Exec) -> Result<SuiteReport> {
    if n < 2 {
        return Err(Error::OutOfRange("associativity needs n >= 2".into()));
    }
    let mut report = SuiteReport::new("associativity", Some(n), Q)
        .with_type(k, Some(k))
        .with_seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let product = |x: &JellyMorphism, y: &JellyMorphism| x.compose(y)?.reduce_with(&first_two, exec);
    let mut bad = None;
    for i in 0..samples {
        let mut draw = || random_jelly_morphism(&mut rng, n, k, k, Q, 2, 2).reduce_with(&first_two, exec);
        let (a, b, c) = (draw()?, draw()?, draw()?);
        let left = product(&product(&a, &b)?, &c)?;
        let right = product(&a, &product(&b, &c)?)?;
        if left != right {
            bad = Some(format!("triple {i}:\na = {a:?}\nb = {b:?}\nc = {c:?}\n(ab)c = {left:?}\na(bc) = {right:?}"));
            break;
        }
    }
    let desc = format!("{samples} random triples in End({k}) associate");
    report.push(match bad {
        None => Check::pass(desc),
        Some(w) => Check::fail(desc, w),
    });
    Ok(report)
}

/// Bell and Stirling numbers against explicit enumeration.
pub fn check_combinatorics(max_m: usize) -> SuiteReport {
    let mut report = SuiteReport::new("combinatorics", None, Q);
    for m in 0..=max_m {
        let all = enumerate_set_partitions(m);
        report.push(Check::expect(
            format!("B({m}) = {}", bell(m)),
            BigUint::from(all.len()) == bell(m),
            || format!("enumeration gives {}", all.len()),
        ));
        let mut bad = None;
        for p in 0..=m {
            let count = all.iter().filter(|s| s.part_count() == p).count();
            if BigUint::from(count) != stirling2(m, p) {
                bad = Some(format!("S({m},{p}) = {} but enumeration gives {count}", stirling2(m, p)));
                break;
            }
        }
        let desc = format!("S({m},p) for p ≤ {m}");
        report.push(match bad {
            None => Check::pass(desc),
            Some(w) => Check::fail(desc, w),
        });
    }
    report
}
