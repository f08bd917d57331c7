use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random::random_jelly_morphism;
use super::{matrix_witness, Check, SuiteReport};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::foundations::{bell, stirling2, FieldSpec, Scalar};
use crate::jellycat::{normal_basis, JellyDiagram, JellyMorphism};
use crate::pcat::Morphism;
use crate::repn::{
    f_functional, f_plus_minus, hom_dim, hom_dim_bruteforce, phi_morphism, phi_with, psi_diagram_with, psi_with,
    rank,
};

const Q: FieldSpec = FieldSpec::RATIONALS;

fn need_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange("rank checks need n >= 2".into()));
    }
    Ok(())
}

/// Kernel and rank of `Φ` on `Hom(k, l)` over the rationals.
pub fn check_phi_kernel(n: usize, k: usize, l: usize, exec: Exec) -> Result<SuiteReport> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let mut report = SuiteReport::new("phi-kernel", Some(n), Q).with_type(k, Some(l));
    let all = PartitionDiagram::all(k, l);
    let mut bad = None;
    for d in &all {
        let image = phi_morphism(&Morphism::x_element(d, Q, n), exec)?;
        if image.is_zero() != (d.part_count() > n) {
            bad = Some(format!("{d} has {} parts but Φ(x_D) is {}zero", d.part_count(), if image.is_zero() { "" } else { "non" }));
            break;
        }
    }
    report.push(match bad {
        None => Check::pass("Φ(x_D) = 0 exactly when D has more than n parts"),
        Some(w) => Check::fail("Φ(x_D) = 0 exactly when D has more than n parts", w),
    });
    let rows = all
        .iter()
        .map(|d| phi_with(d, n, Q, exec).map(|m| m.flatten()))
        .collect::<Result<Vec<_>>>()?;
    let r = rank(&rows, Q);
    let want: BigUint = (0..=n).map(|p| stirling2(k + l, p)).sum();
    report.push(Check::expect(
        format!("rank of Φ on Hom({k},{l}) = Σ_(p≤n) S(k+l,p) = {want}"),
        BigUint::from(r) == want,
        || format!("rank {r}"),
    ));
    let injective = BigUint::from(r) == bell(k + l);
    report.push(Check::expect(
        format!("Φ injective on Hom({k},{l}) iff k+l ≤ n (here {})", k + l <= n),
        injective == (k + l <= n),
        || format!("rank {r} of {} diagrams", all.len()),
    ));
    Ok(report)
}

/// The spanning set of `Hom(m, 0)`: `x_D` for `D` with at most `n` parts and
/// `½(x_D ± j_D)` for `D` with `n - 1` or `n` parts, each with the functional
/// it should map to.
pub fn fullness_spanning_set(n: usize, m: usize, field: FieldSpec) -> Result<Vec<(JellyMorphism, crate::TensorMap)>> {
    let half = Scalar::from_ratio(field, &BigInt::from(1), &BigInt::from(2))?;
    let mut out = Vec::new();
    for d in PartitionDiagram::all(m, 0) {
        let p = d.part_count();
        if p > n {
            continue;
        }
        let x = JellyMorphism::embed(&Morphism::x_element(&d, field, n));
        if p + 2 <= n {
            out.push((x, f_functional(&d, n, field)?));
        } else {
            let j = JellyMorphism::from_diagram(JellyDiagram::j_d(&d, n)?, field);
            let (plus, minus) = f_plus_minus(&d, n, field, Exec::Sequential)?;
            out.push((x.add(&j)?.scale(&half)?, plus));
            out.push((x.sub(&j)?.scale(&half)?, minus));
        }
    }
    Ok(out)
}

/// `Ψ` hits a spanning set of `Hom_{A_n}(V^{⊗k}, V^{⊗l})`.
pub fn check_fullness(n: usize, k: usize, l: usize, exec: Exec) -> Result<SuiteReport> {
    need_two(n)?;
    let mut report = SuiteReport::new("fullness", Some(n), Q).with_type(k, Some(l));
    let span = fullness_spanning_set(n, k + l, Q)?;
    let mut bent_rows = Vec::with_capacity(span.len());
    let mut rows = Vec::with_capacity(span.len());
    let mut bad = None;
    for (m, want) in &span {
        let image = psi_with(m, exec)?;
        if bad.is_none() && image != *want {
            bad = Some(format!("{m:?}: {}", matrix_witness(&image, want)));
        }
        bent_rows.push(image.as_row());
        rows.push(psi_with(&m.unbend(k)?, exec)?.flatten());
    }
    report.push(match bad {
        None => Check::pass("Ψ(x_D) = f_D and Ψ(½(x_D ± j_D)) = f_D^±"),
        Some(w) => Check::fail("Ψ(x_D) = f_D and Ψ(½(x_D ± j_D)) = f_D^±", w),
    });
    let dim = hom_dim(n, k, l);
    let brute = hom_dim_bruteforce(n, k, l, Q, exec)?;
    report.push(Check::expect(
        format!("formula dimension {dim} = brute-force A_n-invariant dimension"),
        BigUint::from(brute) == dim,
        || format!("brute force gives {brute}"),
    ));
    let r_bent = rank(&bent_rows, Q);
    report.push(Check::expect(
        format!("Ψ-rank of the spanning set in Hom({},0) = {dim}", k + l),
        BigUint::from(r_bent) == dim,
        || format!("rank {r_bent}"),
    ));
    let r = rank(&rows, Q);
    report.push(Check::expect(
        format!("Ψ-rank of the spanning set in Hom({k},{l}) = {dim}"),
        BigUint::from(r) == dim,
        || format!("rank {r}"),
    ));
    Ok(report)
}

/// The normal-form basis of `Hom(k, 0)` is `Ψ`-independent of the right
/// size, and rewriting random morphisms preserves `Ψ` and lands in its span.
pub fn check_faithfulness(
    n: usize,
    k: usize,
    field: FieldSpec,
    seed: u64,
    samples: usize,
    exec: Exec,
) -> Result<SuiteReport> {
    need_two(n)?;
    field.require_rewriting(n)?;
    let mut report = SuiteReport::new("faithfulness", Some(n), field)
        .with_type(k, Some(0))
        .with_seed(seed);
    let basis = normal_basis(n, k);
    let dim = hom_dim(n, k, 0);
    report.push(Check::expect(
        format!("basis size = hom_dim({n},{k},0) = {dim}"),
        BigUint::from(basis.len()) == dim,
        || format!("{} basis elements", basis.len()),
    ));
    let rows = basis
        .iter()
        .map(|b| psi_diagram_with(b, field, exec).map(|m| m.as_row()))
        .collect::<Result<Vec<_>>>()?;
    let r = rank(&rows, field);
    report.push(Check::expect(
        "Ψ-images of the basis are linearly independent",
        r == basis.len(),
        || format!("rank {r} of {}", basis.len()),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for i in 0..samples {
        let m = random_jelly_morphism(&mut rng, n, k, 0, field, 3, 3);
        let r = m.reduce()?;
        if !r.is_normal() {
            bad = Some(format!("sample {i}: {m:?} reduced to non-normal {r:?}"));
        } else if psi_with(&r, exec)? != psi_with(&m, exec)? {
            bad = Some(format!("sample {i}: {m:?} reduced to {r:?}, Ψ changed"));
        }
        if bad.is_some() {
            break;
        }
    }
    let desc = format!("reduce of {samples} random morphisms preserves Ψ and lands in the basis span");
    report.push(match bad {
        None => Check::pass(desc),
        Some(w) => Check::fail(desc, w),
    });
    Ok(report)
}
