//! Orbit functionals on `V^{⊗k}` and the `A_n`-orbit decomposition.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use super::functor::psi_diagram_with;
use super::linalg::rank;
use super::tensor::{tuple_at, tuple_count, tuple_rank, TensorMap};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::foundations::{perm, stirling2, FieldSpec, Scalar, SetPartition};
use crate::jellycat::JellyDiagram;

/// Equality pattern of a tuple as a diagram `k -> 0`.
pub fn pattern(tuple: &[usize]) -> PartitionDiagram {
    PartitionDiagram::new(tuple.len(), 0, SetPartition::from_labels(tuple)).unwrap()
}

fn functional_shape(d: &PartitionDiagram) -> Result<()> {
    if d.top() != 0 {
        return Err(Error::TypeMismatch(format!(
            "expected a diagram k->0, got {}->{}",
            d.bottom(),
            d.top()
        )));
    }
    Ok(())
}

/// `f_D`: the indicator of the orbit `O_D` of tuples with equality pattern `D`.
pub fn f_functional(d: &PartitionDiagram, n: usize, field: FieldSpec) -> Result<TensorMap> {
    functional_shape(d)?;
    let k = d.bottom();
    let columns = (0..tuple_count(n, k)?)
        .map(|c| {
            let mut col = BTreeMap::new();
            if SetPartition::from_labels(&tuple_at(n, k, c)) == *d.parts() {
                col.insert(0, Scalar::one(field));
            }
            col
        })
        .collect();
    TensorMap::from_columns(n, k, 0, field, columns)
}

/// `j_D` together with its `Ψ`-row.
pub fn jelly_functional(
    d: &PartitionDiagram,
    n: usize,
    field: FieldSpec,
    exec: Exec,
) -> Result<(JellyDiagram, TensorMap)> {
    functional_shape(d)?;
    let j = JellyDiagram::j_d(d, n)?;
    let row = psi_diagram_with(&j, field, exec)?;
    Ok((j, row))
}

/// `f_D^± = ½ (f_D ± Ψ(j_D))`.
pub fn f_plus_minus(
    d: &PartitionDiagram,
    n: usize,
    field: FieldSpec,
    exec: Exec,
) -> Result<(TensorMap, TensorMap)> {
    let f = f_functional(d, n, field)?;
    let (_, j) = jelly_functional(d, n, field, exec)?;
    let half = Scalar::from_ratio(field, &BigInt::from(1), &BigInt::from(2))?;
    Ok((f.add(&j)?.scale(&half), f.sub(&j)?.scale(&half)))
}

/// One `A_n`-orbit on basis tuples, labelled by its pattern and, for patterns
/// with `n - 1` or `n` parts, by the sign of `Ψ(j_D)` on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    #[serde(serialize_with = "as_text")]
    pub diagram: PartitionDiagram,
    pub sign: Option<i8>,
    pub members: Vec<Vec<usize>>,
}

fn as_text<S: serde::Serializer>(d: &PartitionDiagram, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(d)
}

/// Classify every basis tuple of `V^{⊗k}` into `O_D` or `O_D^±`.
pub fn classify_orbits(n: usize, k: usize, exec: Exec) -> Result<Vec<Orbit>> {
    if n < 2 {
        return Err(Error::OutOfRange("orbit classification needs n >= 2".into()));
    }
    let field = FieldSpec::RATIONALS;
    let mut orbits: BTreeMap<(PartitionDiagram, Option<i8>), Vec<Vec<usize>>> = BTreeMap::new();
    let mut rows: BTreeMap<PartitionDiagram, TensorMap> = BTreeMap::new();
    for c in 0..tuple_count(n, k)? {
        let t = tuple_at(n, k, c);
        let d = pattern(&t);
        let p = d.part_count();
        let sign = if p + 1 >= n {
            if !rows.contains_key(&d) {
                let (_, row) = jelly_functional(&d, n, field, exec)?;
                rows.insert(d.clone(), row);
            }
            let v = rows[&d].get(0, c);
            Some(if v == Scalar::one(field) {
                1
            } else if v == Scalar::from_int(field, -1) {
                -1
            } else {
                return Err(Error::Malformed(format!("Ψ(j_D) is {v} on {t:?}")));
            })
        } else {
            None
        };
        orbits.entry((d, sign)).or_default().push(t);
    }
    let mut out: Vec<Orbit> = orbits
        .into_iter()
        .map(|((diagram, sign), members)| Orbit {
            diagram,
            sign,
            members,
        })
        .collect();
    // `O_D^+` before `O_D^-`.
    out.sort_by(|a, b| (&a.diagram, b.sign).cmp(&(&b.diagram, a.sign)));
    Ok(out)
}

/// `A_n`-orbits on tuples of length `k`, by acting with every group element.
pub fn brute_force_orbits(n: usize, k: usize) -> Result<BTreeSet<BTreeSet<Vec<usize>>>> {
    let group = perm::alternating_group(n);
    let mut seen = vec![false; tuple_count(n, k)?];
    let mut out = BTreeSet::new();
    for c in 0..seen.len() {
        if seen[c] {
            continue;
        }
        let t = tuple_at(n, k, c);
        let orbit: BTreeSet<Vec<usize>> = group
            .iter()
            .map(|g| t.iter().map(|&i| g[i - 1] + 1).collect())
            .collect();
        for u in &orbit {
            seen[tuple_rank(n, u)] = true;
        }
        out.insert(orbit);
    }
    Ok(out)
}

/// `dim Hom_{A_n}(V^{⊗k}, V^{⊗l})` from Stirling numbers.
pub fn hom_dim(n: usize, k: usize, l: usize) -> BigUint {
    let m = k + l;
    let low: BigUint = (0..=n.saturating_sub(2)).map(|p| stirling2(m, p)).sum();
    let split = if n >= 1 { stirling2(m, n - 1) + stirling2(m, n) } else { BigUint::from(0u8) };
    low + split * 2u8
}

/// The same dimension as the rank of the `A_n`-averaging operator on
/// `V^{⊗(k+l)}`, with `A_n` enumerated explicitly. Rationals only.
pub fn hom_dim_bruteforce(n: usize, k: usize, l: usize, field: FieldSpec, exec: Exec) -> Result<usize> {
    if !field.is_rationals() {
        return Err(Error::Characteristic(format!(
            "brute-force invariants are computed over Q only, not {field}"
        )));
    }
    if n < 2 {
        return Err(Error::OutOfRange("brute force needs n >= 2".into()));
    }
    let m = k + l;
    let group = perm::alternating_group(n);
    let weight = Scalar::from_ratio(field, &BigInt::from(1), &BigInt::from(group.len()))?;
    let columns = exec.map_range(tuple_count(n, m)?, |c| {
        let t = tuple_at(n, m, c);
        let mut col: BTreeMap<usize, Scalar> = BTreeMap::new();
        for g in &group {
            let u: Vec<usize> = t.iter().map(|&i| g[i - 1] + 1).collect();
            crate::pcat::accumulate(&mut col, tuple_rank(n, &u), weight.clone());
        }
        col.into_iter().collect::<Vec<_>>()
    });
    Ok(rank(&columns, field))
}
