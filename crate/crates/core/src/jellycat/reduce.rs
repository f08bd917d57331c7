//! Rewriting to the normal-form basis of `Hom(k, 0)`: partition diagrams
//! with at most `n` parts and the single-jellyfish diagrams `j_D`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::diagram::{JellyDiagram, LegTarget};
use super::morphism::{signed_scalar, JellyMorphism};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::foundations::{FieldSpec, Scalar, SetPartition};
use crate::pcat::{accumulate, Morphism};

/// Chooses which two jellyfish of a diagram to pair next.
pub type PairStrategy = dyn Fn(&JellyDiagram) -> (usize, usize) + Sync;

/// The default strategy: the first two jellyfish in canonical order.
pub fn first_two(_: &JellyDiagram) -> (usize, usize) {
    (0, 1)
}

fn check_rewriting(field: FieldSpec, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("rewriting needs n >= 2, got {n}")));
    }
    field.require_rewriting(n)
}

/// Replace jellyfish `a` and `b` of `d` using the jellyfish relation.
pub fn reduce_pair(d: &JellyDiagram, a: usize, b: usize, field: FieldSpec) -> Result<JellyMorphism> {
    let n = Scalar::from_int(field, d.n() as i64);
    let mut out = JellyMorphism::zero(d.bottom(), d.top(), field, d.n());
    for (sign, beta, s) in d.pair_terms(a, b)? {
        out.push_signed(s, &(&signed_scalar(field, sign) * &n.pow(beta as u32)))?;
    }
    Ok(out)
}

/// True for the basis elements of `Hom(k, 0)`.
pub fn is_basis_element(d: &JellyDiagram) -> bool {
    let n = d.n();
    match d.jelly_count() {
        0 => d.parts().part_count() <= n,
        1 => {
            let on_blocks = d.jellies()[0]
                .iter()
                .filter(|t| matches!(t, LegTarget::Block(_)))
                .count();
            d.top() == 0 && d.internal_count() == 0 && on_blocks == d.parts().part_count()
        }
        _ => false,
    }
}

/// The basis of `Hom(k, 0)`: diagrams with at most `n` parts, then `j_D`
/// for each `D` with `n - 1` or `n` parts.
pub fn normal_basis(n: usize, k: usize) -> Vec<JellyDiagram> {
    let all = PartitionDiagram::all(k, 0);
    let mut out: Vec<JellyDiagram> = all
        .iter()
        .filter(|d| d.part_count() <= n)
        .map(|d| JellyDiagram::from_partition(d, n))
        .collect();
    out.extend(all.iter().filter_map(|d| JellyDiagram::j_d(d, n).ok()));
    out
}

/// The four-jellyfish diagram `(n+1) -> 0` whose two evaluations express the
/// all-singleton diagram through diagrams with fewer parts.
///
/// Jellyfish order: the two attached to the vertices, then the closed pair.
pub fn four_jelly_diagram(n: usize) -> JellyDiagram {
    let x = |i: usize| LegTarget::Block(n + 1 + i);
    let lower_left: Vec<_> = (0..n).map(LegTarget::Block).collect();
    let lower_right: Vec<_> = (1..=n).map(LegTarget::Block).collect();
    let upper_left: Vec<_> = (0..n - 1).map(x).chain([LegTarget::Dangling]).collect();
    let upper_right: Vec<_> = [LegTarget::Dangling].into_iter().chain((0..n - 1).map(x)).collect();
    JellyDiagram::unchecked(
        n + 1,
        0,
        n,
        SetPartition::finest(n + 1),
        n - 1,
        vec![lower_left, lower_right, upper_left, upper_right],
    )
}

/// Fully evaluate the four-jellyfish diagram, pairing `first` before the
/// remaining two.
pub fn four_jelly_expansion(n: usize, first: (usize, usize), field: FieldSpec) -> Result<Morphism> {
    let d = four_jelly_diagram(n);
    let nn = Scalar::from_int(field, n as i64);
    let mut out = Morphism::zero(n + 1, 0, field, n);
    for (sign, beta, s) in d.pair_terms(first.0, first.1)? {
        let Some((sign2, rest)) = s else { continue };
        let c = &signed_scalar(field, sign * sign2) * &nn.pow(beta as u32);
        for (sign3, beta2, s2) in rest.pair_terms(0, 1)? {
            let Some((sign4, plain)) = s2 else { continue };
            let p = plain.to_partition().expect("all jellyfish paired");
            let c2 = &(&c * &signed_scalar(field, sign3 * sign4)) * &nn.pow(beta2 as u32);
            out = out.add(&Morphism::from_diagram(p, field, n).scale(&c2)?)?;
        }
    }
    Ok(out)
}

/// The all-singleton diagram `(n+1) -> 0` written with diagrams of at most
/// `n` parts. Computed once per `(n, field)`.
pub fn y_expansion(n: usize, field: FieldSpec) -> Result<Arc<Morphism>> {
    check_rewriting(field, n)?;
    static CACHE: OnceLock<Mutex<HashMap<(usize, FieldSpec), Arc<Morphism>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(n, field)) {
        return Ok(m.clone());
    }
    let y = PartitionDiagram::new(n + 1, 0, SetPartition::finest(n + 1))?;
    let matchings = [(0, 1), (0, 2), (0, 3)];
    let expansions = matchings
        .iter()
        .map(|&m| four_jelly_expansion(n, m, field))
        .collect::<Result<Vec<_>>>()?;
    let mut solved = None;
    'outer: for i in 0..3 {
        for j in i + 1..3 {
            let diff = expansions[i].sub(&expansions[j])?;
            let c = diff.coefficient(&y);
            if c.is_zero() {
                continue;
            }
            let rest = diff.sub(&Morphism::from_diagram(y.clone(), field, n).scale(&c)?)?;
            if rest.terms().keys().any(|d| d.part_count() > n) {
                continue;
            }
            // c·Y + rest = 0.
            solved = Some(rest.scale(&c.inv()?.neg())?);
            break 'outer;
        }
    }
    let solved = Arc::new(solved.ok_or_else(|| {
        Error::Characteristic(format!("cannot isolate the all-singleton diagram for n = {n}"))
    })?);
    cache.lock().unwrap().insert((n, field), solved.clone());
    Ok(solved)
}

/// Rewrite a partition diagram (any type) as a combination of diagrams with
/// at most `n` parts.
pub fn reduce_parts(d: &PartitionDiagram, n: usize, field: FieldSpec) -> Result<Morphism> {
    check_rewriting(field, n)?;
    if d.part_count() <= n {
        return Ok(Morphism::from_diagram(d.clone(), field, n));
    }
    let bent = reduce_parts_bent(&d.bend(), n, field)?;
    if d.top() == 0 {
        Ok((*bent).clone())
    } else {
        bent.unbend(d.top())
    }
}

fn reduce_parts_bent(d: &PartitionDiagram, n: usize, field: FieldSpec) -> Result<Arc<Morphism>> {
    type Cache = Mutex<HashMap<(PartitionDiagram, usize, FieldSpec), Arc<Morphism>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (d.clone(), n, field);
    if let Some(m) = cache.lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let k = d.bottom();
    // D̄ : k -> n+1, top vertex t joined to part t.
    let blocks: Vec<Vec<usize>> = d
        .parts()
        .blocks()
        .iter()
        .enumerate()
        .map(|(t, b)| {
            let mut b = b.clone();
            if t <= n {
                b.push(k + t + 1);
            }
            b
        })
        .collect();
    let lifted = PartitionDiagram::new(k, n + 1, SetPartition::from_blocks(k + n + 1, blocks)?)?;
    let y = y_expansion(n, field)?;
    let step = y.compose_with(&Morphism::from_diagram(lifted, field, n), Exec::Sequential)?;
    let mut out = Morphism::zero(k, 0, field, n);
    for (e, c) in step.terms() {
        let part = if e.part_count() > n {
            (*reduce_parts_bent(e, n, field)?).clone()
        } else {
            Morphism::from_diagram(e.clone(), field, n)
        };
        out = out.add(&part.scale(c)?)?;
    }
    let out = Arc::new(out);
    cache.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

/// `j ∘ D` for `D : k -> n` with at most `n` parts: zero or a signed `j_{D'}`.
pub fn normalize_single_jelly(d: &PartitionDiagram, n: usize) -> Result<super::Signed> {
    if d.top() != n {
        return Err(Error::TypeMismatch(format!(
            "expected a diagram k->{n}, got {}->{}",
            d.bottom(),
            d.top()
        )));
    }
    if d.part_count() > n {
        return Err(Error::OutOfRange(format!(
            "{d} has more than {n} parts"
        )));
    }
    let (_, s) = JellyDiagram::compose(
        &JellyDiagram::generator(n),
        &JellyDiagram::from_partition(d, n),
    )?;
    debug_assert!(s.as_ref().is_none_or(|(_, e)| is_basis_element(e)));
    Ok(s)
}

/// Cut the legs of a single-jellyfish diagram `k -> 0` loose: the partition
/// `k -> n` whose top vertex `i` sits where leg `i` was attached.
fn cut_legs(d: &JellyDiagram) -> PartitionDiagram {
    let k = d.bottom();
    let n = d.n();
    let mut blocks: Vec<Vec<usize>> = d.parts().blocks().to_vec();
    for (i, t) in d.jellies()[0].iter().enumerate() {
        match t {
            LegTarget::Block(b) => blocks[*b].push(k + i + 1),
            LegTarget::Dangling => blocks.push(vec![k + i + 1]),
        }
    }
    PartitionDiagram::new(k, n, SetPartition::from_blocks(k + n, blocks).unwrap()).unwrap()
}

type Terms = Vec<(JellyDiagram, Scalar)>;

/// One rewriting step on a non-basis diagram of type `k -> 0`.
fn rewrite(d: &JellyDiagram, c: &Scalar, field: FieldSpec, strategy: &PairStrategy) -> Result<Terms> {
    let n = d.n();
    let scale = |m: JellyMorphism| -> Terms {
        m.terms()
            .iter()
            .map(|(e, a)| (e.clone(), a * c))
            .collect()
    };
    match d.jelly_count() {
        0 => {
            let p = d.to_partition().unwrap();
            Ok(scale(JellyMorphism::embed(&reduce_parts(&p, n, field)?)))
        }
        1 => {
            let cut = cut_legs(d);
            let mut out = JellyMorphism::zero(d.bottom(), 0, field, n);
            let j = JellyDiagram::generator(n);
            for (z, a) in reduce_parts(&cut, n, field)?.terms() {
                let (beta, s) = JellyDiagram::compose(&j, &JellyDiagram::from_partition(z, n))?;
                debug_assert_eq!(beta, 0);
                out.push_signed(s, a)?;
            }
            Ok(scale(out))
        }
        _ => {
            let (a, b) = strategy(d);
            Ok(scale(reduce_pair(d, a, b, field)?))
        }
    }
}

impl JellyMorphism {
    /// Normal form, pairing jellyfish with [`first_two`].
    pub fn reduce(&self) -> Result<JellyMorphism> {
        self.reduce_with(&first_two, Exec::default())
    }

    /// Normal form with an explicit pairing strategy and execution mode.
    ///
    /// Morphisms `k -> l` with `l > 0` are bent, reduced and unbent, so the
    /// result is expressed through unbent basis elements.
    pub fn reduce_with(&self, strategy: &PairStrategy, exec: Exec) -> Result<JellyMorphism> {
        check_rewriting(self.field(), self.n())?;
        let field = self.field();
        let mut done: BTreeMap<JellyDiagram, Scalar> = BTreeMap::new();
        let mut pending: Vec<(JellyDiagram, Scalar)> =
            self.bend().terms().iter().map(|(d, c)| (d.clone(), c.clone())).collect();
        while !pending.is_empty() {
            let (basis, todo): (Vec<_>, Vec<_>) =
                pending.into_iter().partition(|(d, _)| is_basis_element(d));
            for (d, c) in basis {
                accumulate(&mut done, d, c);
            }
            let rewritten = exec.map(&todo, |(d, c)| rewrite(d, c, field, strategy));
            let mut next = BTreeMap::new();
            for r in rewritten {
                for (d, c) in r? {
                    accumulate(&mut next, d, c);
                }
            }
            pending = next.into_iter().collect();
        }
        let bent = JellyMorphism::from_terms(self.bottom() + self.top(), 0, field, self.n(), done)?;
        if self.top() == 0 {
            Ok(bent)
        } else {
            bent.unbend(self.top())
        }
    }

    /// True when every term is a (possibly unbent) basis element.
    pub fn is_normal(&self) -> bool {
        self.terms().keys().all(|d| match d.bend() {
            Some((_, b)) => is_basis_element(&b),
            None => false,
        })
    }
}
