//! Jellyfish diagrams: a partition of the boundary vertices, extra leg-only
//! blocks, and an ordered list of `n`-legged jellyfish.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::diagram::{bend_vertex, parse_parts, unbend_vertex, write_parts, PartitionDiagram};
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::foundations::{perm, SetPartition};
use crate::text::Cursor;

/// Where a jellyfish leg ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LegTarget {
    /// 0-based index into the diagram's block list.
    Block(usize),
    Dangling,
}

/// Unnormalized jellyfish diagram data.
///
/// `blocks` lists vertex sets over `1..=bottom+top`; an empty set is a
/// leg-only block and must carry at least one leg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawJelly {
    pub bottom: usize,
    pub top: usize,
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
    pub jellies: Vec<Vec<LegTarget>>,
}

/// A canonical jellyfish diagram.
///
/// Blocks `0..parts.part_count()` are the external parts in canonical order;
/// the remaining `internal` blocks carry legs only. Every leg list is sorted,
/// the jellyfish are sorted, and the internal blocks are labelled so that the
/// whole encoding is minimal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JellyDiagram {
    bottom: usize,
    top: usize,
    n: usize,
    parts: SetPartition,
    internal: usize,
    jellies: Vec<Vec<LegTarget>>,
}

/// A canonical diagram together with the sign picked up while sorting legs;
/// `None` means the raw data is zero in `JP(n)`.
pub type Signed = Option<(i8, JellyDiagram)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Ext(usize),
    Int(usize),
    Dangling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Pre {
    Ext(usize),
    Int(usize),
    Dangling,
}

impl RawJelly {
    /// Canonical form and sign, or `None` when a vanishing rule applies.
    pub fn canonicalize(&self) -> Result<Signed> {
        let m = self.bottom + self.top;
        let mut external = Vec::new();
        // Raw block index -> external block list index or internal id.
        let mut kind = Vec::with_capacity(self.blocks.len());
        let mut internal_count = 0;
        for b in &self.blocks {
            if b.is_empty() {
                kind.push(Pre::Int(internal_count));
                internal_count += 1;
            } else {
                kind.push(Pre::Ext(external.len()));
                external.push(b.clone());
            }
        }
        let parts = SetPartition::from_blocks(m, external.clone())?;
        let ext_rank: Vec<usize> = external
            .iter()
            .map(|b| parts.block_of(b[0]).expect("vertex present"))
            .collect();

        let mut legs_on_internal = vec![0usize; internal_count];
        for jelly in &self.jellies {
            if jelly.len() != self.n {
                return Err(Error::Malformed(format!(
                    "jellyfish with {} legs in a diagram with n = {}",
                    jelly.len(),
                    self.n
                )));
            }
            for t in jelly {
                if let LegTarget::Block(i) = *t {
                    match kind.get(i) {
                        None => {
                            return Err(Error::Malformed(format!(
                                "leg points at missing block #{}",
                                i + 1
                            )))
                        }
                        Some(Pre::Int(j)) => legs_on_internal[*j] += 1,
                        _ => {}
                    }
                }
            }
        }
        if legs_on_internal.iter().any(|&c| c == 0) {
            return Err(Error::Malformed("leg-only block without legs".into()));
        }
        // Compact the internal ids that survive (two or more legs).
        let mut compact = vec![usize::MAX; internal_count];
        let mut m_int = 0;
        for (j, &c) in legs_on_internal.iter().enumerate() {
            if c >= 2 {
                compact[j] = m_int;
                m_int += 1;
            }
        }
        let mut jellies: Vec<Vec<Pre>> = Vec::with_capacity(self.jellies.len());
        for jelly in &self.jellies {
            let mut row = Vec::with_capacity(self.n);
            for t in jelly {
                row.push(match *t {
                    LegTarget::Dangling => Pre::Dangling,
                    LegTarget::Block(i) => match kind[i] {
                        Pre::Ext(e) => Pre::Ext(ext_rank[e]),
                        Pre::Int(j) if compact[j] == usize::MAX => Pre::Dangling,
                        Pre::Int(j) => Pre::Int(compact[j]),
                        Pre::Dangling => unreachable!(),
                    },
                });
            }
            if vanishes(&row) {
                return Ok(None);
            }
            jellies.push(row);
        }

        let ext_count = parts.part_count();
        let to_target = |k: Key| match k {
            Key::Ext(i) => LegTarget::Block(i),
            Key::Int(l) => LegTarget::Block(ext_count + l),
            Key::Dangling => LegTarget::Dangling,
        };
        let finish = |sign: i8, enc: Vec<Vec<Key>>| {
            let jellies = enc
                .into_iter()
                .map(|row| row.into_iter().map(to_target).collect())
                .collect();
            Some((
                sign,
                JellyDiagram {
                    bottom: self.bottom,
                    top: self.top,
                    n: self.n,
                    parts: parts.clone(),
                    internal: m_int,
                    jellies,
                },
            ))
        };

        if m_int == 0 {
            let mut sign = 1i8;
            let mut enc: Vec<Vec<Key>> = jellies
                .iter()
                .map(|row| {
                    let mut keys: Vec<Key> = row
                        .iter()
                        .map(|p| match *p {
                            Pre::Ext(i) => Key::Ext(i),
                            _ => Key::Dangling,
                        })
                        .collect();
                    sign *= perm::sorting_sign(&keys);
                    keys.sort_unstable();
                    keys
                })
                .collect();
            enc.sort();
            return Ok(finish(sign, enc));
        }

        let mut search = Search {
            jellies: &jellies,
            labels: vec![None; m_int],
            next_label: 0,
            used: vec![false; jellies.len()],
            prefix: Vec::new(),
            sign: 1,
            best: None,
        };
        search.run();
        Ok(match search.best {
            Some(Best {
                encoding,
                sign,
                conflict: false,
            }) => finish(sign, encoding),
            _ => None,
        })
    }
}

/// Two legs of one jellyfish on a block, or two dangling legs.
fn vanishes(row: &[Pre]) -> bool {
    let dangling = row.iter().filter(|p| **p == Pre::Dangling).count();
    if dangling > 1 {
        return true;
    }
    let mut seen = BTreeSet::new();
    row.iter()
        .filter(|p| **p != Pre::Dangling)
        .any(|p| !seen.insert(*p))
}

struct Best {
    encoding: Vec<Vec<Key>>,
    sign: i8,
    conflict: bool,
}

/// Branch and bound over jellyfish orders and labellings of leg-only blocks,
/// keeping the lexicographically least encoding. Distinct labellings reaching
/// that encoding differ by an automorphism; if their signs disagree the
/// diagram equals its own negative.
struct Search<'a> {
    jellies: &'a [Vec<Pre>],
    labels: Vec<Option<usize>>,
    next_label: usize,
    used: Vec<bool>,
    prefix: Vec<Vec<Key>>,
    sign: i8,
    best: Option<Best>,
}

impl Search<'_> {
    /// Sorted keys of `row`, with unlabelled blocks taking the next labels.
    fn vector(&self, row: &[Pre]) -> Vec<Key> {
        let fresh = row
            .iter()
            .filter(|p| matches!(p, Pre::Int(j) if self.labels[*j].is_none()))
            .count();
        let mut keys: Vec<Key> = row
            .iter()
            .filter_map(|p| match *p {
                Pre::Ext(i) => Some(Key::Ext(i)),
                Pre::Int(j) => self.labels[j].map(Key::Int),
                Pre::Dangling => Some(Key::Dangling),
            })
            .chain((0..fresh).map(|o| Key::Int(self.next_label + o)))
            .collect();
        keys.sort_unstable();
        keys
    }

    fn run(&mut self) {
        let depth = self.prefix.len();
        if depth == self.jellies.len() {
            self.leaf();
            return;
        }
        if let Some(best) = &self.best {
            if self.prefix[..] > best.encoding[..depth] {
                return;
            }
        }
        let mut candidates: Vec<(usize, Vec<Key>)> = Vec::new();
        for (idx, row) in self.jellies.iter().enumerate() {
            if self.used[idx] {
                continue;
            }
            // Identical raw jellyfish lead to identical subtrees.
            if candidates.iter().any(|(c, _)| self.jellies[*c] == *row) {
                continue;
            }
            let v = self.vector(row);
            match candidates.first() {
                Some((_, best)) if v > *best => continue,
                Some((_, best)) if v < *best => candidates.clear(),
                _ => {}
            }
            candidates.push((idx, v));
        }
        if let Some(best) = &self.best {
            if let Some((_, v)) = candidates.first() {
                if *v > best.encoding[depth] && self.prefix[..] == best.encoding[..depth] {
                    return;
                }
            }
        }
        for (idx, v) in candidates {
            let row = &self.jellies[idx];
            let fresh: Vec<usize> = row
                .iter()
                .filter_map(|p| match *p {
                    Pre::Int(j) if self.labels[j].is_none() => Some(j),
                    _ => None,
                })
                .collect();
            for order in perm::all_permutations(fresh.len()) {
                for (o, &slot) in order.iter().enumerate() {
                    self.labels[fresh[slot]] = Some(self.next_label + o);
                }
                self.next_label += fresh.len();
                let keys: Vec<Key> = row
                    .iter()
                    .map(|p| match *p {
                        Pre::Ext(i) => Key::Ext(i),
                        Pre::Int(j) => Key::Int(self.labels[j].unwrap()),
                        Pre::Dangling => Key::Dangling,
                    })
                    .collect();
                let s = perm::sorting_sign(&keys);
                let saved_sign = self.sign;
                self.sign *= s;
                self.used[idx] = true;
                self.prefix.push(v.clone());
                self.run();
                self.prefix.pop();
                self.used[idx] = false;
                self.sign = saved_sign;
                self.next_label -= fresh.len();
                for &j in &fresh {
                    self.labels[j] = None;
                }
            }
        }
    }

    fn leaf(&mut self) {
        match &mut self.best {
            Some(best) if best.encoding == self.prefix => {
                if best.sign != self.sign {
                    best.conflict = true;
                }
            }
            Some(best) if best.encoding < self.prefix => {}
            _ => {
                self.best = Some(Best {
                    encoding: self.prefix.clone(),
                    sign: self.sign,
                    conflict: false,
                })
            }
        }
    }
}

/// Glue blocks along shared vertices; closed leg-free components are counted
/// rather than kept.
pub(crate) struct Gluing {
    bottom: usize,
    top: usize,
    n: usize,
    vertices: Vec<Vec<usize>>,
    jellies: Vec<Vec<Option<usize>>>,
    dsu: DisjointSets,
    extra_loops: usize,
}

impl Gluing {
    pub fn new(bottom: usize, top: usize, n: usize, vertices: Vec<Vec<usize>>) -> Self {
        let len = vertices.len();
        Gluing {
            bottom,
            top,
            n,
            vertices,
            jellies: Vec::new(),
            dsu: DisjointSets::new(len),
            extra_loops: 0,
        }
    }

    pub fn add_jelly(&mut self, legs: Vec<Option<usize>>) {
        self.jellies.push(legs);
    }

    pub fn join(&mut self, a: usize, b: usize) {
        self.dsu.union(a, b);
    }

    pub fn add_loop(&mut self) {
        self.extra_loops += 1;
    }

    /// Closed-component count and the glued raw diagram.
    pub fn finish(mut self) -> (usize, RawJelly) {
        let (ids, count) = self.dsu.component_ids();
        let mut verts = vec![Vec::new(); count];
        let mut legs = vec![0usize; count];
        for (node, vs) in self.vertices.iter().enumerate() {
            verts[ids[node]].extend_from_slice(vs);
        }
        for jelly in &self.jellies {
            for &t in jelly.iter().flatten() {
                legs[ids[t]] += 1;
            }
        }
        let mut new_index = vec![usize::MAX; count];
        let mut blocks = Vec::new();
        let mut beta = self.extra_loops;
        for c in 0..count {
            if verts[c].is_empty() && legs[c] == 0 {
                beta += 1;
            } else {
                new_index[c] = blocks.len();
                blocks.push(std::mem::take(&mut verts[c]));
            }
        }
        let jellies = self
            .jellies
            .iter()
            .map(|j| {
                j.iter()
                    .map(|t| match t {
                        Some(node) => LegTarget::Block(new_index[ids[*node]]),
                        None => LegTarget::Dangling,
                    })
                    .collect()
            })
            .collect();
        (
            beta,
            RawJelly {
                bottom: self.bottom,
                top: self.top,
                n: self.n,
                blocks,
                jellies,
            },
        )
    }
}

impl JellyDiagram {
    /// Assemble without canonicalizing. Only for callers that pair
    /// jellyfish by position before any normalization.
    pub(crate) fn unchecked(
        bottom: usize,
        top: usize,
        n: usize,
        parts: SetPartition,
        internal: usize,
        jellies: Vec<Vec<LegTarget>>,
    ) -> Self {
        JellyDiagram {
            bottom,
            top,
            n,
            parts,
            internal,
            jellies,
        }
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The partition of the boundary vertices.
    pub fn parts(&self) -> &SetPartition {
        &self.parts
    }

    pub fn internal_count(&self) -> usize {
        self.internal
    }

    pub fn block_count(&self) -> usize {
        self.parts.part_count() + self.internal
    }

    pub fn jellies(&self) -> &[Vec<LegTarget>] {
        &self.jellies
    }

    pub fn jelly_count(&self) -> usize {
        self.jellies.len()
    }

    /// Raw form with the same block and leg layout.
    pub fn to_raw(&self) -> RawJelly {
        let mut blocks: Vec<Vec<usize>> = self.parts.blocks().to_vec();
        blocks.extend(std::iter::repeat_with(Vec::new).take(self.internal));
        RawJelly {
            bottom: self.bottom,
            top: self.top,
            n: self.n,
            blocks,
            jellies: self.jellies.clone(),
        }
    }

    pub fn from_partition(d: &PartitionDiagram, n: usize) -> Self {
        JellyDiagram {
            bottom: d.bottom(),
            top: d.top(),
            n,
            parts: d.parts().clone(),
            internal: 0,
            jellies: Vec::new(),
        }
    }

    /// The underlying partition diagram when there are no jellyfish.
    pub fn to_partition(&self) -> Option<PartitionDiagram> {
        if self.jellies.is_empty() {
            Some(PartitionDiagram::new(self.bottom, self.top, self.parts.clone()).unwrap())
        } else {
            None
        }
    }

    /// The generator `j : n -> 0`.
    pub fn generator(n: usize) -> Self {
        JellyDiagram {
            bottom: n,
            top: 0,
            n,
            parts: SetPartition::finest(n),
            internal: 0,
            jellies: vec![(0..n).map(LegTarget::Block).collect()],
        }
    }

    /// `j_D` for `D : k -> 0` with `n` or `n - 1` parts: one leg on each part
    /// in order, the last leg dangling when there are `n - 1` parts.
    pub fn j_d(d: &PartitionDiagram, n: usize) -> Result<Self> {
        let p = d.part_count();
        if d.top() != 0 || n == 0 || !(p == n || p + 1 == n) {
            return Err(Error::OutOfRange(format!(
                "j_D needs a diagram k->0 with {} or {n} parts, got {d}",
                n.saturating_sub(1)
            )));
        }
        let mut legs: Vec<LegTarget> = (0..p).map(LegTarget::Block).collect();
        if p + 1 == n {
            legs.push(LegTarget::Dangling);
        }
        Ok(JellyDiagram {
            bottom: d.bottom(),
            top: 0,
            n,
            parts: d.parts().clone(),
            internal: 0,
            jellies: vec![legs],
        })
    }

    fn ext_vertices(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.parts.blocks().to_vec();
        v.extend(std::iter::repeat_with(Vec::new).take(self.internal));
        v
    }

    fn leg_nodes(&self, offset: usize) -> impl Iterator<Item = Vec<Option<usize>>> + '_ {
        self.jellies.iter().map(move |j| {
            j.iter()
                .map(|t| match t {
                    LegTarget::Block(b) => Some(b + offset),
                    LegTarget::Dangling => None,
                })
                .collect()
        })
    }

    /// `upper ∘ lower`: closed component count and the signed result.
    pub fn compose(upper: &Self, lower: &Self) -> Result<(usize, Signed)> {
        if lower.top != upper.bottom {
            return Err(Error::TypeMismatch(format!(
                "cannot compose {}->{} after {}->{}",
                upper.bottom, upper.top, lower.bottom, lower.top
            )));
        }
        if lower.n != upper.n {
            return Err(Error::ParameterMismatch {
                left: upper.n,
                right: lower.n,
            });
        }
        let (k, l, m) = (lower.bottom, lower.top, upper.top);
        let mut nodes = Vec::new();
        let mut middle_lower = vec![0; l];
        let mut middle_upper = vec![0; l];
        for (bi, b) in lower.ext_vertices().into_iter().enumerate() {
            let mut kept = Vec::new();
            for v in b {
                if v <= k {
                    kept.push(v);
                } else {
                    middle_lower[v - k - 1] = bi;
                }
            }
            nodes.push(kept);
        }
        let offset = nodes.len();
        for (bi, b) in upper.ext_vertices().into_iter().enumerate() {
            let mut kept = Vec::new();
            for v in b {
                if v <= l {
                    middle_upper[v - 1] = offset + bi;
                } else {
                    kept.push(k + v - l);
                }
            }
            nodes.push(kept);
        }
        let mut g = Gluing::new(k, m, lower.n, nodes);
        for t in 0..l {
            g.join(middle_lower[t], middle_upper[t]);
        }
        for legs in lower.leg_nodes(0).chain(upper.leg_nodes(offset)) {
            g.add_jelly(legs);
        }
        let (beta, raw) = g.finish();
        Ok((beta, raw.canonicalize()?))
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Result<Signed> {
        if self.n != other.n {
            return Err(Error::ParameterMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let (k1, l1, k2) = (self.bottom, self.top, other.bottom);
        let mut raw = self.to_raw();
        for b in raw.blocks.iter_mut() {
            for v in b.iter_mut() {
                if *v > k1 {
                    *v += k2;
                }
            }
        }
        let offset = raw.blocks.len();
        for b in other.ext_vertices() {
            raw.blocks.push(
                b.into_iter()
                    .map(|v| if v <= k2 { v + k1 } else { v + k1 + l1 })
                    .collect(),
            );
        }
        for j in &other.jellies {
            raw.jellies.push(
                j.iter()
                    .map(|t| match t {
                        LegTarget::Block(b) => LegTarget::Block(b + offset),
                        LegTarget::Dangling => LegTarget::Dangling,
                    })
                    .collect(),
            );
        }
        raw.bottom += other.bottom;
        raw.top += other.top;
        raw.canonicalize()
    }

    fn remap(&self, bottom: usize, top: usize, f: impl Fn(usize) -> usize) -> Signed {
        let mut raw = self.to_raw();
        for b in raw.blocks.iter_mut() {
            for v in b.iter_mut() {
                *v = f(*v);
            }
        }
        raw.bottom = bottom;
        raw.top = top;
        raw.canonicalize().expect("relabelling keeps the diagram valid")
    }

    /// Bend to type `(k+l) -> 0` with the same cap convention as
    /// [`PartitionDiagram::bend`].
    pub fn bend(&self) -> Signed {
        let (k, l) = (self.bottom, self.top);
        self.remap(k + l, 0, |v| bend_vertex(v, k, l))
    }

    pub fn unbend(&self, split: usize) -> Result<Signed> {
        if self.top != 0 || split > self.bottom {
            return Err(Error::OutOfRange(format!(
                "cannot unbend {}->{} with split {split}",
                self.bottom, self.top
            )));
        }
        let k = self.bottom - split;
        Ok(self.remap(k, split, |v| unbend_vertex(v, k, split)))
    }

    /// Reflect top and bottom; each jellyfish is turned upside down, which
    /// reverses the order of its legs.
    pub fn flip(&self) -> Signed {
        let (k, l) = (self.bottom, self.top);
        let mut raw = self.to_raw();
        for b in raw.blocks.iter_mut() {
            for v in b.iter_mut() {
                *v = if *v <= k { l + *v } else { *v - k };
            }
        }
        for j in raw.jellies.iter_mut() {
            j.reverse();
        }
        raw.bottom = l;
        raw.top = k;
        raw.canonicalize().expect("reflection keeps the diagram valid")
    }

    /// Apply the jellyfish relation to jellyfish `a` and `b`: one signed
    /// closed-component count and result per permutation.
    pub fn pair_terms(&self, a: usize, b: usize) -> Result<Vec<(i8, usize, Signed)>> {
        if a == b || a >= self.jellies.len() || b >= self.jellies.len() {
            return Err(Error::OutOfRange(format!(
                "cannot pair jellyfish {a} and {b} of {}",
                self.jellies.len()
            )));
        }
        let (ja, jb) = (&self.jellies[a], &self.jellies[b]);
        let mut out = Vec::new();
        for sigma in perm::all_permutations(self.n) {
            let mut g = Gluing::new(self.bottom, self.top, self.n, self.ext_vertices());
            for (idx, legs) in self.leg_nodes(0).enumerate() {
                if idx != a && idx != b {
                    g.add_jelly(legs);
                }
            }
            for (i, &si) in sigma.iter().enumerate() {
                match (ja[i], jb[si]) {
                    (LegTarget::Block(x), LegTarget::Block(y)) => g.join(x, y),
                    (LegTarget::Dangling, LegTarget::Dangling) => g.add_loop(),
                    _ => {}
                }
            }
            let (beta, raw) = g.finish();
            out.push((perm::sign(&sigma), beta, raw.canonicalize()?));
        }
        Ok(out)
    }

    pub(crate) fn parse_cursor(cur: &mut Cursor<'_>) -> Result<Signed> {
        cur.expect_str("JP(")?;
        let k = cur.usize()?;
        cur.expect_str("->")?;
        let l = cur.usize()?;
        cur.expect(';')?;
        cur.skip_ws();
        cur.expect_str("n=")?;
        let n = cur.usize()?;
        cur.expect(')')?;
        let blocks = parse_parts(cur, k, l, true)?;
        let mut jellies = Vec::new();
        while cur.eat('J') {
            cur.expect('(')?;
            let mut legs = Vec::new();
            loop {
                if cur.eat('_') {
                    legs.push(LegTarget::Dangling);
                } else {
                    let mark = cur.mark();
                    cur.expect('#')?;
                    let i = cur.usize()?;
                    if i == 0 || i > blocks.len() {
                        return Err(cur.error_at(mark, format!("no block #{i}")));
                    }
                    legs.push(LegTarget::Block(i - 1));
                }
                if cur.eat(')') {
                    break;
                }
                cur.expect(',')?;
            }
            jellies.push(legs);
        }
        let raw = RawJelly {
            bottom: k,
            top: l,
            n,
            blocks,
            jellies,
        };
        raw.canonicalize().map_err(|e| cur.error(e.to_string()))
    }
}

impl FromStr for JellyDiagram {
    type Err = Error;

    /// Parses a diagram that is already canonical up to a positive sign.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s.trim());
        let parsed = JellyDiagram::parse_cursor(&mut cur)?;
        cur.finish()?;
        match parsed {
            Some((1, d)) => Ok(d),
            Some(_) => Err(Error::parse(1, 1, "diagram carries a sign; use a morphism")),
            None => Err(Error::parse(1, 1, "diagram is zero")),
        }
    }
}

impl fmt::Display for JellyDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JP({}->{}; n={})", self.bottom, self.top, self.n)?;
        let empty: Vec<usize> = Vec::new();
        write_parts(
            f,
            self.bottom,
            self.parts
                .blocks()
                .iter()
                .map(|b| b.as_slice())
                .chain(std::iter::repeat_n(empty.as_slice(), self.internal)),
        )?;
        for j in &self.jellies {
            write!(f, "J(")?;
            for (i, t) in j.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                match t {
                    LegTarget::Block(b) => write!(f, "#{}", b + 1)?,
                    LegTarget::Dangling => write!(f, "_")?,
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for JellyDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
