//! Partition diagrams `k -> l`, their composition with the count of closed
//! middle components, tensor product, and the special diagrams used by the
//! rest of the crate.
//!
//! Vertex convention: `1..=k` are the bottom row, `k+1..=k+l` the top row
//! (`j'` is vertex `k + j`).

mod text;

pub(crate) use text::{parse_parts, write_parts};

use std::fmt;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::foundations::{enumerate_set_partitions, perm, SetPartition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram {
    bottom: usize,
    top: usize,
    parts: SetPartition,
}

/// A vertex of a diagram, in the paper-style labelling (`i` or `i'`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vertex {
    Bottom(usize),
    Top(usize),
}

impl PartitionDiagram {
    pub fn new(bottom: usize, top: usize, parts: SetPartition) -> Result<Self> {
        if parts.ground_size() != bottom + top {
            return Err(Error::GroundSizeMismatch {
                left: parts.ground_size(),
                right: bottom + top,
            });
        }
        Ok(PartitionDiagram { bottom, top, parts })
    }

    /// Build from blocks of [`Vertex`] labels.
    pub fn from_vertices(bottom: usize, top: usize, blocks: &[&[Vertex]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|v| match *v {
                        Vertex::Bottom(i) if (1..=bottom).contains(&i) => Ok(i),
                        Vertex::Top(j) if (1..=top).contains(&j) => Ok(bottom + j),
                        v => Err(Error::OutOfRange(format!("{v:?} in {bottom}->{top}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bottom, top, SetPartition::from_blocks(bottom + top, blocks)?)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn parts(&self) -> &SetPartition {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.part_count()
    }

    pub fn vertex(&self, v: usize) -> Vertex {
        if v <= self.bottom {
            Vertex::Bottom(v)
        } else {
            Vertex::Top(v - self.bottom)
        }
    }

    pub fn identity(k: usize) -> Self {
        let blocks = (1..=k).map(|i| vec![i, k + i]).collect();
        Self::new(k, k, SetPartition::from_blocks(2 * k, blocks).unwrap()).unwrap()
    }

    /// The empty diagram `0 -> 0`.
    pub fn empty() -> Self {
        Self::identity(0)
    }

    /// Every diagram of type `k -> l`.
    pub fn all(k: usize, l: usize) -> Vec<Self> {
        enumerate_set_partitions(k + l)
            .into_iter()
            .map(|p| PartitionDiagram {
                bottom: k,
                top: l,
                parts: p,
            })
            .collect()
    }

    /// Stack `upper` on top of `lower` (`upper ∘ lower`).
    ///
    /// Returns the number of closed middle components and the resulting
    /// diagram; the morphism layer turns the count into a power of `n`.
    pub fn compose(upper: &Self, lower: &Self) -> Result<(usize, Self)> {
        if lower.top != upper.bottom {
            return Err(Error::TypeMismatch(format!(
                "cannot compose {}->{} after {}->{}",
                upper.bottom, upper.top, lower.bottom, lower.top
            )));
        }
        let (k, l, m) = (lower.bottom, lower.top, upper.top);
        // Nodes: 0..k bottom, k..k+l middle, k+l..k+l+m top.
        let mut dsu = DisjointSets::new(k + l + m);
        for b in lower.parts.blocks() {
            for w in b.windows(2) {
                dsu.union(w[0] - 1, w[1] - 1);
            }
        }
        for b in upper.parts.blocks() {
            // upper vertex v (1-based) sits at node k + v - 1.
            for w in b.windows(2) {
                dsu.union(k + w[0] - 1, k + w[1] - 1);
            }
        }
        let (ids, count) = dsu.component_ids();
        let mut outer = vec![false; count];
        for (node, &c) in ids.iter().enumerate() {
            if node < k || node >= k + l {
                outer[c] = true;
            }
        }
        let beta = outer.iter().filter(|o| !**o).count();
        let labels: Vec<usize> = (0..k).chain(k + l..k + l + m).map(|node| ids[node]).collect();
        Ok((beta, Self::new(k, m, SetPartition::from_labels(&labels))?))
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Self {
        let (k1, l1, k2, l2) = (self.bottom, self.top, other.bottom, other.top);
        let shift_left = |v: usize| if v <= k1 { v } else { v + k2 };
        let shift_right = |v: usize| if v <= k2 { v + k1 } else { v + k1 + l1 };
        let blocks = self
            .parts
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&v| shift_left(v)).collect())
            .chain(
                other
                    .parts
                    .blocks()
                    .iter()
                    .map(|b| b.iter().map(|&v| shift_right(v)).collect()),
            )
            .collect();
        let _ = l2;
        Self::new(
            k1 + k2,
            l1 + l2,
            SetPartition::from_blocks(k1 + k2 + l1 + l2, blocks).unwrap(),
        )
        .unwrap()
    }

    /// Reflect in the horizontal axis: `k -> l` becomes `l -> k`.
    pub fn flip(&self) -> Self {
        let (k, l) = (self.bottom, self.top);
        let blocks = self
            .parts
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&v| if v <= k { l + v } else { v - k })
                    .collect()
            })
            .collect();
        Self::new(l, k, SetPartition::from_blocks(k + l, blocks).unwrap()).unwrap()
    }

    /// The permutation diagram with blocks `{m, σ(m)'}`; `sigma` is a
    /// 0-based image vector.
    pub fn permutation(sigma: &[usize]) -> Result<Self> {
        if !perm::is_permutation(sigma) {
            return Err(Error::InvalidPermutation(format!("{sigma:?}")));
        }
        let k = sigma.len();
        let blocks = (0..k).map(|m| vec![m + 1, k + sigma[m] + 1]).collect();
        Self::new(k, k, SetPartition::from_blocks(2 * k, blocks)?)
    }

    /// The adjacent transposition `s_i` on `k` strands (`1 <= i < k`).
    pub fn s_i(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::OutOfRange(format!("s_{i} on {k} strands")));
        }
        let mut sigma: Vec<usize> = (0..k).collect();
        sigma.swap(i - 1, i);
        Self::permutation(&sigma)
    }

    /// `2n -> 0`, joining vertex `i` to vertex `n + i`.
    pub fn crosscap(n: usize) -> Self {
        let blocks = (1..=n).map(|i| vec![i, n + i]).collect();
        Self::new(2 * n, 0, SetPartition::from_blocks(2 * n, blocks).unwrap()).unwrap()
    }

    /// Bend the top row down to the right: `j'` becomes bottom vertex
    /// `k + l + 1 - j`.
    pub fn bend(&self) -> Self {
        let (k, l) = (self.bottom, self.top);
        let blocks = self
            .parts
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&v| bend_vertex(v, k, l)).collect())
            .collect();
        Self::new(k + l, 0, SetPartition::from_blocks(k + l, blocks).unwrap()).unwrap()
    }

    /// Inverse of [`PartitionDiagram::bend`]: the last `split` bottom vertices
    /// become the top row.
    pub fn unbend(&self, split: usize) -> Result<Self> {
        if self.top != 0 {
            return Err(Error::TypeMismatch(format!(
                "unbend expects a diagram of type m->0, got {}->{}",
                self.bottom, self.top
            )));
        }
        if split > self.bottom {
            return Err(Error::OutOfRange(format!(
                "split {split} exceeds {} vertices",
                self.bottom
            )));
        }
        let k = self.bottom - split;
        let blocks = self
            .parts
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&v| unbend_vertex(v, k, split)).collect())
            .collect();
        Self::new(
            k,
            split,
            SetPartition::from_blocks(self.bottom, blocks).unwrap(),
        )
    }

    // Generators.

    /// `μ : 2 -> 1`.
    pub fn mu() -> Self {
        Self::new(2, 1, SetPartition::coarsest(3)).unwrap()
    }

    /// `η : 0 -> 1`.
    pub fn eta() -> Self {
        Self::new(0, 1, SetPartition::finest(1)).unwrap()
    }

    /// `Δ : 1 -> 2`.
    pub fn delta() -> Self {
        Self::mu().flip()
    }

    /// `ε : 1 -> 0`.
    pub fn epsilon() -> Self {
        Self::eta().flip()
    }

    /// The symmetric braiding `s : 2 -> 2`.
    pub fn swap() -> Self {
        Self::s_i(2, 1).unwrap()
    }
}

pub(crate) fn bend_vertex(v: usize, k: usize, l: usize) -> usize {
    if v <= k {
        v
    } else {
        k + l + 1 - (v - k)
    }
}

pub(crate) fn unbend_vertex(v: usize, k: usize, l: usize) -> usize {
    if v <= k {
        v
    } else {
        k + (k + l + 1 - v)
    }
}

impl fmt::Debug for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests;
