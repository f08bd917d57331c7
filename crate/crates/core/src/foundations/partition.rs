use std::fmt;

use crate::error::{Error, Result};

/// A set partition of `{1..m}` in canonical form: each block ascending,
/// blocks ordered by their minimum element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes `blocks` over `{1..ground}`.
    pub fn from_blocks(ground: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; ground + 1];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if v == 0 || v > ground {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} outside 1..{ground}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = (1..=ground).find(|&v| !seen[v]) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { ground, blocks })
    }

    /// Groups vertex `i + 1` with every vertex carrying the same label.
    pub fn from_labels<L: Eq>(labels: &[L]) -> Self {
        let mut reps: Vec<&L> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            match reps.iter().position(|r| *r == l) {
                Some(b) => blocks[b].push(i + 1),
                None => {
                    reps.push(l);
                    blocks.push(vec![i + 1]);
                }
            }
        }
        // First-appearance order is already ordered by minimum element.
        SetPartition {
            ground: labels.len(),
            blocks,
        }
    }

    pub fn finest(m: usize) -> Self {
        SetPartition {
            ground: m,
            blocks: (1..=m).map(|v| vec![v]).collect(),
        }
    }

    pub fn coarsest(m: usize) -> Self {
        SetPartition {
            ground: m,
            blocks: if m == 0 { vec![] } else { vec![(1..=m).collect()] },
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn part_count(&self) -> usize {
        self.blocks.len()
    }

    /// Restricted growth string: 0-based block index of each vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.ground];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v - 1] = b;
            }
        }
        out
    }

    /// Index of the block containing vertex `v` (1-based vertex).
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }

    /// Merge blocks of `self` according to a partition of the block indices
    /// (`grouping` lives on `{1..part_count}`).
    pub fn merge_blocks(&self, grouping: &SetPartition) -> Result<SetPartition> {
        if grouping.ground != self.blocks.len() {
            return Err(Error::GroundSizeMismatch {
                left: grouping.ground,
                right: self.blocks.len(),
            });
        }
        let merged = grouping
            .blocks
            .iter()
            .map(|g| g.iter().flat_map(|&b| self.blocks[b - 1].iter().copied()).collect())
            .collect();
        SetPartition::from_blocks(self.ground, merged)
    }

    /// All partitions `Q` with `self <= Q`, including `self`.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        enumerate_set_partitions(self.blocks.len())
            .iter()
            .map(|g| self.merge_blocks(g).expect("grouping matches block count"))
            .collect()
    }
}

/// True iff every block of `fine` lies inside a block of `coarse`.
pub fn is_coarsening(fine: &SetPartition, coarse: &SetPartition) -> Result<bool> {
    if fine.ground != coarse.ground {
        return Err(Error::GroundSizeMismatch {
            left: fine.ground,
            right: coarse.ground,
        });
    }
    let labels = coarse.labels();
    Ok(fine
        .blocks
        .iter()
        .all(|b| b.iter().all(|&v| labels[v - 1] == labels[b[0] - 1])))
}

/// Every set partition of `{1..m}`, in restricted-growth-string order.
pub fn enumerate_set_partitions(m: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; m];
    // maxes[i] = max(rgs[0..i]) so that rgs[i] may range over 0..=maxes[i]+1.
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == rgs.len() {
            out.push(SetPartition::from_labels(rgs));
            return;
        }
        let upper = if i == 0 { 0 } else { max + 1 };
        for v in 0..=upper {
            rgs[i] = v;
            rec(i + 1, max.max(v), rgs, out);
        }
    }
    rec(0, 0, &mut rgs, &mut out);
    out
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "{{")?;
            for (i, v) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition[{}]({self})", self.ground)
    }
}
