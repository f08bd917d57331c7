//! The functors `Φ : P(n) -> Rep(S_n)` and `Ψ : JP(n) -> Rep(A_n)`.

use std::collections::BTreeMap;

use super::tensor::{tuple_at, tuple_count, tuple_rank, TensorMap};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::foundations::{perm, FieldSpec, Scalar};
use crate::jellycat::{JellyDiagram, JellyMorphism, LegTarget};
use crate::pcat::{accumulate, Morphism};

/// Block index of each boundary vertex, 0-based by vertex.
fn block_labels(blocks: &[Vec<usize>], vertices: usize) -> Vec<usize> {
    let mut of = vec![0; vertices];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            of[v - 1] = b;
        }
    }
    of
}

/// Force block labels from a bottom tuple; `None` when two bottom vertices
/// of one block disagree.
fn forced_labels(of: &[usize], blocks: usize, tuple: &[usize]) -> Option<Vec<usize>> {
    let mut label = vec![0; blocks];
    for (v, &i) in tuple.iter().enumerate() {
        let b = of[v];
        if label[b] == 0 {
            label[b] = i;
        } else if label[b] != i {
            return None;
        }
    }
    Some(label)
}

/// Enumerate every completion of the zero entries of `label` by values in
/// `1..=n`, restricted to the positions in `free`.
fn for_each_completion(label: &mut [usize], free: &[usize], n: usize, f: &mut impl FnMut(&[usize])) {
    match free.split_first() {
        None => f(label),
        Some((&b, rest)) => {
            for i in 1..=n {
                label[b] = i;
                for_each_completion(label, rest, n, f);
            }
            label[b] = 0;
        }
    }
}

pub fn phi(d: &PartitionDiagram, n: usize, field: FieldSpec) -> Result<TensorMap> {
    phi_with(d, n, field, Exec::default())
}

/// `Φ(D)`: the column of `v_i` sums `v_{i'}` over all top labelings that
/// are constant on every part and agree with `i` on the bottom row.
pub fn phi_with(d: &PartitionDiagram, n: usize, field: FieldSpec, exec: Exec) -> Result<TensorMap> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let (k, l) = (d.bottom(), d.top());
    let blocks = d.parts().blocks();
    let of = block_labels(blocks, k + l);
    let free: Vec<usize> = (0..blocks.len())
        .filter(|&b| blocks[b].iter().all(|&v| v > k))
        .collect();
    tuple_count(n, l)?;
    let one = Scalar::one(field);
    let columns = exec.map_range(tuple_count(n, k)?, |c| {
        let mut col = BTreeMap::new();
        let Some(mut label) = forced_labels(&of, blocks.len(), &tuple_at(n, k, c)) else {
            return col;
        };
        for_each_completion(&mut label, &free, n, &mut |label| {
            let top: Vec<usize> = (k..k + l).map(|v| label[of[v]]).collect();
            accumulate(&mut col, tuple_rank(n, &top), one.clone());
        });
        col
    });
    TensorMap::from_columns(n, k, l, field, columns)
}

/// `Φ` of a linear combination.
pub fn phi_morphism(m: &Morphism, exec: Exec) -> Result<TensorMap> {
    let mut acc = TensorMap::zero(m.n(), m.bottom(), m.top(), m.field())?;
    for (d, c) in m.terms() {
        acc = acc.add(&phi_with(d, m.n(), m.field(), exec)?.scale(c))?;
    }
    Ok(acc)
}

/// The determinant as a functional on `V^{⊗n}`.
pub fn det_map(n: usize, field: FieldSpec) -> Result<TensorMap> {
    let mut columns = vec![BTreeMap::new(); tuple_count(n, n)?];
    for sigma in perm::all_permutations(n) {
        let tuple: Vec<usize> = sigma.iter().map(|i| i + 1).collect();
        columns[tuple_rank(n, &tuple)].insert(0, Scalar::from_int(field, perm::sign(&sigma) as i64));
    }
    TensorMap::from_columns(n, n, 0, field, columns)
}

pub fn psi_diagram(d: &JellyDiagram, field: FieldSpec) -> Result<TensorMap> {
    psi_diagram_with(d, field, Exec::default())
}

/// Variable slots of a jellyfish contraction: one per block and one per
/// dangling leg.
struct Contraction {
    k: usize,
    l: usize,
    n: usize,
    of: Vec<usize>,
    blocks: usize,
    /// Per jellyfish, the slot of each leg.
    legs: Vec<Vec<usize>>,
    /// Slots not fixed by the bottom row, in assignment order.
    free: Vec<usize>,
}

impl Contraction {
    fn new(d: &JellyDiagram) -> Self {
        let (k, l, n) = (d.bottom(), d.top(), d.n());
        let mut blocks: Vec<Vec<usize>> = d.parts().blocks().to_vec();
        blocks.extend(std::iter::repeat_with(Vec::new).take(d.internal_count()));
        let of = block_labels(&blocks, k + l);
        let mut slots = blocks.len();
        let legs: Vec<Vec<usize>> = d
            .jellies()
            .iter()
            .map(|j| {
                j.iter()
                    .map(|t| match t {
                        LegTarget::Block(b) => *b,
                        LegTarget::Dangling => {
                            slots += 1;
                            slots - 1
                        }
                    })
                    .collect()
            })
            .collect();
        let free = (0..slots)
            .filter(|&s| s >= blocks.len() || blocks[s].iter().all(|&v| v > k))
            .collect();
        Contraction {
            k,
            l,
            n,
            of,
            blocks: blocks.len(),
            legs,
            free,
        }
    }

    fn slots(&self) -> usize {
        self.blocks + self.legs.iter().flatten().filter(|&&s| s >= self.blocks).count()
    }

    /// Whether no jellyfish sees a repeated label among assigned slots.
    fn admissible(&self, label: &[usize]) -> bool {
        self.legs.iter().all(|legs| {
            let mut seen = 0u64;
            legs.iter().all(|&s| {
                let i = label[s];
                if i == 0 {
                    return true;
                }
                let bit = 1u64 << i;
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
    }

    fn search(&self, label: &mut [usize], depth: usize, col: &mut BTreeMap<usize, i64>) {
        if depth == self.free.len() {
            let mut sign = 1i8;
            for legs in &self.legs {
                let p: Vec<usize> = legs.iter().map(|&s| label[s] - 1).collect();
                sign *= perm::sign(&p);
            }
            let top: Vec<usize> = (self.k..self.k + self.l).map(|v| label[self.of[v]]).collect();
            *col.entry(tuple_rank(self.n, &top)).or_insert(0) += sign as i64;
            return;
        }
        let s = self.free[depth];
        for i in 1..=self.n {
            label[s] = i;
            if self.admissible(label) {
                self.search(label, depth + 1, col);
            }
        }
        label[s] = 0;
    }

    fn column(&self, c: usize) -> BTreeMap<usize, i64> {
        let mut col = BTreeMap::new();
        let Some(forced) = forced_labels(&self.of, self.blocks, &tuple_at(self.n, self.k, c)) else {
            return col;
        };
        let mut label = forced;
        label.resize(self.slots(), 0);
        if self.admissible(&label) {
            self.search(&mut label, 0, &mut col);
        }
        col
    }
}

/// `Ψ` of a single jellyfish diagram, by direct contraction: every block and
/// every dangling leg carries a summation index, and each jellyfish
/// contributes the determinant of the unit vectors on its legs.
pub fn psi_diagram_with(d: &JellyDiagram, field: FieldSpec, exec: Exec) -> Result<TensorMap> {
    let n = d.n();
    if n == 0 || n > 63 {
        return Err(Error::OutOfRange(format!("n = {n}")));
    }
    tuple_count(n, d.top())?;
    let con = Contraction::new(d);
    let columns = exec.map_range(tuple_count(n, d.bottom())?, |c| {
        con.column(c)
            .into_iter()
            .map(|(r, v)| (r, Scalar::from_int(field, v)))
            .collect()
    });
    TensorMap::from_columns(n, d.bottom(), d.top(), field, columns)
}

pub fn psi(m: &JellyMorphism) -> Result<TensorMap> {
    psi_with(m, Exec::default())
}

/// `Ψ` of a linear combination of jellyfish diagrams.
pub fn psi_with(m: &JellyMorphism, exec: Exec) -> Result<TensorMap> {
    let mut acc = TensorMap::zero(m.n(), m.bottom(), m.top(), m.field())?;
    for (d, c) in m.terms() {
        acc = acc.add(&psi_diagram_with(d, m.field(), exec)?.scale(c))?;
    }
    Ok(acc)
}
