//! The triangular `x_D` basis: `x_D = D - Σ_{D' > D} x_{D'}`.
//!
//! Unwinding the recursion, the coefficient of `D' ≥ D` in `x_D` depends only
//! on how `D'` groups the blocks of `D`, so one table per block count serves
//! every diagram.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::PartitionDiagram;
use crate::foundations::{enumerate_set_partitions, is_coarsening, SetPartition};

type Table = Arc<HashMap<SetPartition, BigInt>>;

/// For each grouping `G` of `p` blocks, the coefficient of the merged
/// diagram in `x_D` when `D` has `p` blocks.
fn grouping_table(p: usize) -> Table {
    static CACHE: OnceLock<Mutex<HashMap<usize, Table>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&p) {
        return t.clone();
    }
    let mut groupings = enumerate_set_partitions(p);
    // Finest first, so every strict refinement is filled in before use.
    groupings.sort_by_key(|g| std::cmp::Reverse(g.part_count()));
    let mut table: HashMap<SetPartition, BigInt> = HashMap::with_capacity(groupings.len());
    for (i, g) in groupings.iter().enumerate() {
        let value = if i == 0 {
            BigInt::one()
        } else {
            let mut acc = BigInt::zero();
            for h in &groupings[..i] {
                if h.part_count() > g.part_count() && is_coarsening(h, g).unwrap() {
                    acc -= &table[h];
                }
            }
            acc
        };
        table.insert(g.clone(), value);
    }
    let table = Arc::new(table);
    cache.lock().unwrap().insert(p, table.clone());
    table
}

/// Coefficient of `coarse` in the expansion of `x_fine`, or `None` unless
/// `coarse ≥ fine` with matching types.
pub fn mobius_coefficient(fine: &PartitionDiagram, coarse: &PartitionDiagram) -> Option<BigInt> {
    if (fine.bottom(), fine.top()) != (coarse.bottom(), coarse.top())
        || !is_coarsening(fine.parts(), coarse.parts()).ok()?
    {
        return None;
    }
    let labels = coarse.parts().labels();
    let grouping: Vec<usize> = fine
        .parts()
        .blocks()
        .iter()
        .map(|b| labels[b[0] - 1])
        .collect();
    let g = SetPartition::from_labels(&grouping);
    Some(grouping_table(fine.part_count())[&g].clone())
}

/// The expansion of `x_D` in the diagram basis, with integer coefficients.
pub fn x_expansion(d: &PartitionDiagram) -> Arc<Vec<(PartitionDiagram, BigInt)>> {
    static CACHE: OnceLock<Mutex<HashMap<PartitionDiagram, Arc<Vec<(PartitionDiagram, BigInt)>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(d) {
        return v.clone();
    }
    let table = grouping_table(d.part_count());
    let mut terms: Vec<(PartitionDiagram, BigInt)> = enumerate_set_partitions(d.part_count())
        .into_iter()
        .map(|g| {
            let merged = d.parts().merge_blocks(&g).unwrap();
            let coeff = table[&g].clone();
            (
                PartitionDiagram::new(d.bottom(), d.top(), merged).unwrap(),
                coeff,
            )
        })
        .collect();
    terms.sort();
    let terms = Arc::new(terms);
    cache.lock().unwrap().insert(d.clone(), terms.clone());
    terms
}
