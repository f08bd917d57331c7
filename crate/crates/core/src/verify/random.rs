//! Seeded random jellyfish morphisms.

use rand::Rng;

use crate::foundations::{FieldSpec, Scalar};
use crate::jellycat::{JellyDiagram, JellyMorphism, LegTarget, RawJelly};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// A random nonzero jellyfish diagram `k -> l` with at most `max_jellies`
/// jellyfish.
pub fn random_jelly_diagram<R: Rng>(rng: &mut R, n: usize, k: usize, l: usize, max_jellies: usize) -> JellyDiagram {
    let m = k + l;
    loop {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); m];
        for v in 1..=m {
            blocks[rng.random_range(0..m)].push(v);
        }
        blocks.retain(|b| !b.is_empty());
        let internal = rng.random_range(0..=2);
        blocks.extend(std::iter::repeat_with(Vec::new).take(internal));
        let count = blocks.len();
        let jellies = (0..rng.random_range(0..=max_jellies))
            .map(|_| {
                (0..n)
                    .map(|_| match rng.random_range(0..count + 1) {
                        b if b < count => LegTarget::Block(b),
                        _ => LegTarget::Dangling,
                    })
                    .collect()
            })
            .collect();
        let raw = RawJelly {
            bottom: k,
            top: l,
            n,
            blocks,
            jellies,
        };
        if let Ok(Some((_, d))) = raw.canonicalize() {
            return d;
        }
    }
}

/// A random combination of up to `max_terms` diagrams with coefficients in
/// `-3..=3`.
pub fn random_jelly_morphism<R: Rng>(
    rng: &mut R,
    n: usize,
    k: usize,
    l: usize,
    field: FieldSpec,
    max_terms: usize,
    max_jellies: usize,
) -> JellyMorphism {
    let terms: Vec<_> = (0..rng.random_range(1..=max_terms.max(1)))
        .map(|_| {
            let d = random_jelly_diagram(rng, n, k, l, max_jellies);
            (d, Scalar::from_int(field, rng.random_range(-3..=3)))
        })
        .collect();
    JellyMorphism::from_terms(k, l, field, n, terms).expect("diagrams share the type")
}
