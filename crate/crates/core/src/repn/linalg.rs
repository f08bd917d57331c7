//! Exact rank of a family of sparse vectors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::foundations::{inv_mod, mul_mod, FieldKind, FieldSpec, Scalar};

/// Rank of the span of `vectors` (sparse, index-sorted or not) over `field`.
///
/// Rational input is scaled to integer vectors and eliminated
/// fraction-free with content removal; prime fields use residues.
pub fn rank(vectors: &[Vec<(usize, Scalar)>], field: FieldSpec) -> usize {
    match field.kind() {
        FieldKind::Rationals => {
            let mut e = IntegerEchelon::default();
            vectors
                .iter()
                .filter(|v| e.insert(integer_vector(v)))
                .count()
        }
        FieldKind::Prime(p) => {
            let mut e = ModularEchelon {
                p,
                pivots: BTreeMap::new(),
            };
            vectors
                .iter()
                .filter(|v| {
                    e.insert(
                        v.iter()
                            .filter_map(|(i, x)| {
                                let r = x.to_bigint().expect("residue");
                                let r = u64::try_from(r).expect("residue fits");
                                (r != 0).then_some((*i, r))
                            })
                            .collect(),
                    )
                })
                .count()
        }
    }
}

fn integer_vector(v: &[(usize, Scalar)]) -> BTreeMap<usize, BigInt> {
    let mut den = BigInt::one();
    for (_, x) in v {
        den = den.lcm(x.as_rational().expect("rational entries").denom());
    }
    v.iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| {
            let r = x.as_rational().unwrap();
            (*i, r.numer() * (&den / r.denom()))
        })
        .collect()
}

#[derive(Default)]
struct IntegerEchelon {
    pivots: BTreeMap<usize, BTreeMap<usize, BigInt>>,
}

impl IntegerEchelon {
    /// Reduce `v` against the pivots; store it and return true when a new
    /// leading index survives.
    fn insert(&mut self, mut v: BTreeMap<usize, BigInt>) -> bool {
        loop {
            let Some((&lead, a)) = v.iter().next() else {
                return false;
            };
            let Some(p) = self.pivots.get(&lead) else {
                let g = v.values().fold(BigInt::zero(), |g, x| g.gcd(x));
                for x in v.values_mut() {
                    *x /= &g;
                }
                self.pivots.insert(lead, v);
                return true;
            };
            let b = &p[&lead];
            let g = a.gcd(b);
            let (sa, sb) = (b / &g, a / &g);
            let mut out = BTreeMap::new();
            for (i, x) in &v {
                out.insert(*i, x * &sa);
            }
            for (i, y) in p {
                let e = out.entry(*i).or_insert_with(BigInt::zero);
                *e -= y * &sb;
            }
            out.retain(|_, x| !x.is_zero());
            let g = out.values().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in out.values_mut() {
                    *x /= &g;
                }
            }
            if out.values().next().is_some_and(|x| x.is_negative()) {
                for x in out.values_mut() {
                    *x = -&*x;
                }
            }
            v = out;
        }
    }
}

struct ModularEchelon {
    p: u64,
    pivots: BTreeMap<usize, BTreeMap<usize, u64>>,
}

impl ModularEchelon {
    fn insert(&mut self, mut v: BTreeMap<usize, u64>) -> bool {
        let p = self.p;
        loop {
            let Some((&lead, &a)) = v.iter().next() else {
                return false;
            };
            let Some(piv) = self.pivots.get(&lead) else {
                let inv = inv_mod(a, p);
                for x in v.values_mut() {
                    *x = mul_mod(*x, inv, p);
                }
                self.pivots.insert(lead, v);
                return true;
            };
            // Pivots are monic, so subtract `a` times the pivot.
            for (i, y) in piv {
                let e = v.entry(*i).or_insert(0);
                *e = (*e + p - mul_mod(a, *y, p)) % p;
            }
            v.retain(|_, x| *x != 0);
        }
    }
}
