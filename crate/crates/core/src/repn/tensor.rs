//! Exact linear maps between tensor powers of `V = k^n`, stored by column.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::foundations::{FieldSpec, Scalar};
use crate::pcat::accumulate;

/// Rank of the tuple `(i_1, …, i_k)` (entries in `1..=n`), `i_1` most
/// significant.
pub fn tuple_rank(n: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * n + (i - 1))
}

/// Inverse of [`tuple_rank`].
pub fn tuple_at(n: usize, k: usize, mut rank: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for slot in t.iter_mut().rev() {
        *slot = rank % n + 1;
        rank /= n;
    }
    t
}

/// Number of basis tuples of `V^{⊗k}`.
pub fn tuple_count(n: usize, k: usize) -> Result<usize> {
    n.checked_pow(k as u32)
        .ok_or_else(|| Error::OutOfRange(format!("{n}^{k} basis vectors")))
}

/// A linear map `V^{⊗k} -> V^{⊗l}` as an `n^l × n^k` matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorMap {
    n: usize,
    k: usize,
    l: usize,
    field: FieldSpec,
    /// Per column, nonzero entries sorted by row.
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl TensorMap {
    pub fn zero(n: usize, k: usize, l: usize, field: FieldSpec) -> Result<Self> {
        Ok(TensorMap {
            n,
            k,
            l,
            field,
            columns: vec![Vec::new(); tuple_count(n, k)?],
        })
    }

    pub fn identity(n: usize, k: usize, field: FieldSpec) -> Result<Self> {
        let cols = tuple_count(n, k)?;
        Ok(TensorMap {
            n,
            k,
            l: k,
            field,
            columns: (0..cols).map(|c| vec![(c, Scalar::one(field))]).collect(),
        })
    }

    /// Build from sparse columns; entries are sorted and zeros dropped.
    pub fn from_columns(
        n: usize,
        k: usize,
        l: usize,
        field: FieldSpec,
        columns: Vec<BTreeMap<usize, Scalar>>,
    ) -> Result<Self> {
        let rows = tuple_count(n, l)?;
        if columns.len() != tuple_count(n, k)? {
            return Err(Error::OutOfRange(format!(
                "{} columns for a map out of V^{k} with n = {n}",
                columns.len()
            )));
        }
        let columns = columns
            .into_iter()
            .map(|col| {
                col.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(r, v)| {
                        if r >= rows || v.field() != field {
                            Err(Error::OutOfRange(format!("entry at row {r}")))
                        } else {
                            Ok((r, v))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TensorMap {
            n,
            k,
            l,
            field,
            columns,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain_power(&self) -> usize {
        self.k
    }

    pub fn codomain_power(&self) -> usize {
        self.l
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.n.pow(self.l as u32)
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c]
            .binary_search_by_key(&r, |(row, _)| *row)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_else(|_| Scalar::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Entries `(row, col, value)` in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    /// The single row of a functional (`l = 0`) as a sparse vector.
    pub fn as_row(&self) -> Vec<(usize, Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .filter_map(|(c, col)| col.first().map(|(_, v)| (c, v.clone())))
            .collect()
    }

    /// Flatten into a sparse vector indexed by `row * cols + col`.
    pub fn flatten(&self) -> Vec<(usize, Scalar)> {
        let cols = self.cols();
        let mut out: Vec<_> = self
            .entries()
            .into_iter()
            .map(|(r, c, v)| (r * cols + c, v))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.n, self.k, self.l, self.field) != (other.n, other.k, other.l, other.field) {
            return Err(Error::TypeMismatch("matrix shapes differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut m: BTreeMap<usize, Scalar> = a.iter().cloned().collect();
                for (r, v) in b {
                    accumulate(&mut m, *r, v.clone());
                }
                m.into_iter().collect()
            })
            .collect();
        Ok(TensorMap {
            columns,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(r, v)| (*r, v * c))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        TensorMap {
            columns,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Scalar::from_int(self.field, -1)))
    }

    /// `self ∘ lower`.
    pub fn compose(&self, lower: &Self) -> Result<Self> {
        if lower.l != self.k || lower.n != self.n || lower.field != self.field {
            return Err(Error::TypeMismatch("matrix shapes do not compose".into()));
        }
        let columns = lower
            .columns
            .iter()
            .map(|col| {
                let mut m = BTreeMap::new();
                for (mid, a) in col {
                    for (r, b) in &self.columns[*mid] {
                        accumulate(&mut m, *r, a * b);
                    }
                }
                m.into_iter().collect()
            })
            .collect();
        Ok(TensorMap {
            n: self.n,
            k: lower.k,
            l: self.l,
            field: self.field,
            columns,
        })
    }

    /// Kronecker product, `self` acting on the leading tensor factors.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        if other.n != self.n || other.field != self.field {
            return Err(Error::TypeMismatch("matrix shapes differ".into()));
        }
        let (c2, r2) = (other.cols(), other.rows());
        let mut columns = Vec::with_capacity(self.cols() * c2);
        for a in &self.columns {
            for b in &other.columns {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (ra, va) in a {
                    for (rb, vb) in b {
                        col.push((ra * r2 + rb, va * vb));
                    }
                }
                columns.push(col);
            }
        }
        Ok(TensorMap {
            n: self.n,
            k: self.k + other.k,
            l: self.l + other.l,
            field: self.field,
            columns,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export {
            n: usize,
            k: usize,
            l: usize,
            field: String,
            rows: usize,
            cols: usize,
            entries: Vec<(usize, usize, String)>,
        }
        let entries = self
            .entries()
            .into_iter()
            .map(|(r, c, v)| (r, c, fraction_text(&v)))
            .collect();
        serde_json::to_value(Export {
            n: self.n,
            k: self.k,
            l: self.l,
            field: self.field.to_string(),
            rows: self.rows(),
            cols: self.cols(),
            entries,
        })
        .expect("plain data serializes")
    }
}

/// `num/den` text of a scalar; residues print over 1.
pub fn fraction_text(v: &Scalar) -> String {
    match v.as_rational() {
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
        None => format!("{}/{}", v.to_bigint().unwrap(), BigInt::one()),
    }
}
