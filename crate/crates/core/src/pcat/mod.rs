//! Morphisms of `P(n)`: finite linear combinations of partition diagrams.

mod io;
mod relations;
mod xbasis;

pub(crate) use io::{parse_morphism_text, write_header};
pub use relations::{generating_relations, Relation};
pub use xbasis::{mobius_coefficient, x_expansion};

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::foundations::{FieldSpec, Scalar};

/// Add `c` to the coefficient of `key`, dropping it if the sum vanishes.
pub(crate) fn accumulate<K: Ord>(terms: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = &*e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// A morphism `k -> l` of `P(n)` over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    bottom: usize,
    top: usize,
    field: FieldSpec,
    n: usize,
    terms: BTreeMap<PartitionDiagram, Scalar>,
}

impl Morphism {
    pub fn zero(bottom: usize, top: usize, field: FieldSpec, n: usize) -> Self {
        Morphism {
            bottom,
            top,
            field,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: PartitionDiagram, field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(d.bottom(), d.top(), field, n);
        m.terms.insert(d, Scalar::one(field));
        m
    }

    pub fn identity(k: usize, field: FieldSpec, n: usize) -> Self {
        Self::from_diagram(PartitionDiagram::identity(k), field, n)
    }

    /// Collect `(diagram, coefficient)` pairs of type `k -> l`.
    pub fn from_terms(
        bottom: usize,
        top: usize,
        field: FieldSpec,
        n: usize,
        terms: impl IntoIterator<Item = (PartitionDiagram, Scalar)>,
    ) -> Result<Self> {
        let mut m = Self::zero(bottom, top, field, n);
        for (d, c) in terms {
            m.push_term(d, c)?;
        }
        Ok(m)
    }

    fn push_term(&mut self, d: PartitionDiagram, c: Scalar) -> Result<()> {
        if (d.bottom(), d.top()) != (self.bottom, self.top) {
            return Err(Error::TypeMismatch(format!(
                "term {d} in a morphism of type {}->{}",
                self.bottom, self.top
            )));
        }
        if c.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: c.field(),
            });
        }
        accumulate(&mut self.terms, d, c);
        Ok(())
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The parameter `n` as a field element.
    pub fn n_scalar(&self) -> Scalar {
        Scalar::from_int(self.field, self.n as i64)
    }

    pub fn terms(&self) -> &BTreeMap<PartitionDiagram, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, d: &PartitionDiagram) -> Scalar {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same_context(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.n != other.n {
            return Err(Error::ParameterMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    fn check_same_type(&self, other: &Self) -> Result<()> {
        self.check_same_context(other)?;
        if (self.bottom, self.top) != (other.bottom, other.top) {
            return Err(Error::TypeMismatch(format!(
                "{}->{} vs {}->{}",
                self.bottom, self.top, other.bottom, other.top
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_type(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            accumulate(&mut out.terms, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: c.field(),
            });
        }
        let mut out = Self::zero(self.bottom, self.top, self.field, self.n);
        for (d, a) in &self.terms {
            accumulate(&mut out.terms, d.clone(), a * c);
        }
        Ok(out)
    }

    /// `self ∘ lower`, using the default execution strategy.
    pub fn compose(&self, lower: &Self) -> Result<Self> {
        self.compose_with(lower, Exec::default())
    }

    pub fn compose_with(&self, lower: &Self, exec: Exec) -> Result<Self> {
        self.check_same_context(lower)?;
        if lower.top != self.bottom {
            return Err(Error::TypeMismatch(format!(
                "cannot compose {}->{} after {}->{}",
                self.bottom, self.top, lower.bottom, lower.top
            )));
        }
        let pairs: Vec<_> = self
            .terms
            .iter()
            .flat_map(|u| lower.terms.iter().map(move |l| (u, l)))
            .collect();
        let n = self.n_scalar();
        let products = exec.map(&pairs, |((du, cu), (dl, cl))| {
            let (beta, star) = PartitionDiagram::compose(du, dl).expect("types checked");
            (star, &(*cu * *cl) * &n.pow(beta as u32))
        });
        let mut out = Self::zero(lower.bottom, self.top, self.field, self.n);
        for (d, c) in products {
            accumulate(&mut out.terms, d, c);
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same_context(other)?;
        let mut out = Self::zero(
            self.bottom + other.bottom,
            self.top + other.top,
            self.field,
            self.n,
        );
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                accumulate(&mut out.terms, a.tensor(b), ca * cb);
            }
        }
        Ok(out)
    }

    /// Coordinates in the `x_D` basis.
    pub fn to_x_basis(&self) -> BTreeMap<PartitionDiagram, Scalar> {
        let mut out = BTreeMap::new();
        for (d, c) in &self.terms {
            for q in d.parts().coarsenings() {
                let coarse = PartitionDiagram::new(d.bottom(), d.top(), q).unwrap();
                accumulate(&mut out, coarse, c.clone());
            }
        }
        out
    }

    /// Substitute `x_D` by its diagram expansion.
    pub fn from_x_basis(
        bottom: usize,
        top: usize,
        field: FieldSpec,
        n: usize,
        coords: &BTreeMap<PartitionDiagram, Scalar>,
    ) -> Result<Self> {
        let mut out = Self::zero(bottom, top, field, n);
        for (d, c) in coords {
            if (d.bottom(), d.top()) != (bottom, top) {
                return Err(Error::TypeMismatch(format!(
                    "x-coordinate {d} in a morphism of type {bottom}->{top}"
                )));
            }
            for (e, mu) in x_expansion(d).iter() {
                out.push_term(e.clone(), c * &Scalar::from_bigint(field, mu))?;
            }
        }
        Ok(out)
    }

    /// The element `x_D` as a morphism.
    pub fn x_element(d: &PartitionDiagram, field: FieldSpec, n: usize) -> Self {
        let coords = BTreeMap::from([(d.clone(), Scalar::one(field))]);
        Self::from_x_basis(d.bottom(), d.top(), field, n, &coords).unwrap()
    }

    /// Flip every term.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero(self.top, self.bottom, self.field, self.n);
        for (d, c) in &self.terms {
            out.terms.insert(d.flip(), c.clone());
        }
        out
    }

    /// Bend every term to type `(k+l) -> 0`.
    pub fn bend(&self) -> Self {
        let mut out = Self::zero(self.bottom + self.top, 0, self.field, self.n);
        for (d, c) in &self.terms {
            out.terms.insert(d.bend(), c.clone());
        }
        out
    }

    pub fn unbend(&self, split: usize) -> Result<Self> {
        if split > self.bottom || self.top != 0 {
            return Err(Error::OutOfRange(format!(
                "cannot unbend {}->{} with split {split}",
                self.bottom, self.top
            )));
        }
        let mut out = Self::zero(self.bottom - split, split, self.field, self.n);
        for (d, c) in &self.terms {
            out.terms.insert(d.unbend(split)?, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for Morphism {
    /// The line-oriented morphism file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_header(f, self.field, self.n, self.bottom, self.top)?;
        if self.terms.is_empty() {
            return writeln!(f, "# 0-morphism");
        }
        for (d, c) in &self.terms {
            writeln!(f, "{c}*{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0[{}->{}]", self.bottom, self.top);
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}*{d}")?;
        }
        Ok(())
    }
}

/// The basis a morphism file's coefficients refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Diagram,
    X,
}

impl Basis {
    pub(crate) fn from_header(name: Option<&str>) -> Result<Self> {
        match name {
            None | Some("diagram") => Ok(Basis::Diagram),
            Some("x") => Ok(Basis::X),
            Some(other) => Err(Error::parse(1, 1, format!("unknown basis {other:?}"))),
        }
    }
}

impl std::str::FromStr for Morphism {
    type Err = Error;

    /// Parse a morphism file; all three header lines are required.
    fn from_str(s: &str) -> Result<Self> {
        Morphism::parse(s, None, None)
    }
}

impl Morphism {
    /// Parse a morphism file, using `field` and `n` when the corresponding
    /// header line is absent. The type header may be omitted if there is at
    /// least one term.
    pub fn parse(s: &str, field: Option<FieldSpec>, n: Option<usize>) -> Result<Self> {
        Self::parse_with_basis(s, field, n).map(|(m, _)| m)
    }

    /// Like [`Morphism::parse`], also reporting the basis the file was
    /// written in. Terms of a `basis x` file are `x_D` coordinates.
    pub fn parse_with_basis(s: &str, field: Option<FieldSpec>, n: Option<usize>) -> Result<(Self, Basis)> {
        let (header, terms) = parse_morphism_text(s, field, n, PartitionDiagram::parse_cursor)?;
        let basis = Basis::from_header(header.basis.as_deref())?;
        let (k, l) = match header.ty {
            Some(t) => t,
            None => match terms.first() {
                Some((_, d, _)) => (d.bottom(), d.top()),
                None => return Err(Error::parse(1, 1, "missing type header")),
            },
        };
        let mut m = Self::zero(k, l, header.field, header.n);
        for (c, d, line) in terms {
            m.push_term(d, c).map_err(|e| Error::parse(line, 1, e.to_string()))?;
        }
        if basis == Basis::X {
            m = Self::from_x_basis(k, l, m.field, m.n, &m.terms)?;
        }
        Ok((m, basis))
    }

    /// The file format in `x_D` coordinates, with a `basis x` header.
    pub fn to_x_text(&self) -> String {
        let mut out = String::new();
        write_header(&mut out, self.field, self.n, self.bottom, self.top).unwrap();
        out.push_str("basis x\n");
        let coords: Vec<_> = self.to_x_basis().into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if coords.is_empty() {
            out.push_str("# 0-morphism\n");
        }
        for (d, c) in coords {
            out.push_str(&format!("{c}*{d}\n"));
        }
        out
    }
}
