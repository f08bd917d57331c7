use std::collections::BTreeMap;
use std::fmt;

use super::diagram::{JellyDiagram, Signed};
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::foundations::{FieldSpec, Scalar};
use crate::pcat::{accumulate, parse_morphism_text, write_header, Basis, Morphism};
use crate::text::Cursor;

/// A morphism `k -> l` of `JP(n)`: a combination of canonical jellyfish
/// diagrams.
#[derive(Clone, PartialEq, Eq)]
pub struct JellyMorphism {
    bottom: usize,
    top: usize,
    field: FieldSpec,
    n: usize,
    terms: BTreeMap<JellyDiagram, Scalar>,
}

pub(crate) fn signed_scalar(field: FieldSpec, sign: i8) -> Scalar {
    Scalar::from_int(field, sign as i64)
}

impl JellyMorphism {
    pub fn zero(bottom: usize, top: usize, field: FieldSpec, n: usize) -> Self {
        JellyMorphism {
            bottom,
            top,
            field,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: JellyDiagram, field: FieldSpec) -> Self {
        let mut m = Self::zero(d.bottom(), d.top(), field, d.n());
        m.terms.insert(d, Scalar::one(field));
        m
    }

    pub fn identity(k: usize, field: FieldSpec, n: usize) -> Self {
        Self::from_diagram(
            JellyDiagram::from_partition(&PartitionDiagram::identity(k), n),
            field,
        )
    }

    /// The generator `j : n -> 0`.
    pub fn generator(n: usize, field: FieldSpec) -> Self {
        Self::from_diagram(JellyDiagram::generator(n), field)
    }

    /// Image of a `P(n)` morphism.
    pub fn embed(m: &Morphism) -> Self {
        let mut out = Self::zero(m.bottom(), m.top(), m.field(), m.n());
        for (d, c) in m.terms() {
            out.terms
                .insert(JellyDiagram::from_partition(d, m.n()), c.clone());
        }
        out
    }

    /// Collect terms, checking types.
    pub fn from_terms(
        bottom: usize,
        top: usize,
        field: FieldSpec,
        n: usize,
        terms: impl IntoIterator<Item = (JellyDiagram, Scalar)>,
    ) -> Result<Self> {
        let mut m = Self::zero(bottom, top, field, n);
        for (d, c) in terms {
            m.push_term(d, c)?;
        }
        Ok(m)
    }

    pub(crate) fn push_term(&mut self, d: JellyDiagram, c: Scalar) -> Result<()> {
        if (d.bottom(), d.top()) != (self.bottom, self.top) {
            return Err(Error::TypeMismatch(format!(
                "term {d} in a morphism of type {}->{}",
                self.bottom, self.top
            )));
        }
        if d.n() != self.n {
            return Err(Error::ParameterMismatch {
                left: self.n,
                right: d.n(),
            });
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

    pub(crate) fn push_signed(&mut self, s: Signed, c: &Scalar) -> Result<()> {
        if let Some((sign, d)) = s {
            let c = if sign < 0 { c.neg() } else { c.clone() };
            self.push_term(d, c)?;
        }
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

    pub fn n_scalar(&self) -> Scalar {
        Scalar::from_int(self.field, self.n as i64)
    }

    pub fn terms(&self) -> &BTreeMap<JellyDiagram, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, d: &JellyDiagram) -> Scalar {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest number of jellyfish in any term.
    pub fn max_jellies(&self) -> usize {
        self.terms.keys().map(JellyDiagram::jelly_count).max().unwrap_or(0)
    }

    /// The `P(n)` morphism, if no term has a jellyfish.
    pub fn to_morphism(&self) -> Option<Morphism> {
        let mut out = Morphism::zero(self.bottom, self.top, self.field, self.n);
        for (d, c) in &self.terms {
            let p = d.to_partition()?;
            out = out
                .add(&Morphism::from_diagram(p, self.field, self.n).scale(c).ok()?)
                .ok()?;
        }
        Some(out)
    }

    fn check_context(&self, other: &Self) -> Result<()> {
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

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        if (self.bottom, self.top) != (other.bottom, other.top) {
            return Err(Error::TypeMismatch(format!(
                "{}->{} vs {}->{}",
                self.bottom, self.top, other.bottom, other.top
            )));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            accumulate(&mut out.terms, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
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

    pub fn compose(&self, lower: &Self) -> Result<Self> {
        self.compose_with(lower, Exec::default())
    }

    pub fn compose_with(&self, lower: &Self, exec: Exec) -> Result<Self> {
        self.check_context(lower)?;
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
            JellyDiagram::compose(du, dl)
                .map(|(beta, s)| (s, &(*cu * *cl) * &n.pow(beta as u32)))
        });
        let mut out = Self::zero(lower.bottom, self.top, self.field, self.n);
        for p in products {
            let (s, c) = p?;
            out.push_signed(s, &c)?;
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = Self::zero(
            self.bottom + other.bottom,
            self.top + other.top,
            self.field,
            self.n,
        );
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.push_signed(a.tensor(b)?, &(ca * cb))?;
            }
        }
        Ok(out)
    }

    fn map_terms(&self, bottom: usize, top: usize, f: impl Fn(&JellyDiagram) -> Result<Signed>) -> Result<Self> {
        let mut out = Self::zero(bottom, top, self.field, self.n);
        for (d, c) in &self.terms {
            out.push_signed(f(d)?, c)?;
        }
        Ok(out)
    }

    pub fn bend(&self) -> Self {
        self.map_terms(self.bottom + self.top, 0, |d| Ok(d.bend()))
            .expect("bending preserves types")
    }

    pub fn unbend(&self, split: usize) -> Result<Self> {
        if self.top != 0 || split > self.bottom {
            return Err(Error::OutOfRange(format!(
                "cannot unbend {}->{} with split {split}",
                self.bottom, self.top
            )));
        }
        self.map_terms(self.bottom - split, split, |d| d.unbend(split))
    }

    /// Vertical reflection; the generator `j` maps to the rotated `j*`.
    pub fn dual(&self) -> Self {
        self.map_terms(self.top, self.bottom, |d| Ok(d.flip()))
            .expect("reflection preserves types")
    }

    /// Parse a morphism file whose terms use either diagram grammar.
    pub fn parse(s: &str, field: Option<FieldSpec>, n: Option<usize>) -> Result<Self> {
        let parse_key = |cur: &mut Cursor<'_>| -> Result<Key> {
            if cur.starts_with("JP(") {
                JellyDiagram::parse_cursor(cur).map(Key::Jelly)
            } else {
                PartitionDiagram::parse_cursor(cur).map(Key::Plain)
            }
        };
        let (header, terms) = parse_morphism_text(s, field, n, parse_key)?;
        if Basis::from_header(header.basis.as_deref())? == Basis::X {
            return Morphism::parse(s, field, n).map(|m| Self::embed(&m));
        }
        let (k, l) = match header.ty {
            Some(t) => t,
            None => match terms.iter().find_map(|(_, key, _)| key.ty()) {
                Some(t) => t,
                None => return Err(Error::parse(1, 1, "missing type header")),
            },
        };
        let mut m = Self::zero(k, l, header.field, header.n);
        for (c, key, line) in terms {
            let at = |e: Error| Error::parse(line, 1, e.to_string());
            match key {
                Key::Plain(d) => m
                    .push_term(JellyDiagram::from_partition(&d, header.n), c)
                    .map_err(at)?,
                Key::Jelly(s) => m.push_signed(s, &c).map_err(at)?,
            }
        }
        Ok(m)
    }
}

enum Key {
    Plain(PartitionDiagram),
    Jelly(Signed),
}

impl Key {
    fn ty(&self) -> Option<(usize, usize)> {
        match self {
            Key::Plain(d) => Some((d.bottom(), d.top())),
            Key::Jelly(Some((_, d))) => Some((d.bottom(), d.top())),
            Key::Jelly(None) => None,
        }
    }
}

impl std::str::FromStr for JellyMorphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        JellyMorphism::parse(s, None, None)
    }
}

impl fmt::Display for JellyMorphism {
    /// Morphism file format; jellyfish-free terms use the plain grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_header(f, self.field, self.n, self.bottom, self.top)?;
        if self.terms.is_empty() {
            return writeln!(f, "# 0-morphism");
        }
        for (d, c) in &self.terms {
            match d.to_partition() {
                Some(p) => writeln!(f, "{c}*{p}")?,
                None => writeln!(f, "{c}*{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for JellyMorphism {
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
