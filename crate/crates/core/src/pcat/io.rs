//! The line-oriented morphism file format shared by `P(n)` and `JP(n)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::foundations::{FieldSpec, Scalar};
use crate::text::Cursor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Header {
    pub field: FieldSpec,
    pub n: usize,
    pub ty: Option<(usize, usize)>,
    /// Value of an optional `basis <name>` line.
    pub basis: Option<String>,
}

pub(crate) fn write_header(
    f: &mut impl fmt::Write,
    field: FieldSpec,
    n: usize,
    k: usize,
    l: usize,
) -> fmt::Result {
    writeln!(f, "field {field}")?;
    writeln!(f, "n {n}")?;
    writeln!(f, "type {k} -> {l}")
}

type Term<K> = (Scalar, K, usize);

/// Split a morphism file into its header and `(coefficient, key, line)`
/// terms. Header lines must precede the terms.
pub(crate) fn parse_morphism_text<K>(
    text: &str,
    default_field: Option<FieldSpec>,
    default_n: Option<usize>,
    parse_key: impl Fn(&mut Cursor<'_>) -> Result<K>,
) -> Result<(Header, Vec<Term<K>>)> {
    let mut field = None;
    let mut n = None;
    let mut ty = None;
    let mut basis = None;
    let mut raw_terms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let indent = raw.len() - raw.trim_start().len();
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::parse(lineno, indent + 1, msg);
        let header_line = |name: &str| {
            line.strip_prefix(name)
                .filter(|rest| rest.starts_with(char::is_whitespace))
                .map(str::trim)
        };
        if let Some(v) = header_line("field") {
            if !raw_terms.is_empty() {
                return Err(err("header after terms".into()));
            }
            field = Some(v.parse::<FieldSpec>().map_err(|e| err(e.to_string()))?);
        } else if let Some(v) = header_line("n") {
            if !raw_terms.is_empty() {
                return Err(err("header after terms".into()));
            }
            n = Some(v.parse::<usize>().map_err(|_| err(format!("bad n {v:?}")))?);
        } else if let Some(v) = header_line("type") {
            if !raw_terms.is_empty() {
                return Err(err("header after terms".into()));
            }
            let (a, b) = v
                .split_once("->")
                .ok_or_else(|| err(format!("bad type {v:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad type {v:?}")))
            };
            ty = Some((parse(a)?, parse(b)?));
        } else if let Some(v) = header_line("basis") {
            basis = Some(v.to_string());
        } else {
            raw_terms.push((lineno, indent, line));
        }
    }
    let field = field
        .or(default_field)
        .ok_or_else(|| Error::parse(1, 1, "missing field header"))?;
    let n = n
        .or(default_n)
        .ok_or_else(|| Error::parse(1, 1, "missing n header"))?;
    let mut terms = Vec::with_capacity(raw_terms.len());
    for (lineno, indent, line) in raw_terms {
        let (coeff, key_src, key_offset) = match line.find('*') {
            Some(pos) => (&line[..pos], &line[pos + 1..], pos + 1),
            None => ("1", line, 0),
        };
        let lead = key_src.len() - key_src.trim_start().len();
        let (key_src, key_offset) = (key_src.trim(), key_offset + lead);
        let c = Scalar::parse_in(field, coeff)
            .map_err(|e| Error::parse(lineno, indent + 1, e.to_string()))?;
        let mut cur = Cursor::at_line(key_src, lineno);
        let shift = |e: Error| match e {
            Error::Parse {
                line,
                column,
                message,
            } => Error::Parse {
                line,
                column: column + indent + key_offset,
                message,
            },
            e => e,
        };
        let key = parse_key(&mut cur).map_err(shift)?;
        cur.finish().map_err(shift)?;
        terms.push((c, key, lineno));
    }
    Ok((
        Header {
            field,
            n,
            ty,
            basis,
        },
        terms,
    ))
}
