use std::fmt;
use std::str::FromStr;

use super::PartitionDiagram;
use crate::error::{Error, Result};
use crate::foundations::SetPartition;
use crate::text::Cursor;

/// Parse `"[" part ("," part)* "]"` into blocks of internal vertex numbers.
/// Empty parts `{}` are only accepted when `allow_empty` is set.
pub(crate) fn parse_parts(
    cur: &mut Cursor<'_>,
    k: usize,
    l: usize,
    allow_empty: bool,
) -> Result<Vec<Vec<usize>>> {
    cur.expect('[')?;
    let mut blocks = Vec::new();
    if cur.eat(']') {
        return Ok(blocks);
    }
    loop {
        cur.expect('{')?;
        let mut block = Vec::new();
        if !cur.eat('}') {
            loop {
                let mark = cur.mark();
                let i = cur.usize()?;
                let top = cur.eat('\'');
                let v = match (top, i) {
                    (false, i) if (1..=k).contains(&i) => i,
                    (true, j) if (1..=l).contains(&j) => k + j,
                    _ => {
                        return Err(cur.error_at(mark, format!(
                            "vertex {i}{} out of range for {k}->{l}",
                            if top { "'" } else { "" }
                        )))
                    }
                };
                block.push(v);
                if cur.eat('}') {
                    break;
                }
                cur.expect(',')?;
            }
        } else if !allow_empty {
            return Err(cur.error("empty part"));
        }
        blocks.push(block);
        if cur.eat(']') {
            return Ok(blocks);
        }
        cur.expect(',')?;
    }
}

pub(crate) fn write_parts<'a>(
    f: &mut impl fmt::Write,
    k: usize,
    blocks: impl IntoIterator<Item = &'a [usize]>,
) -> fmt::Result {
    write!(f, "[")?;
    for (bi, b) in blocks.into_iter().enumerate() {
        if bi > 0 {
            write!(f, ",")?;
        }
        write!(f, "{{")?;
        for (i, &v) in b.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if v <= k {
                write!(f, "{v}")?;
            } else {
                write!(f, "{}'", v - k)?;
            }
        }
        write!(f, "}}")?;
    }
    write!(f, "]")
}

impl PartitionDiagram {
    pub(crate) fn parse_cursor(cur: &mut Cursor<'_>) -> Result<Self> {
        cur.expect_str("P(")?;
        let k = cur.usize()?;
        cur.expect_str("->")?;
        let l = cur.usize()?;
        cur.expect(')')?;
        let blocks = parse_parts(cur, k, l, false)?;
        let parts = SetPartition::from_blocks(k + l, blocks)
            .map_err(|e| cur.error(e.to_string()))?;
        PartitionDiagram::new(k, l, parts)
    }
}

impl FromStr for PartitionDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s.trim());
        let d = Self::parse_cursor(&mut cur)?;
        cur.finish()?;
        Ok(d)
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({}->{})", self.bottom, self.top)?;
        write_parts(
            f,
            self.bottom,
            self.parts.blocks().iter().map(|b| b.as_slice()),
        )
    }
}
