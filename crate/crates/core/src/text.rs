//! Small cursor used by the diagram and morphism parsers.

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    line_start: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Self::at_line(src, 1)
    }

    pub fn at_line(src: &'a str, line: usize) -> Self {
        Cursor {
            src,
            pos: 0,
            line,
            line_start: 0,
        }
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.pos - self.line_start + 1, message)
    }

    /// Byte offset, for errors that point back at a token start.
    pub fn mark(&self) -> usize {
        self.pos
    }

    pub fn error_at(&self, mark: usize, message: impl Into<String>) -> Error {
        Error::parse(self.line, mark - self.line_start + 1, message)
    }

    pub fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.line_start = self.pos;
        }
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c == ' ' || c == '\t') {
            self.bump();
        }
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {c:?}, found {}",
                self.peek().map_or("end of input".to_string(), |x| format!("{x:?}"))
            )))
        }
    }

    pub fn expect_str(&mut self, s: &str) -> Result<()> {
        if self.src[self.pos..].starts_with(s) {
            for _ in s.chars() {
                self.bump();
            }
            Ok(())
        } else {
            Err(self.error(format!("expected {s:?}")))
        }
    }

    pub fn starts_with(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s)
    }

    pub fn usize(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    pub fn is_done(&self) -> bool {
        self.pos == self.src.len()
    }

    pub fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.is_done() {
            Ok(())
        } else {
            Err(self.error("trailing characters"))
        }
    }
}
