//! Line tokenizer shared by the plain-text file formats.
//!
//! Blank lines are skipped and `#` starts a comment that runs to the end of
//! the line. Each remaining line is split on whitespace.

use std::str::FromStr;

use crate::error::{Error, Result};

/// A non-empty line split into tokens, with its 1-based line number.
#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<&'a str>,
}

impl<'a> Line<'a> {
    /// The first token.
    pub fn keyword(&self) -> &'a str {
        self.tokens[0]
    }

    /// Parses token `i`.
    pub fn parse<T: FromStr>(&self, i: usize) -> Result<T> {
        let tok = self
            .tokens
            .get(i)
            .ok_or_else(|| Error::parse(self.number, format!("missing field {i}")))?;
        tok.parse()
            .map_err(|_| Error::parse(self.number, format!("cannot parse `{tok}`")))
    }

    /// Token `i` as text.
    pub fn text(&self, i: usize) -> Result<&'a str> {
        self.tokens
            .get(i)
            .copied()
            .ok_or_else(|| Error::parse(self.number, format!("missing field {i}")))
    }

    /// Parses every token from `start` on.
    pub fn parse_rest<T: FromStr>(&self, start: usize) -> Result<Vec<T>> {
        (start..self.tokens.len()).map(|i| self.parse(i)).collect()
    }

    /// Requires the line to have exactly `n` tokens.
    pub fn expect_len(&self, n: usize) -> Result<()> {
        if self.tokens.len() == n {
            Ok(())
        } else {
            Err(Error::parse(
                self.number,
                format!("expected {n} fields, found {}", self.tokens.len()),
            ))
        }
    }
}

/// Iterator over the meaningful lines of a text.
pub(crate) struct Lines<'a> {
    inner: std::iter::Peekable<std::vec::IntoIter<Line<'a>>>,
}

impl<'a> Lines<'a> {
    pub fn new(text: &'a str) -> Self {
        let lines: Vec<Line<'a>> = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let body = raw.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = body.split_whitespace().collect();
                (!tokens.is_empty()).then_some(Line {
                    number: i + 1,
                    tokens,
                })
            })
            .collect();
        Lines {
            inner: lines.into_iter().peekable(),
        }
    }

    pub fn peek(&mut self) -> Option<&Line<'a>> {
        self.inner.peek()
    }

    /// Next line, or a parse error naming what was expected.
    pub fn require(&mut self, what: &str) -> Result<Line<'a>> {
        self.inner
            .next()
            .ok_or_else(|| Error::parse(0, format!("unexpected end of input, expected {what}")))
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = Line<'a>;

    fn next(&mut self) -> Option<Line<'a>> {
        self.inner.next()
    }
}

/// Reads a file into a string, mapping failures to [`Error::Io`].
pub fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes a string to a file, mapping failures to [`Error::Io`].
pub fn write_file(path: &std::path::Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}
