//! Shared helpers for the line-oriented input formats.

use crate::error::{Error, Result};

/// One meaningful line: `keyword: rest`, or the raw text when there is no
/// keyword. Blank lines and `#` comment lines are skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line<'a> {
    pub number: usize,
    pub keyword: Option<&'a str>,
    pub rest: &'a str,
}

impl<'a> Line<'a> {
    pub fn tokens(&self) -> Vec<&'a str> {
        self.rest.split_whitespace().collect()
    }

    pub fn error(&self, msg: impl std::fmt::Display) -> Error {
        Error::Format(format!("line {}: {msg}", self.number))
    }
}

pub fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let (keyword, rest) = match line.split_once(':') {
            Some((k, r)) if is_keyword(k.trim()) => (Some(k.trim()), r.trim()),
            _ => (None, line),
        };
        Some(Line {
            number: i + 1,
            keyword,
            rest,
        })
    })
}

fn is_keyword(k: &str) -> bool {
    !k.is_empty()
        && k.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == ' ')
}

/// Splits `a b -> c d` into both token lists.
pub fn arrow_split<'a>(line: &Line<'a>) -> Result<(Vec<&'a str>, Vec<&'a str>)> {
    let (l, r) = line.rest.split_once("->").ok_or_else(|| line.error("expected `->`"))?;
    Ok((l.split_whitespace().collect(), r.split_whitespace().collect()))
}
