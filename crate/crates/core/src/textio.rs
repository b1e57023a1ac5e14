//! Small helpers shared by the text formats of the other modules.
//!
//! Every format is line-oriented, `#` starts a comment line, and fields are
//! separated by arbitrary whitespace runs.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Lines of `input` with comments and blank lines dropped.
pub fn content_lines(input: &str) -> impl Iterator<Item = &str> {
    input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_bigint(tok: &str) -> Result<BigInt> {
    tok.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("expected integer, got {tok:?}")))
}

pub fn parse_usize(tok: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected non-negative integer, got {tok:?}")))
}

pub fn parse_i64(tok: &str) -> Result<i64> {
    tok.parse::<i64>()
        .map_err(|_| Error::Parse(format!("expected integer, got {tok:?}")))
}

/// Strips `key=` from a token such as `r=5` and parses the remainder.
pub fn keyed_usize(tok: &str, key: &str) -> Result<usize> {
    let rest = tok
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected {key}=<int>, got {tok:?}")))?;
    parse_usize(rest)
}
