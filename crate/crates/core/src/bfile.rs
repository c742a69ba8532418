//! OEIS b-file text: one `n value` pair per line, `#` comments allowed.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("b-file line {line}: {message}")]
pub struct BFileError {
    pub line: usize,
    pub message: String,
}

pub fn write_bfile<'a>(terms: impl IntoIterator<Item = (i64, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (n, v) in terms {
        writeln!(out, "{n} {v}").expect("writing to a String");
    }
    out
}

/// Parses b-file text. Indices must be strictly increasing.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, BFileError> {
    let mut out: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| BFileError { line: i + 1, message };
        let mut fields = line.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `n value`, got `{line}`")));
        };
        let n: i64 = n.parse().map_err(|_| err(format!("bad index `{n}`")))?;
        let v: BigInt = v.parse().map_err(|_| err(format!("bad value `{v}`")))?;
        if out.last().is_some_and(|(prev, _)| *prev >= n) {
            return Err(err(format!("index {n} is not increasing")));
        }
        out.push((n, v));
    }
    Ok(out)
}
