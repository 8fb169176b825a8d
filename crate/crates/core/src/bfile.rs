//! OEIS b-file reading and writing: one `index value` pair per line.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::ParseError;

pub fn write_bfile(values: &[BigInt], offset: i64) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{} {}", offset + i as i64, v).unwrap();
    }
    out
}

/// Blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || ParseError::BFile {
            line: lineno + 1,
            text: line.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad());
        };
        out.push((
            index.parse().map_err(|_| bad())?,
            value.parse().map_err(|_| bad())?,
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BFileMismatch {
    Missing {
        index: i64,
    },
    Value {
        index: i64,
        expected: BigInt,
        got: BigInt,
    },
}

impl std::fmt::Display for BFileMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BFileMismatch::Missing { index } => write!(f, "index {index} missing from output"),
            BFileMismatch::Value {
                index,
                expected,
                got,
            } => {
                write!(f, "index {index}: expected {expected}, got {got}")
            }
        }
    }
}

/// Check that every reference entry appears in `actual` with the same value.
/// Returns the number of entries compared.
pub fn compare(
    reference: &[(i64, BigInt)],
    actual: &[(i64, BigInt)],
) -> Result<usize, BFileMismatch> {
    for (index, expected) in reference {
        match actual.iter().find(|(i, _)| i == index) {
            None => return Err(BFileMismatch::Missing { index: *index }),
            Some((_, got)) if got != expected => {
                return Err(BFileMismatch::Value {
                    index: *index,
                    expected: expected.clone(),
                    got: got.clone(),
                })
            }
            Some(_) => {}
        }
    }
    Ok(reference.len())
}
