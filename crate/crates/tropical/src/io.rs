//! The canonical matrix text format.
//!
//! One matrix row per line; entries separated by spaces or tabs. A token is
//! either the uppercase letter `E`, standing for ε, or a base-10 signed
//! integer. Blank lines and lines whose first non-blank character is `#` are
//! ignored on input and never produced on output. Dimensions are inferred
//! from the line and token structure, and every data line must have the same
//! number of tokens.
//!
//! Output is canonical: single spaces between entries, `\n` line endings, a
//! trailing newline, no comments. `parse` of `format` is the identity on
//! matrices; `format` of `parse` canonicalizes a document.
//!
//! The suggested file extension is `.mpx`.

use std::fmt;
use std::str::FromStr;

use crate::matrix::Matrix;
use crate::semiring::{Semiring, TropicalValue};

/// The textual spelling of ε. Lowercase `e` is rejected to avoid any
/// ambiguity with scientific notation.
pub const EPSILON_TOKEN: &str = "E";

/// Errors from reading the matrix text format. Line and column numbers are
/// 1-based; the column counts tokens, not characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// No data lines at all.
    EmptyInput,
    /// A data line whose token count differs from the first data line's.
    RaggedRow {
        line: usize,
        expected: usize,
        got: usize,
    },
    /// A token that is neither `E` nor a 64-bit integer.
    BadToken {
        line: usize,
        column: usize,
        token: String,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::EmptyInput => write!(f, "no matrix data in input"),
            ParseError::RaggedRow {
                line,
                expected,
                got,
            } => write!(
                f,
                "line {line}: expected {expected} entries per row, got {got}"
            ),
            ParseError::BadToken {
                line,
                column,
                token,
            } => write!(
                f,
                "line {line}, entry {column}: bad token {token:?} (expected an integer or \"E\")"
            ),
        }
    }
}

impl std::error::Error for ParseError {}

fn parse_token(token: &str, line: usize, column: usize) -> Result<TropicalValue, ParseError> {
    if token == EPSILON_TOKEN {
        return Ok(TropicalValue::Epsilon);
    }
    token
        .parse::<i64>()
        .map(TropicalValue::Finite)
        .map_err(|_| ParseError::BadToken {
            line,
            column,
            token: token.to_owned(),
        })
}

/// Reads a single scalar token: `E` or a signed integer.
pub fn parse_scalar(token: &str) -> Result<TropicalValue, ParseError> {
    parse_token(token.trim(), 1, 1)
}

/// Parses a whole document into a matrix, inferring its dimensions.
pub fn parse_matrix<S: Semiring>(text: &str) -> Result<Matrix<S>, ParseError> {
    let mut rows: Vec<Vec<TropicalValue>> = Vec::new();
    let mut width = 0;
    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        let body = line.trim_start();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut row = Vec::with_capacity(width);
        for (token_index, token) in line.split_whitespace().enumerate() {
            row.push(parse_token(token, line_no, token_index + 1)?);
        }
        if rows.is_empty() {
            width = row.len();
        } else if row.len() != width {
            return Err(ParseError::RaggedRow {
                line: line_no,
                expected: width,
                got: row.len(),
            });
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let height = rows.len();
    let entries = rows.into_iter().flatten().collect();
    Ok(Matrix::from_entries(height, width, entries)
        .expect("rectangular non-empty rows form a valid matrix"))
}

/// Renders a matrix in canonical form: space-separated entries, one row per
/// line, trailing newline.
pub fn format_matrix<S: Semiring>(matrix: &Matrix<S>) -> String {
    let mut out = String::new();
    for i in 0..matrix.rows() {
        for (j, value) in matrix.row(i).iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            match value {
                TropicalValue::Epsilon => out.push_str(EPSILON_TOKEN),
                TropicalValue::Finite(v) => out.push_str(&v.to_string()),
            }
        }
        out.push('\n');
    }
    out
}

impl fmt::Display for TropicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalValue::Epsilon => f.write_str(EPSILON_TOKEN),
            TropicalValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for TropicalValue {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_scalar(s)
    }
}

impl<S: Semiring> FromStr for Matrix<S> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_matrix(s)
    }
}
