//! Instance file parsing.

use thiserror::Error;

/// Why an instance file was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: `{token}` is not a nonnegative decimal integer")]
    BadToken { line: usize, token: String },
    #[error("no values found")]
    Empty,
}

/// Reads whitespace-separated nonnegative decimal integers. Lines whose first
/// non-blank character is `#` are skipped.
pub fn parse_instance(text: &str) -> Result<Vec<i64>, ParseError> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        for token in line.split_whitespace() {
            let bad = || ParseError::BadToken {
                line: i + 1,
                token: token.to_string(),
            };
            if !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            values.push(token.parse::<i64>().map_err(|_| bad())?);
        }
    }
    if values.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(values)
}
