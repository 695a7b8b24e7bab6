//! Shared helpers for the canonical text encodings.

use crate::error::ParseError;

/// Parses a whitespace-separated word of nonnegative integers.
///
/// A single token longer than one character consisting only of digits
/// is treated as a compact digit string ("528713649"), one value per
/// digit; this convenience covers every object of size at most 9.
pub(crate) fn parse_usize_word(s: &str) -> Result<Vec<usize>, ParseError> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].bytes().all(|b| b.is_ascii_digit()) {
        return Ok(tokens[0].bytes().map(|b| (b - b'0') as usize).collect());
    }
    let mut out = Vec::with_capacity(tokens.len());
    for (i, tok) in tokens.iter().enumerate() {
        let v: usize = tok
            .parse()
            .map_err(|_| ParseError::new(i + 1, format!("invalid integer {tok:?}")))?;
        out.push(v);
    }
    Ok(out)
}

pub(crate) fn join_usize_word(word: &[usize]) -> String {
    word.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
