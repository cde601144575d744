//! The plain-text table format.
//!
//! A file holds one multiplication table: a header line
//! `elements: <names>` followed by one line per element listing its row of
//! products (row = left factor). Lines starting with `#` are comments and
//! blank lines are ignored. `parse_table(write_table(s))` reproduces `s`
//! exactly.

use thiserror::Error;

use crate::semigroup::{FiniteSemigroup, ValidationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

fn syntax(line: usize, reason: impl Into<String>) -> TableParseError {
    TableParseError::Syntax {
        line,
        reason: reason.into(),
    }
}

pub fn parse_table(text: &str) -> Result<FiniteSemigroup, TableParseError> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = significant
        .next()
        .ok_or_else(|| syntax(1, "empty file: expected an `elements:` header"))?;
    let names: Vec<String> = match header.strip_prefix("elements:") {
        Some(rest) => rest.split_whitespace().map(str::to_string).collect(),
        None => return Err(syntax(header_line, "expected an `elements:` header")),
    };
    if names.is_empty() {
        return Err(syntax(header_line, "header lists no elements"));
    }

    let index_of = |token: &str| names.iter().position(|n| n == token);
    let mut table = Vec::with_capacity(names.len());
    let mut last_line = header_line;
    for (line, row_text) in significant.by_ref().take(names.len()) {
        let mut row = Vec::with_capacity(names.len());
        for token in row_text.split_whitespace() {
            match index_of(token) {
                Some(i) => row.push(i),
                None => {
                    return Err(syntax(
                        line,
                        format!("`{token}` does not appear in the header"),
                    ))
                }
            }
        }
        if row.len() != names.len() {
            return Err(syntax(
                line,
                format!("expected {} entries, found {}", names.len(), row.len()),
            ));
        }
        table.push(row);
        last_line = line;
    }
    if table.len() != names.len() {
        return Err(syntax(
            last_line,
            format!("expected {} rows, found {}", names.len(), table.len()),
        ));
    }
    if let Some((line, _)) = significant.next() {
        return Err(syntax(line, "unexpected content after the table"));
    }
    Ok(FiniteSemigroup::new(names, table)?)
}

pub fn write_table(s: &FiniteSemigroup) -> String {
    let mut out = String::from("elements:");
    for name in s.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for i in 0..s.size() {
        let row: Vec<&str> = s.row(i).iter().map(|&j| s.name(j)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
