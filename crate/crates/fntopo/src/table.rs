//! The plain-text function-table format.
//!
//! One `source destination` pair per line, whitespace separated. Lines that
//! are blank or start with `#` are ignored. The domain is the set of
//! sources; closure is checked, not inferred, so a destination that never
//! appears as a source is an error rather than a silently grown domain.

use crate::error::Error;
use crate::finite::FiniteFunction;

/// Parses the table format into a validated function. Line order is
/// irrelevant.
pub fn parse_function_table(text: &str) -> Result<FiniteFunction, Error> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let src = parse_element(toks.next(), line)?;
        let dst = parse_element(toks.next(), line)?;
        if let Some(extra) = toks.next() {
            return Err(Error::Parse {
                line,
                message: format!("unexpected trailing token {extra:?}"),
            });
        }
        pairs.push((src, dst));
    }
    FiniteFunction::new(pairs)
}

fn parse_element(tok: Option<&str>, line: usize) -> Result<u64, Error> {
    let tok = tok.ok_or(Error::Parse {
        line,
        message: "expected `source destination`".into(),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{tok:?} is not a non-negative integer"),
    })
}

/// Renders a function back into the table format, sources ascending.
pub fn render_function_table(f: &FiniteFunction) -> String {
    let mut out = String::new();
    for (src, dst) in f.pairs() {
        out.push_str(&format!("{src} {dst}\n"));
    }
    out
}
