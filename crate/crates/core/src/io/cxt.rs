//! Burmeister `.cxt` files.
//!
//! ```text
//! B
//! <name>
//! |G|
//! |M|
//! <optional blank line>
//! object names, one per line
//! attribute names, one per line
//! one row per object over {X, x, .}
//! ```

use crate::context::FormalContext;
use crate::error::{ParseError, ParseErrorKind};

pub fn parse_cxt(text: &str) -> Result<FormalContext, ParseError> {
    let lines: Vec<&str> = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
    // the final newline leaves one empty piece behind
    let lines = match lines.split_last() {
        Some((&"", init)) => init,
        _ => &lines[..],
    };
    let mut at = 0;
    let next = |at: &mut usize| -> Result<&str, ParseError> {
        let line = lines
            .get(*at)
            .copied()
            .ok_or(ParseError::new(*at + 1, ParseErrorKind::Truncated))?;
        *at += 1;
        Ok(line)
    };

    if next(&mut at)?.trim() != "B" {
        return Err(ParseError::new(1, ParseErrorKind::BadMagic));
    }
    let _name = next(&mut at)?;
    let count = |at: &mut usize| -> Result<usize, ParseError> {
        let line = next(at)?;
        line.trim()
            .parse()
            .map_err(|_| ParseError::new(*at, ParseErrorKind::BadCount(line.to_string())))
    };
    let g = count(&mut at)?;
    let m = count(&mut at)?;
    let body = g + m + g;
    if lines.get(at).is_some_and(|l| l.trim().is_empty()) && lines.len() - at > body {
        at += 1;
    }

    let labels = |at: &mut usize, n: usize| -> Result<Vec<String>, ParseError> {
        (0..n).map(|_| next(at).map(str::to_string)).collect()
    };
    let names_line = at + 1;
    let objects = labels(&mut at, g)?;
    let attributes = labels(&mut at, m)?;
    let mut rows = Vec::with_capacity(g);
    for _ in 0..g {
        let line = next(&mut at)?.trim_end();
        let row = line
            .chars()
            .map(|c| match c {
                'X' | 'x' => Ok(true),
                '.' => Ok(false),
                other => Err(ParseError::new(at, ParseErrorKind::IllegalCell(other.to_string()))),
            })
            .collect::<Result<Vec<bool>, _>>()?;
        if row.len() != m {
            return Err(ParseError::new(
                at,
                ParseErrorKind::RowLength {
                    expected: m,
                    found: row.len(),
                },
            ));
        }
        rows.push(row);
    }
    if let Some(extra) = lines[at..].iter().position(|l| !l.trim().is_empty()) {
        return Err(ParseError::new(at + extra + 1, ParseErrorKind::Trailing));
    }
    FormalContext::new(objects, attributes, rows).map_err(|e| ParseError::new(names_line, e.into()))
}

/// Writes `k` with an empty name line, uppercase `X` and LF line endings.
pub fn write_cxt(k: &FormalContext) -> String {
    let mut out = String::new();
    out.push_str("B\n\n");
    out.push_str(&format!("{}\n{}\n", k.object_count(), k.attribute_count()));
    for label in k.objects().iter().chain(k.attributes()) {
        out.push_str(label);
        out.push('\n');
    }
    for g in 0..k.object_count() {
        out.extend((0..k.attribute_count()).map(|m| if k.incident(g, m) { 'X' } else { '.' }));
        out.push('\n');
    }
    out
}
