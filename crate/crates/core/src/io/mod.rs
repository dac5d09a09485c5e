//! Text formats, census reports and DOT export.

mod csv;
mod cxt;
mod dot;
mod map;
mod report;

pub use self::csv::{parse_csv, write_csv};
pub use cxt::{parse_cxt, write_cxt};
pub use dot::export_dot;
pub use map::{parse_map, write_map};
pub use report::{render_report, ReportDocument, LISTING_LIMIT};

use crate::context::FormalContext;
use crate::error::ParseError;

/// Reads a context, choosing the format by content: `.cxt` files start with
/// the line `B`, anything else is read as CSV.
pub fn parse_context(text: &str) -> Result<FormalContext, ParseError> {
    let first = text.lines().next().unwrap_or("").trim();
    if first == "B" {
        parse_cxt(text)
    } else {
        parse_csv(text)
    }
}
