use crate::context::FormalContext;
use crate::error::{ParseError, ParseErrorKind};

/// Reads a cross table: the header holds the attribute names (its first cell
/// is ignored), the first column the object names. Cells `""`/`"0"` are
/// absent, `"1"`/`"x"`/`"X"` present.
pub fn parse_csv(text: &str) -> Result<FormalContext, ParseError> {
    let mut reader = ::csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r.map_err(|e| csv_error(&e))?,
        None => return Err(ParseError::new(1, ParseErrorKind::Truncated)),
    };
    let attributes: Vec<String> = header.iter().skip(1).map(|s| s.trim().to_string()).collect();
    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for record in records {
        let record = record.map_err(|e| csv_error(&e))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != attributes.len() + 1 {
            return Err(ParseError::new(
                line,
                ParseErrorKind::RowLength {
                    expected: attributes.len() + 1,
                    found: record.len(),
                },
            ));
        }
        objects.push(record[0].trim().to_string());
        let row = record
            .iter()
            .skip(1)
            .map(|cell| match cell.trim() {
                "" | "0" => Ok(false),
                "1" | "x" | "X" => Ok(true),
                other => Err(ParseError::new(line, ParseErrorKind::IllegalCell(other.to_string()))),
            })
            .collect::<Result<Vec<bool>, _>>()?;
        rows.push(row);
    }
    FormalContext::new(objects, attributes, rows).map_err(|e| ParseError::new(1, e.into()))
}

fn csv_error(e: &::csv::Error) -> ParseError {
    let line = e.position().map_or(0, |p| p.line() as usize);
    ParseError::new(line, ParseErrorKind::Csv(e.to_string()))
}

/// Writes the cross table read by [`parse_csv`], with `1`/`0` cells.
pub fn write_csv(k: &FormalContext) -> String {
    let mut writer = ::csv::WriterBuilder::new()
        .terminator(::csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header = std::iter::once("").chain(k.attributes().iter().map(String::as_str));
    writer.write_record(header).expect("writing to memory");
    for g in 0..k.object_count() {
        let cells = (0..k.attribute_count()).map(|m| if k.incident(g, m) { "1" } else { "0" });
        let record = std::iter::once(k.objects()[g].as_str()).chain(cells);
        writer.write_record(record).expect("writing to memory");
    }
    let bytes = writer.into_inner().expect("flushing to memory");
    String::from_utf8(bytes).expect("labels are UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ContextError;
    use crate::scales::{make_scale, ScaleFamily};

    #[test]
    fn identity_is_nominal() {
        let k = parse_csv(",1,2\n1,1,0\n2,,X\n").unwrap();
        assert_eq!(k, make_scale(ScaleFamily::Nominal, 2).unwrap());
    }

    #[test]
    fn duplicate_object() {
        let e = parse_csv(",m\na,1\na,0\n").unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::Context(ContextError::DuplicateObject("a".into()))
        );
    }

    #[test]
    fn ragged_and_illegal() {
        let e = parse_csv(",m,n\na,1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::RowLength { .. }));
        let e = parse_csv(",m\na,yes\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::IllegalCell("yes".into()));
    }

    #[test]
    fn round_trip_with_quotes() {
        let k = FormalContext::from_fn(vec!["a, b".into(), "c\"d".into()], vec!["x".into()], |g, _| g == 0).unwrap();
        assert_eq!(parse_csv(&write_csv(&k)).unwrap(), k);
    }
}
