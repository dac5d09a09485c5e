use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::context::FormalContext;
use crate::error::{ParseError, ParseErrorKind};
use crate::measure::PartialMap;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    map: BTreeMap<String, String>,
}

/// Reads `{ "map": { "<object of k>": "<object of s>", … } }`. Objects of `k`
/// left out stay unmapped.
pub fn parse_map(text: &str, k: &FormalContext, s: &FormalContext) -> Result<PartialMap, ParseError> {
    let file: MapFile =
        serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), ParseErrorKind::Json(e.to_string())))?;
    let mut assignment = vec![None; k.object_count()];
    for (from, to) in &file.map {
        let unknown = |label: &str| {
            let quoted = serde_json::to_string(label).unwrap_or_default();
            let line = text.lines().position(|l| l.contains(&quoted)).map_or(1, |i| i + 1);
            ParseError::new(line, ParseErrorKind::UnknownLabel(label.to_string()))
        };
        let g = k.object_index(from).ok_or_else(|| unknown(from))?;
        let t = s.object_index(to).ok_or_else(|| unknown(to))?;
        assignment[g] = Some(t);
    }
    Ok(PartialMap::new(s.object_count(), assignment).expect("indices come from s"))
}

/// Writes `sigma` in the format read by [`parse_map`], keys sorted.
pub fn write_map(k: &FormalContext, s: &FormalContext, sigma: &PartialMap) -> String {
    let map = (0..k.object_count())
        .filter_map(|g| sigma.get(g).map(|t| (k.objects()[g].clone(), s.objects()[t].clone())))
        .collect();
    let mut out = serde_json::to_string_pretty(&MapFile { map }).expect("string map serialises");
    out.push('\n');
    out
}
