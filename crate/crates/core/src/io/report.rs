use std::fmt::Write;

use crate::context::FormalContext;
use crate::motif::{basic_meaning, CensusOptions, FamilyCensus, MotifCensus};
use crate::scales::ScaleFamily;

/// Largest motifs listed per family before the listing is cut short.
pub const LISTING_LIMIT: usize = 20;

type RowValue = fn(&FamilyCensus) -> usize;

const ROWS: [(&str, RowValue); 3] = [
    ("local full sm", |r| r.count),
    ("maximal lf-sm", |r| r.maximal),
    ("largest lf-sm", |r| r.largest),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportDocument {
    pub markdown: String,
    pub tsv: String,
}

pub fn render_report(k: &FormalContext, census: &MotifCensus, opts: &CensusOptions) -> ReportDocument {
    ReportDocument {
        markdown: markdown(k, census, opts),
        tsv: tsv(census),
    }
}

fn tsv(census: &MotifCensus) -> String {
    let mut out = String::new();
    for family in ScaleFamily::ALL {
        out.push('\t');
        out.push_str(family.name());
    }
    out.push('\n');
    for (label, value) in ROWS {
        out.push_str(label);
        for row in &census.families {
            let _ = write!(out, "\t{}", value(row));
        }
        out.push('\n');
    }
    out
}

fn markdown(k: &FormalContext, census: &MotifCensus, opts: &CensusOptions) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Ordinal motif census\n");
    let _ = writeln!(
        out,
        "{} objects, {} attributes; empty extent: {}; minimum domain size: {}\n",
        k.object_count(),
        k.attribute_count(),
        opts.empty_extent,
        ScaleFamily::ALL
            .iter()
            .map(|&f| format!("{} {}", f.name(), opts.min_size_of(f)))
            .collect::<Vec<_>>()
            .join(", "),
    );
    out.push('|');
    for family in ScaleFamily::ALL {
        let _ = write!(out, " | {}", family.name());
    }
    out.push_str(" |\n|---");
    out.push_str(&"|---:".repeat(ScaleFamily::ALL.len()));
    out.push_str("|\n");
    for (label, value) in ROWS {
        let _ = write!(out, "| {label}");
        for row in &census.families {
            let _ = write!(out, " | {}", value(row));
        }
        out.push_str(" |\n");
    }

    out.push_str("\n## Largest motifs\n");
    for family in ScaleFamily::ALL {
        let largest = census.largest_of(family);
        let _ = write!(out, "\n### {}\n\n", family.name());
        if largest.is_empty() {
            out.push_str("none\n");
            continue;
        }
        let _ = writeln!(
            out,
            "{} domain(s) of size {}:\n",
            largest.len(),
            census.get(family).largest
        );
        for motif in largest.iter().take(LISTING_LIMIT) {
            let members: Vec<&str> = motif.domain.iter().map(|g| k.objects()[g].as_str()).collect();
            let _ = writeln!(out, "- {{{}}}: {}", members.join(", "), basic_meaning(k, motif));
        }
        if largest.len() > LISTING_LIMIT {
            let _ = writeln!(out, "- … {} more", largest.len() - LISTING_LIMIT);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motif::census;
    use crate::scales::make_scale;

    #[test]
    fn nominal_three_column() {
        let n3 = make_scale(ScaleFamily::Nominal, 3).unwrap();
        let opts = CensusOptions::default().with_min_size(2);
        let doc = render_report(&n3, &census(&n3, &opts).unwrap(), &opts);
        let lines: Vec<&str> = doc.tsv.lines().collect();
        assert_eq!(lines[0], "\tnominal\tordinal\tinterordinal\tcontranominal\tcrown");
        let nominal: Vec<&str> = lines[1..].iter().map(|l| l.split('\t').nth(1).unwrap()).collect();
        assert_eq!(nominal.join("/"), "4/1/3");
        assert!(doc.markdown.contains("{1, 2, 3}: 1, 2 and 3 form a partition"));
    }

    #[test]
    fn empty_context_is_all_zero() {
        let k = FormalContext::new(vec![], vec![], vec![]).unwrap();
        let opts = CensusOptions::default();
        let doc = render_report(&k, &census(&k, &opts).unwrap(), &opts);
        for line in doc.tsv.lines().skip(1) {
            assert!(line.split('\t').skip(1).all(|c| c == "0"), "{line}");
        }
    }
}
