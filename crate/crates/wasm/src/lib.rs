//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function takes context text (`.cxt` or CSV) and returns JSON
//! or plain text. The `*_json` functions hold the logic and run on any target,
//! so they are what the tests call.

use ordmotif::io::{parse_context, parse_map, render_report, write_cxt};
use ordmotif::motif::basic_meaning;
use ordmotif::{
    census, enumerate_crown_motifs, enumerate_motifs, is_full_scale_measure, is_local_scale_measure, make_scale,
    maximal_motifs, CensusOptions, EmptyExtent, FormalContext, ObjectSet, ScaleFamily,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct FoundMotif {
    domain: Vec<String>,
    /// Scale object (1-based) per domain member, same order.
    images: Vec<usize>,
    arity: usize,
    maximal: bool,
    meaning: String,
}

#[derive(Serialize)]
struct Verdict {
    domain: Vec<String>,
    total: bool,
    scale_measure: bool,
    full: bool,
    surjective: bool,
    witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct Report {
    rows: Vec<ordmotif::motif::FamilyCensus>,
    markdown: String,
}

fn context(text: &str, what: &str) -> Result<FormalContext, String> {
    parse_context(text).map_err(|e| format!("{what}: {e}"))
}

fn labels(k: &FormalContext, set: &ObjectSet) -> Vec<String> {
    set.iter().map(|g| k.objects()[g].clone()).collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn find_motifs_json(
    text: &str,
    family: &str,
    min_size: usize,
    mode: &str,
    maximal_only: bool,
) -> Result<String, String> {
    let k = context(text, "context")?;
    let family: ScaleFamily = family.parse()?;
    let mode: EmptyExtent = mode.parse()?;
    let mut motifs = if family == ScaleFamily::Crown {
        enumerate_crown_motifs(&k, min_size.max(3), mode)
    } else {
        enumerate_motifs(&k, family, min_size.max(1), mode)
    }
    .map_err(|e| e.to_string())?;
    let maximal = maximal_motifs(&motifs);
    if maximal_only {
        motifs = maximal;
    } else {
        for m in &mut motifs {
            m.maximal = maximal.iter().any(|x| x.domain == m.domain);
        }
    }
    let found: Vec<FoundMotif> = motifs
        .iter()
        .map(|m| FoundMotif {
            domain: labels(&k, &m.domain),
            images: m.domain.iter().filter_map(|g| m.map.get(g)).map(|t| t + 1).collect(),
            arity: m.arity,
            maximal: m.maximal,
            meaning: basic_meaning(&k, m),
        })
        .collect();
    to_json(&found)
}

/// `lenient` counts ∅ as an extent on both sides.
pub fn verify_map_json(context_text: &str, scale_text: &str, map_text: &str, lenient: bool) -> Result<String, String> {
    let mut k = context(context_text, "context")?;
    let mut s = context(scale_text, "scale")?;
    let sigma = parse_map(map_text, &k, &s).map_err(|e| format!("map: {e}"))?;
    if lenient {
        k = k.with_empty_attribute();
        s = s.with_empty_attribute();
    }
    let total = sigma.is_total();
    let v = if total {
        is_full_scale_measure(&k, &s, &sigma)
    } else {
        is_local_scale_measure(&k, &s, &sigma, true)
    }
    .map_err(|e| e.to_string())?;
    to_json(&Verdict {
        domain: labels(&k, &sigma.domain()),
        total,
        scale_measure: v.is_scale_measure,
        full: v.is_full,
        surjective: v.is_surjective,
        witness: v.witness.as_ref().map(|w| labels(&k, w)),
    })
}

pub fn census_json(text: &str, dual: bool, min_size: usize) -> Result<String, String> {
    let mut k = context(text, "context")?;
    if dual {
        k = k.dual();
    }
    let opts = CensusOptions::default().with_min_size(min_size);
    let result = census(&k, &opts).map_err(|e| e.to_string())?;
    to_json(&Report {
        markdown: render_report(&k, &result, &opts).markdown,
        rows: result.families,
    })
}

pub fn standard_scale_cxt(family: &str, n: usize) -> Result<String, String> {
    let family: ScaleFamily = family.parse()?;
    make_scale(family, n).map(|s| write_cxt(&s)).map_err(|e| e.to_string())
}

fn js<T>(r: Result<T, String>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// JSON list of motifs: `[{domain, images, arity, maximal, meaning}]`.
#[wasm_bindgen(js_name = findMotifs)]
pub fn find_motifs(
    text: &str,
    family: &str,
    min_size: usize,
    mode: &str,
    maximal_only: bool,
) -> Result<String, JsError> {
    js(find_motifs_json(text, family, min_size, mode, maximal_only))
}

/// JSON verdict for a `{"map": {...}}` document.
#[wasm_bindgen(js_name = verifyMap)]
pub fn verify_map(context_text: &str, scale_text: &str, map_text: &str, lenient: bool) -> Result<String, JsError> {
    js(verify_map_json(context_text, scale_text, map_text, lenient))
}

/// JSON `{rows, markdown}` for all five families.
#[wasm_bindgen(js_name = censusReport)]
pub fn census_report(text: &str, dual: bool, min_size: usize) -> Result<String, JsError> {
    js(census_json(text, dual, min_size))
}

#[wasm_bindgen(js_name = standardScale)]
pub fn standard_scale(family: &str, n: usize) -> Result<String, JsError> {
    js(standard_scale_cxt(family, n))
}
