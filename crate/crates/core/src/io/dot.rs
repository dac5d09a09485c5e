use std::fmt::Write;

use crate::bitset::ObjectSet;
use crate::context::FormalContext;

/// Hasse diagram of `Ext(k)` as a DOT digraph, edges pointing from lower to
/// upper covers.
///
/// Each node carries the reduced labelling: attribute `m` at `m'`, object `g`
/// at `{g}''`. Objects in `highlight` are set in bold.
pub fn export_dot(k: &FormalContext, highlight: Option<&ObjectSet>) -> String {
    let extents = k.all_extents();
    let index_of = |a: &ObjectSet| extents.iter().position(|e| e == a).expect("closures are extents");
    let mut objects_at = vec![Vec::new(); extents.len()];
    for g in 0..k.object_count() {
        let at = index_of(&k.extent_closure(&ObjectSet::from_indices(k.object_count(), [g])));
        objects_at[at].push(g);
    }
    let mut attributes_at = vec![Vec::new(); extents.len()];
    for m in 0..k.attribute_count() {
        attributes_at[index_of(k.extent_of(m))].push(m);
    }

    let mut out = String::from("digraph extents {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, extent) in extents.iter().enumerate() {
        let attrs: Vec<String> = attributes_at[i].iter().map(|&m| escape(&k.attributes()[m])).collect();
        let objs: Vec<String> = objects_at[i]
            .iter()
            .map(|&g| {
                let label = escape(&k.objects()[g]);
                if highlight.is_some_and(|h| h.contains(g)) {
                    format!("<b>{label}</b>")
                } else {
                    label
                }
            })
            .collect();
        let _ = writeln!(
            out,
            "  e{i} [label=<{}<br/>{}> tooltip=\"{} objects\"];",
            attrs.join(", "),
            objs.join(", "),
            extent.len()
        );
    }
    for (lower, upper) in extents.covers() {
        let _ = writeln!(out, "  e{lower} -> e{upper};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
