use crate::context::FormalContext;
use crate::motif::Motif;
use crate::scales::ScaleFamily;

/// Reading of a motif in plain words, with the domain's objects listed in
/// scale order. Objects sharing a scale object are shown as `{a, b}`.
pub fn basic_meaning(k: &FormalContext, motif: &Motif) -> String {
    let predicate = match motif.family {
        ScaleFamily::Nominal => "form a partition",
        ScaleFamily::Ordinal => "form a rank order",
        ScaleFamily::Interordinal => "form a linear betweenness relation",
        ScaleFamily::Contranominal => "form a partition and are independent",
        ScaleFamily::Crown => return "No basic meaning is given for crown motifs.".to_string(),
    };
    let mut blocks: Vec<Vec<&str>> = vec![Vec::new(); motif.arity];
    for g in &motif.domain {
        if let Some(t) = motif.map.get(g) {
            blocks[t].push(&k.objects()[g]);
        }
    }
    let items: Vec<String> = blocks
        .into_iter()
        .filter(|b| !b.is_empty())
        .map(|b| match b.as_slice() {
            [one] => one.to_string(),
            many => format!("{{{}}}", many.join(", ")),
        })
        .collect();
    format!("{} {predicate}", join_list(&items))
}

fn join_list(items: &[String]) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{} and {last}", init.join(", ")),
    }
}
