use std::collections::HashMap;

use crate::bitset::{AttributeSet, ObjectSet};
use crate::context::FormalContext;
use crate::error::{MotifError, ScaleError};
use crate::motif::classify::classify_domain;
use crate::motif::{par_filter_map, sort_motifs, EmptyExtent, Motif};
use crate::scales::ScaleFamily;

/// All domains of size at least `min_size` carrying a crown motif.
///
/// Crowns are not hereditary, so no levelwise pruning applies. Instead the
/// search runs on classes of objects with equal intents and grows a cycle of
/// classes `v0, v1, …`:
///
/// * consecutive classes `a, b` must have a closure `{a,b}''` that meets the
///   cycle only in `a, b`;
/// * every non-consecutive pair must have a closure containing the whole cycle.
///
/// Both conditions propagate to classes not yet placed, which keeps the search
/// narrow. Each closed cycle is re-checked against the full definition, then
/// expanded to every choice of nonempty subsets of its classes.
pub fn enumerate_crown_motifs(k: &FormalContext, min_size: usize, mode: EmptyExtent) -> Result<Vec<Motif>, MotifError> {
    if min_size < 3 {
        return Err(MotifError::Scale(ScaleError::Arity {
            family: "crown",
            min: 3,
            n: min_size,
        }));
    }
    let classes = object_classes(k);
    let c = classes.len();
    let reps: Vec<usize> = classes.iter().map(|members| members[0]).collect();
    let mut class_of = vec![0; k.object_count()];
    for (i, members) in classes.iter().enumerate() {
        for &g in members {
            class_of[g] = i;
        }
    }
    // pair closures projected onto classes
    let mut closure = vec![ObjectSet::empty(c); c * c];
    for a in 0..c {
        for b in a + 1..c {
            let ext = k.extent_closure(&ObjectSet::from_indices(k.object_count(), [reps[a], reps[b]]));
            let projected = ObjectSet::from_indices(c, ext.iter().map(|g| class_of[g]));
            closure[a * c + b] = projected.clone();
            closure[b * c + a] = projected;
        }
    }
    let search = CycleSearch { c, closure };
    let cycles: Vec<Vec<usize>> = par_filter_map((0..c).collect(), |start| {
        let mut found = Vec::new();
        search.from(start, &mut found);
        Some(found)
    })
    .into_iter()
    .flatten()
    .collect();

    let mut motifs = Vec::new();
    for cycle in cycles {
        let rep_domain = ObjectSet::from_indices(k.object_count(), cycle.iter().map(|&i| reps[i]));
        if classify_domain(k, &rep_domain, ScaleFamily::Crown)?.is_none() {
            continue;
        }
        let groups: Vec<&[usize]> = cycle.iter().map(|&i| classes[i].as_slice()).collect();
        for domain in class_subsets(&groups, k.object_count()) {
            if domain.len() < min_size {
                continue;
            }
            let class =
                classify_domain(k, &domain, ScaleFamily::Crown)?.expect("blocks of a crown domain form a crown");
            if class.accepts(ScaleFamily::Crown, mode) {
                motifs.push(class.into_motif(k, domain, ScaleFamily::Crown));
            }
        }
    }
    sort_motifs(&mut motifs);
    Ok(motifs)
}

/// Objects grouped by equal intent, in order of first occurrence.
fn object_classes(k: &FormalContext) -> Vec<Vec<usize>> {
    let mut index: HashMap<&AttributeSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for g in 0..k.object_count() {
        let next = classes.len();
        let i = *index.entry(k.intent_of(g)).or_insert(next);
        if i == next {
            classes.push(Vec::new());
        }
        classes[i].push(g);
    }
    classes
}

/// Every union of one nonempty subset per group.
fn class_subsets(groups: &[&[usize]], universe: usize) -> Vec<ObjectSet> {
    let mut out = vec![ObjectSet::empty(universe)];
    for group in groups {
        let mut next = Vec::new();
        for mask in 1u64..(1 << group.len().min(63)) {
            for base in &out {
                let mut d = base.clone();
                for (j, &g) in group.iter().enumerate() {
                    if mask & (1 << j) != 0 {
                        d.insert(g);
                    }
                }
                next.push(d);
            }
        }
        out = next;
    }
    out
}

struct CycleSearch {
    c: usize,
    closure: Vec<ObjectSet>,
}

struct Frame {
    path: Vec<usize>,
    on_path: ObjectSet,
    /// Later classes must lie in every non-adjacent pair closure.
    required: ObjectSet,
    /// Later classes must avoid every adjacent pair closure.
    forbidden: ObjectSet,
}

impl CycleSearch {
    fn pair(&self, a: usize, b: usize) -> &ObjectSet {
        &self.closure[a * self.c + b]
    }

    fn adjacent_ok(&self, a: usize, b: usize, on_path: &ObjectSet) -> bool {
        let mut hit = self.pair(a, b).intersection(on_path);
        hit.remove(a);
        hit.remove(b);
        hit.is_empty()
    }

    /// Cycles whose least class is `start`, each listed once: the second class
    /// is smaller than the last.
    fn from(&self, start: usize, found: &mut Vec<Vec<usize>>) {
        let mut required = ObjectSet::empty(self.c);
        for v in start + 1..self.c {
            required.insert(v);
        }
        let frame = Frame {
            path: vec![start],
            on_path: ObjectSet::from_indices(self.c, [start]),
            required,
            forbidden: ObjectSet::empty(self.c),
        };
        self.extend(&frame, found);
    }

    fn extend(&self, frame: &Frame, found: &mut Vec<Vec<usize>>) {
        let path = &frame.path;
        let len = path.len();
        let first = path[0];
        let last = path[len - 1];
        if len >= 3 && path[1] < last && self.adjacent_ok(last, first, &frame.on_path) {
            found.push(path.clone());
        }
        let candidates = frame.required.difference(&frame.forbidden).difference(&frame.on_path);
        for w in &candidates {
            let mut on_path = frame.on_path.clone();
            on_path.insert(w);
            if !self.adjacent_ok(last, w, &on_path) {
                continue;
            }
            let mut required = frame.required.clone();
            let mut fits = true;
            let interior = path
                .get(1..len.saturating_sub(1))
                .unwrap_or_default()
                .iter()
                .map(|&v| (v, w));
            let released = (len >= 3).then_some((first, last));
            for (a, b) in interior.chain(released) {
                let cl = self.pair(a, b);
                if !on_path.is_subset(cl) {
                    fits = false;
                    break;
                }
                required.intersect_with(cl);
            }
            if !fits {
                continue;
            }
            let mut forbidden = frame.forbidden.union(self.pair(last, w));
            forbidden.remove(last);
            forbidden.remove(w);
            let mut next_path = path.clone();
            next_path.push(w);
            let next = Frame {
                path: next_path,
                on_path,
                required,
                forbidden,
            };
            self.extend(&next, found);
        }
    }
}
