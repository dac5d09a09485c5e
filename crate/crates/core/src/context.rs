//! Formal contexts, derivation operators and extent enumeration.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::bitset::{AttributeSet, ObjectSet};
use crate::error::ContextError;

/// A formal context `(G, M, I)` with labelled objects and attributes.
///
/// The incidence is stored twice, once per object (its intent) and once per
/// attribute (its extent), so both derivation operators are plain
/// intersections. Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<AttributeSet>,
    cols: Vec<ObjectSet>,
}

impl FormalContext {
    /// Builds a context from a row-major boolean matrix.
    pub fn new(objects: Vec<String>, attributes: Vec<String>, incidence: Vec<Vec<bool>>) -> Result<Self, ContextError> {
        if incidence.len() != objects.len() {
            return Err(ContextError::RowCount {
                expected: objects.len(),
                found: incidence.len(),
            });
        }
        for (g, row) in incidence.iter().enumerate() {
            if row.len() != attributes.len() {
                return Err(ContextError::RowLength {
                    row: g,
                    expected: attributes.len(),
                    found: row.len(),
                });
            }
        }
        let rows = incidence
            .iter()
            .map(|row| {
                AttributeSet::from_indices(
                    attributes.len(),
                    row.iter().enumerate().filter(|(_, &b)| b).map(|(m, _)| m),
                )
            })
            .collect();
        Self::from_intents(objects, attributes, rows)
    }

    /// Builds a context from one intent per object.
    pub fn from_intents(
        objects: Vec<String>,
        attributes: Vec<String>,
        rows: Vec<AttributeSet>,
    ) -> Result<Self, ContextError> {
        check_unique(&objects).map_err(ContextError::DuplicateObject)?;
        check_unique(&attributes).map_err(ContextError::DuplicateAttribute)?;
        if rows.len() != objects.len() {
            return Err(ContextError::RowCount {
                expected: objects.len(),
                found: rows.len(),
            });
        }
        if let Some(g) = rows.iter().position(|r| r.universe() != attributes.len()) {
            return Err(ContextError::RowLength {
                row: g,
                expected: attributes.len(),
                found: rows[g].universe(),
            });
        }
        let mut cols = vec![ObjectSet::empty(objects.len()); attributes.len()];
        for (g, row) in rows.iter().enumerate() {
            for m in row {
                cols[m].insert(g);
            }
        }
        Ok(Self {
            objects,
            attributes,
            rows,
            cols,
        })
    }

    /// Builds a context from an incidence predicate.
    pub fn from_fn(
        objects: Vec<String>,
        attributes: Vec<String>,
        mut incident: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, ContextError> {
        let width = attributes.len();
        let rows = (0..objects.len())
            .map(|g| AttributeSet::from_indices(width, (0..width).filter(|&m| incident(g, m))))
            .collect();
        Self::from_intents(objects, attributes, rows)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn attribute_index(&self, label: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == label)
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    /// `{g}'`.
    pub fn intent_of(&self, g: usize) -> &AttributeSet {
        &self.rows[g]
    }

    /// `{m}'`.
    pub fn extent_of(&self, m: usize) -> &ObjectSet {
        &self.cols[m]
    }

    pub fn all_objects(&self) -> ObjectSet {
        ObjectSet::full(self.object_count())
    }

    pub fn all_attributes(&self) -> AttributeSet {
        AttributeSet::full(self.attribute_count())
    }

    fn check_objects(&self, a: &ObjectSet) {
        assert_eq!(
            a.universe(),
            self.object_count(),
            "object set does not belong to this context"
        );
    }

    fn check_attributes(&self, b: &AttributeSet) {
        assert_eq!(
            b.universe(),
            self.attribute_count(),
            "attribute set does not belong to this context"
        );
    }

    /// `A' = {m | ∀g∈A: (g,m)∈I}`.
    pub fn derive_objects(&self, a: &ObjectSet) -> AttributeSet {
        self.check_objects(a);
        let mut out = self.all_attributes();
        for g in a {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    /// `B' = {g | ∀m∈B: (g,m)∈I}`.
    pub fn derive_attributes(&self, b: &AttributeSet) -> ObjectSet {
        self.check_attributes(b);
        let mut out = self.all_objects();
        for m in b {
            out.intersect_with(&self.cols[m]);
        }
        out
    }

    /// `A''`, the smallest extent containing `A`.
    pub fn extent_closure(&self, a: &ObjectSet) -> ObjectSet {
        self.derive_attributes(&self.derive_objects(a))
    }

    pub fn is_extent(&self, a: &ObjectSet) -> bool {
        &self.extent_closure(a) == a
    }

    /// `B''` on the attribute side.
    pub fn intent_closure(&self, b: &AttributeSet) -> AttributeSet {
        self.derive_objects(&self.derive_attributes(b))
    }

    /// All extents, each once, in lectic order.
    pub fn all_extents(&self) -> ExtentFamily {
        let mut sets = Vec::new();
        next_closure_each(
            self.object_count(),
            |a| self.extent_closure(a),
            |e| {
                sets.push(e.clone());
                true
            },
        );
        ExtentFamily { sets }
    }

    /// Extents in lectic order, stopping early once more than `limit` exist.
    pub fn extents_up_to(&self, limit: usize) -> Option<ExtentFamily> {
        let mut sets = Vec::new();
        let finished = next_closure_each(
            self.object_count(),
            |a| self.extent_closure(a),
            |e| {
                sets.push(e.clone());
                sets.len() <= limit
            },
        );
        finished.then_some(ExtentFamily { sets })
    }

    /// `K[H, N] = (H, N, I ∩ H×N)`, keeping the original label order.
    pub fn induced_subcontext(&self, h: &ObjectSet, n: &AttributeSet) -> FormalContext {
        self.check_objects(h);
        self.check_attributes(n);
        let cols: Vec<usize> = n.iter().collect();
        let objects = h.iter().map(|g| self.objects[g].clone()).collect();
        let attributes = cols.iter().map(|&m| self.attributes[m].clone()).collect();
        let rows = h
            .iter()
            .map(|g| {
                AttributeSet::from_indices(
                    cols.len(),
                    cols.iter()
                        .enumerate()
                        .filter(|(_, &m)| self.rows[g].contains(m))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        FormalContext::from_intents(objects, attributes, rows).expect("labels of a valid context stay unique")
    }

    /// `K[H, M]`.
    pub fn restrict_objects(&self, h: &ObjectSet) -> FormalContext {
        self.induced_subcontext(h, &self.all_attributes())
    }

    /// `(M, G, I^d)`.
    pub fn dual(&self) -> FormalContext {
        FormalContext {
            objects: self.attributes.clone(),
            attributes: self.objects.clone(),
            rows: self.cols.iter().map(|c| c.cast()).collect(),
            cols: self.rows.iter().map(|r| r.cast()).collect(),
        }
    }

    /// Extents that are not the intersection of the extents strictly above them.
    ///
    /// Every extent is an intersection of attribute extents, so only those
    /// need testing. Returned in lectic order.
    pub fn meet_irreducible_extents(&self) -> Vec<ObjectSet> {
        let mut candidates: Vec<ObjectSet> = self.cols.clone();
        candidates.sort_by(lectic_cmp);
        candidates.dedup();
        let full = self.all_objects();
        candidates
            .iter()
            .filter(|a| **a != full)
            .filter(|a| {
                let mut meet = full.clone();
                for b in &candidates {
                    if b != *a && a.is_subset(b) {
                        meet.intersect_with(b);
                    }
                }
                meet != **a
            })
            .cloned()
            .collect()
    }

    /// Copy of this context with one extra attribute that no object has.
    ///
    /// The extents are those of `self` plus `∅`.
    pub fn with_empty_attribute(&self) -> FormalContext {
        let mut label = String::from("∅");
        while self.attributes.contains(&label) {
            label.push('\'');
        }
        let mut attributes = self.attributes.clone();
        attributes.push(label);
        let rows = self.rows.iter().map(|r| r.resized(attributes.len())).collect();
        FormalContext::from_intents(self.objects.clone(), attributes, rows)
            .expect("fresh label keeps attributes unique")
    }

    /// Number of incident pairs.
    pub fn incidence_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }
}

fn check_unique(labels: &[String]) -> Result<(), String> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(l.clone());
        }
    }
    Ok(())
}

/// Lectic order: `A < B` iff the smallest element of `A Δ B` lies in `B`.
pub fn lectic_cmp(a: &ObjectSet, b: &ObjectSet) -> Ordering {
    let diff = a.union(b).difference(&a.intersection(b));
    match diff.first() {
        None => Ordering::Equal,
        Some(i) if b.contains(i) => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}

/// Visits every closed set of `close` on `0..universe` in lectic order.
///
/// `visit` returns `false` to stop; the function returns whether the walk ran
/// to completion.
pub fn next_closure_each<C, V>(universe: usize, close: C, mut visit: V) -> bool
where
    C: Fn(&ObjectSet) -> ObjectSet,
    V: FnMut(&ObjectSet) -> bool,
{
    let mut current = close(&ObjectSet::empty(universe));
    loop {
        if !visit(&current) {
            return false;
        }
        match next_closed(&current, &close) {
            Some(next) => current = next,
            None => return true,
        }
    }
}

/// The lectically next closed set after `current`, if any.
pub fn next_closed<C>(current: &ObjectSet, close: &C) -> Option<ObjectSet>
where
    C: Fn(&ObjectSet) -> ObjectSet,
{
    let mut prefix = current.clone();
    for i in (0..current.universe()).rev() {
        if current.contains(i) {
            prefix.remove(i);
            continue;
        }
        // prefix == current ∩ {0..i-1}
        let mut candidate = prefix.clone();
        candidate.insert(i);
        let closed = close(&candidate);
        if closed.difference(&prefix).first() == Some(i) {
            return Some(closed);
        }
    }
    None
}

/// A duplicate-free closure system on one object universe, stored in lectic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtentFamily {
    sets: Vec<ObjectSet>,
}

impl ExtentFamily {
    /// Canonicalises an arbitrary collection of sets (sort lectically, dedup).
    pub fn from_sets(mut sets: Vec<ObjectSet>) -> Self {
        sets.sort_by(lectic_cmp);
        sets.dedup();
        Self { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ObjectSet> {
        self.sets.iter()
    }

    pub fn as_slice(&self) -> &[ObjectSet] {
        &self.sets
    }

    pub fn contains(&self, a: &ObjectSet) -> bool {
        self.sets.binary_search_by(|probe| lectic_cmp(probe, a)).is_ok()
    }

    /// Whether the family contains its universe and is closed under pairwise
    /// intersection.
    pub fn is_closure_system(&self, universe: usize) -> bool {
        if !self.contains(&ObjectSet::full(universe)) {
            return false;
        }
        self.sets
            .iter()
            .all(|a| self.sets.iter().all(|b| self.contains(&a.intersection(b))))
    }

    /// Pairs `(lower, upper)` of the cover relation, as indices into `iter()`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.sets.iter().enumerate() {
            for (j, b) in self.sets.iter().enumerate() {
                if i == j || !a.is_subset(b) || a == b {
                    continue;
                }
                let between = self
                    .sets
                    .iter()
                    .any(|c| c != a && c != b && a.is_subset(c) && c.is_subset(b));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl<'a> IntoIterator for &'a ExtentFamily {
    type Item = &'a ObjectSet;
    type IntoIter = std::slice::Iter<'a, ObjectSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}
