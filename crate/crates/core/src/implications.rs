//! Object implications, the canonical base, and implication-based
//! recognition of scale-measures.
//!
//! An object implication `A → B` holds in a context iff `B ⊆ A''`. The closure
//! system of a context is the set of models of its implication theory, so
//! comparing closure systems reduces to mutual entailment of two bases.

use std::collections::HashSet;

use crate::bitset::ObjectSet;
use crate::context::{next_closed, FormalContext};
use crate::error::MeasureError;
use crate::measure::{restrict, PartialMap};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Implication {
    pub premise: ObjectSet,
    pub conclusion: ObjectSet,
}

impl Implication {
    pub fn new(premise: ObjectSet, conclusion: ObjectSet) -> Self {
        assert_eq!(
            premise.universe(),
            conclusion.universe(),
            "premise and conclusion must share a universe"
        );
        Self { premise, conclusion }
    }

    pub fn is_trivial(&self) -> bool {
        self.conclusion.is_subset(&self.premise)
    }

    /// Whether `set` respects this implication.
    pub fn respected_by(&self, set: &ObjectSet) -> bool {
        !self.premise.is_subset(set) || self.conclusion.is_subset(set)
    }
}

/// A duplicate-free set of implications over `0..universe`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationTheory {
    universe: usize,
    implications: Vec<Implication>,
}

impl ImplicationTheory {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            implications: Vec::new(),
        }
    }

    pub fn from_implications<I: IntoIterator<Item = Implication>>(universe: usize, items: I) -> Self {
        let mut t = Self::new(universe);
        for imp in items {
            t.push(imp);
        }
        t
    }

    /// Adds `imp` unless already present. Returns whether it was added.
    pub fn push(&mut self, imp: Implication) -> bool {
        assert_eq!(
            imp.premise.universe(),
            self.universe,
            "implication over another universe"
        );
        if self.implications.contains(&imp) {
            return false;
        }
        self.implications.push(imp);
        true
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Implication> {
        self.implications.iter()
    }

    /// Smallest superset of `set` respecting every implication.
    pub fn close(&self, set: &ObjectSet) -> ObjectSet {
        let mut out = set.clone();
        let mut used = vec![false; self.implications.len()];
        loop {
            let mut changed = false;
            for (i, imp) in self.implications.iter().enumerate() {
                if !used[i] && imp.premise.is_subset(&out) {
                    used[i] = true;
                    if !imp.conclusion.is_subset(&out) {
                        out.union_with(&imp.conclusion);
                        changed = true;
                    }
                }
            }
            if !changed {
                return out;
            }
        }
    }

    pub fn entails(&self, imp: &Implication) -> bool {
        imp.conclusion.is_subset(&self.close(&imp.premise))
    }

    /// Every implication of `other` follows from `self`.
    pub fn entails_all(&self, other: &ImplicationTheory) -> bool {
        other.iter().all(|imp| self.entails(imp))
    }
}

impl<'a> IntoIterator for &'a ImplicationTheory {
    type Item = &'a Implication;
    type IntoIter = std::slice::Iter<'a, Implication>;

    fn into_iter(self) -> Self::IntoIter {
        self.implications.iter()
    }
}

/// The canonical (Duquenne–Guigues) base of the object implications of `k`.
///
/// Walks the sets closed under the implications found so far in lectic order;
/// each such set that is not an extent is pseudo-closed and contributes
/// `P → P''`.
pub fn theory_base(k: &FormalContext) -> ImplicationTheory {
    let n = k.object_count();
    let mut base = ImplicationTheory::new(n);
    let mut current = ObjectSet::empty(n);
    loop {
        let closed = k.extent_closure(&current);
        if closed != current {
            base.push(Implication::new(current.clone(), closed));
        }
        match next_closed(&current, &|x: &ObjectSet| base.close(x)) {
            Some(next) => current = next,
            None => return base,
        }
    }
}

pub fn entails(theory: &ImplicationTheory, imp: &Implication) -> bool {
    theory.entails(imp)
}

/// `σ⁻¹(T)`: every implication mapped element-wise through the preimage.
///
/// `theory` lives on the target universe of `sigma`; the result lives on its
/// source universe.
pub fn preimage_theory(sigma: &PartialMap, theory: &ImplicationTheory) -> ImplicationTheory {
    assert_eq!(theory.universe(), sigma.target_size(), "theory over another universe");
    let mut seen = HashSet::new();
    let mut out = ImplicationTheory::new(sigma.source_size());
    for imp in theory {
        let mapped = Implication::new(sigma.preimage(&imp.premise), sigma.preimage(&imp.conclusion));
        if seen.insert(mapped.clone()) {
            out.implications.push(mapped);
        }
    }
    out
}

/// A theory whose models are exactly `σ⁻¹(Ext(S))`, for total `σ`.
///
/// The preimage of the scale's base alone also admits sets that split a fibre
/// of `σ`, and targets outside the image make some premises vacuous. The scale
/// is therefore cut down to `σ(G_K)` first, and each fibre `F` contributes
/// `{g} → F` for its members.
pub fn pullback_theory(s: &FormalContext, sigma: &PartialMap) -> Result<ImplicationTheory, MeasureError> {
    let everything = ObjectSet::full(sigma.source_size());
    let (onto, image_scale) = restrict(s, sigma, &everything)?;
    let mut theory = preimage_theory(&onto, &theory_base(&image_scale));
    for (_, fibre) in onto.fibres() {
        if fibre.len() < 2 {
            continue;
        }
        for g in &fibre {
            let single = ObjectSet::from_indices(fibre.universe(), [g]);
            theory.push(Implication::new(single, fibre.clone()));
        }
    }
    Ok(theory)
}

/// Implication-based recognition; returns `(is_scale_measure, is_full)`.
///
/// `σ` is a scale-measure iff the pulled-back theory of `S` entails `Th(K)`,
/// and full iff the two theories are equivalent.
pub fn is_scale_measure_by_implications(
    k: &FormalContext,
    s: &FormalContext,
    sigma: &PartialMap,
) -> Result<(bool, bool), MeasureError> {
    if sigma.source_size() != k.object_count() {
        return Err(MeasureError::SourceMismatch {
            expected: k.object_count(),
            found: sigma.source_size(),
        });
    }
    if let Some(g) = sigma.assignment().iter().position(Option::is_none) {
        return Err(MeasureError::NotTotal(g));
    }
    let pulled = pullback_theory(s, sigma)?;
    let own = theory_base(k);
    let is_sm = pulled.entails_all(&own);
    let is_full = is_sm && own.entails_all(&pulled);
    Ok((is_sm, is_full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scales::{make_scale, ScaleFamily};

    fn set(n: usize, items: &[usize]) -> ObjectSet {
        ObjectSet::from_indices(n, items.iter().copied())
    }

    fn imp(n: usize, p: &[usize], c: &[usize]) -> Implication {
        Implication::new(set(n, p), set(n, c))
    }

    #[test]
    fn boolean_base_is_empty() {
        let b3 = make_scale(ScaleFamily::Contranominal, 3).unwrap();
        assert!(theory_base(&b3).is_empty());
    }

    #[test]
    fn nominal_base_entails_pair_closures() {
        let n3 = make_scale(ScaleFamily::Nominal, 3).unwrap();
        let t = theory_base(&n3);
        assert!(t.entails(&imp(3, &[0, 1], &[2])));
        assert!(t.entails(&imp(3, &[0, 2], &[1])));
        assert!(t.entails(&imp(3, &[1, 2], &[0])));
        assert!(!t.entails(&imp(3, &[0], &[1])));
    }

    #[test]
    fn ordinal_base_entails_prefixes() {
        let o3 = make_scale(ScaleFamily::Ordinal, 3).unwrap();
        let t = theory_base(&o3);
        assert!(t.entails(&imp(3, &[1], &[0])));
        assert!(t.entails(&imp(3, &[2], &[0, 1])));
        assert!(!t.entails(&imp(3, &[1], &[2])));
    }

    #[test]
    fn entailment_basics() {
        let t = ImplicationTheory::from_implications(3, [imp(3, &[0], &[1]), imp(3, &[1], &[2])]);
        assert!(t.entails(&imp(3, &[0], &[2])));
        assert!(ImplicationTheory::new(3).entails(&imp(3, &[0], &[0])));
        assert!(!t.entails(&imp(3, &[2], &[0])));
    }

    #[test]
    fn duplicates_are_dropped() {
        let mut t = ImplicationTheory::new(2);
        assert!(t.push(imp(2, &[0], &[1])));
        assert!(!t.push(imp(2, &[0], &[1])));
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn identity_preimage_is_unchanged() {
        let o3 = make_scale(ScaleFamily::Ordinal, 3).unwrap();
        let t = theory_base(&o3);
        assert_eq!(preimage_theory(&PartialMap::identity(3), &t), t);
    }

    #[test]
    fn collapsing_preimage() {
        // g0, g1 ↦ s0 and g2 ↦ s1
        let sigma = PartialMap::total(2, vec![0, 0, 1]).unwrap();
        let t = ImplicationTheory::from_implications(2, [imp(2, &[0], &[1])]);
        let p = preimage_theory(&sigma, &t);
        assert_eq!(p.iter().next().unwrap(), &imp(3, &[0, 1], &[2]));
    }

    #[test]
    fn recognition_examples() {
        let b3 = make_scale(ScaleFamily::Contranominal, 3).unwrap();
        let n3 = make_scale(ScaleFamily::Nominal, 3).unwrap();
        let id = PartialMap::identity(3);
        assert_eq!(is_scale_measure_by_implications(&n3, &n3, &id).unwrap(), (true, true));
        assert_eq!(is_scale_measure_by_implications(&b3, &n3, &id).unwrap(), (true, false));
        let n1 = make_scale(ScaleFamily::Nominal, 1).unwrap();
        let constant = PartialMap::total(1, vec![0, 0, 0]).unwrap();
        assert_eq!(
            is_scale_measure_by_implications(&n3, &n1, &constant).unwrap(),
            (true, false)
        );
    }

    #[test]
    fn fibres_are_respected() {
        // two objects with equal rows collapse onto one scale object
        let k = FormalContext::from_fn(
            vec!["a".into(), "b".into(), "c".into()],
            vec!["x".into(), "y".into()],
            |g, m| (g < 2) == (m == 0),
        )
        .unwrap();
        let n2 = make_scale(ScaleFamily::Nominal, 2).unwrap();
        let sigma = PartialMap::total(2, vec![0, 0, 1]).unwrap();
        assert_eq!(is_scale_measure_by_implications(&k, &n2, &sigma).unwrap(), (true, true));
    }

    #[test]
    fn literal_preimage_splits_fibres() {
        let k = FormalContext::from_fn(
            vec!["a".into(), "b".into(), "c".into()],
            vec!["x".into(), "y".into()],
            |g, m| (g < 2) == (m == 0),
        )
        .unwrap();
        let n2 = make_scale(ScaleFamily::Nominal, 2).unwrap();
        let sigma = PartialMap::total(2, vec![0, 0, 1]).unwrap();
        let literal = preimage_theory(&sigma, &theory_base(&n2));
        // {a} is a model of the literal preimage but no extent of k
        assert_eq!(literal.close(&set(3, &[0])), set(3, &[0]));
        assert!(!literal.entails_all(&theory_base(&k)));
        // on 𝔹₃ both theories are empty although σ is not full
        let b3 = make_scale(ScaleFamily::Contranominal, 3).unwrap();
        let literal = preimage_theory(&sigma, &theory_base(&n2));
        assert!(literal.entails_all(&theory_base(&b3)) && theory_base(&b3).entails_all(&literal));
        assert_eq!(
            is_scale_measure_by_implications(&b3, &n2, &sigma).unwrap(),
            (true, false)
        );
    }

    #[test]
    fn partial_map_is_rejected() {
        let n3 = make_scale(ScaleFamily::Nominal, 3).unwrap();
        let sigma = PartialMap::new(3, vec![Some(0), None, Some(1)]).unwrap();
        assert_eq!(
            is_scale_measure_by_implications(&n3, &n3, &sigma),
            Err(MeasureError::NotTotal(1))
        );
    }
}
