use crate::bitset::ObjectSet;
use crate::context::FormalContext;
use crate::measure::{is_full_scale_measure, is_scale_measure, PartialMap};

/// A total surjective scale-measure from `k` onto `s`, if one exists.
///
/// Objects of `k` are assigned in order, targets tried in order, so the first
/// map found is the lexicographically least.
pub fn exists_surjective_sm(k: &FormalContext, s: &FormalContext) -> Option<PartialMap> {
    Search::new(k, s, false).run()
}

/// A total surjective full scale-measure from `k` onto `s`, if one exists.
pub fn exists_full_sm(k: &FormalContext, s: &FormalContext) -> Option<PartialMap> {
    let k_extents = k.all_extents().len();
    let s_extents = s.all_extents().len();
    // a surjective full measure makes σ⁻¹ a bijection of the extent families
    if k_extents != s_extents {
        return None;
    }
    Search::new(k, s, true).run()
}

struct Search<'a> {
    k: &'a FormalContext,
    s: &'a FormalContext,
    full: bool,
    images: Vec<usize>,
    hits: Vec<usize>,
    hit_count: usize,
    assigned: ObjectSet,
    /// Assigned objects mapped into each attribute extent of `s`.
    partial: Vec<ObjectSet>,
}

impl<'a> Search<'a> {
    fn new(k: &'a FormalContext, s: &'a FormalContext, full: bool) -> Self {
        Self {
            k,
            s,
            full,
            images: Vec::with_capacity(k.object_count()),
            hits: vec![0; s.object_count()],
            hit_count: 0,
            assigned: ObjectSet::empty(k.object_count()),
            partial: vec![ObjectSet::empty(k.object_count()); s.attribute_count()],
        }
    }

    fn run(mut self) -> Option<PartialMap> {
        if self.s.object_count() > self.k.object_count() {
            return None;
        }
        self.assign(0)
    }

    /// The final preimage of `m'` contains the closure of its current part and
    /// must not pick up assigned objects mapped elsewhere.
    fn consistent(&self) -> bool {
        self.partial.iter().all(|p| {
            let closed = self.k.extent_closure(p);
            closed.intersection(&self.assigned) == *p
        })
    }

    fn assign(&mut self, g: usize) -> Option<PartialMap> {
        let n = self.k.object_count();
        if g == n {
            if self.hit_count != self.s.object_count() {
                return None;
            }
            let map = PartialMap::total(self.s.object_count(), self.images.clone()).expect("images are scale objects");
            let verdict = if self.full {
                is_full_scale_measure(self.k, self.s, &map)
            } else {
                is_scale_measure(self.k, self.s, &map)
            }
            .expect("search builds total maps of the right shape");
            let ok = verdict.is_scale_measure && (!self.full || verdict.is_full);
            return ok.then_some(map);
        }
        if n - g < self.s.object_count() - self.hit_count {
            return None;
        }
        for t in 0..self.s.object_count() {
            self.images.push(t);
            self.assigned.insert(g);
            if self.hits[t] == 0 {
                self.hit_count += 1;
            }
            self.hits[t] += 1;
            let touched: Vec<usize> = self.s.intent_of(t).iter().collect();
            for &m in &touched {
                self.partial[m].insert(g);
            }

            let found = if self.consistent() { self.assign(g + 1) } else { None };

            for &m in &touched {
                self.partial[m].remove(g);
            }
            self.hits[t] -= 1;
            if self.hits[t] == 0 {
                self.hit_count -= 1;
            }
            self.assigned.remove(g);
            self.images.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}
