use std::collections::HashMap;

use crate::bitset::{AttributeSet, ObjectSet};
use crate::context::FormalContext;
use crate::error::MotifError;
use crate::measure::PartialMap;
use crate::motif::{EmptyExtent, Motif};
use crate::scales::ScaleFamily;

/// How a domain `H` matches a scale family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainClass {
    /// Number of distinct object intents in `H`, i.e. the scale size.
    pub arity: usize,
    /// Whether `∅ ∈ Ext(K[H, M])`.
    pub has_empty: bool,
    /// Scale object for each member of `H`, in increasing member order.
    pub labels: Vec<usize>,
}

impl DomainClass {
    pub fn accepts(&self, family: ScaleFamily, mode: EmptyExtent) -> bool {
        match mode {
            EmptyExtent::Lenient => true,
            EmptyExtent::Strict => self.has_empty == family.has_empty_extent(self.arity),
        }
    }

    pub(crate) fn into_motif(self, k: &FormalContext, domain: ObjectSet, family: ScaleFamily) -> Motif {
        let mut assignment = vec![None; k.object_count()];
        for (g, label) in domain.iter().zip(&self.labels) {
            assignment[g] = Some(*label);
        }
        Motif {
            family,
            arity: self.arity,
            domain,
            map: PartialMap::new(self.arity, assignment).expect("labels stay below arity"),
            full: true,
            maximal: false,
        }
    }
}

/// Decides whether `K[H, M]` carries the extent structure of a `family`
/// scale, ignoring `∅` (see [`DomainClass::accepts`] for the strict test).
///
/// Objects of `H` with equal intents are inseparable and form one scale
/// object. The comparison runs on these blocks; extent enumeration stops as
/// soon as the count exceeds what the family allows for that many blocks.
pub fn classify_domain(
    k: &FormalContext,
    domain: &ObjectSet,
    family: ScaleFamily,
) -> Result<Option<DomainClass>, MotifError> {
    let size = domain.len();
    if size > 64 {
        return Err(MotifError::DomainTooLarge(size));
    }
    if size == 0 {
        return Ok(None);
    }
    let mut block_of_row: HashMap<&AttributeSet, usize> = HashMap::new();
    let mut rows: Vec<&AttributeSet> = Vec::new();
    let mut member_block = Vec::with_capacity(size);
    for g in domain {
        let row = k.intent_of(g);
        let next = rows.len();
        let b = *block_of_row.entry(row).or_insert(next);
        if b == next {
            rows.push(row);
        }
        member_block.push(b);
    }
    let n = rows.len();
    if n < family.min_arity() {
        return Ok(None);
    }
    let limit = family.extent_count(n).saturating_add(1);
    let Some(extents) = block_extents(&rows, k.attribute_count(), limit) else {
        return Ok(None);
    };
    let has_empty = extents.contains(&0);
    let nonempty: Vec<u64> = extents.into_iter().filter(|&e| e != 0).collect();
    let block_labels = match family {
        ScaleFamily::Nominal => match_nominal(n, &nonempty),
        ScaleFamily::Ordinal => match_ordinal(n, &nonempty),
        ScaleFamily::Interordinal => match_interordinal(n, &nonempty),
        ScaleFamily::Contranominal => match_contranominal(n, &nonempty),
        ScaleFamily::Crown => match_crown(n, &nonempty),
    };
    Ok(block_labels.map(|labels| DomainClass {
        arity: n,
        has_empty,
        labels: member_block.iter().map(|&b| labels[b]).collect(),
    }))
}

/// Extents of the block context as masks over block indices, or `None` once
/// more than `limit` exist.
fn block_extents(rows: &[&AttributeSet], width: usize, limit: usize) -> Option<Vec<u64>> {
    let n = rows.len();
    let close = |mask: u64| -> u64 {
        let mut common = AttributeSet::full(width);
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            common.intersect_with(rows[i]);
        }
        rows.iter()
            .enumerate()
            .filter(|(_, r)| common.is_subset(r))
            .fold(0u64, |acc, (j, _)| acc | (1 << j))
    };
    let mut current = close(0);
    let mut out = vec![current];
    'walk: loop {
        for i in (0..n).rev() {
            let bit = 1u64 << i;
            if current & bit != 0 {
                continue;
            }
            let below = bit - 1;
            let closed = close((current & below) | bit);
            if closed & below == current & below {
                current = closed;
                out.push(current);
                if out.len() > limit {
                    return None;
                }
                continue 'walk;
            }
        }
        return Some(out);
    }
}

fn singletons_present(n: usize, extents: &[u64]) -> bool {
    (0..n).all(|i| extents.contains(&(1u64 << i)))
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn match_nominal(n: usize, extents: &[u64]) -> Option<Vec<usize>> {
    let expected = if n == 1 { 1 } else { n + 1 };
    (extents.len() == expected && singletons_present(n, extents)).then(|| identity(n))
}

fn match_contranominal(n: usize, extents: &[u64]) -> Option<Vec<usize>> {
    let expected = 1u64.checked_shl(n as u32)?.checked_sub(1)?;
    (extents.len() as u64 == expected).then(|| identity(n))
}

fn match_ordinal(n: usize, extents: &[u64]) -> Option<Vec<usize>> {
    if extents.len() != n {
        return None;
    }
    let mut chain = extents.to_vec();
    chain.sort_by_key(|e| e.count_ones());
    let mut labels = vec![0; n];
    let mut previous = 0u64;
    for (k, &e) in chain.iter().enumerate() {
        let added = e & !previous;
        if e & previous != previous || added.count_ones() != 1 {
            return None;
        }
        labels[added.trailing_zeros() as usize] = k;
        previous = e;
    }
    Some(labels)
}

/// Neighbour lists of the graph whose edges are the two-element extents.
fn pair_graph(n: usize, extents: &[u64]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &e in extents.iter().filter(|e| e.count_ones() == 2) {
        let a = e.trailing_zeros() as usize;
        let b = 63 - e.leading_zeros() as usize;
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Follows a path or cycle of maximum degree two from `start`.
fn walk(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut at = start;
    loop {
        let next = adj[at].iter().copied().find(|&x| x != prev && x != start);
        match next {
            Some(x) if !order.contains(&x) => {
                order.push(x);
                prev = at;
                at = x;
            }
            _ => return order,
        }
    }
}

fn labels_from_order(order: &[usize]) -> Vec<usize> {
    let mut labels = vec![0; order.len()];
    for (pos, &b) in order.iter().enumerate() {
        labels[b] = pos;
    }
    labels
}

fn match_interordinal(n: usize, extents: &[u64]) -> Option<Vec<usize>> {
    if n == 1 {
        return (extents.len() == 1).then(|| vec![0]);
    }
    if extents.len() != n * (n + 1) / 2 || !singletons_present(n, extents) {
        return None;
    }
    let adj = pair_graph(n, extents);
    if adj.iter().any(|a| a.len() > 2) {
        return None;
    }
    let start = adj.iter().position(|a| a.len() == 1)?;
    let order = walk(&adj, start);
    if order.len() != n {
        return None;
    }
    for lo in 0..n {
        let mut interval = 0u64;
        for &b in &order[lo..] {
            interval |= 1 << b;
            if !extents.contains(&interval) {
                return None;
            }
        }
    }
    let forward = labels_from_order(&order);
    let backward: Vec<usize> = forward.iter().map(|&l| n - 1 - l).collect();
    Some(forward.min(backward))
}

fn match_crown(n: usize, extents: &[u64]) -> Option<Vec<usize>> {
    if n < 3 || extents.len() != 2 * n + 1 || !singletons_present(n, extents) {
        return None;
    }
    let adj = pair_graph(n, extents);
    if adj.iter().any(|a| a.len() != 2) {
        return None;
    }
    let order = walk(&adj, 0);
    if order.len() != n {
        return None;
    }
    let mut best: Option<Vec<usize>> = None;
    for shift in 0..n {
        for reflect in [false, true] {
            let rotated: Vec<usize> = (0..n)
                .map(|i| {
                    let j = if reflect { (n + shift - i) % n } else { (shift + i) % n };
                    order[j]
                })
                .collect();
            let labels = labels_from_order(&rotated);
            if best.as_ref().is_none_or(|b| labels < *b) {
                best = Some(labels);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scales::make_scale;

    fn classify(k: &FormalContext, items: &[usize], f: ScaleFamily) -> Option<DomainClass> {
        classify_domain(k, &ObjectSet::from_indices(k.object_count(), items.iter().copied()), f).unwrap()
    }

    #[test]
    fn scales_classify_as_themselves() {
        for family in ScaleFamily::ALL {
            for n in family.min_arity()..=6 {
                let s = make_scale(family, n).unwrap();
                let all: Vec<usize> = (0..n).collect();
                let c = classify(&s, &all, family).unwrap_or_else(|| panic!("{family} {n}"));
                assert_eq!(c.arity, n);
                assert_eq!(c.labels, all, "{family} {n}");
                assert!(c.accepts(family, EmptyExtent::Strict), "{family} {n}");
            }
        }
    }

    #[test]
    fn reversed_interordinal_prefers_least_labels() {
        let s = make_scale(ScaleFamily::Interordinal, 4).unwrap();
        let c = classify(&s, &[0, 1, 2, 3], ScaleFamily::Interordinal).unwrap();
        assert_eq!(c.labels, vec![0, 1, 2, 3]);
        let c = classify(&s, &[0, 2, 3], ScaleFamily::Interordinal).unwrap();
        assert_eq!(c.labels, vec![0, 1, 2]);
    }

    #[test]
    fn ordinal_singletons_depend_on_mode() {
        let n3 = make_scale(ScaleFamily::Nominal, 3).unwrap();
        let c = classify(&n3, &[1], ScaleFamily::Ordinal).unwrap();
        assert!(c.has_empty);
        assert!(c.accepts(ScaleFamily::Ordinal, EmptyExtent::Lenient));
        assert!(!c.accepts(ScaleFamily::Ordinal, EmptyExtent::Strict));
        assert!(c.accepts(ScaleFamily::Contranominal, EmptyExtent::Strict));
    }

    #[test]
    fn duplicate_rows_form_one_block() {
        let k = FormalContext::from_fn(
            vec!["a".into(), "b".into(), "c".into()],
            vec!["x".into(), "y".into()],
            |g, m| (g < 2) == (m == 0),
        )
        .unwrap();
        let c = classify(&k, &[0, 1, 2], ScaleFamily::Nominal).unwrap();
        assert_eq!(c.arity, 2);
        assert_eq!(c.labels, vec![0, 0, 1]);
    }

    #[test]
    fn crown_three_is_boolean() {
        let b3 = make_scale(ScaleFamily::Contranominal, 3).unwrap();
        assert!(classify(&b3, &[0, 1, 2], ScaleFamily::Crown).is_some());
        let b4 = make_scale(ScaleFamily::Contranominal, 4).unwrap();
        assert!(classify(&b4, &[0, 1, 2, 3], ScaleFamily::Crown).is_none());
    }

    #[test]
    fn nominal_rejects_chain() {
        let o3 = make_scale(ScaleFamily::Ordinal, 3).unwrap();
        assert!(classify(&o3, &[0, 1, 2], ScaleFamily::Nominal).is_none());
        assert!(classify(&o3, &[0, 2], ScaleFamily::Ordinal).is_some());
    }
}
