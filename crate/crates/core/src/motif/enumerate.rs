use std::collections::HashSet;

use crate::bitset::ObjectSet;
use crate::context::FormalContext;
use crate::error::MotifError;
use crate::motif::classify::{classify_domain, DomainClass};
use crate::motif::{par_filter_map, sort_motifs, EmptyExtent, Motif};
use crate::scales::ScaleFamily;

/// All domains of size at least `min_size` carrying a `family` motif.
///
/// Domains grow one object per level. For a hereditary family every subset of
/// a motif domain is again a motif domain (ignoring `∅`), so a `(k+1)`-set is
/// only classified when all of its `k`-subsets survived the previous level.
/// Strict mode filters the lenient result, since strict matching alone is not
/// closed under taking subsets.
pub fn enumerate_motifs(
    k: &FormalContext,
    family: ScaleFamily,
    min_size: usize,
    mode: EmptyExtent,
) -> Result<Vec<Motif>, MotifError> {
    if !family.is_hereditary() {
        return Err(MotifError::NotHereditary);
    }
    let universe = k.object_count();
    let to_set = |items: &[usize]| ObjectSet::from_indices(universe, items.iter().copied());
    let classify = |items: Vec<usize>| -> Option<(Vec<usize>, DomainClass)> {
        classify_domain(k, &to_set(&items), family)
            .expect("levels stop before the domain limit")
            .map(|class| (items, class))
    };

    let mut motifs = Vec::new();
    let mut level: Vec<(Vec<usize>, DomainClass)> = par_filter_map((0..universe).map(|g| vec![g]).collect(), classify);
    let mut size = 1;
    while !level.is_empty() {
        for (items, class) in &level {
            if size >= min_size && class.accepts(family, mode) {
                motifs.push(class.clone().into_motif(k, to_set(items), family));
            }
        }
        if size == 64 {
            break;
        }
        let candidates = next_candidates(&level);
        level = par_filter_map(candidates, classify);
        size += 1;
    }
    sort_motifs(&mut motifs);
    Ok(motifs)
}

/// Apriori join: two sorted `k`-sets sharing their first `k-1` members give a
/// candidate, kept only if every other `k`-subset is present.
fn next_candidates(level: &[(Vec<usize>, DomainClass)]) -> Vec<Vec<usize>> {
    let present: HashSet<&[usize]> = level.iter().map(|(items, _)| items.as_slice()).collect();
    let mut out = Vec::new();
    let mut scratch = Vec::new();
    for (i, (a, _)) in level.iter().enumerate() {
        let prefix = &a[..a.len() - 1];
        for (b, _) in &level[i + 1..] {
            if &b[..b.len() - 1] != prefix {
                break;
            }
            let mut candidate = a.clone();
            candidate.push(*b.last().expect("levels hold nonempty sets"));
            let all_present = (0..candidate.len() - 2).all(|skip| {
                scratch.clear();
                scratch.extend(
                    candidate
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &g)| g),
                );
                present.contains(scratch.as_slice())
            });
            if all_present {
                out.push(candidate);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scales::make_scale;

    fn domains(motifs: &[Motif]) -> Vec<Vec<usize>> {
        motifs.iter().map(|m| m.domain.iter().collect()).collect()
    }

    #[test]
    fn nominal_three() {
        let n3 = make_scale(ScaleFamily::Nominal, 3).unwrap();
        let motifs = enumerate_motifs(&n3, ScaleFamily::Nominal, 2, EmptyExtent::Lenient).unwrap();
        assert_eq!(
            domains(&motifs),
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]
        );
    }

    #[test]
    fn ordinal_four_all_subsets() {
        let o4 = make_scale(ScaleFamily::Ordinal, 4).unwrap();
        let motifs = enumerate_motifs(&o4, ScaleFamily::Ordinal, 2, EmptyExtent::Lenient).unwrap();
        assert_eq!(motifs.len(), 11);
    }

    #[test]
    fn interordinal_full_domain() {
        let i4 = make_scale(ScaleFamily::Interordinal, 4).unwrap();
        let motifs = enumerate_motifs(&i4, ScaleFamily::Interordinal, 4, EmptyExtent::Lenient).unwrap();
        assert_eq!(domains(&motifs), vec![vec![0, 1, 2, 3]]);
        assert_eq!(motifs[0].map, crate::measure::PartialMap::identity(4));
    }

    #[test]
    fn crown_is_refused() {
        let c3 = make_scale(ScaleFamily::Crown, 3).unwrap();
        assert_eq!(
            enumerate_motifs(&c3, ScaleFamily::Crown, 3, EmptyExtent::Lenient),
            Err(MotifError::NotHereditary)
        );
    }

    #[test]
    fn strict_mode_drops_ordinal_singletons_without_full_row() {
        let n3 = make_scale(ScaleFamily::Nominal, 3).unwrap();
        let lenient = enumerate_motifs(&n3, ScaleFamily::Ordinal, 1, EmptyExtent::Lenient).unwrap();
        let strict = enumerate_motifs(&n3, ScaleFamily::Ordinal, 1, EmptyExtent::Strict).unwrap();
        assert_eq!(lenient.len(), 3);
        assert!(strict.is_empty());
    }

    #[test]
    fn every_motif_verifies() {
        let i4 = make_scale(ScaleFamily::Interordinal, 4).unwrap();
        for family in [
            ScaleFamily::Nominal,
            ScaleFamily::Interordinal,
            ScaleFamily::Contranominal,
        ] {
            for mode in [EmptyExtent::Lenient, EmptyExtent::Strict] {
                for m in enumerate_motifs(&i4, family, 1, mode).unwrap() {
                    let v = m.verify(&i4, mode).unwrap();
                    assert!(v.is_full && v.is_surjective, "{family} {:?}", m.domain);
                }
            }
        }
    }
}
