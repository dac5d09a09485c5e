//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works on plain `u64` masks built from `incident` alone, and
//! enumerates subsets and maps exhaustively, so it shares no code path with
//! the library beyond reading the incidence.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ordmotif::{FormalContext, ObjectSet, PartialMap, ScaleFamily};
use rand::Rng;

/// Incidence as bit masks: `rows[g]` over attributes.
#[derive(Clone, Debug)]
pub struct Dense {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<u64>,
}

impl Dense {
    pub fn of(k: &FormalContext) -> Self {
        let rows = (0..k.object_count())
            .map(|g| {
                (0..k.attribute_count())
                    .filter(|&m| k.incident(g, m))
                    .fold(0, |acc, m| acc | 1 << m)
            })
            .collect();
        Dense {
            n: k.object_count(),
            m: k.attribute_count(),
            rows,
        }
    }

    /// Closure of `a` inside the subcontext on objects `h` (`a ⊆ h`).
    pub fn closure_in(&self, h: u64, a: u64) -> u64 {
        let full_attrs = if self.m == 64 { u64::MAX } else { (1u64 << self.m) - 1 };
        let intent = (0..self.n)
            .filter(|g| a >> g & 1 == 1)
            .fold(full_attrs, |acc, g| acc & self.rows[g]);
        (0..self.n)
            .filter(|&g| h >> g & 1 == 1 && self.rows[g] & intent == intent)
            .fold(0, |acc, g| acc | 1 << g)
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// `Ext(K[H, M])` by testing every subset of `h`.
    pub fn extents_in(&self, h: u64) -> BTreeSet<u64> {
        subsets(h).filter(|&a| self.closure_in(h, a) == a).collect()
    }

    pub fn extents(&self) -> BTreeSet<u64> {
        self.extents_in(self.all())
    }
}

/// All subsets of `mask`.
pub fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == mask {
            None
        } else {
            Some((current.wrapping_sub(mask)) & mask)
        };
        Some(current)
    })
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn to_set(universe: usize, mask: u64) -> ObjectSet {
    ObjectSet::from_indices(universe, members(mask))
}

pub fn to_mask(set: &ObjectSet) -> u64 {
    set.iter().fold(0, |acc, g| acc | 1 << g)
}

/// Preimage of `b` (over targets) under `images` restricted to the objects in `h`.
pub fn preimage(images: &[usize], h: u64, b: u64) -> u64 {
    members(h)
        .into_iter()
        .filter(|&g| b >> images[g] & 1 == 1)
        .fold(0, |acc, g| acc | 1 << g)
}

/// Every extent of `S` pulls back to an extent of `K`; full when the pulled
/// back family is all of `Ext(K)`.
pub fn oracle_measure(k: &FormalContext, s: &FormalContext, images: &[usize]) -> (bool, bool) {
    let dk = Dense::of(k);
    let ds = Dense::of(s);
    let ext_k = dk.extents();
    let pulled: BTreeSet<u64> = ds
        .extents()
        .into_iter()
        .map(|e| preimage(images, dk.all(), e))
        .collect();
    let is_sm = pulled.is_subset(&ext_k);
    (is_sm, is_sm && pulled == ext_k)
}

/// Every map `0..n → 0..t`, as image vectors.
pub fn all_maps(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if t == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0; n];
    loop {
        out.push(current.clone());
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            current[i] += 1;
            if current[i] < t {
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

/// Incidence of the standard scales written out from their definitions
/// (objects and attributes `0..`).
pub fn scale_incidence(family: ScaleFamily, n: usize) -> (usize, Box<dyn Fn(usize, usize) -> bool>) {
    match family {
        ScaleFamily::Nominal => (n, Box::new(|g, m| g == m)),
        ScaleFamily::Ordinal => (n, Box::new(|g, m| g <= m)),
        ScaleFamily::Interordinal => (2 * n, Box::new(move |g, m| if m < n { g <= m } else { g >= m - n })),
        ScaleFamily::Contranominal => (n, Box::new(|g, m| g != m)),
        ScaleFamily::Crown => (n, Box::new(move |g, m| g == m || (g + 1) % n == m)),
    }
}

pub fn oracle_scale(family: ScaleFamily, n: usize) -> FormalContext {
    let (width, incident) = scale_incidence(family, n);
    FormalContext::from_fn(
        (0..n).map(|g| format!("s{g}")).collect(),
        (0..width).map(|m| format!("a{m}")).collect(),
        incident,
    )
    .unwrap()
}

pub fn min_arity(family: ScaleFamily) -> usize {
    if family == ScaleFamily::Crown {
        3
    } else {
        1
    }
}

/// Whether some surjection of `h` onto a `family` scale is a local full
/// scale-measure. In lenient mode `∅` is added to both extent families.
pub fn oracle_is_motif(k: &FormalContext, h: u64, family: ScaleFamily, lenient: bool) -> bool {
    let dk = Dense::of(k);
    let size = h.count_ones() as usize;
    let mut ext_h = dk.extents_in(h);
    if lenient {
        ext_h.insert(0);
    }
    let hs = members(h);
    for n in min_arity(family)..=size {
        let scale = Dense::of(&oracle_scale(family, n));
        let mut ext_s = scale.extents();
        if lenient {
            ext_s.insert(0);
        }
        // σ⁻¹ is a bijection between the two families
        if ext_s.len() != ext_h.len() {
            continue;
        }
        for local in all_maps(size, n) {
            let mut hit = vec![false; n];
            for &t in &local {
                hit[t] = true;
            }
            if hit.contains(&false) {
                continue;
            }
            let mut images = vec![0; k.object_count()];
            for (i, &g) in hs.iter().enumerate() {
                images[g] = local[i];
            }
            let pulled: BTreeSet<u64> = ext_s.iter().map(|&e| preimage(&images, h, e)).collect();
            if pulled == ext_h {
                return true;
            }
        }
    }
    false
}

/// All nonempty domains of size at least `min_size` carrying a motif.
pub fn oracle_domains(k: &FormalContext, family: ScaleFamily, min_size: usize, lenient: bool) -> BTreeSet<u64> {
    let all = Dense::of(k).all();
    subsets(all)
        .filter(|&h| h != 0 && h.count_ones() as usize >= min_size)
        .filter(|&h| oracle_is_motif(k, h, family, lenient))
        .collect()
}

pub fn context_from_rows(n: usize, m: usize, rows: &[u64]) -> FormalContext {
    FormalContext::from_fn(
        (0..n).map(|g| format!("g{g}")).collect(),
        (0..m).map(|a| format!("m{a}")).collect(),
        |g, a| rows[g] >> a & 1 == 1,
    )
    .unwrap()
}

pub fn random_context<R: Rng>(rng: &mut R, n: usize, m: usize, density: f64) -> FormalContext {
    let rows: Vec<u64> = (0..n)
        .map(|_| (0..m).filter(|_| rng.gen_bool(density)).fold(0, |acc, a| acc | 1 << a))
        .collect();
    context_from_rows(n, m, &rows)
}

/// Every context with `n` objects and `m` attributes.
pub fn all_contexts(n: usize, m: usize) -> Vec<FormalContext> {
    let cells = n * m;
    (0..1u64 << cells)
        .map(|bits| {
            let rows: Vec<u64> = (0..n).map(|g| bits >> (g * m) & ((1 << m) - 1)).collect();
            context_from_rows(n, m, &rows)
        })
        .collect()
}

/// One representative per isomorphism class of `n × m` contexts (row and
/// column permutations).
pub fn contexts_up_to_iso(n: usize, m: usize) -> Vec<FormalContext> {
    let row_perms = permutations(n);
    let col_perms = permutations(m);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0..1u64 << (n * m) {
        let cell = |g: usize, a: usize| bits >> (g * m + a) & 1 == 1;
        let canonical = row_perms
            .iter()
            .flat_map(|rp| {
                col_perms.iter().map(move |cp| {
                    let mut code = 0u64;
                    for (g, &row) in rp.iter().enumerate() {
                        for (a, &col) in cp.iter().enumerate() {
                            if cell(row, col) {
                                code |= 1 << (g * m + a);
                            }
                        }
                    }
                    code
                })
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canonical) {
            let rows: Vec<u64> = (0..n).map(|g| bits >> (g * m) & ((1 << m) - 1)).collect();
            out.push(context_from_rows(n, m, &rows));
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Contexts used for the exhaustive pair checks: everything up to 3 objects
/// and 2 attributes, 3 × 3 contexts up to isomorphism, and the standard
/// scales that fit in 4 × 4.
pub fn small_family() -> Vec<FormalContext> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for m in 0..=2 {
            out.extend(all_contexts(n, m));
        }
    }
    out.extend(contexts_up_to_iso(3, 3));
    for family in ScaleFamily::ALL {
        for n in min_arity(family)..=4 {
            let s = oracle_scale(family, n);
            if s.attribute_count() <= 4 {
                out.push(s);
            }
        }
    }
    out
}

/// Contexts for the motif oracle: everything up to 3 × 3 plus the standard
/// scales that fit in 5 × 5.
pub fn motif_family() -> Vec<FormalContext> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for m in 0..=3 {
            out.extend(all_contexts(n, m));
        }
    }
    for family in ScaleFamily::ALL {
        for n in min_arity(family)..=5 {
            let s = oracle_scale(family, n);
            if s.attribute_count() <= 5 {
                out.push(s);
            }
        }
    }
    out
}

pub fn total_map(target: usize, images: &[usize]) -> PartialMap {
    PartialMap::total(target, images.to_vec()).unwrap()
}

/// Graphs on `n` vertices, one per isomorphism class, as edge lists.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0..1u64 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let canonical = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canonical) {
            out.push(edges);
        }
    }
    out
}
