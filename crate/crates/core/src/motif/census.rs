use serde::Serialize;

use crate::context::FormalContext;
use crate::error::MotifError;
use crate::motif::{enumerate_crown_motifs, enumerate_motifs, EmptyExtent, Motif};
use crate::scales::ScaleFamily;

/// Keeps the motifs whose domain is not strictly contained in another listed
/// domain, with their `maximal` flag set. Input order is preserved.
pub fn maximal_motifs(motifs: &[Motif]) -> Vec<Motif> {
    motifs
        .iter()
        .filter(|m| {
            !motifs
                .iter()
                .any(|other| other.domain.len() > m.domain.len() && m.domain.is_subset(&other.domain))
        })
        .map(|m| Motif {
            maximal: true,
            ..m.clone()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    /// Minimum domain size, indexed like [`ScaleFamily::ALL`].
    pub min_size: [usize; 5],
    pub empty_extent: EmptyExtent,
    /// Worker cap for the search; 0 lets the pool decide.
    pub threads: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            min_size: [1, 1, 1, 1, 3],
            empty_extent: EmptyExtent::Lenient,
            threads: 0,
        }
    }
}

impl CensusOptions {
    /// Same minimum for every family; crown never goes below 3.
    pub fn with_min_size(mut self, min: usize) -> Self {
        for (slot, family) in self.min_size.iter_mut().zip(ScaleFamily::ALL) {
            *slot = min.max(if family == ScaleFamily::Crown { 3 } else { 0 });
        }
        self
    }

    pub fn min_size_of(&self, family: ScaleFamily) -> usize {
        self.min_size[family_index(family)]
    }
}

fn family_index(family: ScaleFamily) -> usize {
    ScaleFamily::ALL
        .iter()
        .position(|&f| f == family)
        .expect("ALL lists every family")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCensus {
    pub family: ScaleFamily,
    /// Number of motif domains.
    pub count: usize,
    pub maximal: usize,
    /// Size of the largest domain, 0 when there is none.
    pub largest: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotifCensus {
    /// One row per family, in [`ScaleFamily::ALL`] order.
    pub families: Vec<FamilyCensus>,
    /// All motifs per family, same order, maximal flags set.
    pub motifs: Vec<Vec<Motif>>,
}

impl MotifCensus {
    pub fn get(&self, family: ScaleFamily) -> &FamilyCensus {
        &self.families[family_index(family)]
    }

    pub fn motifs_of(&self, family: ScaleFamily) -> &[Motif] {
        &self.motifs[family_index(family)]
    }

    /// Largest motifs of `family`, in domain order.
    pub fn largest_of(&self, family: ScaleFamily) -> Vec<&Motif> {
        let largest = self.get(family).largest;
        self.motifs_of(family)
            .iter()
            .filter(|m| largest > 0 && m.size() == largest)
            .collect()
    }
}

/// Runs the motif search for all five families.
pub fn census(k: &FormalContext, opts: &CensusOptions) -> Result<MotifCensus, MotifError> {
    with_thread_limit(opts.threads, || census_inner(k, opts))
}

fn census_inner(k: &FormalContext, opts: &CensusOptions) -> Result<MotifCensus, MotifError> {
    let mut families = Vec::with_capacity(5);
    let mut all = Vec::with_capacity(5);
    for family in ScaleFamily::ALL {
        let min = opts.min_size_of(family);
        let mut motifs = if family == ScaleFamily::Crown {
            enumerate_crown_motifs(k, min.max(3), opts.empty_extent)?
        } else {
            enumerate_motifs(k, family, min, opts.empty_extent)?
        };
        let maximal = maximal_motifs(&motifs);
        let mut flags = maximal.iter().map(|m| &m.domain).peekable();
        for m in &mut motifs {
            if flags.peek() == Some(&&m.domain) {
                m.maximal = true;
                flags.next();
            }
        }
        families.push(FamilyCensus {
            family,
            count: motifs.len(),
            maximal: maximal.len(),
            largest: motifs.iter().map(Motif::size).max().unwrap_or(0),
        });
        all.push(motifs);
    }
    Ok(MotifCensus { families, motifs: all })
}

/// Runs `f` on a pool of at most `threads` workers (0 keeps the default pool).
#[cfg(feature = "parallel")]
pub fn with_thread_limit<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_thread_limit<T>(_threads: usize, f: impl FnOnce() -> T) -> T {
    f()
}
