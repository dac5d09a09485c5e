//! Ordinal motif search.
//!
//! A motif is a domain `H ⊆ G` together with a surjective local full
//! scale-measure from `K[H, M]` onto a standard scale. Motifs are counted by
//! domain; the stored map is the lexicographically least valid one.

mod census;
mod classify;
mod crown;
mod enumerate;
mod exists;
mod meaning;

pub use census::{census, maximal_motifs, with_thread_limit, CensusOptions, FamilyCensus, MotifCensus};
pub use classify::{classify_domain, DomainClass};
pub use crown::enumerate_crown_motifs;
pub use enumerate::enumerate_motifs;
pub use exists::{exists_full_sm, exists_surjective_sm};
pub use meaning::basic_meaning;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::ObjectSet;
use crate::context::FormalContext;
use crate::error::MeasureError;
use crate::measure::{is_local_scale_measure, MeasureVerdict, PartialMap};
use crate::scales::{make_scale, ScaleFamily};

/// How `∅` is treated when comparing a domain's extents with a scale's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmptyExtent {
    /// Presence or absence of `∅` on either side is ignored.
    #[default]
    Lenient,
    /// Extent families must agree exactly, `∅` included.
    Strict,
}

impl fmt::Display for EmptyExtent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmptyExtent::Lenient => "lenient",
            EmptyExtent::Strict => "strict",
        })
    }
}

impl FromStr for EmptyExtent {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lenient" => Ok(EmptyExtent::Lenient),
            "strict" => Ok(EmptyExtent::Strict),
            other => Err(format!("unknown empty-extent mode `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Motif {
    pub family: ScaleFamily,
    pub arity: usize,
    pub domain: ObjectSet,
    /// From the context's objects onto the objects of `make_scale(family, arity)`.
    pub map: PartialMap,
    pub full: bool,
    pub maximal: bool,
}

impl Motif {
    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn scale(&self) -> FormalContext {
        make_scale(self.family, self.arity).expect("motif arity is valid for its family")
    }

    /// Re-checks the motif against `k` with the definition-level recogniser.
    ///
    /// In lenient mode both sides get an extra all-empty attribute, which adds
    /// `∅` to both extent families and nothing else.
    pub fn verify(&self, k: &FormalContext, mode: EmptyExtent) -> Result<MeasureVerdict, MeasureError> {
        verify_local_full(k, &self.scale(), &self.map, mode)
    }
}

/// Local full check of `sigma` from `K[H, M]` into `scale` under `mode`.
pub fn verify_local_full(
    k: &FormalContext,
    scale: &FormalContext,
    sigma: &PartialMap,
    mode: EmptyExtent,
) -> Result<MeasureVerdict, MeasureError> {
    match mode {
        EmptyExtent::Strict => is_local_scale_measure(k, scale, sigma, true),
        EmptyExtent::Lenient => {
            is_local_scale_measure(&k.with_empty_attribute(), &scale.with_empty_attribute(), sigma, true)
        }
    }
}

/// Sorts motifs by domain size, then lexicographically by members.
pub(crate) fn sort_motifs(motifs: &mut [Motif]) {
    motifs.sort_by(|a, b| {
        a.domain
            .len()
            .cmp(&b.domain.len())
            .then_with(|| a.domain.cmp(&b.domain))
    });
}

#[cfg(feature = "parallel")]
pub(crate) fn par_filter_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_filter_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> Option<U>,
{
    items.into_iter().filter_map(f).collect()
}
