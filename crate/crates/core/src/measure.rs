//! Recognition of (local) (full) scale-measures.
//!
//! A map `σ: G_K → G_S` is a scale-measure when the preimage of every extent
//! of `S` is an extent of `K`. Preimages commute with intersections, so it is
//! enough to test the attribute extents `m'` of `S`. Fullness additionally
//! asks every extent of `K` to be such a preimage, which reduces to the
//! meet-irreducible extents of `K`.

use serde::Serialize;

use crate::bitset::ObjectSet;
use crate::context::FormalContext;
use crate::error::MeasureError;

/// A map from a subset `H` of one object universe into another.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialMap {
    target_size: usize,
    assignment: Vec<Option<usize>>,
}

impl PartialMap {
    pub fn new(target_size: usize, assignment: Vec<Option<usize>>) -> Result<Self, MeasureError> {
        if let Some((object, target)) = assignment
            .iter()
            .enumerate()
            .find_map(|(g, t)| t.filter(|&t| t >= target_size).map(|t| (g, t)))
        {
            return Err(MeasureError::TargetOutOfRange { object, target });
        }
        Ok(Self {
            target_size,
            assignment,
        })
    }

    /// A map defined on every object.
    pub fn total(target_size: usize, images: Vec<usize>) -> Result<Self, MeasureError> {
        Self::new(target_size, images.into_iter().map(Some).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self {
            target_size: n,
            assignment: (0..n).map(Some).collect(),
        }
    }

    pub fn source_size(&self) -> usize {
        self.assignment.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn get(&self, g: usize) -> Option<usize> {
        self.assignment.get(g).copied().flatten()
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.assignment
    }

    pub fn domain(&self) -> ObjectSet {
        ObjectSet::from_indices(
            self.source_size(),
            self.assignment
                .iter()
                .enumerate()
                .filter(|(_, t)| t.is_some())
                .map(|(g, _)| g),
        )
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    /// `σ(A)` for `A` within the source universe; objects outside `H` are ignored.
    pub fn image(&self, a: &ObjectSet) -> ObjectSet {
        ObjectSet::from_indices(self.target_size, a.iter().filter_map(|g| self.get(g)))
    }

    /// `σ(H)`.
    pub fn full_image(&self) -> ObjectSet {
        ObjectSet::from_indices(self.target_size, self.assignment.iter().flatten().copied())
    }

    /// `σ⁻¹(B) = {g ∈ H | σ(g) ∈ B}`.
    pub fn preimage(&self, b: &ObjectSet) -> ObjectSet {
        ObjectSet::from_indices(
            self.source_size(),
            self.assignment
                .iter()
                .enumerate()
                .filter(|(_, t)| t.is_some_and(|t| b.contains(t)))
                .map(|(g, _)| g),
        )
    }

    pub fn is_surjective(&self) -> bool {
        self.full_image().is_full()
    }

    /// The fibres `σ⁻¹(s)` of every hit target, in target order.
    pub fn fibres(&self) -> Vec<(usize, ObjectSet)> {
        let mut out: Vec<(usize, ObjectSet)> = Vec::new();
        for t in self.full_image().iter() {
            out.push((t, self.preimage(&ObjectSet::from_indices(self.target_size, [t]))));
        }
        out
    }
}

/// Outcome of a recognition check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeasureVerdict {
    pub is_scale_measure: bool,
    /// Only evaluated by the full checks; `false` otherwise.
    pub is_full: bool,
    pub is_surjective: bool,
    /// First failing set, over the source objects.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<ObjectSet>,
}

fn serialize_witness<S: serde::Serializer>(w: &Option<ObjectSet>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(set) => s.collect_seq(set.iter()),
        None => s.serialize_none(),
    }
}

fn check_shapes(k: &FormalContext, s: &FormalContext, sigma: &PartialMap) -> Result<(), MeasureError> {
    if sigma.source_size() != k.object_count() {
        return Err(MeasureError::SourceMismatch {
            expected: k.object_count(),
            found: sigma.source_size(),
        });
    }
    if sigma.target_size() != s.object_count() {
        return Err(MeasureError::TargetMismatch {
            expected: s.object_count(),
            found: sigma.target_size(),
        });
    }
    Ok(())
}

fn check_total(k: &FormalContext, s: &FormalContext, sigma: &PartialMap) -> Result<(), MeasureError> {
    check_shapes(k, s, sigma)?;
    match sigma.assignment().iter().position(Option::is_none) {
        Some(g) => Err(MeasureError::NotTotal(g)),
        None => Ok(()),
    }
}

/// First attribute extent of `s` whose preimage is not closed in `k`.
fn failing_preimage(k: &FormalContext, s: &FormalContext, sigma: &PartialMap) -> Option<ObjectSet> {
    (0..s.attribute_count())
        .map(|m| sigma.preimage(s.extent_of(m)))
        .find(|p| !k.is_extent(p))
}

/// First meet-irreducible extent of `k` that is no preimage of an extent of `s`.
fn failing_irreducible(k: &FormalContext, s: &FormalContext, sigma: &PartialMap) -> Option<ObjectSet> {
    k.meet_irreducible_extents().into_iter().find(|a| {
        let smallest = s.extent_closure(&sigma.image(a));
        &sigma.preimage(&smallest) != a
    })
}

fn verdict(k: &FormalContext, s: &FormalContext, sigma: &PartialMap, check_full: bool) -> MeasureVerdict {
    let is_surjective = sigma.is_surjective();
    if let Some(w) = failing_preimage(k, s, sigma) {
        return MeasureVerdict {
            is_scale_measure: false,
            is_full: false,
            is_surjective,
            witness: Some(w),
        };
    }
    let witness = if check_full {
        failing_irreducible(k, s, sigma)
    } else {
        None
    };
    MeasureVerdict {
        is_scale_measure: true,
        is_full: check_full && witness.is_none(),
        is_surjective,
        witness,
    }
}

/// Checks that `σ` (total on `G_K`) is a scale-measure from `k` into `s`.
pub fn is_scale_measure(
    k: &FormalContext,
    s: &FormalContext,
    sigma: &PartialMap,
) -> Result<MeasureVerdict, MeasureError> {
    check_total(k, s, sigma)?;
    Ok(verdict(k, s, sigma, false))
}

/// Checks that `σ` is a full scale-measure: `Ext(K) = σ⁻¹(Ext(S))`.
pub fn is_full_scale_measure(
    k: &FormalContext,
    s: &FormalContext,
    sigma: &PartialMap,
) -> Result<MeasureVerdict, MeasureError> {
    check_total(k, s, sigma)?;
    Ok(verdict(k, s, sigma, true))
}

/// Checks `σ: H → G_S` as a scale-measure from `K[H, M]` into `s`.
///
/// The witness, if any, is reported over the objects of `k`.
pub fn is_local_scale_measure(
    k: &FormalContext,
    s: &FormalContext,
    sigma: &PartialMap,
    require_full: bool,
) -> Result<MeasureVerdict, MeasureError> {
    check_shapes(k, s, sigma)?;
    let domain = sigma.domain();
    if domain.is_empty() {
        return Err(MeasureError::EmptyDomain);
    }
    let members: Vec<usize> = domain.iter().collect();
    let sub = k.restrict_objects(&domain);
    let local = PartialMap {
        target_size: sigma.target_size(),
        assignment: members.iter().map(|&g| sigma.get(g)).collect(),
    };
    let mut v = verdict(&sub, s, &local, require_full);
    v.witness = v
        .witness
        .map(|w| ObjectSet::from_indices(k.object_count(), w.iter().map(|i| members[i])));
    Ok(v)
}

/// `σ|_{H'}` into `S[σ(H'), M_S]`.
///
/// Returns the restricted map together with the restricted scale; the map's
/// targets are indices into that restricted scale.
pub fn restrict(
    s: &FormalContext,
    sigma: &PartialMap,
    subset: &ObjectSet,
) -> Result<(PartialMap, FormalContext), MeasureError> {
    if sigma.target_size() != s.object_count() {
        return Err(MeasureError::TargetMismatch {
            expected: s.object_count(),
            found: sigma.target_size(),
        });
    }
    if subset.universe() != sigma.source_size() || !subset.is_subset(&sigma.domain()) {
        return Err(MeasureError::NotInDomain);
    }
    let image = sigma.image(subset);
    let mut position = vec![usize::MAX; s.object_count()];
    for (i, t) in image.iter().enumerate() {
        position[t] = i;
    }
    let assignment = (0..sigma.source_size())
        .map(|g| {
            if subset.contains(g) {
                sigma.get(g).map(|t| position[t])
            } else {
                None
            }
        })
        .collect();
    let map = PartialMap {
        target_size: image.len(),
        assignment,
    };
    Ok((map, s.restrict_objects(&image)))
}
