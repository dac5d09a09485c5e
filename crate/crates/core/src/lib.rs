//! Ordinal motifs in formal contexts.
//!
//! The crate recognises (local, full) scale-measures between formal contexts,
//! builds the standard scales, and searches a context for subsets of objects
//! that behave exactly like a nominal, ordinal, interordinal, contranominal or
//! crown scale.
//!
//! ```
//! use ordmotif::{make_scale, enumerate_motifs, EmptyExtent, ScaleFamily};
//!
//! let n3 = make_scale(ScaleFamily::Nominal, 3).unwrap();
//! let motifs = enumerate_motifs(&n3, ScaleFamily::Nominal, 2, EmptyExtent::Lenient).unwrap();
//! assert_eq!(motifs.len(), 4);
//! ```

pub mod bitset;
pub mod context;
pub mod error;
pub mod implications;
pub mod io;
pub mod measure;
pub mod motif;
pub mod reductions;
pub mod scales;

pub use bitset::{AttributeSet, IndexSet, ObjectSet};
pub use context::{ExtentFamily, FormalContext};
pub use error::{ContextError, GraphError, MeasureError, MotifError, ParseError, ParseErrorKind, ScaleError};
pub use implications::{Implication, ImplicationTheory};
pub use measure::{is_full_scale_measure, is_local_scale_measure, is_scale_measure, MeasureVerdict, PartialMap};
pub use motif::{
    basic_meaning, census, enumerate_crown_motifs, enumerate_motifs, exists_full_sm, exists_surjective_sm,
    maximal_motifs, CensusOptions, EmptyExtent, FamilyCensus, Motif, MotifCensus,
};
pub use reductions::SimpleGraph;
pub use scales::{make_scale, ScaleFamily};
