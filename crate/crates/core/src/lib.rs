//! Delta-matroids on ground sets of at most 64 elements.
//!
//! Set systems are stored as sorted families of bitmasks. On top of that the
//! crate provides the delta-matroid and matroid axioms, twists and minors,
//! GF(2) symmetric representations, handle slides, and reduction of binary
//! delta-matroids to the canonical forms `D_{i,j,k,l}` with a replayable
//! slide trace.
//!
//! ```
//! use delta_matroid::{reduce, SetSystem};
//!
//! let d = SetSystem::from_labels(
//!     &["1", "2", "3", "4"],
//!     &[&["1"], &["2"], &["1", "2", "3"], &["1", "2", "4"], &["1", "3", "4"], &["2", "3", "4"]],
//! )
//! .unwrap();
//! let r = reduce(&d).unwrap();
//! assert_eq!(r.params.to_string(), "i=1 j=1 k=0 l=1");
//! assert!(r.verify(&d));
//! ```

pub mod canon;
pub mod census;
pub mod cli;
pub mod error;
pub mod format;
pub mod gf2rep;
pub mod matroid;
pub mod setsystem;
pub mod slides;

pub use canon::{
    build_canonical, canonical_params, match_canonical, reduce, reduce_matroid, reduce_with, CanonicalParams,
    ReduceOptions, ReductionResult,
};
pub use census::{enumerate_delta_matroids, verify_small, CensusFailure, CensusReport};
pub use error::{Error, Result};
pub use gf2rep::{delta_from_matrix, is_binary, recognize_binary, BinaryCertificate, SymmetricBitMatrix};
pub use matroid::{bound_matroid, graphic_matroid, has_u24_pattern, minor, Bound, Matroid, MinorMode};
pub use setsystem::{Element, GroundSet, Isomorphism, Parity, SetSystem, StructureProfile, SubsetMask};
pub use slides::{apply_trace, handle_slide, SlideTrace};
