//! Skew perspective configurations: construction, structure analysis,
//! isomorphism classification and exact projective realizability.

pub mod canon;
pub mod classification;
pub mod constructions;
pub mod criterion;
pub mod embed;
pub mod error;
pub mod field;
pub mod incidence;
pub mod perm;
pub mod realization;
pub mod structure;

pub use error::{Error, Result};
pub use incidence::{Configuration, PointLabel, Signature, Violation};
pub use perm::{PairPermutation, PairTag, Permutation};
