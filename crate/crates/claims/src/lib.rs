//! Machine-checked corpus of the finite index-category claims behind the
//! S-construction additivity argument: inclusion chains, the cofiber-square
//! reindexing functor, detection-square adjoints, relative reindexing maps,
//! the coproduct swindle category, and the ordinal/simplicial suites.

#![allow(clippy::needless_range_loop)] // index loops mirror the combinatorial definitions

pub mod claim;
pub mod corpus;
pub mod detection;
pub mod relative;
pub mod sdot;
pub mod sigma;
pub mod swindle;
pub mod xi;

pub use claim::{Claim, NamedConstruction, Verdict};
pub use corpus::{verify_corpus, CorpusError, CorpusOptions, VerificationReport};
