//! Finite categories, ordinal calculus, truncated simplicial sets, and
//! Grothendieck groups from explicit presentations.

#![allow(clippy::needless_range_loop)] // index loops mirror the combinatorial definitions

pub mod fincat;
pub mod grothendieck;
pub mod label;
pub mod ordcalc;
pub mod rng;
pub mod simplicial;
