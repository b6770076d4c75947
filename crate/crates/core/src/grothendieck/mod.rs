//! Grothendieck groups from object/relation presentations, computed via
//! Smith normal form over the integers.

mod k0;
mod snf;

pub use k0::{k0_group, AbelianGroup, ClassVector, K0Error, K0Presentation};
pub use snf::{smith_normal_form, IntMat, Snf};
