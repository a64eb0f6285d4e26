//! Matroids and flag matroids over tracts: Grassmann-Plücker functions, circuits and
//! cocircuits, minors and duality, quotients, push-forwards along tract morphisms, and
//! brute-force enumeration over finite tracts.

pub mod catalog;
pub mod classical;
pub mod enumerate;
pub mod error;
pub mod flag;
pub mod json;
pub mod matroid;
pub mod subset;
pub mod tract;
pub mod verdict;

pub use classical::ClassicalMatroid;
pub use error::{Error, Result};
pub use flag::{flags_of_minors, quotient_check, FlagMatroid, FlagMode, Ranks};
pub use matroid::{CircuitFamily, FMatroid, GpFunction, GpMode, TractVector};
pub use tract::{Element, FormalSum, MorphismKind, Tract, TractMorphism, Value};
pub use verdict::{Verdict, Witness};
