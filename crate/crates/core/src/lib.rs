//! Toolkit for generic covers of the plane branched over curves whose
//! singularities are all of type `x^n = y^m`.
//!
//! The crate is organised bottom-up:
//!
//! * [`symgroup`]: exact permutation arithmetic (left-to-right composition).
//! * [`graphs`]: monodromy graphs, polygons and the classification of covers
//!   branched over a single `x^n = y^m` singularity.
//! * [`monodromy`]: checks of transposition assignments against the
//!   presentations `G_{m,n}` and their projective quotients, plus the
//!   exhaustive search used as an oracle for the classification.
//! * [`braid`]: braid words, the Artin action on free groups and the relator
//!   recipe for curves `g(x) = f(y)`.
//! * [`numeric`]: root continuation along loops, an independent check of the
//!   polygon monodromy of the explicit covers `F_{h,k,a,b}`.
//! * [`invariants`]: exact curve/surface invariants and uniqueness bounds.
//! * [`covers`]: cover descriptors, smoothness, the counterexample family and
//!   certificates.

pub mod braid;
pub mod covers;
pub mod error;
pub mod graphs;
pub mod invariants;
pub mod monodromy;
pub mod numeric;
pub mod symgroup;

mod exact;

pub use error::{Error, Result};
pub use symgroup::Permutation;
