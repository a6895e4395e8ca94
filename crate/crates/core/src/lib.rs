//! Quiver mutation classes of type Ã and D.
//!
//! The crate has two independent halves that are meant to check each other:
//!
//! * a brute-force side: [`quiver`] implements matrix mutation, [`canonical`]
//!   computes isomorphism-invariant keys, [`class`] closes a seed under
//!   mutation, and [`classify`] recognises the structure of each member;
//! * a closed-form side: [`counting`] evaluates the counting formulas in exact
//!   arithmetic, and [`series`] recomputes the generating functions behind them
//!   as truncated power series.
//!
//! [`verify`] runs the cross-checks between the two.

pub mod canonical;
pub mod class;
pub mod classify;
pub mod counting;
pub mod quiver;
pub mod series;
pub mod verify;

pub use canonical::{are_isomorphic, canonical_key, CanonicalKey};
pub use class::{enumerate_class, seed_cycle, seed_dynkin_d, ClassError, MutationClass};
pub use classify::{classify, AtildeStructure, Classification, RealizationParams};
pub use quiver::{ExchangeQuiver, QuiverError};
