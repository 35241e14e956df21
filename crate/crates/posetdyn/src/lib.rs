//! Dynamics of order ideals and increasing tableaux on finite posets.
//!
//! The crate provides:
//!
//! * finite posets with combinators (products, ordinal sums, duals, ideal
//!   lattices), canonical forms, comparability graphs, and autonomous-subset
//!   dualization;
//! * the five minuscule families with their self-dualities, bottom/top trees,
//!   and minimal tableaux;
//! * rowmotion on order ideals and K-promotion/K-evacuation on increasing
//!   tableaux, with orbit machinery, flow paths, and content-vector tools;
//! * orbit censuses, the packed-tableau NRP decision procedure, and an
//!   exhaustive classification search over bounded graded posets;
//! * JSON serialization, DOT export, and named property-verification suites.

pub mod bits;
pub mod canon;
pub mod census;
pub mod dynamics;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod minuscule;
pub mod nrp;
pub mod poset;
pub mod tableau;
pub mod verify;

pub use bits::ElemSet;
pub use error::{Error, Result};
pub use poset::{ComparabilityGraph, OrderIdeal, Poset, RankData};
pub use tableau::{ContentVector, IncreasingTableau};
