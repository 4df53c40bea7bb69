//! Finite convexity spaces and their combinatorial invariants.
//!
//! A [`ConvexitySpace`] is a ground set `{0, .., n-1}` with an
//! intersection-closed family of convex sets containing `∅` and `X`. On top
//! of it the crate computes hulls, Radon / partition / Helly numbers with
//! certificates, intersection hypergraphs and their clique structure, the
//! colorful Helly rainbow witness, and exact (fractional) transversals and
//! weak ε-nets.
//!
//! Every search is exact and deterministic: ties are broken by the
//! lexicographic order on [`ElementSet`], and exhaustive searches charge a
//! [`Budget`] so that running out of steps is never mistaken for "no
//! witness".

pub mod bounds;
pub mod budget;
pub mod builders;
pub mod colorful;
pub mod combin;
pub mod corpus;
pub mod doc;
pub mod error;
pub mod fractional;
pub mod helly;
pub mod hypergraph;
pub mod partitions;
pub mod planar;
pub mod radon;
pub mod rational;
pub mod set;
pub mod simplex;
pub mod space;
pub mod transversal;

pub use budget::{Budget, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use set::{ElementSet, Multiset};
pub use space::{closure_from_generators, validate_space, ConvexitySpace};
