//! Submultiplicative norms on semigroups.
//!
//! A norm on a semigroup `S` is a map `ν: S → ℝ≥0` with `ν(ab) ≤ ν(a)ν(b)`.
//! This crate works with two kinds of carrier:
//!
//! * finite semigroups given by a Cayley table ([`semigroup`], [`green`],
//!   [`order`]), with norm tables ([`norms`]) and exhaustive checks of the
//!   structural facts every norm obeys ([`property`]);
//! * square matrices over exact rationals ([`matrix`]) with the order-k minor
//!   norms `ν_k` ([`minor_norm`]).
//!
//! All arithmetic on norm values is exact.

pub mod catalog;
pub mod green;
pub mod io;
pub mod literature;
pub mod matrix;
pub mod minor_norm;
pub mod norms;
pub mod order;
pub mod property;
pub mod rational;
pub mod semigroup;

pub use green::{green_structure, GreenStructure, Partition};
pub use matrix::{MatrixError, RatMatrix};
pub use minor_norm::{MinorNormParams, WitnessReport};
pub use norms::{NormError, NormTable};
pub use order::{natural_leq, natural_order, OrderRelation};
pub use property::{run_suite, Proposition, PropositionVerdict, Status};
pub use rational::Rat;
pub use semigroup::{ElementSet, FiniteSemigroup, SemigroupError, ValidationReport};
