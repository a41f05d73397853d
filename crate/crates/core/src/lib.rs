//! Effective countable graphs and their component problems.
//!
//! The library works with graphs given by total decidable vertex and edge
//! predicates, evaluated lazily. Infinite objects (injections, number
//! streams, enumerated partitions) are handled through finite prefixes
//! controlled by a [`codec::Horizon`]; every decoder either certifies its
//! answer against the finite data it has seen or reports
//! [`outcome::Outcome::Inconclusive`]. Ground truth everywhere is the
//! brute-force component oracle in [`graph`], which computes exact
//! component tables of finite truncations.

pub mod codec;
pub mod fc;
pub mod graph;
pub mod outcome;
pub mod partitions;
pub mod range_graph;
pub mod verify;
pub mod weihrauch;

pub use codec::{Horizon, InjectionPrefix, Nat};
pub use graph::{ComponentTable, EffectiveGraph, GraphSlice, PathWitness};
pub use outcome::Outcome;
