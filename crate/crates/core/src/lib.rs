//! Model checker for causality laws over finite powerset lattices.
//!
//! A model is a finite universe of named elements with birth times, a list
//! of sample instants, and a causality law `C` mapping subsets to subsets.
//! When `C` is total with non-empty values (A1) and monotone for inclusion
//! (A2), Knaster–Tarski guarantees a least fixed point: the unique set that
//! is its own cause, here called the substance. This crate computes those
//! fixed points (Kleene and worklist iteration), re-derives them with
//! brute-force oracles over all subsets, and checks every axiom and
//! proposition a model is expected to satisfy, reporting replayable
//! counterexamples when one fails.

pub mod causality;
pub mod fixpoint;
pub mod lattice;
pub mod modelgen;
pub mod substance;

mod error;
#[cfg(test)]
pub(crate) mod testutil;

pub use causality::{CausalityMap, CheckResult, DenseTable, Rule, RuleSystem, Witness};
pub use error::Error;
pub use fixpoint::{FixpointReport, PrePostSets, WorklistOrder};
pub use lattice::{Subset, Universe, DEFAULT_SIZE_GUARD, MAX_UNIVERSE_SIZE};
pub use modelgen::{GenConfig, SplitMix64};
pub use substance::{FixpointSection, PropositionReport, SpinozaModel, Verdict};
