//! Nonlinear-complexity toolkit for periodic binary sequences.
//!
//! The crate computes the nonlinear (maximum-order) complexity of binary
//! sequences and constructively generates all `n`-periodic binary sequences
//! with any prescribed complexity `omega`, working through the structural
//! calculus of B-form patterns, added terms and shift representatives
//! instead of exhaustive search. An exhaustive oracle verifies every
//! structural claim at desk scale.
//!
//! Module map:
//!
//! * [`bitseq`] — packed bit sequences up to 64 symbols, rotations,
//!   canonical forms, runs.
//! * [`complexity`] — two independent nonlinear-complexity engines,
//!   companion pairs, per-rotation profiles.
//! * [`structure`] — B-form decomposition, added terms, equivalence sets,
//!   representatives, shift laws.
//! * [`gen_small`] — constructive generation for
//!   `omega <= floor(n/2)`.
//! * [`gen_debruijn`] — de Bruijn sequences as the `n = 2^m`, `omega = m`
//!   special case.
//! * [`gen_large`] — representative-set generation for
//!   `omega >= ceil(n/2)`.
//! * [`oracle`] — exhaustive ground truth and theorem verifiers.
//! * [`cli`] — command-line frontend.

pub mod bitseq;
pub mod cli;
pub mod complexity;
pub mod gen_debruijn;
pub mod gen_large;
pub mod gen_small;
pub mod oracle;
pub mod structure;
