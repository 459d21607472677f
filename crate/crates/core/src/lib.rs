//! Symmetry-aware CNF preprocessing.
//!
//! The crate rewrites CNF formulas with the classic preprocessing rules
//! (unit, pure, subsumption, self-subsumption, blocked clause elimination,
//! bounded variable elimination), models formulas as colored graphs,
//! computes their syntactic automorphism groups exactly, and measures how a
//! preprocessing run changes the symmetry of a formula.

pub mod autgrp;
pub mod cnf;
pub mod error;
pub mod gen;
pub mod graph;
pub mod properties;
pub mod symmetry;
pub mod transforms;

pub use autgrp::{SearchLimits, SearchStats};
pub use cnf::{Assignment, Clause, Formula, Lit, Var};
pub use error::{Error, Result};
pub use gen::PhpSpec;
pub use graph::{ColoredGraph, StablePartition};
pub use properties::{Property, PropertyReport};
pub use symmetry::{LitPermutation, PermGroup, SymmetryMetrics};
pub use transforms::{TransformResult, TransformTrace};
