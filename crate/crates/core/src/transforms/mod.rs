//! CNF rewrites with replayable traces, and the symmetry-preserving
//! preprocessing pipeline built from them.

mod bve;
mod db;
mod pipeline;
mod reconstruct;
mod rules;
mod trace;

use std::collections::BTreeSet;

use crate::cnf::{Formula, Lit};

pub use bve::{bounded_ve, bve_eliminate, symmetric_bve, BveBound};
pub use db::Order;
pub use pipeline::{preprocess_pipeline, PipelineConfig};
pub use reconstruct::extend_model;
pub use rules::{
    add_resolvent, bce_exhaustive, bce_exhaustive_with, pure_exhaustive, pure_exhaustive_with, self_subsume_naive,
    self_subsumption_candidates, simultaneous_self_subsumption_fixpoint, simultaneous_self_subsumption_round,
    subsumption_exhaustive, subsumption_exhaustive_with, unit_conflict_exhaustive, unit_conflict_exhaustive_with,
};
pub use trace::{Step, TransformTrace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformResult {
    pub output: Formula,
    pub trace: TransformTrace,
    /// `Lit(input) ∖ Lit(output)`.
    pub removed_lits: BTreeSet<Lit>,
}

impl TransformResult {
    pub fn new(input: &Formula, output: Formula, trace: TransformTrace) -> Self {
        let kept = output.lits();
        let removed_lits = input.lits().into_iter().filter(|l| !kept.contains(l)).collect();
        TransformResult {
            output,
            trace,
            removed_lits,
        }
    }

    /// Whether the output differs from `input`.
    pub fn changed(&self, input: &Formula) -> bool {
        &self.output != input
    }
}
