use crate::cnf::Formula;
use crate::graph::{asymmetric_variables, build_model_graph, color_refinement};

use super::bve::{symmetric_bve, BveBound};
use super::rules::{
    bce_exhaustive, pure_exhaustive, simultaneous_self_subsumption_fixpoint, subsumption_exhaustive,
    unit_conflict_exhaustive,
};
use super::trace::TransformTrace;
use super::TransformResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    /// Upper bound on full passes.
    pub max_passes: usize,
    pub bound: BveBound,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            max_passes: 10,
            bound: BveBound::default(),
        }
    }
}

fn settled(f: &Formula) -> bool {
    f.is_conflict() || f.is_empty()
}

/// Symmetry-preserving preprocessing. Each pass runs unit propagation, pure
/// literals, subsumption, simultaneous self-subsumption to fixpoint and
/// blocked clause elimination, then eliminates variables that color
/// refinement proves asymmetric. Passes repeat until one changes nothing,
/// the formula is `{}` or `{{}}`, or `max_passes` is reached.
pub fn preprocess_pipeline(f: &Formula, cfg: &PipelineConfig) -> TransformResult {
    let mut current = f.clone();
    let mut trace = TransformTrace::new();
    let stages: [fn(&Formula) -> TransformResult; 5] = [
        unit_conflict_exhaustive,
        pure_exhaustive,
        subsumption_exhaustive,
        simultaneous_self_subsumption_fixpoint,
        bce_exhaustive,
    ];
    'passes: for _ in 0..cfg.max_passes {
        if settled(&current) {
            break;
        }
        let start = current.clone();
        for stage in stages {
            let r = stage(&current);
            trace.extend(r.trace);
            current = r.output;
            if settled(&current) {
                break 'passes;
            }
        }
        let partition = color_refinement(&build_model_graph(&current));
        let asym = asymmetric_variables(&current, &partition);
        let r = symmetric_bve(&current, &asym, cfg.bound);
        trace.extend(r.trace);
        current = r.output;
        if current == start {
            break;
        }
    }
    TransformResult::new(f, current, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intro_example() {
        // x=1 a=2 b=3 c=4; (a∨c)∧(b∨c) keeps the a↔b symmetry, so no
        // variable is certified and nothing is eliminated
        let f = Formula::from_dimacs_clauses(4, &[&[1], &[-1, 2, 4], &[3, 4]]);
        let r = preprocess_pipeline(&f, &PipelineConfig::default());
        // everything is pure after the unit
        assert!(r.output.is_empty());
        assert_eq!(r.trace.replay(&f).unwrap(), r.output);
    }

    #[test]
    fn fixpoint_is_identity() {
        // x1 ≠ x2 ≠ x3 ≠ x1 on a triangle: unsatisfiable, fully symmetric
        let f = Formula::from_dimacs_clauses(3, &[&[1, 2], &[-1, -2], &[2, 3], &[-2, -3], &[1, 3], &[-1, -3]]);
        let r = preprocess_pipeline(&f, &PipelineConfig::default());
        assert_eq!(r.output, f);
        assert!(r.trace.is_empty());
    }
}
