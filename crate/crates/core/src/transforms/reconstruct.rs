use crate::cnf::{Assignment, Var};
use crate::error::{Error, Result};

use super::trace::Step;
use super::TransformResult;

/// Turns a model of `result.output` into a model of the transformation's
/// input by undoing the trace from the last step backwards. Variables the
/// model leaves open are taken as false first.
pub fn extend_model(result: &TransformResult, model: &Assignment) -> Result<Assignment> {
    let mut s = model.clone();
    for v in 1..=result.output.num_vars() {
        if !s.is_assigned(Var::new(v)) {
            s.assign(Var::new(v), false);
        }
    }
    if !s.satisfies(&result.output) {
        return Err(Error::contract("assignment is not a model of the transformed formula"));
    }
    for step in result.trace.steps.iter().rev() {
        match step {
            Step::UnitAssigned(l) | Step::PureAssigned(l) => s.set(*l),
            Step::BlockedRemoved { clause, blocking } => {
                if !s.satisfies_clause(clause) {
                    s.set(*blocking);
                }
            }
            Step::VarEliminated { var, neg, .. } => {
                // v = true satisfies every positive clause; that is safe iff
                // the negative ones hold without -v
                let neg_ok = neg
                    .iter()
                    .all(|c| c.lits().iter().any(|&l| l != var.neg() && s.value(l) == Some(true)));
                s.assign(*var, neg_ok);
            }
            Step::ConflictCollapsed | Step::Subsumed { .. } | Step::SelfSubsumed { .. } | Step::LearnedAdded { .. } => {
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{Formula, Lit};
    use crate::transforms::{bce_exhaustive, unit_conflict_exhaustive};

    #[test]
    fn unit_is_restored() {
        // x=1 a=2 b=3 c=4
        let f = Formula::from_dimacs_clauses(4, &[&[1], &[-1, 2, 4], &[3, 4]]);
        let r = unit_conflict_exhaustive(&f);
        let s = Assignment::from_lits([Lit::new(2), Lit::new(3), Lit::new(-4)]);
        let full = extend_model(&r, &s).unwrap();
        assert_eq!(full.value(Lit::new(1)), Some(true));
        assert!(full.satisfies(&f));
    }

    #[test]
    fn empty_trace_is_identity() {
        let f = Formula::from_dimacs_clauses(2, &[&[1, 2]]);
        let r = TransformResult::new(&f, f.clone(), Default::default());
        let s = Assignment::from_lits([Lit::new(1), Lit::new(-2)]);
        assert_eq!(extend_model(&r, &s).unwrap(), s);
    }

    #[test]
    fn blocked_clause_flips_blocking_literal() {
        let f = Formula::from_dimacs_clauses(2, &[&[1, 2], &[-1, -2]]);
        let r = bce_exhaustive(&f);
        assert!(r.output.is_empty());
        for mask in 0..4 {
            let s = Assignment::from_mask(2, mask);
            assert!(extend_model(&r, &s).unwrap().satisfies(&f));
        }
    }

    #[test]
    fn non_model_is_rejected() {
        let f = Formula::from_dimacs_clauses(2, &[&[1, 2]]);
        let r = TransformResult::new(&f, f.clone(), Default::default());
        assert!(extend_model(&r, &Assignment::from_lits([Lit::new(-1), Lit::new(-2)])).is_err());
    }
}
