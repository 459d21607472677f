//! Literal permutations, symmetry checks, permutation groups and the
//! reducible/hidden symmetry metrics.

mod genfmt;
mod group;
mod metrics;
mod perm;

use std::collections::BTreeSet;

use crate::cnf::{Formula, Lit, ModelSet};
use crate::error::{Error, Result};

pub use genfmt::{parse_generators, write_generators};
pub use group::{schreier_sims, PermGroup};
pub use metrics::{compute_metrics, SymmetryMetrics};
pub use perm::LitPermutation;

/// `φ(F) = F`: the image of every clause is again a clause of `f`.
pub fn is_syntactic_symmetry(f: &Formula, phi: &LitPermutation) -> Result<bool> {
    check_domain(f, phi)?;
    Ok(f.clauses().iter().all(|c| f.contains(&c.map(|l| phi.apply(l)))))
}

/// Model-set invariance under `σ ↦ σ∘φ`, decided by full enumeration over
/// the larger of the two universes.
pub fn is_semantic_symmetry(f: &Formula, phi: &LitPermutation, max_vars: usize) -> Result<bool> {
    let models = ModelSet::over(f, phi.num_vars(), max_vars)?;
    Ok(is_semantic_symmetry_of(&models, phi))
}

/// Same as [`is_semantic_symmetry`] against a precomputed model set. `phi`
/// must not act beyond the model set's universe.
pub fn is_semantic_symmetry_of(models: &ModelSet, phi: &LitPermutation) -> bool {
    let n = models.num_vars();
    debug_assert!(phi.num_vars() <= n);
    // (φσ)(v) = σ(φ(v)); bit v-1 of the image mask
    let images: Vec<Lit> = (1..=n).map(|v| phi.apply(crate::cnf::Var::new(v).pos())).collect();
    let act = |m: u64| -> u64 {
        images.iter().enumerate().fold(0, |acc, (i, img)| {
            let bit = m >> (img.var().index() - 1) & 1 == 1;
            if bit == img.is_positive() {
                acc | 1 << i
            } else {
                acc
            }
        })
    };
    // a bijection on assignments: invariance of the model set is equivalent
    // to mapping models to models
    models.masks().all(|m| models.contains_mask(act(m)))
}

/// `compose(a, b)(l) = b(a(l))`.
pub fn compose(a: &LitPermutation, b: &LitPermutation) -> Result<LitPermutation> {
    a.compose(b)
}

pub fn restrict_down(g: &PermGroup, keep: &BTreeSet<Lit>) -> Result<(PermGroup, bool)> {
    g.restrict_down(keep)
}

pub fn lift_up(g: &PermGroup, num_vars: u32) -> Result<PermGroup> {
    g.lift_up(num_vars)
}

pub fn orbits(g: &PermGroup) -> Vec<BTreeSet<Lit>> {
    g.orbits()
}

pub fn pointwise_stabilizer_order(g: &PermGroup, fixed: &BTreeSet<Lit>) -> Result<num_bigint::BigUint> {
    g.pointwise_stabilizer_order(fixed)
}

fn check_domain(f: &Formula, phi: &LitPermutation) -> Result<()> {
    let needed = f.vars().last().map_or(0, |v| v.index());
    if phi.num_vars() < needed {
        return Err(Error::DomainMismatch(format!(
            "permutation on {} variables does not cover variable {needed}",
            phi.num_vars()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Var;
    use proptest::prelude::*;

    fn v(i: u32) -> Var {
        Var::new(i)
    }

    // x=1 z=2 y=3 b=4 a=5
    fn pure_counterexample() -> Formula {
        Formula::from_dimacs_clauses(
            5,
            &[&[1, 2], &[-3, 2], &[-3, -2], &[3, 4], &[3, 5], &[3, 4], &[-3, -5, -4]],
        )
    }

    #[test]
    fn identity_and_swap_are_syntactic() {
        // a=1 b=2 c=3: (a ∨ c) ∧ (b ∨ c)
        let f = Formula::from_dimacs_clauses(3, &[&[1, 3], &[2, 3]]);
        assert!(is_syntactic_symmetry(&f, &LitPermutation::identity(3)).unwrap());
        assert!(is_syntactic_symmetry(&f, &LitPermutation::swap(3, v(1), v(2))).unwrap());
        assert!(!is_syntactic_symmetry(&f, &LitPermutation::swap(3, v(1), v(3))).unwrap());
    }

    #[test]
    fn negation_symmetry_of_reduced_pure_formula() {
        let f = pure_counterexample();
        let reduced = crate::cnf::simplify(&f, &crate::cnf::Assignment::from_lits([v(1).pos()]));
        let phi = LitPermutation::negation(5, v(2));
        assert!(is_syntactic_symmetry(&reduced, &phi).unwrap());
        assert!(!is_semantic_symmetry(&f, &phi, 16).unwrap());
    }

    #[test]
    fn unsat_formula_admits_every_permutation() {
        let f = Formula::from_dimacs_clauses(3, &[&[1], &[-1], &[2, 3]]);
        let phi = LitPermutation::from_images(vec![v(3).neg(), v(1).pos(), v(2).neg()]).unwrap();
        assert!(!is_syntactic_symmetry(&f, &phi).unwrap());
        assert!(is_semantic_symmetry(&f, &phi, 16).unwrap());
    }

    #[test]
    fn domain_must_cover_formula() {
        let f = Formula::from_dimacs_clauses(3, &[&[1, 3]]);
        assert!(matches!(
            is_syntactic_symmetry(&f, &LitPermutation::identity(2)),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn semantic_check_refuses_large_universe() {
        let f = Formula::empty(20);
        assert!(matches!(
            is_semantic_symmetry(&f, &LitPermutation::identity(20), 16),
            Err(Error::OracleTooLarge { .. })
        ));
    }

    fn arb_formula(n: i32) -> impl Strategy<Value = Formula> {
        let clause = prop::collection::vec((1..=n, any::<bool>()), 1..4)
            .prop_map(|ls| crate::cnf::Clause::new(ls.into_iter().map(|(x, s)| Lit::new(if s { x } else { -x }))));
        prop::collection::vec(clause, 0..10).prop_map(move |cs| Formula::new(n as u32, cs))
    }

    fn arb_perm(n: u32) -> impl Strategy<Value = LitPermutation> {
        (
            Just((1..=n).collect::<Vec<u32>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n as usize),
        )
            .prop_map(|(vars, signs)| {
                LitPermutation::from_images(vars.into_iter().zip(signs).map(|(x, s)| Var::new(x).lit(s)).collect())
                    .unwrap()
            })
    }

    proptest! {
        #[test]
        fn syntactic_implies_semantic(f in arb_formula(5), phi in arb_perm(5)) {
            // symmetrize f under phi so the check is not vacuous
            let g = Formula::new(5, f.clauses().iter().cloned().chain(phi.apply_formula(&f).clauses().iter().cloned()));
            for p in [&phi, &LitPermutation::identity(5)] {
                if is_syntactic_symmetry(&g, p).unwrap() {
                    prop_assert!(is_semantic_symmetry(&g, p, 10).unwrap());
                }
            }
        }

        #[test]
        fn semantic_symmetries_compose(f in arb_formula(6), a in arb_perm(6), b in arb_perm(6)) {
            let ms = ModelSet::over(&f, 6, 10).unwrap();
            if is_semantic_symmetry_of(&ms, &a) && is_semantic_symmetry_of(&ms, &b) {
                prop_assert!(is_semantic_symmetry_of(&ms, &compose(&a, &b).unwrap()));
                prop_assert!(is_semantic_symmetry_of(&ms, &a.inverse()));
            }
        }

        #[test]
        fn syntactic_symmetries_closed(f in arb_formula(4), a in arb_perm(4), b in arb_perm(4)) {
            if is_syntactic_symmetry(&f, &a).unwrap() && is_syntactic_symmetry(&f, &b).unwrap() {
                prop_assert!(is_syntactic_symmetry(&f, &compose(&a, &b).unwrap()).unwrap());
                prop_assert!(is_syntactic_symmetry(&f, &a.inverse()).unwrap());
            }
        }
    }
}
