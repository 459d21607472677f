//! Hand-built formulas on which individual rules lose or invent symmetry.

mod common;

use std::collections::BTreeSet;

use common::*;
use symprep::properties::{check_sl, check_sp, check_wsp, Reason, Witness};
use symprep::symmetry::{is_semantic_symmetry, is_syntactic_symmetry};
use symprep::transforms::{
    add_resolvent, bce_exhaustive, bounded_ve, bve_eliminate, pure_exhaustive, self_subsume_naive,
    simultaneous_self_subsumption_fixpoint, simultaneous_self_subsumption_round, BveBound, Order,
};
use symprep::{Clause, Lit, LitPermutation, PermGroup, Var};

#[test]
fn naive_self_subsumption_breaks_copy_symmetry() {
    let f = ssr::formula();
    let swap = ssr::copy_swap();
    assert!(is_syntactic_symmetry(&f, &swap).unwrap());
    assert!(aut(&f).contains(&swap).unwrap());

    let order = Order::Prefer(vec![Lit::new(-3), Lit::new(-8)]);
    let r = self_subsume_naive(&f, &order);
    assert_eq!(r.trace.replay_prefix(&f, 2).unwrap(), ssr::displayed());
    assert_eq!(r.output, ssr::fixpoint());
    assert_eq!(r.trace.replay(&f).unwrap(), r.output);

    assert!(!check_sp(&f, &r, &aut(&f)).unwrap().holds);
    let only_swap = PermGroup::new(8, std::slice::from_ref(&swap)).unwrap();
    let report = check_sp(&f, &r, &only_swap).unwrap();
    assert_eq!(
        report.witness,
        Some(Witness::Generator {
            generator: swap,
            reason: Reason::NotSyntacticOnOutput
        })
    );
}

#[test]
fn simultaneous_round_keeps_copy_symmetry() {
    let f = ssr::formula();
    // both copies have a clause with two removable literals
    let round = simultaneous_self_subsumption_round(&f);
    assert_eq!(round.output, f);
    assert!(round.trace.is_empty());
    let fix = simultaneous_self_subsumption_fixpoint(&f);
    assert_eq!(fix.output, f);
    assert!(check_sp(&f, &fix, &aut(&f)).unwrap().holds);
}

#[test]
fn learned_unit_breaks_swap() {
    let f = learned::formula();
    let r = add_resolvent(
        &f,
        &Clause::from_dimacs(&[1, 2]),
        &Clause::from_dimacs(&[-1, 2]),
        Var::new(1),
    )
    .unwrap();
    assert_eq!(r.output, fm(3, &[&[1, 2], &[-1, 2], &[1, 3], &[-1, 3], &[2]]));
    let swap = LitPermutation::swap(3, Var::new(2), Var::new(3));
    assert!(is_syntactic_symmetry(&f, &swap).unwrap());
    assert!(!is_syntactic_symmetry(&r.output, &swap).unwrap());
    let g = aut(&f);
    assert_eq!(g.order(), 4u32.into());
    assert!(!check_sp(&f, &r, &g).unwrap().holds);
}

#[test]
fn pure_does_not_lift_negation_of_z() {
    let f = pure_sl::formula();
    assert_eq!(f.len(), 6);
    let r = pure_exhaustive(&f);
    assert_eq!(r.output, pure_sl::reduced());
    let phi = LitPermutation::negation(5, Var::new(3));
    assert!(is_syntactic_symmetry(&r.output, &phi).unwrap());
    assert!(!is_semantic_symmetry(&f, &phi, 10).unwrap());
    let report = check_sl(&f, &r, Some(std::slice::from_ref(&phi)), 10).unwrap();
    assert!(!report.holds);
    assert_eq!(report.witness_generator(), Some(&phi));
    // full enumeration finds a non-liftable symmetry as well
    assert!(!check_sl(&f, &r, None, 10).unwrap().holds);
    // pure is still symmetry-preserving here
    assert!(check_sp(&f, &r, &aut(&f)).unwrap().holds);
}

#[test]
fn bce_does_not_lift_negation_of_z() {
    let f = bce_sl::formula();
    let r = bce_exhaustive(&f);
    assert_eq!(r.output, bce_sl::reduced());
    // nothing left to block
    assert!(bce_exhaustive(&r.output).trace.is_empty());
    let phi = LitPermutation::negation(6, Var::new(3));
    assert!(is_syntactic_symmetry(&r.output, &phi).unwrap());
    assert!(!check_sl(&f, &r, Some(&[phi]), 10).unwrap().holds);
    assert!(check_sp(&f, &r, &aut(&f)).unwrap().holds);
}

#[test]
fn bve_sequence_strands_y() {
    use bve::*;
    let f = bve::formula();
    assert_eq!(f.len(), 35);
    let g = aut(&f);
    let xy = LitPermutation::from_var_map(
        13,
        [
            (1, 4),
            (4, 1),
            (5, 9),
            (9, 5),
            (6, 10),
            (10, 6),
            (7, 11),
            (11, 7),
            (8, 12),
            (12, 8),
            (3, 13),
            (13, 3),
        ]
        .map(|(a, b)| (Var::new(a), Var::new(b).pos())),
    )
    .unwrap();
    assert!(g.contains(&xy).unwrap());

    let x = bve_eliminate(&f, Var::new(X)).unwrap();
    assert_eq!(x.output.len(), 35 - 6 + 4);

    let cands: BTreeSet<Var> = [X, A, Z1].into_iter().map(Var::new).collect();
    let r = bounded_ve(&f, &cands, BveBound::default());
    assert_eq!(r.output, bve::after_x_a_z1());

    // resolving y away trades four clauses for four
    let y = bve_eliminate(&r.output, Var::new(Y)).unwrap();
    assert_eq!(y.output.len(), r.output.len());
    let stuck = bounded_ve(&r.output, &[Var::new(Y)].into(), BveBound::default());
    assert_eq!(stuck.output, r.output);
    assert!(stuck.trace.is_empty());

    let sp = check_sp(&f, &r, &g).unwrap();
    assert!(!sp.holds);
    assert!(check_wsp(&f, &r, &g, 16).unwrap().holds);
}

#[test]
fn bve_invents_a_swap_that_lifts_here() {
    // y=1 a=2 b=3 c=4 d=5 z=6 A=7; the other clauses force a = b, so the
    // swap made visible by eliminating A was already semantic
    let f = fm(
        7,
        &[
            &[1, 2],
            &[1, 3],
            &[-1, 4],
            &[-1, 5],
            &[2, 6],
            &[3, 6],
            &[4, -6],
            &[5, -6],
            &[-2, -3, -4],
            &[-3, -4, -5],
            &[-2, -4, -5],
            &[7, 2],
        ],
    );
    let r = bve_eliminate(&f, Var::new(7)).unwrap();
    assert_eq!(f.len() - r.output.len(), 1);
    let ab = LitPermutation::swap(7, Var::new(2), Var::new(3));
    assert!(!is_syntactic_symmetry(&f, &ab).unwrap());
    assert!(is_syntactic_symmetry(&r.output, &ab).unwrap());
    assert!(is_semantic_symmetry(&f, &ab, 10).unwrap());
    assert!(check_sl(&f, &r, Some(&[ab]), 10).unwrap().holds);
}

#[test]
fn bve_invents_a_swap_that_does_not_lift() {
    // (A∨a)(a∨b): A is pure, and after it goes a and b look alike
    let f = fm(3, &[&[3, 1], &[1, 2]]);
    let r = bve_eliminate(&f, Var::new(3)).unwrap();
    assert_eq!(r.output, fm(3, &[&[1, 2]]));
    let ab = LitPermutation::swap(3, Var::new(1), Var::new(2));
    let report = check_sl(&f, &r, Some(std::slice::from_ref(&ab)), 10).unwrap();
    assert!(!report.holds);
    assert_eq!(report.witness_generator(), Some(&ab));
}
