//! Unit, pure, subsumption, self-subsumption, learned clauses and blocked
//! clause elimination.

use crate::cnf::{resolve, Clause, Formula, Lit, Var};
use crate::error::{Error, Result};

use super::db::{ClauseDb, Order, Picker};
use super::trace::{Step, TransformTrace};
use super::TransformResult;

/// Unit propagation to fixpoint with the conflict rule: whenever the empty
/// clause appears the result is exactly `{{}}`.
pub fn unit_conflict_exhaustive(f: &Formula) -> TransformResult {
    unit_conflict_exhaustive_with(f, &Order::Canonical)
}

pub fn unit_conflict_exhaustive_with(f: &Formula, order: &Order) -> TransformResult {
    if f.is_conflict() {
        return TransformResult::new(f, f.clone(), TransformTrace::new());
    }
    let mut db = ClauseDb::new(f);
    let mut trace = TransformTrace::new();
    let mut picker = Picker::new(order);
    loop {
        if db.has_empty() {
            trace.push(Step::ConflictCollapsed);
            return TransformResult::new(f, Formula::conflict(f.num_vars()), trace);
        }
        let units: Vec<Lit> = db.clauses().filter(|c| c.len() == 1).map(|c| c.lits()[0]).collect();
        let Some(l) = picker.pick(units, |&l| l) else {
            break;
        };
        trace.push(Step::UnitAssigned(l));
        db.assign(l);
    }
    TransformResult::new(f, db.to_formula(), trace)
}

/// Pure literal elimination to fixpoint.
pub fn pure_exhaustive(f: &Formula) -> TransformResult {
    pure_exhaustive_with(f, &Order::Canonical)
}

pub fn pure_exhaustive_with(f: &Formula, order: &Order) -> TransformResult {
    let mut db = ClauseDb::new(f);
    let mut trace = TransformTrace::new();
    let mut picker = Picker::new(order);
    loop {
        let present = db.occurring_lits();
        let pure: Vec<Lit> = present.iter().copied().filter(|l| !present.contains(&!*l)).collect();
        let Some(l) = picker.pick(pure, |&l| l) else {
            break;
        };
        trace.push(Step::PureAssigned(l));
        db.assign(l);
    }
    TransformResult::new(f, db.to_formula(), trace)
}

fn strict_subset_witness(db: &ClauseDb, d: &Clause) -> Option<Clause> {
    if d.is_empty() {
        return None;
    }
    if db.has_empty() {
        return Some(Clause::empty());
    }
    // a witness shares at least one literal with d
    d.lits()
        .iter()
        .flat_map(|&l| db.occ(l))
        .filter(|c| c.is_strict_subset_of(d))
        .min()
        .cloned()
}

/// Removes every clause that strictly contains another clause.
pub fn subsumption_exhaustive(f: &Formula) -> TransformResult {
    subsumption_exhaustive_with(f, &Order::Canonical)
}

pub fn subsumption_exhaustive_with(f: &Formula, order: &Order) -> TransformResult {
    let mut db = ClauseDb::new(f);
    let mut trace = TransformTrace::new();
    let mut picker = Picker::new(order);
    let mut work: Vec<Clause> = f.clauses().to_vec();
    picker.arrange(&mut work);
    // a subsumed clause keeps a present witness: chains end in a minimal clause
    for d in work {
        if let Some(witness) = strict_subset_witness(&db, &d) {
            db.remove(&d);
            trace.push(Step::Subsumed { victim: d, witness });
        }
    }
    TransformResult::new(f, db.to_formula(), trace)
}

/// Witnesses `W` that allow deleting `removed` from `clause`: `-removed ∈ W`
/// and `W ∖ {-removed} ⊂ clause ∖ {removed}` strictly.
fn ssr_witnesses<'a>(db: &'a ClauseDb, clause: &'a Clause, removed: Lit) -> impl Iterator<Item = &'a Clause> + 'a {
    let rest = clause.without(removed);
    db.occ(!removed)
        .filter(move |w| w.without(!removed).is_strict_subset_of(&rest))
}

/// Every applicable self-subsuming resolution `(clause, removed literal,
/// witness)` in `f`, in canonical order.
pub fn self_subsumption_candidates(f: &Formula) -> Vec<(Clause, Lit, Clause)> {
    candidates(&ClauseDb::new(f))
}

fn candidates(db: &ClauseDb) -> Vec<(Clause, Lit, Clause)> {
    let mut out = Vec::new();
    for c in db.clauses() {
        for &m in c.lits() {
            if let Some(w) = ssr_witnesses(db, c, m).next() {
                out.push((c.clone(), m, w.clone()));
            }
        }
    }
    out
}

/// Self-subsuming resolution applied one step at a time in the given order
/// until no step applies. The result depends on the order.
pub fn self_subsume_naive(f: &Formula, order: &Order) -> TransformResult {
    let mut db = ClauseDb::new(f);
    let mut trace = TransformTrace::new();
    let mut picker = Picker::new(order);
    while let Some((clause, removed, witness)) = picker.pick(candidates(&db), |c| c.1) {
        db.remove(&clause);
        db.insert(clause.without(removed));
        trace.push(Step::SelfSubsumed {
            clause,
            removed,
            witness,
        });
    }
    TransformResult::new(f, db.to_formula(), trace)
}

/// One round of unique self-subsuming resolution: each clause with exactly
/// one removable literal (judged against the input) loses it; all clauses
/// are rewritten at once.
pub fn simultaneous_self_subsumption_round(f: &Formula) -> TransformResult {
    let db = ClauseDb::new(f);
    let mut steps = Vec::new();
    for c in f.clauses() {
        let mut removable = c
            .lits()
            .iter()
            .filter_map(|&m| ssr_witnesses(&db, c, m).next().map(|w| (m, w.clone())));
        if let (Some((removed, witness)), None) = (removable.next(), removable.next()) {
            steps.push((c.clone(), removed, witness));
        }
    }
    let output = Formula::new(
        f.num_vars(),
        f.clauses().iter().map(|c| {
            steps
                .iter()
                .find(|s| &s.0 == c)
                .map_or_else(|| c.clone(), |s| c.without(s.1))
        }),
    );
    // shortest sources first, so sequential replay never deletes a
    // strengthened clause that coincides with a longer source
    steps.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let trace = TransformTrace {
        steps: steps
            .into_iter()
            .map(|(clause, removed, witness)| Step::SelfSubsumed {
                clause,
                removed,
                witness,
            })
            .collect(),
    };
    TransformResult::new(f, output, trace)
}

/// Repeats [`simultaneous_self_subsumption_round`] until a round changes
/// nothing. Terminates because every effective round shrinks the total
/// literal count.
pub fn simultaneous_self_subsumption_fixpoint(f: &Formula) -> TransformResult {
    let mut current = f.clone();
    let mut trace = TransformTrace::new();
    loop {
        let round = simultaneous_self_subsumption_round(&current);
        if round.output == current {
            break;
        }
        debug_assert!(round.output.total_literals() < current.total_literals());
        trace.extend(round.trace);
        current = round.output;
    }
    TransformResult::new(f, current, trace)
}

/// Adds the resolvent of `c1` and `c2` on `x` unless it is a tautology or
/// already present.
pub fn add_resolvent(f: &Formula, c1: &Clause, c2: &Clause, x: Var) -> Result<TransformResult> {
    for c in [c1, c2] {
        if !f.contains(c) {
            return Err(Error::contract(format!("clause {c:?} is not in the formula")));
        }
    }
    let r = resolve(c1, c2, x)?;
    if r.is_tautology() || f.contains(&r) {
        return Ok(TransformResult::new(f, f.clone(), TransformTrace::new()));
    }
    let output = Formula::new(f.num_vars(), f.clauses().iter().cloned().chain([r.clone()]));
    let trace = TransformTrace {
        steps: vec![Step::LearnedAdded {
            clause: r,
            parents: (c1.clone(), c2.clone()),
        }],
    };
    Ok(TransformResult::new(f, output, trace))
}

/// The first literal of `c` that blocks it in `db`, if any. A literal whose
/// negation occurs nowhere blocks vacuously.
pub(crate) fn blocking_literal(db: &ClauseDb, c: &Clause) -> Option<Lit> {
    c.lits()
        .iter()
        .copied()
        .find(|&l| db.occ(!l).all(|d| c.lits().iter().any(|&k| k != l && d.contains(!k))))
}

/// Blocked clause elimination to fixpoint.
pub fn bce_exhaustive(f: &Formula) -> TransformResult {
    bce_exhaustive_with(f, &Order::Canonical)
}

pub fn bce_exhaustive_with(f: &Formula, order: &Order) -> TransformResult {
    let mut db = ClauseDb::new(f);
    let mut trace = TransformTrace::new();
    let mut picker = Picker::new(order);
    loop {
        let blocked: Vec<(Clause, Lit)> = db
            .clauses()
            .filter_map(|c| blocking_literal(&db, c).map(|l| (c.clone(), l)))
            .collect();
        let Some((clause, blocking)) = picker.pick(blocked, |b| b.1) else {
            break;
        };
        db.remove(&clause);
        trace.push(Step::BlockedRemoved { clause, blocking });
    }
    TransformResult::new(f, db.to_formula(), trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fm(n: u32, cs: &[&[i32]]) -> Formula {
        Formula::from_dimacs_clauses(n, cs)
    }

    fn c(v: &[i32]) -> Clause {
        Clause::from_dimacs(v)
    }

    #[test]
    fn unit_on_intro_example() {
        // x=1 a=2 b=3 c=4
        let f = fm(4, &[&[1], &[-1, 2, 4], &[3, 4]]);
        let r = unit_conflict_exhaustive(&f);
        assert_eq!(r.output, fm(4, &[&[2, 4], &[3, 4]]));
        assert_eq!(r.trace.steps, vec![Step::UnitAssigned(Lit::new(1))]);
    }

    #[test]
    fn unit_conflict_collapses() {
        let r = unit_conflict_exhaustive(&fm(1, &[&[1], &[-1]]));
        assert!(r.output.is_conflict());
        assert_eq!(r.trace.steps.last(), Some(&Step::ConflictCollapsed));
        // an empty clause anywhere collapses immediately
        let r = unit_conflict_exhaustive(&Formula::new(2, [Clause::empty(), c(&[1, 2])]));
        assert!(r.output.is_conflict());
    }

    #[test]
    fn unit_fixpoint_is_identity() {
        let f = fm(2, &[&[1, 2], &[-1, -2]]);
        let r = unit_conflict_exhaustive(&f);
        assert_eq!(r.output, f);
        assert!(r.trace.is_empty());
    }

    #[test]
    fn pure_cases() {
        assert!(pure_exhaustive(&fm(2, &[&[1, 2]])).output.is_empty());
        let f = fm(2, &[&[1, 2], &[-1, -2]]);
        assert_eq!(pure_exhaustive(&f).output, f);
    }

    #[test]
    fn subsumption_cases() {
        let r = subsumption_exhaustive(&fm(3, &[&[1], &[1, 2], &[1, 2, 3]]));
        assert_eq!(r.output, fm(3, &[&[1]]));
        assert_eq!(r.trace.len(), 2);
        let f = fm(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(subsumption_exhaustive(&f).output, f);
    }

    #[test]
    fn self_subsumption_unit_strengthen() {
        let f = fm(2, &[&[1], &[-1, 2]]);
        let expect = fm(2, &[&[1], &[2]]);
        assert_eq!(self_subsume_naive(&f, &Order::Canonical).output, expect);
        assert_eq!(simultaneous_self_subsumption_round(&f).output, expect);
        let g = fm(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(self_subsume_naive(&g, &Order::Canonical).output, g);
    }

    #[test]
    fn self_subsumption_requires_strict_subset() {
        // (a ∨ x) and (a ∨ ¬x): C1 = C2 = {a}, not a strict subset
        let f = fm(2, &[&[1, 2], &[1, -2]]);
        assert!(self_subsumption_candidates(&f).is_empty());
    }

    #[test]
    fn simultaneous_round_replays_in_order() {
        // (1 2 3) loses 3 to become (1 2), which itself loses 2
        let f = fm(4, &[&[1, 2, 3], &[1, 2], &[-3, 1], &[-2, 4], &[4]]);
        let r = simultaneous_self_subsumption_round(&f);
        assert_eq!(r.trace.replay(&f).unwrap(), r.output);
        let fix = simultaneous_self_subsumption_fixpoint(&f);
        assert_eq!(fix.trace.replay(&f).unwrap(), fix.output);
    }

    #[test]
    fn add_resolvent_cases() {
        let f = fm(3, &[&[1, 2], &[-1, 2], &[1, 3], &[-1, 3]]);
        let r = add_resolvent(&f, &c(&[1, 2]), &c(&[-1, 2]), Var::new(1)).unwrap();
        assert!(r.output.contains(&c(&[2])));
        assert_eq!(r.output.len(), 5);

        let t = fm(2, &[&[1, 2], &[-1, -2]]);
        let r = add_resolvent(&t, &c(&[1, 2]), &c(&[-1, -2]), Var::new(1)).unwrap();
        assert_eq!(r.output, t);

        let e = fm(3, &[&[1, 2], &[-1, 3], &[2, 3]]);
        let r = add_resolvent(&e, &c(&[1, 2]), &c(&[-1, 3]), Var::new(1)).unwrap();
        assert_eq!(r.output, e);
        assert!(r.trace.is_empty());

        assert!(add_resolvent(&e, &c(&[1]), &c(&[-1, 3]), Var::new(1)).is_err());
    }

    #[test]
    fn bce_cases() {
        assert!(bce_exhaustive(&fm(2, &[&[1, 2], &[-1, -2]])).output.is_empty());
        // every literal occurs in both polarities with non-tautological resolvents
        let f = fm(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]);
        assert_eq!(bce_exhaustive(&f).output, f);
    }

    #[test]
    fn traces_replay() {
        let f = fm(5, &[&[1], &[-1, 2, 3], &[2, 4], &[-4, 5], &[3, -5], &[2, 3, 4]]);
        for r in [
            unit_conflict_exhaustive(&f),
            pure_exhaustive(&f),
            subsumption_exhaustive(&f),
            self_subsume_naive(&f, &Order::Canonical),
            simultaneous_self_subsumption_fixpoint(&f),
            bce_exhaustive(&f),
        ] {
            assert_eq!(r.trace.replay(&f).unwrap(), r.output);
        }
    }
}
