//! Variable elimination by clause distribution.

use std::collections::BTreeSet;

use crate::cnf::{resolve, Clause, Formula, Var};
use crate::error::{Error, Result};

use super::db::ClauseDb;
use super::trace::{Step, TransformTrace};
use super::TransformResult;

/// Clause-count bound: an elimination is allowed when the formula has fewer
/// than `before + slack` clauses afterwards. The default `slack = 0` is the
/// strict `|F'| < |F|` test.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BveBound {
    pub slack: i64,
}

impl BveBound {
    pub fn allows(&self, before: usize, after: usize) -> bool {
        (after as i64) < before as i64 + self.slack
    }
}

/// Resolvents of `x` that are not tautologies and not already in the rest
/// of the database, with the clause sets they replace.
fn elimination(db: &ClauseDb, x: Var) -> (Vec<Clause>, Vec<Clause>, BTreeSet<Clause>) {
    let pos: Vec<Clause> = db.occ(x.pos()).cloned().collect();
    let neg: Vec<Clause> = db.occ(x.neg()).cloned().collect();
    let mut added = BTreeSet::new();
    for p in &pos {
        for n in &neg {
            let r = resolve(p, n, x).expect("occurrence lists are consistent");
            if !r.is_tautology() && !db.contains(&r) {
                added.insert(r);
            }
        }
    }
    (pos, neg, added)
}

fn apply(db: &mut ClauseDb, x: Var, pos: Vec<Clause>, neg: Vec<Clause>, added: BTreeSet<Clause>) -> Step {
    for c in pos.iter().chain(&neg) {
        db.remove(c);
    }
    for r in added {
        db.insert(r);
    }
    Step::VarEliminated { var: x, pos, neg }
}

/// Eliminates `x` unconditionally: every clause mentioning `x` is replaced
/// by the non-tautological resolvents on `x`.
pub fn bve_eliminate(f: &Formula, x: Var) -> Result<TransformResult> {
    if !f.contains_var(x) {
        return Err(Error::contract(format!("variable {x} does not occur in the formula")));
    }
    let mut db = ClauseDb::new(f);
    let (pos, neg, added) = elimination(&db, x);
    let step = apply(&mut db, x, pos, neg, added);
    Ok(TransformResult::new(
        f,
        db.to_formula(),
        TransformTrace { steps: vec![step] },
    ))
}

/// Greedy bounded elimination over `candidates`, smallest variable first.
/// After an elimination the candidate neighbours of the eliminated variable
/// are queued again, since their occurrence lists changed.
pub fn bounded_ve(f: &Formula, candidates: &BTreeSet<Var>, bound: BveBound) -> TransformResult {
    let mut db = ClauseDb::new(f);
    let mut trace = TransformTrace::new();
    let mut queue: BTreeSet<Var> = candidates.iter().copied().filter(|&v| f.contains_var(v)).collect();
    let mut eliminated = BTreeSet::new();
    while let Some(x) = queue.pop_first() {
        let (pos, neg, added) = elimination(&db, x);
        if pos.is_empty() && neg.is_empty() {
            continue;
        }
        let before = db.len();
        let after = before - pos.len() - neg.len() + added.len();
        if !bound.allows(before, after) {
            continue;
        }
        let neighbours: BTreeSet<Var> = pos
            .iter()
            .chain(&neg)
            .flat_map(|c| c.vars())
            .filter(|&v| v != x && candidates.contains(&v) && !eliminated.contains(&v))
            .collect();
        trace.push(apply(&mut db, x, pos, neg, added));
        eliminated.insert(x);
        queue.extend(neighbours);
    }
    TransformResult::new(f, db.to_formula(), trace)
}

/// [`bounded_ve`] restricted to variables certified asymmetric. Each such
/// variable is its own orbit, so eliminating any subset of them eliminates a
/// union of orbits.
pub fn symmetric_bve(f: &Formula, asym: &BTreeSet<Var>, bound: BveBound) -> TransformResult {
    bounded_ve(f, asym, bound)
}
