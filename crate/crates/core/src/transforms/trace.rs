//! Step logs of transformation runs, their replay, and a line-oriented text
//! encoding (`kind` followed by integers, clauses terminated by `0`):
//!
//! ```text
//! unit 3
//! conflict
//! pure -2
//! subsume <victim> 0 <witness> 0
//! strengthen <removed-literal> <clause> 0 <witness> 0
//! blocked <blocking-literal> <clause> 0
//! eliminate <var> <#pos> <#neg> <pos clauses...> <neg clauses...>
//! learn <clause> 0 <parent> 0 <parent> 0
//! ```

use std::fmt::Write as _;

use crate::cnf::{resolve, Clause, Formula, Lit, Var};
use crate::error::{Error, Result};

use super::db::ClauseDb;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    UnitAssigned(Lit),
    ConflictCollapsed,
    PureAssigned(Lit),
    Subsumed {
        victim: Clause,
        witness: Clause,
    },
    /// `removed` was deleted from `clause` by resolution with `witness`.
    SelfSubsumed {
        clause: Clause,
        removed: Lit,
        witness: Clause,
    },
    BlockedRemoved {
        clause: Clause,
        blocking: Lit,
    },
    /// The original clauses containing `var` and `-var`.
    VarEliminated {
        var: Var,
        pos: Vec<Clause>,
        neg: Vec<Clause>,
    },
    LearnedAdded {
        clause: Clause,
        parents: (Clause, Clause),
    },
}

/// Ordered rule applications of one run. Replaying the steps from the input
/// reproduces the output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransformTrace {
    pub steps: Vec<Step>,
}

impl TransformTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn extend(&mut self, other: TransformTrace) {
        self.steps.extend(other.steps);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-applies the steps to `input`, checking each step's precondition.
    pub fn replay(&self, input: &Formula) -> Result<Formula> {
        self.replay_prefix(input, self.steps.len())
    }

    /// Replays the first `n` steps.
    pub fn replay_prefix(&self, input: &Formula, n: usize) -> Result<Formula> {
        let mut db = ClauseDb::new(input);
        for (i, step) in self.steps.iter().take(n).enumerate() {
            let missing = |c: &Clause| Error::contract(format!("step {i}: clause {c:?} not present"));
            match step {
                Step::UnitAssigned(l) | Step::PureAssigned(l) => db.assign(*l),
                Step::ConflictCollapsed => return Ok(Formula::conflict(input.num_vars())),
                Step::Subsumed { victim, .. } | Step::BlockedRemoved { clause: victim, .. } => {
                    if !db.remove(victim) {
                        return Err(missing(victim));
                    }
                }
                Step::SelfSubsumed { clause, removed, .. } => {
                    if !db.remove(clause) {
                        return Err(missing(clause));
                    }
                    db.insert(clause.without(*removed));
                }
                Step::VarEliminated { var, .. } => {
                    let pos: Vec<Clause> = db.occ(var.pos()).cloned().collect();
                    let neg: Vec<Clause> = db.occ(var.neg()).cloned().collect();
                    for c in pos.iter().chain(&neg) {
                        db.remove(c);
                    }
                    for p in &pos {
                        for n in &neg {
                            db.insert(resolve(p, n, *var)?);
                        }
                    }
                }
                Step::LearnedAdded { clause, .. } => {
                    db.insert(clause.clone());
                }
            }
        }
        Ok(db.to_formula())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            write_step(&mut out, step);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') && !line.starts_with("conflict") {
                continue;
            }
            steps.push(parse_step(line).map_err(|m| Error::parse(idx + 1, m))?);
        }
        Ok(TransformTrace { steps })
    }
}

fn push_clause(out: &mut String, c: &Clause) {
    for l in c.lits() {
        let _ = write!(out, " {l}");
    }
    out.push_str(" 0");
}

fn write_step(out: &mut String, step: &Step) {
    match step {
        Step::UnitAssigned(l) => {
            let _ = write!(out, "unit {l}");
        }
        Step::ConflictCollapsed => out.push_str("conflict"),
        Step::PureAssigned(l) => {
            let _ = write!(out, "pure {l}");
        }
        Step::Subsumed { victim, witness } => {
            out.push_str("subsume");
            push_clause(out, victim);
            push_clause(out, witness);
        }
        Step::SelfSubsumed {
            clause,
            removed,
            witness,
        } => {
            let _ = write!(out, "strengthen {removed}");
            push_clause(out, clause);
            push_clause(out, witness);
        }
        Step::BlockedRemoved { clause, blocking } => {
            let _ = write!(out, "blocked {blocking}");
            push_clause(out, clause);
        }
        Step::VarEliminated { var, pos, neg } => {
            let _ = write!(out, "eliminate {var} {} {}", pos.len(), neg.len());
            for c in pos.iter().chain(neg) {
                push_clause(out, c);
            }
        }
        Step::LearnedAdded { clause, parents } => {
            out.push_str("learn");
            push_clause(out, clause);
            push_clause(out, &parents.0);
            push_clause(out, &parents.1);
        }
    }
}

struct Tokens<'a> {
    it: std::str::SplitWhitespace<'a>,
}

impl Tokens<'_> {
    fn int(&mut self) -> std::result::Result<i64, String> {
        let tok = self.it.next().ok_or("unexpected end of line")?;
        tok.parse().map_err(|_| format!("invalid integer `{tok}`"))
    }

    fn lit(&mut self) -> std::result::Result<Lit, String> {
        let v = self.int()?;
        i32::try_from(v)
            .ok()
            .and_then(Lit::from_dimacs)
            .ok_or_else(|| format!("invalid literal {v}"))
    }

    fn count(&mut self) -> std::result::Result<usize, String> {
        usize::try_from(self.int()?).map_err(|_| "negative count".to_string())
    }

    fn clause(&mut self) -> std::result::Result<Clause, String> {
        let mut lits = Vec::new();
        loop {
            match self.int()? {
                0 => return Ok(Clause::new(lits)),
                v => lits.push(
                    i32::try_from(v)
                        .ok()
                        .and_then(Lit::from_dimacs)
                        .ok_or_else(|| format!("invalid literal {v}"))?,
                ),
            }
        }
    }

    fn finish(mut self) -> std::result::Result<(), String> {
        match self.it.next() {
            None => Ok(()),
            Some(t) => Err(format!("trailing token `{t}`")),
        }
    }
}

fn parse_step(line: &str) -> std::result::Result<Step, String> {
    let mut it = line.split_whitespace();
    let kind = it.next().ok_or("empty step")?;
    let mut t = Tokens { it };
    let step = match kind {
        "unit" => Step::UnitAssigned(t.lit()?),
        "conflict" => Step::ConflictCollapsed,
        "pure" => Step::PureAssigned(t.lit()?),
        "subsume" => Step::Subsumed {
            victim: t.clause()?,
            witness: t.clause()?,
        },
        "strengthen" => Step::SelfSubsumed {
            removed: t.lit()?,
            clause: t.clause()?,
            witness: t.clause()?,
        },
        "blocked" => Step::BlockedRemoved {
            blocking: t.lit()?,
            clause: t.clause()?,
        },
        "eliminate" => {
            let var = t.lit()?;
            if !var.is_positive() {
                return Err(format!("eliminated variable must be positive, got {var}"));
            }
            let (np, nn) = (t.count()?, t.count()?);
            let pos = (0..np).map(|_| t.clause()).collect::<std::result::Result<_, _>>()?;
            let neg = (0..nn).map(|_| t.clause()).collect::<std::result::Result<_, _>>()?;
            Step::VarEliminated {
                var: var.var(),
                pos,
                neg,
            }
        }
        "learn" => Step::LearnedAdded {
            clause: t.clause()?,
            parents: (t.clause()?, t.clause()?),
        },
        other => return Err(format!("unknown step kind `{other}`")),
    };
    t.finish()?;
    Ok(step)
}
