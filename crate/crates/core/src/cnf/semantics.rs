use std::collections::BTreeMap;

use super::{Clause, Formula, Lit, Var};
use crate::error::{Error, Result};

/// Default variable limit for exhaustive model enumeration.
pub const DEFAULT_MODEL_LIMIT: usize = 16;

/// A partial assignment of truth values to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: BTreeMap<Var, bool>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Makes `lit` true.
    pub fn set(&mut self, lit: Lit) {
        self.values.insert(lit.var(), lit.is_positive());
    }

    pub fn assign(&mut self, var: Var, value: bool) {
        self.values.insert(var, value);
    }

    pub fn with(mut self, lit: Lit) -> Self {
        self.set(lit);
        self
    }

    pub fn from_lits(lits: impl IntoIterator<Item = Lit>) -> Self {
        let mut a = Assignment::new();
        for l in lits {
            a.set(l);
        }
        a
    }

    /// Complete assignment over `1..=num_vars`; bit `v-1` of `mask` is `v`'s value.
    pub fn from_mask(num_vars: u32, mask: u64) -> Self {
        let mut a = Assignment::new();
        for v in 1..=num_vars {
            a.assign(Var::new(v), mask >> (v - 1) & 1 == 1);
        }
        a
    }

    /// Bit mask over `1..=num_vars`; unassigned variables read as false.
    pub fn to_mask(&self, num_vars: u32) -> u64 {
        (1..=num_vars)
            .filter(|&v| self.var_value(Var::new(v)) == Some(true))
            .fold(0, |m, v| m | 1 << (v - 1))
    }

    pub fn var_value(&self, var: Var) -> Option<bool> {
        self.values.get(&var).copied()
    }

    /// Truth value of a literal; `None` when its variable is unassigned.
    pub fn value(&self, lit: Lit) -> Option<bool> {
        self.var_value(lit.var()).map(|v| v == lit.is_positive())
    }

    pub fn is_assigned(&self, var: Var) -> bool {
        self.values.contains_key(&var)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, bool)> + '_ {
        self.values.iter().map(|(&v, &b)| (v, b))
    }

    pub fn satisfies_clause(&self, c: &Clause) -> bool {
        c.lits().iter().any(|&l| self.value(l) == Some(true))
    }

    /// True iff every clause has a true literal.
    pub fn satisfies(&self, f: &Formula) -> bool {
        f.clauses().iter().all(|c| self.satisfies_clause(c))
    }
}

/// `F[σ]`: drops satisfied clauses and deletes false literals from the rest.
pub fn simplify(f: &Formula, s: &Assignment) -> Formula {
    let clauses = f.clauses().iter().filter(|c| !s.satisfies_clause(c)).map(|c| {
        c.lits()
            .iter()
            .copied()
            .filter(|&l| s.value(l) != Some(false))
            .collect::<Clause>()
    });
    Formula::new(f.num_vars(), clauses)
}

/// The resolvent `(c1 ∖ {x}) ∪ (c2 ∖ {¬x})`. Tautologies are returned as is.
pub fn resolve(c1: &Clause, c2: &Clause, x: Var) -> Result<Clause> {
    if !c1.contains(x.pos()) || !c2.contains(x.neg()) {
        return Err(Error::contract(format!(
            "cannot resolve {c1:?} and {c2:?} on {x}: expected {x} in the first and -{x} in the second"
        )));
    }
    Ok(c1
        .lits()
        .iter()
        .filter(|&&l| l != x.pos())
        .chain(c2.lits().iter().filter(|&&l| l != x.neg()))
        .copied()
        .collect())
}

/// The satisfying complete assignments of a formula over its universe,
/// stored as a bitmap indexed by assignment mask.
#[derive(Clone, PartialEq, Eq)]
pub struct ModelSet {
    num_vars: u32,
    bits: Vec<u64>,
}

impl ModelSet {
    /// Enumerates all `2^universe` assignments. `universe` is widened to the
    /// formula's own universe.
    pub fn over(f: &Formula, universe: u32, max_vars: usize) -> Result<Self> {
        let n = universe.max(f.num_vars());
        if n as usize > max_vars || n > 30 {
            return Err(Error::OracleTooLarge {
                vars: n as usize,
                max: max_vars.min(30),
            });
        }
        let masks: Vec<(u64, u64)> = f
            .clauses()
            .iter()
            .map(|c| {
                c.lits().iter().fold((0, 0), |(p, q), &l| {
                    let bit = 1u64 << (l.var().index() - 1);
                    if l.is_positive() {
                        (p | bit, q)
                    } else {
                        (p, q | bit)
                    }
                })
            })
            .collect();
        let total = 1u64 << n;
        let mut bits = vec![0u64; (total as usize).div_ceil(64)];
        for m in 0..total {
            if masks.iter().all(|&(p, q)| m & p != 0 || !m & q != 0) {
                bits[(m / 64) as usize] |= 1 << (m % 64);
            }
        }
        Ok(ModelSet { num_vars: n, bits })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.bits[(mask / 64) as usize] >> (mask % 64) & 1 == 1
    }

    pub fn contains(&self, a: &Assignment) -> bool {
        self.contains_mask(a.to_mask(self.num_vars))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        (0..1u64 << self.num_vars).filter(move |&m| self.contains_mask(m))
    }

    pub fn assignments(&self) -> impl Iterator<Item = Assignment> + '_ {
        self.masks().map(move |m| Assignment::from_mask(self.num_vars, m))
    }
}

impl std::fmt::Debug for ModelSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.masks()).finish()
    }
}

/// Exactly the satisfying complete assignments over the formula's universe.
/// Fails with [`Error::OracleTooLarge`] instead of truncating.
pub fn model_set(f: &Formula, max_vars: usize) -> Result<ModelSet> {
    ModelSet::over(f, f.num_vars(), max_vars)
}
