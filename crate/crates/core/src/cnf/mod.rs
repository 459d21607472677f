//! CNF vocabulary: literals, clauses, formulas and assignments.

mod dimacs;
mod semantics;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Not;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use semantics::{model_set, resolve, simplify, Assignment, ModelSet, DEFAULT_MODEL_LIMIT};

/// A propositional variable, numbered from 1 as in DIMACS.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    /// Panics on 0.
    pub fn new(index: u32) -> Self {
        assert!(index != 0, "variable index must be nonzero");
        Var(index)
    }

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn pos(self) -> Lit {
        Lit(self.0 as i32)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Lit {
        Lit(-(self.0 as i32))
    }

    pub fn lit(self, positive: bool) -> Lit {
        if positive {
            self.pos()
        } else {
            self.neg()
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A literal in signed-integer form: `v` is the variable, `-v` its negation.
///
/// Literals order by variable first and put the positive literal before the
/// negative one, so `1 < -1 < 2 < -2`. Clause canonical form uses this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lit(i32);

impl Lit {
    pub fn from_dimacs(value: i32) -> Option<Self> {
        (value != 0 && value != i32::MIN).then_some(Lit(value))
    }

    /// Panics on 0.
    pub fn new(value: i32) -> Self {
        Self::from_dimacs(value).expect("literal must be a nonzero i32")
    }

    pub fn to_dimacs(self) -> i32 {
        self.0
    }

    pub fn var(self) -> Var {
        Var(self.0.unsigned_abs())
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// Dense code `2(v-1) + neg`, used for point indices in permutation groups.
    pub fn code(self) -> usize {
        2 * (self.var().0 as usize - 1) + usize::from(self.0 < 0)
    }

    pub fn from_code(code: usize) -> Self {
        let var = (code / 2 + 1) as i32;
        if code.is_multiple_of(2) {
            Lit(var)
        } else {
            Lit(-var)
        }
    }
}

impl Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(-self.0)
    }
}

impl Ord for Lit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(&other.code())
    }
}

impl PartialOrd for Lit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A clause in canonical form: sorted, without duplicate literals.
///
/// Tautological clauses are representable (resolution can produce them) but
/// never stored in a [`Formula`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Clause(Vec<Lit>);

impl Clause {
    pub fn new(lits: impl IntoIterator<Item = Lit>) -> Self {
        let mut lits: Vec<Lit> = lits.into_iter().collect();
        lits.sort_unstable();
        lits.dedup();
        Clause(lits)
    }

    pub fn from_dimacs(values: &[i32]) -> Self {
        Clause::new(values.iter().map(|&v| Lit::new(v)))
    }

    pub fn empty() -> Self {
        Clause(Vec::new())
    }

    pub fn lits(&self) -> &[Lit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, lit: Lit) -> bool {
        self.0.binary_search(&lit).is_ok()
    }

    pub fn is_tautology(&self) -> bool {
        // l and -l are adjacent in canonical order
        self.0.windows(2).any(|w| w[0] == !w[1])
    }

    /// Subset test on sorted literal sequences.
    pub fn is_subset_of(&self, other: &Clause) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for l in &self.0 {
            for m in it.by_ref() {
                match m.cmp(l) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_strict_subset_of(&self, other: &Clause) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    pub fn without(&self, lit: Lit) -> Clause {
        Clause(self.0.iter().copied().filter(|&l| l != lit).collect())
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|l| l.var())
    }

    pub fn max_var(&self) -> u32 {
        self.0.iter().map(|l| l.var().index()).max().unwrap_or(0)
    }

    pub fn map(&self, f: impl Fn(Lit) -> Lit) -> Clause {
        Clause::new(self.0.iter().map(|&l| f(l)))
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l} ")?;
        }
        write!(f, "0")
    }
}

impl FromIterator<Lit> for Clause {
    fn from_iter<I: IntoIterator<Item = Lit>>(iter: I) -> Self {
        Clause::new(iter)
    }
}

/// A CNF formula: a duplicate-free set of non-tautological clauses over the
/// variable universe `1..=num_vars`.
///
/// The universe is the declared variable count. It is kept across
/// transformations so that removed variables remain meaningful
/// (`Var(F') ⊆ Var(F)`). [`Formula::vars`] returns only the variables that
/// actually occur.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Formula {
    num_vars: u32,
    clauses: Vec<Clause>,
    occ: BTreeMap<Lit, Vec<usize>>,
}

impl Formula {
    /// Builds a formula, dropping tautologies and duplicate clauses. The
    /// universe is widened to cover every literal.
    pub fn new(num_vars: u32, clauses: impl IntoIterator<Item = Clause>) -> Self {
        let set: BTreeSet<Clause> = clauses.into_iter().filter(|c| !c.is_tautology()).collect();
        let clauses: Vec<Clause> = set.into_iter().collect();
        let max = clauses.iter().map(Clause::max_var).max().unwrap_or(0);
        let mut occ: BTreeMap<Lit, Vec<usize>> = BTreeMap::new();
        for (i, c) in clauses.iter().enumerate() {
            for &l in c.lits() {
                occ.entry(l).or_default().push(i);
            }
        }
        Formula {
            num_vars: num_vars.max(max),
            clauses,
            occ,
        }
    }

    /// Universe sized to the largest variable present.
    pub fn from_clauses(clauses: impl IntoIterator<Item = Clause>) -> Self {
        Formula::new(0, clauses)
    }

    /// Shorthand for tests and examples: clauses as DIMACS integer slices.
    pub fn from_dimacs_clauses(num_vars: u32, clauses: &[&[i32]]) -> Self {
        Formula::new(num_vars, clauses.iter().map(|c| Clause::from_dimacs(c)))
    }

    pub fn empty(num_vars: u32) -> Self {
        Formula::new(num_vars, [])
    }

    /// The conflict formula `{{}}`.
    pub fn conflict(num_vars: u32) -> Self {
        Formula::new(num_vars, [Clause::empty()])
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn contains(&self, clause: &Clause) -> bool {
        self.clauses.binary_search(clause).is_ok()
    }

    pub fn has_empty_clause(&self) -> bool {
        self.clauses.first().is_some_and(Clause::is_empty)
    }

    /// True for exactly `{{}}`.
    pub fn is_conflict(&self) -> bool {
        self.clauses.len() == 1 && self.clauses[0].is_empty()
    }

    /// Clauses containing `lit`, in canonical order.
    pub fn occurrences(&self, lit: Lit) -> impl Iterator<Item = &Clause> + '_ {
        self.occ.get(&lit).into_iter().flatten().map(move |&i| &self.clauses[i])
    }

    pub fn occurrence_count(&self, lit: Lit) -> usize {
        self.occ.get(&lit).map_or(0, Vec::len)
    }

    /// Variables occurring in some clause.
    pub fn vars(&self) -> BTreeSet<Var> {
        self.occ.keys().map(|l| l.var()).collect()
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.occ.contains_key(&var.pos()) || self.occ.contains_key(&var.neg())
    }

    /// Both polarities of every occurring variable; closed under negation.
    pub fn lits(&self) -> BTreeSet<Lit> {
        self.vars().into_iter().flat_map(|v| [v.pos(), v.neg()]).collect()
    }

    /// Literals that occur in at least one clause.
    pub fn occurring_lits(&self) -> impl Iterator<Item = Lit> + '_ {
        self.occ.keys().copied()
    }

    pub fn total_literals(&self) -> usize {
        self.clauses.iter().map(Clause::len).sum()
    }

    /// Same clauses over a different universe (never smaller than needed).
    pub fn with_num_vars(&self, num_vars: u32) -> Formula {
        Formula::new(num_vars, self.clauses.iter().cloned())
    }

    /// Applies `f` to every literal of every clause.
    pub fn map_lits(&self, f: impl Fn(Lit) -> Lit) -> Formula {
        Formula::new(self.num_vars, self.clauses.iter().map(|c| c.map(&f)))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula(n={}, {:?})", self.num_vars, self.clauses)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_dimacs(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_order_and_negation() {
        let mut lits = vec![Lit::new(-2), Lit::new(2), Lit::new(-1), Lit::new(1)];
        lits.sort();
        assert_eq!(lits, vec![Lit::new(1), Lit::new(-1), Lit::new(2), Lit::new(-2)]);
        for l in lits {
            assert_eq!(!!l, l);
            assert_eq!(Lit::from_code(l.code()), l);
        }
        assert!(Lit::from_dimacs(0).is_none());
    }

    #[test]
    fn clause_canonical_form() {
        let c = Clause::from_dimacs(&[3, -1, 3, 2]);
        assert_eq!(c.lits(), &[Lit::new(-1), Lit::new(2), Lit::new(3)]);
        assert!(!c.is_tautology());
        assert!(Clause::from_dimacs(&[1, 2, -1]).is_tautology());
    }

    #[test]
    fn subset_tests() {
        let a = Clause::from_dimacs(&[1]);
        let ab = Clause::from_dimacs(&[1, 2]);
        let bc = Clause::from_dimacs(&[2, 3]);
        assert!(a.is_strict_subset_of(&ab));
        assert!(ab.is_subset_of(&ab));
        assert!(!ab.is_strict_subset_of(&ab));
        assert!(!a.is_subset_of(&bc));
        assert!(Clause::empty().is_strict_subset_of(&a));
    }

    #[test]
    fn formula_dedups_and_indexes() {
        let f = Formula::from_dimacs_clauses(4, &[&[1, 2], &[2, 1], &[1, -1], &[-2, 3]]);
        assert_eq!(f.len(), 2);
        assert_eq!(f.num_vars(), 4);
        assert_eq!(f.occurrence_count(Lit::new(2)), 1);
        assert_eq!(f.occurrence_count(Lit::new(-2)), 1);
        assert_eq!(f.vars().len(), 3);
        assert_eq!(f.lits().len(), 6);
        assert!(!f.contains_var(Var::new(4)));
    }

    #[test]
    fn conflict_formula() {
        let f = Formula::conflict(2);
        assert!(f.is_conflict());
        assert!(f.has_empty_clause());
        assert!(f.vars().is_empty());
    }
}
