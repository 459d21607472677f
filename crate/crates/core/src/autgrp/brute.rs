use std::collections::{BTreeMap, HashSet};

use crate::cnf::{Clause, Formula, Lit, Var};
use crate::error::{Error, Result};
use crate::symmetry::{LitPermutation, PermGroup};

pub const BRUTE_FORCE_DEFAULT_VARS: usize = 7;

/// Occurrence signature of a literal: sorted lengths of the clauses it is in.
fn profile(f: &Formula, l: Lit) -> Vec<usize> {
    let mut p: Vec<usize> = f.occurrences(l).map(Clause::len).collect();
    p.sort_unstable();
    p
}

struct Enumerator<'a> {
    f: &'a Formula,
    clause_set: HashSet<&'a Clause>,
    order: Vec<Var>,
    /// Clauses whose last variable (in `order`) is `order[d]`.
    complete_at: Vec<Vec<&'a Clause>>,
    profiles: BTreeMap<Lit, Vec<usize>>,
    image: BTreeMap<Var, Lit>,
    used: HashSet<Var>,
    found: Vec<LitPermutation>,
}

impl Enumerator<'_> {
    fn apply(&self, l: Lit) -> Lit {
        let img = self.image[&l.var()];
        if l.is_positive() {
            img
        } else {
            !img
        }
    }

    fn go(&mut self, depth: usize) {
        if depth == self.order.len() {
            let map = self.image.iter().map(|(&v, &l)| (v, l));
            self.found
                .push(LitPermutation::from_var_map(self.f.num_vars(), map).expect("bijective by construction"));
            return;
        }
        let v = self.order[depth];
        let targets: Vec<Var> = self.order.iter().copied().filter(|w| !self.used.contains(w)).collect();
        for w in targets {
            for img in [w.pos(), w.neg()] {
                if self.profiles[&v.pos()] != self.profiles[&img] || self.profiles[&v.neg()] != self.profiles[&!img] {
                    continue;
                }
                self.image.insert(v, img);
                let ok = self.complete_at[depth]
                    .iter()
                    .all(|c| self.clause_set.contains(&c.map(|l| self.apply(l))));
                if ok {
                    self.used.insert(w);
                    self.go(depth + 1);
                    self.used.remove(&w);
                }
                self.image.remove(&v);
            }
        }
    }
}

/// Every negation-equivariant permutation of the occurring variables that
/// maps `f` onto itself, found by backtracking; non-occurring variables are
/// fixed. Fails with `OracleTooLarge` above `max_vars` occurring variables.
pub fn brute_force_automorphisms(f: &Formula, max_vars: usize) -> Result<PermGroup> {
    let vars = f.vars();
    if vars.len() > max_vars {
        return Err(Error::OracleTooLarge {
            vars: vars.len(),
            max: max_vars,
        });
    }
    // greedy order: next is the variable sharing most clauses with the
    // chosen ones, so clauses become checkable early
    let mut order: Vec<Var> = Vec::new();
    let mut rest: Vec<Var> = vars.iter().copied().collect();
    while !rest.is_empty() {
        let score = |v: Var| {
            f.occurrences(v.pos())
                .chain(f.occurrences(v.neg()))
                .filter(|c| c.vars().any(|u| order.contains(&u)))
                .count()
        };
        let (i, _) = rest
            .iter()
            .enumerate()
            .max_by_key(|&(i, &v)| (score(v), std::cmp::Reverse(i)))
            .expect("nonempty");
        order.push(rest.remove(i));
    }
    let position: BTreeMap<Var, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut complete_at = vec![Vec::new(); order.len()];
    for c in f.clauses() {
        if let Some(last) = c.vars().map(|v| position[&v]).max() {
            complete_at[last].push(c);
        }
    }
    let profiles = f.lits().into_iter().map(|l| (l, profile(f, l))).collect();
    let mut e = Enumerator {
        f,
        clause_set: f.clauses().iter().collect(),
        order,
        complete_at,
        profiles,
        image: BTreeMap::new(),
        used: HashSet::new(),
        found: Vec::new(),
    };
    e.go(0);
    PermGroup::from_elements(f.num_vars(), e.found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let f = Formula::from_dimacs_clauses(3, &[&[1, 3], &[2, 3]]);
        assert_eq!(brute_force_automorphisms(&f, 7).unwrap().order(), 2u32.into());
        let unit = Formula::from_dimacs_clauses(1, &[&[1]]);
        assert!(brute_force_automorphisms(&unit, 7).unwrap().is_trivial());
    }

    #[test]
    fn disjoint_binary_clauses() {
        // (1∨2)(3∨4)(5∨6): swap inside each clause, permute the clauses
        let f = Formula::from_dimacs_clauses(6, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(brute_force_automorphisms(&f, 7).unwrap().order(), 48u32.into());
    }

    #[test]
    fn too_large() {
        let f = Formula::from_dimacs_clauses(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]);
        assert!(matches!(
            brute_force_automorphisms(&f, 7),
            Err(Error::OracleTooLarge { vars: 8, max: 7 })
        ));
    }
}
