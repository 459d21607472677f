use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cnf::{Clause, Formula, Lit};

/// Mutable clause set with an occurrence index, used while a rule runs.
#[derive(Clone, Debug)]
pub(crate) struct ClauseDb {
    num_vars: u32,
    clauses: BTreeSet<Clause>,
    occ: HashMap<Lit, BTreeSet<Clause>>,
}

impl ClauseDb {
    pub fn new(f: &Formula) -> Self {
        let mut db = ClauseDb {
            num_vars: f.num_vars(),
            clauses: BTreeSet::new(),
            occ: HashMap::new(),
        };
        for c in f.clauses() {
            db.insert(c.clone());
        }
        db
    }

    pub fn to_formula(&self) -> Formula {
        Formula::new(self.num_vars, self.clauses.iter().cloned())
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> impl Iterator<Item = &Clause> + '_ {
        self.clauses.iter()
    }

    pub fn contains(&self, c: &Clause) -> bool {
        self.clauses.contains(c)
    }

    pub fn has_empty(&self) -> bool {
        self.clauses.contains(&Clause::empty())
    }

    /// Tautologies are ignored.
    pub fn insert(&mut self, c: Clause) -> bool {
        if c.is_tautology() || self.clauses.contains(&c) {
            return false;
        }
        for &l in c.lits() {
            self.occ.entry(l).or_default().insert(c.clone());
        }
        self.clauses.insert(c)
    }

    pub fn remove(&mut self, c: &Clause) -> bool {
        if !self.clauses.remove(c) {
            return false;
        }
        for l in c.lits() {
            if let Some(set) = self.occ.get_mut(l) {
                set.remove(c);
                if set.is_empty() {
                    self.occ.remove(l);
                }
            }
        }
        true
    }

    pub fn occ(&self, l: Lit) -> impl Iterator<Item = &Clause> + '_ {
        self.occ.get(&l).into_iter().flatten()
    }

    pub fn occurring_lits(&self) -> BTreeSet<Lit> {
        self.occ.keys().copied().collect()
    }

    /// `F[l ↦ ⊤]`.
    pub fn assign(&mut self, l: Lit) {
        let satisfied: Vec<Clause> = self.occ(l).cloned().collect();
        for c in &satisfied {
            self.remove(c);
        }
        let shortened: Vec<Clause> = self.occ(!l).cloned().collect();
        for c in shortened {
            self.remove(&c);
            self.insert(c.without(!l));
        }
    }
}

/// How an exhaustive rule picks the next applicable step. Confluent rules
/// reach the same result under every order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Order {
    /// First candidate in canonical order.
    #[default]
    Canonical,
    /// Uniformly random candidate from a seeded stream.
    Shuffled(u64),
    /// Candidates whose key literal appears earliest in the list win;
    /// unlisted literals follow in canonical order.
    Prefer(Vec<Lit>),
}

pub(crate) struct Picker {
    order: Order,
    rng: Option<ChaCha8Rng>,
}

impl Picker {
    pub fn new(order: &Order) -> Self {
        let rng = match order {
            Order::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
            _ => None,
        };
        Picker {
            order: order.clone(),
            rng,
        }
    }

    /// Removes and returns the chosen candidate; `key` gives the literal the
    /// preference list ranks.
    pub fn pick<T>(&mut self, mut cands: Vec<T>, key: impl Fn(&T) -> Lit) -> Option<T> {
        if cands.is_empty() {
            return None;
        }
        let idx = match &self.order {
            Order::Canonical => 0,
            Order::Shuffled(_) => {
                use rand::Rng;
                self.rng.as_mut().expect("seeded").gen_range(0..cands.len())
            }
            Order::Prefer(list) => {
                let rank = |l: Lit| list.iter().position(|&p| p == l).unwrap_or(usize::MAX);
                (0..cands.len())
                    .min_by_key(|&i| (rank(key(&cands[i])), i))
                    .expect("nonempty")
            }
        };
        Some(cands.swap_remove(idx))
    }

    /// Reorders a whole work list.
    pub fn arrange<T>(&mut self, items: &mut [T]) {
        if let Some(rng) = self.rng.as_mut() {
            items.shuffle(rng);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assign_matches_simplify() {
        let f = Formula::from_dimacs_clauses(4, &[&[1], &[-1, 2, 4], &[3, 4], &[1, 3]]);
        let mut db = ClauseDb::new(&f);
        db.assign(Lit::new(1));
        let expect = crate::cnf::simplify(&f, &crate::cnf::Assignment::from_lits([Lit::new(1)]));
        assert_eq!(db.to_formula(), expect);
        assert_eq!(db.occ(Lit::new(1)).count(), 0);
        assert_eq!(db.occ(Lit::new(4)).count(), 2);
    }

    #[test]
    fn prefer_order_ranks_listed_literals() {
        let mut p = Picker::new(&Order::Prefer(vec![Lit::new(-3), Lit::new(2)]));
        let cands = vec![Lit::new(1), Lit::new(2), Lit::new(-3)];
        assert_eq!(p.pick(cands, |&l| l), Some(Lit::new(-3)));
        assert_eq!(p.pick(vec![Lit::new(1), Lit::new(4)], |&l| l), Some(Lit::new(1)));
    }
}
