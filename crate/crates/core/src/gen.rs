//! Benchmark formula generators.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{Clause, Formula, Lit, Var};

/// `pigeons` pigeons into `holes` holes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhpSpec {
    pub pigeons: u32,
    pub holes: u32,
}

impl PhpSpec {
    pub fn new(pigeons: u32, holes: u32) -> Self {
        assert!(pigeons >= 1 && holes >= 1, "php needs at least one pigeon and one hole");
        PhpSpec { pigeons, holes }
    }

    /// Variable "pigeon `i` sits in hole `j`", both 0-based.
    pub fn var(&self, i: u32, j: u32) -> Var {
        Var::new(j + i * self.holes + 1)
    }
}

/// Pigeonhole formula: every pigeon sits somewhere, no two pigeons share a
/// hole (pairwise encoding, no auxiliary variables).
pub fn gen_php(spec: PhpSpec) -> Formula {
    let PhpSpec { pigeons, holes } = spec;
    let mut clauses: Vec<Clause> = (0..pigeons)
        .map(|i| Clause::new((0..holes).map(|j| spec.var(i, j).pos())))
        .collect();
    for j in 0..holes {
        for i in 0..pigeons {
            for k in i + 1..pigeons {
                clauses.push(Clause::new([spec.var(i, j).neg(), spec.var(k, j).neg()]));
            }
        }
    }
    Formula::new(pigeons * holes, clauses)
}

/// Seeded random CNF: `clauses` clauses, each over `width` distinct
/// variables with random signs, canonicalized (duplicates merge, so the
/// result may have fewer clauses).
pub fn gen_random(vars: u32, clauses: usize, width: usize, seed: u64) -> Formula {
    assert!(width <= vars as usize, "clause width exceeds the variable count");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cs: Vec<Clause> = (0..clauses)
        .map(|_| {
            let picked = sample(&mut rng, vars as usize, width);
            Clause::new(
                picked
                    .into_iter()
                    .map(|v| Var::new(v as u32 + 1).lit(rng.gen_bool(0.5))),
            )
        })
        .collect();
    Formula::new(vars, cs)
}

/// Like [`gen_random`] with mixed clause widths in `1..=max_width`.
pub fn gen_random_mixed(vars: u32, clauses: usize, max_width: usize, seed: u64) -> Formula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_width = max_width.min(vars as usize).max(1);
    let cs: Vec<Clause> = (0..clauses)
        .map(|_| {
            let width = rng.gen_range(1..=max_width);
            let picked = sample(&mut rng, vars as usize, width);
            Clause::new(
                picked
                    .into_iter()
                    .map(|v| Lit::new(v as i32 + 1))
                    .map(|l| if rng.gen_bool(0.5) { l } else { !l }),
            )
        })
        .collect();
    Formula::new(vars, cs)
}
