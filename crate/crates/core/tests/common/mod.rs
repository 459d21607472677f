//! Fixtures shared by the integration suites.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symprep::autgrp::{formula_automorphisms, SearchLimits};
use symprep::gen::gen_random_mixed;
use symprep::{Formula, LitPermutation, PermGroup, Var};

pub fn fm(n: u32, cs: &[&[i32]]) -> Formula {
    Formula::from_dimacs_clauses(n, cs)
}

pub fn aut(f: &Formula) -> PermGroup {
    formula_automorphisms(f, &SearchLimits::default()).expect("unbounded search")
}

/// (x)(x̄∨a∨c)(b∨c) with x=1, a=2, b=3, c=4.
pub fn intro() -> Formula {
    fm(4, &[&[1], &[-1, 2, 4], &[3, 4]])
}

pub mod ssr {
    //! Two copies of (a∨b∨x̄∨ȳ)(a∨x)(b∨x̄∨y).
    //! a1=1 b1=2 x1=3 y1=4, a2=5 b2=6 x2=7 y2=8.
    use super::*;

    pub fn formula() -> Formula {
        fm(
            8,
            &[
                &[1, 2, -3, -4],
                &[1, 3],
                &[2, -3, 4],
                &[5, 6, -7, -8],
                &[5, 7],
                &[6, -7, 8],
            ],
        )
    }

    /// After strengthening x̄1 in the first copy and ȳ2 in the second.
    pub fn displayed() -> Formula {
        fm(
            8,
            &[&[1, 2, -4], &[1, 3], &[2, -3, 4], &[5, 6, -7], &[5, 7], &[6, -7, 8]],
        )
    }

    /// Naive self-subsumption continues on the second copy.
    pub fn fixpoint() -> Formula {
        fm(8, &[&[1, 2, -4], &[1, 3], &[2, -3, 4], &[5, 6], &[5, 7], &[6, -7, 8]])
    }

    /// Exchanges the two copies.
    pub fn copy_swap() -> LitPermutation {
        LitPermutation::from_var_map(
            8,
            (1..=4).flat_map(|v| {
                [
                    (Var::new(v), Var::new(v + 4).pos()),
                    (Var::new(v + 4), Var::new(v).pos()),
                ]
            }),
        )
        .unwrap()
    }
}

pub mod learned {
    //! (x∨a)(x̄∨a)(x∨b)(x̄∨b) with x=1, a=2, b=3.
    use super::*;

    pub fn formula() -> Formula {
        fm(3, &[&[1, 2], &[-1, 2], &[1, 3], &[-1, 3]])
    }
}

pub mod pure_sl {
    //! x=1 y=2 z=3 a=4 b=5.
    use super::*;

    pub fn formula() -> Formula {
        // (y∨b) is listed twice; as a set it appears once
        fm(
            5,
            &[&[1, 3], &[-2, 3], &[-2, -3], &[2, 5], &[2, 4], &[2, 5], &[-2, -4, -5]],
        )
    }

    pub fn reduced() -> Formula {
        fm(5, &[&[-2, 3], &[-2, -3], &[2, 4], &[2, 5], &[-2, -4, -5]])
    }
}

pub mod bce_sl {
    //! x=1 y=2 z=3 a=4 b=5 c=6.
    use super::*;

    pub fn formula() -> Formula {
        fm(
            6,
            &[&[1, 3], &[-2, 3], &[-2, -3], &[2, 4], &[2, 5], &[-4, -5, -6], &[6, -2]],
        )
    }

    pub fn reduced() -> Formula {
        fm(6, &[&[-2, 3], &[-2, -3], &[2, 4], &[2, 5], &[-4, -5, -6], &[6, -2]])
    }
}

pub mod bve {
    //! Two gadgets around x and y tied by the unit (A).
    //! x=1 A=2 z1=3 y=4 a1=5 b1=6 c1=7 d1=8 a2=9 b2=10 c2=11 d2=12 z2=13.
    use super::*;

    pub const X: u32 = 1;
    pub const A: u32 = 2;
    pub const Z1: u32 = 3;
    pub const Y: u32 = 4;

    fn gadget(hub: i32, a: i32, b: i32, c: i32, d: i32, z: i32) -> Vec<Vec<i32>> {
        vec![
            vec![hub, a],
            vec![hub, b],
            vec![-hub, c],
            vec![-hub, d],
            vec![hub, A as i32],
            vec![-hub, A as i32],
            vec![a, A as i32],
            vec![b, A as i32],
            vec![c, A as i32],
            vec![d, A as i32],
            vec![a, z],
            vec![b, z],
            vec![c, -z],
            vec![d, -z],
            vec![-a, -b, -c],
            vec![-b, -c, -d],
            vec![-a, -c, -d],
        ]
    }

    fn build(parts: Vec<Vec<i32>>) -> Formula {
        let refs: Vec<&[i32]> = parts.iter().map(Vec::as_slice).collect();
        fm(13, &refs)
    }

    pub fn formula() -> Formula {
        let mut cs = gadget(1, 5, 6, 7, 8, 3);
        cs.extend(gadget(4, 9, 10, 11, 12, 13));
        cs.push(vec![A as i32]);
        build(cs)
    }

    /// State after eliminating x, A and z1.
    pub fn after_x_a_z1() -> Formula {
        build(vec![
            vec![5, 7],
            vec![5, 8],
            vec![6, 7],
            vec![6, 8],
            vec![-5, -6, -7],
            vec![-6, -7, -8],
            vec![-5, -7, -8],
            vec![4, 9],
            vec![4, 10],
            vec![-4, 11],
            vec![-4, 12],
            vec![9, 13],
            vec![10, 13],
            vec![11, -13],
            vec![12, -13],
            vec![-9, -10, -11],
            vec![-10, -11, -12],
            vec![-9, -11, -12],
        ])
    }
}

/// Random formula with at most `max_vars` variables and `max_clauses`
/// clauses.
pub fn random_formula(rng: &mut ChaCha8Rng, max_vars: u32, max_clauses: usize) -> Formula {
    let vars = rng.gen_range(1..=max_vars);
    let clauses = rng.gen_range(1..=max_clauses);
    gen_random_mixed(vars, clauses, 3, rng.gen())
}

/// Random involution on the variables with random polarity flips; pairs
/// of variables are swapped, fixed variables may be negated.
pub fn random_involution(n: u32, rng: &mut ChaCha8Rng) -> LitPermutation {
    let mut vars: Vec<u32> = (1..=n).collect();
    vars.shuffle(rng);
    let mut map = Vec::new();
    let mut i = 0;
    while i < vars.len() {
        if i + 1 < vars.len() && rng.gen_bool(0.6) {
            let (a, b) = (Var::new(vars[i]), Var::new(vars[i + 1]));
            let s = rng.gen_bool(0.5);
            map.push((a, b.lit(s)));
            map.push((b, a.lit(s)));
            i += 2;
        } else {
            let a = Var::new(vars[i]);
            map.push((a, a.lit(!rng.gen_bool(0.3))));
            i += 1;
        }
    }
    LitPermutation::from_var_map(n, map).unwrap()
}

/// F ∪ π(F) for a random involution π, so π is a symmetry.
pub fn symmetrized(rng: &mut ChaCha8Rng, max_vars: u32, max_clauses: usize) -> Formula {
    let base = random_formula(rng, max_vars, max_clauses / 2);
    let pi = random_involution(base.num_vars(), rng);
    let image = pi.apply_formula(&base);
    Formula::new(base.num_vars(), base.clauses().iter().chain(image.clauses()).cloned())
}

/// Seeded corpus mixing plain random and symmetrized formulas.
pub fn corpus(seed: u64, count: usize, max_vars: u32, max_clauses: usize) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                random_formula(&mut rng, max_vars, max_clauses)
            } else {
                symmetrized(&mut rng, max_vars, max_clauses)
            }
        })
        .collect()
}
