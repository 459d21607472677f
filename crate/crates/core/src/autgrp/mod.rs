//! Exact automorphism groups: individualization-refinement search on
//! colored graphs, its lift to CNF formulas, and a brute-force oracle.

mod brute;
mod search;

use std::collections::BTreeMap;

use crate::cnf::{Formula, Lit, Var};
use crate::error::{Error, Result};
use crate::graph::{build_model_graph, literal_vertex, ColoredGraph};
use crate::symmetry::{schreier_sims, LitPermutation, PermGroup};

pub use brute::{brute_force_automorphisms, BRUTE_FORCE_DEFAULT_VARS};
pub use search::{find_automorphisms, Automorphisms, SearchLimits, SearchStats};

/// Model graph of `f` in which the literals of non-occurring variables get
/// private colors, so automorphisms fix them.
pub fn formula_graph(f: &Formula) -> ColoredGraph {
    let g = build_model_graph(f);
    let n = f.num_vars();
    let mut colors = g.colors().to_vec();
    let mut next = 2;
    for v in 1..=n {
        let var = Var::new(v);
        if !f.contains_var(var) {
            for l in [var.pos(), var.neg()] {
                colors[literal_vertex(n, l) as usize] = next;
                next += 1;
            }
        }
    }
    g.recolored(&colors)
}

/// Reads a model-graph automorphism as a literal permutation.
fn project(num_vars: u32, perm: &[u32]) -> Result<LitPermutation> {
    let lit_of = |x: u32| -> Result<Lit> {
        if x >= 2 * num_vars {
            return Err(Error::contract(format!("literal vertex mapped to clause vertex {x}")));
        }
        Ok(if x < num_vars {
            Var::new(x + 1).pos()
        } else {
            Var::new(x - num_vars + 1).neg()
        })
    };
    let map = (0..2 * num_vars)
        .map(|x| Ok((lit_of(x)?, lit_of(perm[x as usize])?)))
        .collect::<Result<BTreeMap<Lit, Lit>>>()?;
    LitPermutation::from_lit_map(num_vars, map)
}

/// The syntactic automorphism group of `f`, on the variables `1..=num_vars`.
pub fn formula_automorphisms(f: &Formula, limits: &SearchLimits) -> Result<PermGroup> {
    let n = f.num_vars();
    let g = formula_graph(f);
    match find_automorphisms(&g, limits) {
        Ok(found) => {
            let gens = found
                .generators
                .iter()
                .map(|p| project(n, p))
                .collect::<Result<Vec<_>>>()?;
            schreier_sims(n, &gens, None)
        }
        Err(Error::GraphBudgetExhausted { nodes, partial }) => Err(Error::BudgetExhausted {
            nodes,
            partial: partial.iter().map(|p| project(n, p)).collect::<Result<_>>()?,
        }),
        Err(e) => Err(e),
    }
}
