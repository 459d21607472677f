//! Colored model graphs of CNF formulas, color refinement and the
//! asymmetry certificates derived from it.

mod refine;
mod text;

use std::collections::BTreeSet;

use crate::cnf::{Formula, Var};
use crate::error::{Error, Result};

pub use refine::{color_refinement, refine_colors, StablePartition};
pub use text::{export_graph, parse_graph};

/// What a vertex of a model graph stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexOrigin {
    PosLiteral(Var),
    NegLiteral(Var),
    /// Index into the formula's clause list.
    Clause(usize),
    /// Vertex of a graph that was not built from a formula.
    Plain,
}

/// Undirected vertex-colored graph with dense colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    adjacency: Vec<Vec<u32>>,
    colors: Vec<u32>,
    origin: Vec<VertexOrigin>,
}

/// Rank-compresses `colors` to `0..k` keeping their relative order.
pub(crate) fn densify(colors: &[u32]) -> Vec<u32> {
    let distinct: BTreeSet<u32> = colors.iter().copied().collect();
    let rank: std::collections::HashMap<u32, u32> =
        distinct.into_iter().enumerate().map(|(i, c)| (c, i as u32)).collect();
    colors.iter().map(|c| rank[c]).collect()
}

impl ColoredGraph {
    /// Builds a graph from an edge list; colors are made dense. Fails on
    /// self-loops or out-of-range endpoints. Parallel edges collapse.
    pub fn new(colors: Vec<u32>, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let n = colors.len();
        let origin = vec![VertexOrigin::Plain; n];
        Self::with_origin(colors, edges, origin)
    }

    fn with_origin(
        colors: Vec<u32>,
        edges: impl IntoIterator<Item = (u32, u32)>,
        origin: Vec<VertexOrigin>,
    ) -> Result<Self> {
        let n = colors.len();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::contract(format!("edge {u}-{v} outside 0..{n}")));
            }
            if u == v {
                return Err(Error::contract(format!("self-loop at {u}")));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for a in &mut adjacency {
            a.sort_unstable();
            a.dedup();
        }
        Ok(ColoredGraph {
            adjacency,
            colors: densify(&colors),
            origin,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.colors.iter().max().map_or(0, |&c| c as usize + 1)
    }

    pub fn origin(&self, v: u32) -> VertexOrigin {
        self.origin[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u as u32).map(move |&v| (u as u32, v)))
    }

    /// Same graph with new colors (made dense).
    pub fn recolored(&self, colors: &[u32]) -> ColoredGraph {
        assert_eq!(colors.len(), self.vertex_count());
        ColoredGraph {
            adjacency: self.adjacency.clone(),
            colors: densify(colors),
            origin: self.origin.clone(),
        }
    }

    /// Whether `perm` (vertex `v` to `perm[v]`) preserves colors and edges.
    pub fn is_automorphism(&self, perm: &[u32]) -> bool {
        perm.len() == self.vertex_count()
            && (0..self.vertex_count()).all(|v| self.colors[v] == self.colors[perm[v] as usize])
            && self
                .edges()
                .all(|(u, v)| self.has_edge(perm[u as usize], perm[v as usize]))
    }
}

/// Vertex of a literal: positive literals first, then negative ones.
pub fn literal_vertex(num_vars: u32, l: crate::cnf::Lit) -> u32 {
    let v = l.var().index() - 1;
    if l.is_positive() {
        v
    } else {
        num_vars + v
    }
}

/// The model graph: one vertex per literal of the universe (color 0), the
/// two literals of a variable joined by an edge, and one vertex per clause
/// (color 1) joined to its literals.
pub fn build_model_graph(f: &Formula) -> ColoredGraph {
    let n = f.num_vars();
    let lit_vertices = 2 * n as usize;
    let total = lit_vertices + f.len();
    let mut colors = vec![0; lit_vertices];
    colors.resize(total, 1);
    let mut origin: Vec<VertexOrigin> = (1..=n).map(|v| VertexOrigin::PosLiteral(Var::new(v))).collect();
    origin.extend((1..=n).map(|v| VertexOrigin::NegLiteral(Var::new(v))));
    origin.extend((0..f.len()).map(VertexOrigin::Clause));

    let mut edges: Vec<(u32, u32)> = (0..n).map(|v| (v, n + v)).collect();
    for (i, c) in f.clauses().iter().enumerate() {
        let cv = (lit_vertices + i) as u32;
        edges.extend(c.lits().iter().map(|&l| (cv, literal_vertex(n, l))));
    }
    ColoredGraph::with_origin(colors, edges, origin).expect("model graph is well formed")
}

/// Occurring variables whose two literal vertices are alone in their color
/// class. Every automorphism of the model graph fixes them.
pub fn asymmetric_variables(f: &Formula, p: &StablePartition) -> BTreeSet<Var> {
    let n = f.num_vars();
    f.vars()
        .into_iter()
        .filter(|&v| p.is_singleton(literal_vertex(n, v.pos())) && p.is_singleton(literal_vertex(n, v.neg())))
        .collect()
}

/// Deletes the vertices in singleton classes of `p`. Survivors keep their
/// relative order and their refined colors, made dense.
pub fn prune_discrete(g: &ColoredGraph, p: &StablePartition) -> ColoredGraph {
    let keep: Vec<u32> = (0..g.vertex_count() as u32).filter(|&v| !p.is_singleton(v)).collect();
    let mut new_id = vec![u32::MAX; g.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v as usize] = i as u32;
    }
    let colors = keep.iter().map(|&v| p.colors[v as usize]).collect();
    let origin = keep.iter().map(|&v| g.origin(v)).collect();
    let edges: Vec<(u32, u32)> = g
        .edges()
        .filter(|&(u, v)| new_id[u as usize] != u32::MAX && new_id[v as usize] != u32::MAX)
        .map(|(u, v)| (new_id[u as usize], new_id[v as usize]))
        .collect();
    ColoredGraph::with_origin(colors, edges, origin).expect("pruned graph is well formed")
}
