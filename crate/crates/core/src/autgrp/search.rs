use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{refine_colors, ColoredGraph};

/// Search budget; `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchLimits {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchLimits {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub generators_found: u64,
    pub refinements: u64,
}

/// Vertex permutations (`v` to `perm[v]`) generating the automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphisms {
    pub generators: Vec<Vec<u32>>,
    pub stats: SearchStats,
}

struct Node {
    colors: Vec<u32>,
    sizes: Vec<usize>,
}

impl Node {
    fn new(colors: Vec<u32>) -> Self {
        let k = colors.iter().max().map_or(0, |&c| c as usize + 1);
        let mut sizes = vec![0; k];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        Node { colors, sizes }
    }

    /// Smallest non-singleton class, lowest color first.
    fn target(&self) -> Option<u32> {
        (0..self.sizes.len())
            .filter(|&c| self.sizes[c] > 1)
            .min_by_key(|&c| (self.sizes[c], c))
            .map(|c| c as u32)
    }

    fn members(&self, color: u32) -> Vec<u32> {
        (0..self.colors.len() as u32)
            .filter(|&v| self.colors[v as usize] == color)
            .collect()
    }
}

struct Aborted;

struct Search<'a> {
    graph: &'a ColoredGraph,
    limits: SearchLimits,
    start: Instant,
    stats: SearchStats,
    generators: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<(), Aborted> {
        self.stats.nodes_explored += 1;
        let over_nodes = self.limits.max_nodes.is_some_and(|m| self.stats.nodes_explored > m);
        let over_time = self.limits.max_time.is_some_and(|t| self.start.elapsed() > t);
        if over_nodes || over_time {
            Err(Aborted)
        } else {
            Ok(())
        }
    }

    /// Gives `v` its own color right after its old class, then refines.
    fn individualize(&mut self, colors: &[u32], v: u32) -> Result<Node, Aborted> {
        self.tick()?;
        let split: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| 2 * c + u32::from(u as u32 == v))
            .collect();
        self.stats.refinements += 1;
        Ok(Node::new(refine_colors(self.graph.adjacency(), &split)))
    }

    fn orbits(&self) -> Vec<u32> {
        let n = self.graph.vertex_count();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for g in &self.generators {
            for (v, &w) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, v as u32), find(&mut parent, w));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        (0..n as u32).map(|v| find(&mut parent, v)).collect()
    }

    /// Looks below `node` (at `depth`) for a leaf that matches the first
    /// leaf `leaf` through an automorphism.
    fn find_match(
        &mut self,
        node: &Node,
        depth: usize,
        path: &[(Node, u32)],
        leaf: &[u32],
    ) -> Result<Option<Vec<u32>>, Aborted> {
        if depth == path.len() {
            // both colorings are discrete: match vertices by color
            let mut by_color = vec![0u32; node.colors.len()];
            for (v, &c) in node.colors.iter().enumerate() {
                by_color[c as usize] = v as u32;
            }
            let perm: Vec<u32> = leaf.iter().map(|&c| by_color[c as usize]).collect();
            return Ok(self.graph.is_automorphism(&perm).then_some(perm));
        }
        let target = path[depth].1;
        for x in node.members(target) {
            let child = self.individualize(&node.colors, x)?;
            let expected = path.get(depth + 1).map_or(leaf_sizes(leaf), |n| n.0.sizes.clone());
            if child.sizes != expected {
                continue;
            }
            if let Some(p) = self.find_match(&child, depth + 1, path, leaf)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    fn run(&mut self) -> Result<(), Aborted> {
        self.tick()?;
        self.stats.refinements += 1;
        let root = Node::new(refine_colors(self.graph.adjacency(), self.graph.colors()));
        // first path: (node, target color) pairs, and the chosen vertices
        let mut path: Vec<(Node, u32)> = Vec::new();
        let mut chosen: Vec<u32> = Vec::new();
        let mut node = root;
        while let Some(t) = node.target() {
            let v = node.members(t)[0];
            let child = self.individualize(&node.colors, v)?;
            path.push((node, t));
            chosen.push(v);
            node = child;
        }
        let leaf = node.colors;

        for level in (0..path.len()).rev() {
            let (ref here, target) = path[level];
            let mut explored = vec![chosen[level]];
            for w in here.members(target) {
                let orbit = self.orbits();
                if explored.iter().any(|&e| orbit[e as usize] == orbit[w as usize]) {
                    continue;
                }
                explored.push(w);
                let child = self.individualize(&here.colors, w)?;
                let expected = path
                    .get(level + 1)
                    .map_or_else(|| leaf_sizes(&leaf), |n| n.0.sizes.clone());
                if child.sizes != expected {
                    continue;
                }
                if let Some(p) = self.find_match(&child, level + 1, &path, &leaf)? {
                    self.generators.push(p);
                    self.stats.generators_found += 1;
                }
            }
        }
        Ok(())
    }
}

fn leaf_sizes(leaf: &[u32]) -> Vec<usize> {
    vec![1; leaf.len()]
}

/// Generators of the full automorphism group of `g` (colors and edges
/// preserved). The search individualizes vertices of the smallest
/// non-singleton class, refines, and prunes children that lie in a known
/// orbit. Running out of budget is an error that carries the generators
/// found so far.
pub fn find_automorphisms(g: &ColoredGraph, limits: &SearchLimits) -> Result<Automorphisms> {
    let mut search = Search {
        graph: g,
        limits: *limits,
        start: Instant::now(),
        stats: SearchStats::default(),
        generators: Vec::new(),
    };
    match search.run() {
        Ok(()) => Ok(Automorphisms {
            generators: search.generators,
            stats: search.stats,
        }),
        Err(Aborted) => Err(Error::GraphBudgetExhausted {
            nodes: search.stats.nodes_explored,
            partial: search.generators,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{Lit, Var};
    use crate::symmetry::{LitPermutation, PermGroup};

    /// Group order of vertex permutations, acting on positive literals.
    fn order(n: usize, gens: &[Vec<u32>]) -> num_bigint::BigUint {
        let lifted: Vec<LitPermutation> = gens
            .iter()
            .map(|p| {
                let map = (0..n).map(|v| (Var::new(v as u32 + 1), Lit::new(p[v] as i32 + 1)));
                LitPermutation::from_var_map(n as u32, map).unwrap()
            })
            .collect();
        PermGroup::new(n as u32, &lifted).unwrap().order()
    }

    fn graph(n: usize, edges: &[(u32, u32)]) -> ColoredGraph {
        ColoredGraph::new(vec![0; n], edges.iter().copied()).unwrap()
    }

    #[test]
    fn discrete_graph_has_one_node() {
        let g = graph(3, &[(0, 1)]).recolored(&[0, 1, 2]);
        let a = find_automorphisms(&g, &SearchLimits::default()).unwrap();
        assert!(a.generators.is_empty());
        assert_eq!(a.stats.nodes_explored, 1);
    }

    #[test]
    fn four_cycle_is_dihedral() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let a = find_automorphisms(&g, &SearchLimits::default()).unwrap();
        assert_eq!(order(4, &a.generators), 8u32.into());
        assert!(a.generators.iter().all(|p| g.is_automorphism(p)));
    }

    #[test]
    fn petersen_graph() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = graph(10, &edges);
        let a = find_automorphisms(&g, &SearchLimits::default()).unwrap();
        assert_eq!(order(10, &a.generators), 120u32.into());
    }

    #[test]
    fn disjoint_triangles() {
        // S3 wr S2
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let a = find_automorphisms(&g, &SearchLimits::default()).unwrap();
        assert_eq!(order(6, &a.generators), 72u32.into());
    }

    #[test]
    fn budget_is_reported() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let err = find_automorphisms(&g, &SearchLimits::nodes(3)).unwrap_err();
        assert!(matches!(err, Error::GraphBudgetExhausted { nodes: 4, .. }));
    }

    #[test]
    fn deterministic() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let a = find_automorphisms(&g, &SearchLimits::default()).unwrap();
        let b = find_automorphisms(&g, &SearchLimits::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(order(5, &a.generators), 10u32.into());
    }
}
