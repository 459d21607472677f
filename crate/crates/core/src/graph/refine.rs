use super::ColoredGraph;

/// Result of color refinement: an equitable coloring with dense colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StablePartition {
    pub colors: Vec<u32>,
    pub class_sizes: Vec<usize>,
}

impl StablePartition {
    pub fn from_colors(colors: Vec<u32>) -> Self {
        let k = colors.iter().max().map_or(0, |&c| c as usize + 1);
        let mut class_sizes = vec![0; k];
        for &c in &colors {
            class_sizes[c as usize] += 1;
        }
        StablePartition { colors, class_sizes }
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn is_singleton(&self, v: u32) -> bool {
        self.class_sizes[self.colors[v as usize] as usize] == 1
    }

    pub fn is_discrete(&self) -> bool {
        self.class_sizes.iter().all(|&s| s == 1)
    }

    /// Vertices of each class, by color.
    pub fn cells(&self) -> Vec<Vec<u32>> {
        let mut cells = vec![Vec::new(); self.class_count()];
        for (v, &c) in self.colors.iter().enumerate() {
            cells[c as usize].push(v as u32);
        }
        cells
    }

    /// Same-colored vertices see the same multiset of neighbour colors.
    pub fn is_equitable(&self, g: &ColoredGraph) -> bool {
        let sig = |v: usize| {
            let mut s: Vec<u32> = g.adjacency()[v].iter().map(|&u| self.colors[u as usize]).collect();
            s.sort_unstable();
            s
        };
        let mut first: Vec<Option<Vec<u32>>> = vec![None; self.class_count()];
        (0..self.colors.len()).all(|v| {
            let s = sig(v);
            match &first[self.colors[v] as usize] {
                Some(f) => *f == s,
                None => {
                    first[self.colors[v] as usize] = Some(s);
                    true
                }
            }
        })
    }
}

/// Refines `colors` on `adjacency` to the coarsest equitable coloring. New
/// colors are ranks of `(old color, sorted neighbour colors)`, so the result
/// does not depend on vertex names.
pub fn refine_colors(adjacency: &[Vec<u32>], colors: &[u32]) -> Vec<u32> {
    let n = colors.len();
    let mut current = super::densify(colors);
    let mut classes = current.iter().max().map_or(0, |&c| c as usize + 1);
    let mut order: Vec<usize> = (0..n).collect();
    let mut sigs: Vec<Vec<u32>> = vec![Vec::new(); n];
    loop {
        for v in 0..n {
            let s = &mut sigs[v];
            s.clear();
            s.extend(adjacency[v].iter().map(|&u| current[u as usize]));
            s.sort_unstable();
        }
        order.sort_by(|&a, &b| current[a].cmp(&current[b]).then_with(|| sigs[a].cmp(&sigs[b])));
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 {
                let (a, b) = (order[i - 1], order[i]);
                if current[a] != current[b] || sigs[a] != sigs[b] {
                    rank += 1;
                }
            }
            next[order[i]] = rank;
        }
        let count = if n == 0 { 0 } else { rank as usize + 1 };
        current = next;
        if count == classes {
            return current;
        }
        classes = count;
    }
}

/// 1-dimensional Weisfeiler-Leman on the graph's own colors.
pub fn color_refinement(g: &ColoredGraph) -> StablePartition {
    StablePartition::from_colors(refine_colors(g.adjacency(), g.colors()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(u32, u32)]) -> ColoredGraph {
        ColoredGraph::new(vec![0; n], edges.iter().copied()).unwrap()
    }

    #[test]
    fn regular_graph_stays_uniform() {
        let p = color_refinement(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));
        assert_eq!(p.class_sizes, vec![4]);
    }

    #[test]
    fn path_splits_by_degree() {
        let p = color_refinement(&graph(3, &[(0, 1), (1, 2)]));
        assert_eq!(p.colors[0], p.colors[2]);
        assert_ne!(p.colors[0], p.colors[1]);
        assert_eq!(p.class_count(), 2);
        assert!(p.is_equitable(&graph(3, &[(0, 1), (1, 2)])));
    }

    #[test]
    fn longer_path_needs_several_rounds() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let p = color_refinement(&g);
        assert_eq!(p.class_count(), 3);
        assert!(p.is_equitable(&g));
    }
}
