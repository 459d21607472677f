//! Permutation groups on literals, represented by a base and strong
//! generating set (deterministic Schreier-Sims).

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::One;

use crate::cnf::{Lit, Var};
use crate::error::{Error, Result};

use super::LitPermutation;

type Perm = Vec<u32>;

fn is_identity(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

/// `a` then `b`.
fn mul(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn inv(a: &[u32]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    orbit: Vec<u32>,
    /// orbit point -> (u, u^-1) with u(point) = orbit point; the base point
    /// itself is implicit (identity).
    transversal: HashMap<u32, (Perm, Perm)>,
}

impl Level {
    fn representative(&self, p: u32) -> Option<Option<&(Perm, Perm)>> {
        if p == self.point {
            Some(None)
        } else {
            self.transversal.get(&p).map(Some)
        }
    }
}

/// A group of negation-equivariant literal permutations on `1..=num_vars`.
///
/// The stabilizer chain runs over every literal moved by some generator:
/// the preferred base first, then the rest in ascending literal order.
/// Levels whose base point is fixed by the stabilizer have trivial orbits,
/// so `G^(i)` is always the pointwise stabilizer of the first `i` base
/// points.
#[derive(Clone, Debug)]
pub struct PermGroup {
    num_vars: u32,
    generators: Vec<LitPermutation>,
    base: Vec<u32>,
    /// Strong generators with the index of the first base point they move.
    strong: Vec<(Perm, usize)>,
    levels: Vec<Level>,
}

/// Builds a base and strong generating set. With `preferred_base`, base
/// points are taken from it first, in order.
pub fn schreier_sims(num_vars: u32, gens: &[LitPermutation], preferred_base: Option<&[Lit]>) -> Result<PermGroup> {
    if let Some(g) = gens.iter().find(|g| g.num_vars() != num_vars) {
        return Err(Error::DomainMismatch(format!(
            "generator on {} variables in a group on {num_vars}",
            g.num_vars()
        )));
    }
    let degree = 2 * num_vars as usize;
    let points: Vec<Perm> = gens
        .iter()
        .map(LitPermutation::to_points)
        .filter(|p| !is_identity(p))
        .collect();

    let mut moved = vec![false; degree];
    for p in &points {
        for (i, &x) in p.iter().enumerate() {
            if i as u32 != x {
                moved[i] = true;
            }
        }
    }
    let mut base = Vec::new();
    for l in preferred_base.unwrap_or(&[]) {
        let c = l.code();
        if c < degree && std::mem::take(&mut moved[c]) {
            base.push(c as u32);
        }
    }
    base.extend((0..degree as u32).filter(|&c| moved[c as usize]));

    let mut group = PermGroup {
        num_vars,
        generators: gens.to_vec(),
        levels: base
            .iter()
            .map(|&point| Level {
                point,
                orbit: vec![point],
                transversal: HashMap::new(),
            })
            .collect(),
        base,
        strong: Vec::new(),
    };
    for p in points {
        let depth = group.depth_of(&p);
        group.strong.push((p, depth));
    }
    group.complete();
    Ok(group)
}

impl PermGroup {
    /// The trivial group.
    pub fn trivial(num_vars: u32) -> Self {
        schreier_sims(num_vars, &[], None).expect("trivial group")
    }

    pub fn new(num_vars: u32, gens: &[LitPermutation]) -> Result<Self> {
        schreier_sims(num_vars, gens, None)
    }

    /// Builds the group generated by `elements`, keeping only the elements
    /// that are not already members as generators.
    pub fn from_elements(num_vars: u32, elements: impl IntoIterator<Item = LitPermutation>) -> Result<Self> {
        let mut group = PermGroup::trivial(num_vars);
        for e in elements {
            if !group.contains(&e)? {
                let mut gens = group.generators.clone();
                gens.push(e);
                group = schreier_sims(num_vars, &gens, None)?;
            }
        }
        Ok(group)
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn generators(&self) -> &[LitPermutation] {
        &self.generators
    }

    /// Base points, including levels with trivial orbits.
    pub fn base(&self) -> Vec<Lit> {
        self.base.iter().map(|&c| Lit::from_code(c as usize)).collect()
    }

    /// Strong generators that fix the first `level` base points.
    pub fn strong_generators(&self, level: usize) -> Vec<LitPermutation> {
        self.strong
            .iter()
            .filter(|(_, d)| *d >= level)
            .map(|(p, _)| LitPermutation::from_points(p).expect("strong generator is equivariant"))
            .collect()
    }

    /// Fundamental orbit sizes, one per base point.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact group order.
    pub fn order(&self) -> BigUint {
        self.order_from_level(0)
    }

    fn order_from_level(&self, level: usize) -> BigUint {
        self.levels[level.min(self.levels.len())..]
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.iter().all(|l| l.orbit.len() == 1)
    }

    pub fn contains(&self, phi: &LitPermutation) -> Result<bool> {
        if phi.num_vars() != self.num_vars {
            return Err(Error::DomainMismatch(format!(
                "permutation on {} variables tested against a group on {}",
                phi.num_vars(),
                self.num_vars
            )));
        }
        let p = phi.to_points();
        // points outside the chain are fixed by every group element
        let (residue, _) = self.strip(p, 0);
        Ok(is_identity(&residue))
    }

    /// Orbit partition of all literals `±1..=±n`, singletons included.
    pub fn orbits(&self) -> Vec<BTreeSet<Lit>> {
        let mut uf = UnionFind::new(2 * self.num_vars as usize);
        for (p, _) in &self.strong {
            for (i, &x) in p.iter().enumerate() {
                uf.union(i, x as usize);
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(Lit::from_code).collect())
            .collect()
    }

    /// Variables sharing an orbit when one maps to the other or to its
    /// negation.
    pub fn variable_orbits(&self) -> Vec<BTreeSet<Var>> {
        let mut uf = UnionFind::new(self.num_vars as usize);
        for g in &self.generators {
            for v in 1..=self.num_vars {
                let img = g.apply(Var::new(v).pos()).var().index();
                uf.union(v as usize - 1, img as usize - 1);
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| Var::new(i as u32 + 1)).collect())
            .collect()
    }

    /// Order of the pointwise stabilizer of `fixed`.
    pub fn pointwise_stabilizer_order(&self, fixed: &BTreeSet<Lit>) -> Result<BigUint> {
        let pref: Vec<Lit> = fixed.iter().copied().collect();
        let rebuilt = schreier_sims(self.num_vars, &self.generators, Some(&pref))?;
        let prefix = rebuilt
            .base
            .iter()
            .take_while(|&&c| fixed.contains(&Lit::from_code(c as usize)))
            .count();
        Ok(rebuilt.order_from_level(prefix))
    }

    /// Restriction to `keep` (which must be closed under negation).
    ///
    /// The flag is true iff every generator maps `keep` onto itself, which
    /// holds iff the whole group does. When false, only the stabilizing
    /// generators are restricted.
    pub fn restrict_down(&self, keep: &BTreeSet<Lit>) -> Result<(PermGroup, bool)> {
        if let Some(l) = keep.iter().find(|l| !keep.contains(&!**l)) {
            return Err(Error::contract(format!(
                "restriction set not closed under negation at {l}"
            )));
        }
        let mut all = true;
        let mut gens = Vec::new();
        for g in &self.generators {
            if g.stabilizes(keep) {
                gens.push(g.restrict(keep));
            } else {
                all = false;
            }
        }
        Ok((schreier_sims(self.num_vars, &gens, None)?, all))
    }

    /// Extends every generator by the identity to `num_vars` variables.
    pub fn lift_up(&self, num_vars: u32) -> Result<PermGroup> {
        if num_vars < self.num_vars {
            return Err(Error::DomainMismatch(format!(
                "cannot lift a group on {} variables to {num_vars}",
                self.num_vars
            )));
        }
        let gens: Vec<_> = self.generators.iter().map(|g| g.extend(num_vars)).collect();
        schreier_sims(num_vars, &gens, None)
    }

    /// All elements, or `None` when the order exceeds `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<LitPermutation>> {
        let order = self.order();
        if order > BigUint::from(limit) {
            return None;
        }
        let degree = 2 * self.num_vars as usize;
        let mut elems: Vec<Perm> = vec![(0..degree as u32).collect()];
        // g = u_{k-1} then ... then u_0, deepest level first
        for level in self.levels.iter().rev() {
            let reps: Vec<Option<&Perm>> = level
                .orbit
                .iter()
                .map(|&p| level.representative(p).unwrap().map(|(u, _)| u))
                .collect();
            elems = elems
                .iter()
                .flat_map(|e| {
                    reps.iter().map(move |u| match u {
                        Some(u) => mul(e, u),
                        None => e.clone(),
                    })
                })
                .collect();
        }
        Some(
            elems
                .iter()
                .map(|p| LitPermutation::from_points(p).expect("group element is equivariant"))
                .collect(),
        )
    }

    fn depth_of(&self, p: &[u32]) -> usize {
        self.base
            .iter()
            .position(|&b| p[b as usize] != b)
            .unwrap_or(self.base.len())
    }

    /// Sifts `h` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`base.len()` if it went through).
    fn strip(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let img = h[level.point as usize];
            match level.representative(img) {
                Some(None) => {}
                Some(Some((_, u_inv))) => h = mul(&h, u_inv),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn recompute_level(&mut self, i: usize) {
        let gens: Vec<&Perm> = self.strong.iter().filter(|(_, d)| *d >= i).map(|(p, _)| p).collect();
        let degree = 2 * self.num_vars as usize;
        let point = self.levels[i].point;
        let mut orbit = vec![point];
        let mut transversal: HashMap<u32, (Perm, Perm)> = HashMap::new();
        let identity: Perm = (0..degree as u32).collect();
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            let u = if p == point {
                identity.clone()
            } else {
                transversal[&p].0.clone()
            };
            for g in &gens {
                let q = g[p as usize];
                if q != point && !transversal.contains_key(&q) {
                    let uq = mul(&u, g);
                    let uq_inv = inv(&uq);
                    transversal.insert(q, (uq, uq_inv));
                    orbit.push(q);
                }
            }
            k += 1;
        }
        self.levels[i].orbit = orbit;
        self.levels[i].transversal = transversal;
    }

    fn complete(&mut self) {
        let k = self.levels.len();
        for i in 0..k {
            self.recompute_level(i);
        }
        let mut i = k as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            self.recompute_level(lvl);
            let gens: Vec<Perm> = self
                .strong
                .iter()
                .filter(|(_, d)| *d >= lvl)
                .map(|(p, _)| p.clone())
                .collect();
            let orbit = self.levels[lvl].orbit.clone();
            for &beta in &orbit {
                let u_beta = match self.levels[lvl].representative(beta).unwrap() {
                    Some((u, _)) => u.clone(),
                    None => (0..2 * self.num_vars).collect(),
                };
                for s in &gens {
                    let img = s[beta as usize];
                    let h = match self.levels[lvl].representative(img).unwrap() {
                        Some((_, u_inv)) => mul(&mul(&u_beta, s), u_inv),
                        None => mul(&u_beta, s),
                    };
                    let (y, depth) = self.strip(h, lvl + 1);
                    if !is_identity(&y) {
                        debug_assert!(depth < k, "residue moves a point outside the base");
                        self.strong.push((y, depth));
                        for j in lvl + 1..=depth {
                            self.recompute_level(j);
                        }
                        i = depth as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    /// Classes sorted by smallest member.
    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        by_root.into_values().collect()
    }
}
