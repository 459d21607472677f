use std::collections::BTreeSet;
use std::fmt;

use crate::cnf::{Formula, Lit, Var};
use crate::error::{Error, Result};

/// A negation-equivariant bijection on the literals of variables `1..=n`.
///
/// Stored as the image of every positive literal; the image of `-v` is the
/// negation of the image of `v`, so equivariance holds by construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LitPermutation {
    images: Vec<Lit>,
}

impl LitPermutation {
    pub fn identity(num_vars: u32) -> Self {
        LitPermutation {
            images: (1..=num_vars).map(|v| Var::new(v).pos()).collect(),
        }
    }

    /// `images[i]` is the image of variable `i + 1`. Fails unless the images
    /// hit every variable exactly once.
    pub fn from_images(images: Vec<Lit>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for l in &images {
            let v = l.var().index() as usize;
            if v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::contract(format!(
                    "images {images:?} do not form a bijection on variables 1..={n}"
                )));
            }
        }
        Ok(LitPermutation { images })
    }

    /// Builds a permutation from a literal map, checking bijectivity and
    /// negation-equivariance. Literals absent from `map` are fixed.
    pub fn from_lit_map(num_vars: u32, map: impl IntoIterator<Item = (Lit, Lit)>) -> Result<Self> {
        let mut full: Vec<Option<Lit>> = vec![None; 2 * num_vars as usize];
        for (from, to) in map {
            for l in [from, to] {
                if l.var().index() > num_vars {
                    return Err(Error::DomainMismatch(format!(
                        "literal {l} outside variables 1..={num_vars}"
                    )));
                }
            }
            let slot = &mut full[from.code()];
            if slot.is_some_and(|t| t != to) {
                return Err(Error::contract(format!("literal {from} mapped twice")));
            }
            *slot = Some(to);
        }
        let image = |l: Lit| full[l.code()].unwrap_or(l);
        let mut images = Vec::with_capacity(num_vars as usize);
        for v in 1..=num_vars {
            let var = Var::new(v);
            let (p, n) = (image(var.pos()), image(var.neg()));
            if n != !p {
                return Err(Error::contract(format!(
                    "not negation-equivariant: {} -> {p} but {} -> {n}",
                    var.pos(),
                    var.neg()
                )));
            }
            images.push(p);
        }
        Self::from_images(images)
    }

    /// Permutation given by the images of some positive literals; other
    /// variables are fixed. Fails unless the result is a bijection.
    pub fn from_var_map(num_vars: u32, map: impl IntoIterator<Item = (Var, Lit)>) -> Result<Self> {
        let mut images: Vec<Lit> = (1..=num_vars).map(|v| Var::new(v).pos()).collect();
        for (v, l) in map {
            let i = v.index() as usize;
            if i == 0 || i > images.len() {
                return Err(Error::DomainMismatch(format!("variable {v} outside 1..={num_vars}")));
            }
            images[i - 1] = l;
        }
        Self::from_images(images)
    }

    /// Swaps two variables (and their negations).
    pub fn swap(num_vars: u32, a: Var, b: Var) -> Self {
        let mut images: Vec<Lit> = Self::identity(num_vars).images;
        images[a.index() as usize - 1] = b.pos();
        images[b.index() as usize - 1] = a.pos();
        LitPermutation { images }
    }

    /// Maps `v` to `-v`, fixing everything else.
    pub fn negation(num_vars: u32, v: Var) -> Self {
        let mut images: Vec<Lit> = Self::identity(num_vars).images;
        images[v.index() as usize - 1] = v.neg();
        LitPermutation { images }
    }

    pub fn num_vars(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of `l`; literals beyond the domain are fixed.
    pub fn apply(&self, l: Lit) -> Lit {
        match self.images.get(l.var().index() as usize - 1) {
            Some(&img) if l.is_positive() => img,
            Some(&img) => !img,
            None => l,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, l)| l.to_dimacs() == i as i32 + 1)
    }

    /// Membership in SymV: no variable is mapped to a negative literal.
    pub fn is_variable_permutation(&self) -> bool {
        self.images.iter().all(|l| l.is_positive())
    }

    /// Left-to-right composition: `compose(a, b)(l) = b(a(l))`.
    pub fn compose(&self, other: &LitPermutation) -> Result<LitPermutation> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::DomainMismatch(format!(
                "composing permutations on {} and {} variables",
                self.num_vars(),
                other.num_vars()
            )));
        }
        Ok(LitPermutation {
            images: self.images.iter().map(|&l| other.apply(l)).collect(),
        })
    }

    pub fn inverse(&self) -> LitPermutation {
        let mut images = vec![Lit::new(1); self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            let v = Var::new(i as u32 + 1);
            // img = phi(v) => phi^-1(var(img)) = v or -v
            images[img.var().index() as usize - 1] = if img.is_positive() { v.pos() } else { v.neg() };
        }
        LitPermutation { images }
    }

    /// Literals moved by the permutation.
    pub fn support(&self) -> BTreeSet<Lit> {
        (1..=self.num_vars())
            .flat_map(|v| [Var::new(v).pos(), Var::new(v).neg()])
            .filter(|&l| self.apply(l) != l)
            .collect()
    }

    /// True iff `set` is mapped onto itself.
    pub fn stabilizes(&self, set: &BTreeSet<Lit>) -> bool {
        set.iter().all(|&l| set.contains(&self.apply(l)))
    }

    /// Keeps the action on `keep` and fixes everything else. Only meaningful
    /// when `keep` is stabilized and closed under negation.
    pub fn restrict(&self, keep: &BTreeSet<Lit>) -> LitPermutation {
        let images = (1..=self.num_vars())
            .map(|v| {
                let p = Var::new(v).pos();
                if keep.contains(&p) {
                    self.apply(p)
                } else {
                    p
                }
            })
            .collect();
        LitPermutation { images }
    }

    /// Extends the domain to `num_vars` variables with the identity.
    pub fn extend(&self, num_vars: u32) -> LitPermutation {
        let mut images = self.images.clone();
        images.extend((self.num_vars() + 1..=num_vars).map(|v| Var::new(v).pos()));
        LitPermutation { images }
    }

    /// Image of a formula, clause by clause.
    pub fn apply_formula(&self, f: &Formula) -> Formula {
        f.map_lits(|l| self.apply(l))
    }

    /// Point form over `2n` literal codes.
    pub fn to_points(&self) -> Vec<u32> {
        (0..2 * self.images.len())
            .map(|c| self.apply(Lit::from_code(c)).code() as u32)
            .collect()
    }

    /// Inverse of [`to_points`](Self::to_points); checks equivariance.
    pub fn from_points(points: &[u32]) -> Result<Self> {
        if !points.len().is_multiple_of(2) {
            return Err(Error::contract("point permutation of odd degree"));
        }
        let n = (points.len() / 2) as u32;
        LitPermutation::from_lit_map(
            n,
            points
                .iter()
                .enumerate()
                .map(|(c, &img)| (Lit::from_code(c), Lit::from_code(img as usize))),
        )
    }

    /// Disjoint cycles over signed literals, each starting at its smallest
    /// literal (in canonical literal order), sorted by that literal.
    pub fn cycles(&self) -> Vec<Vec<Lit>> {
        let n = self.num_vars() as usize;
        let mut seen = vec![false; 2 * n];
        let mut cycles = Vec::new();
        for code in 0..2 * n {
            if seen[code] {
                continue;
            }
            let start = Lit::from_code(code);
            let mut cycle = vec![start];
            seen[code] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur.code()] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

impl fmt::Display for LitPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, l) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LitPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LitPermutation[n={}]{}", self.num_vars(), self)
    }
}
