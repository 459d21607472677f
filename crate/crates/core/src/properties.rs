//! Checkers for the symmetry properties of a transformation run `F → F'`:
//! symmetry-preserving (SP), weakly symmetry-preserving (WSP),
//! symmetry-lifting (SL) and equivalence-preserving (EQUIV).
//!
//! SP is decided exactly from generators: a group setwise-stabilizes a set
//! iff each generator does, and a group is contained in another iff each
//! generator is.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cnf::{Assignment, Formula, Lit, ModelSet, Var};
use crate::error::{Error, Result};
use crate::symmetry::{is_semantic_symmetry_of, is_syntactic_symmetry, LitPermutation, PermGroup};
use crate::transforms::TransformResult;

/// Largest group enumerated element by element when the generators alone
/// do not decide a check.
const ELEMENT_LIMIT: usize = 20_000;

/// Most variables for which all semantic symmetries are enumerated.
pub const SEMANTIC_ENUMERATION_VARS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Property {
    SP,
    WSP,
    SL,
    EQUIV,
}

/// Why a permutation breaks a property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// Moves a literal of the output to a removed literal or back.
    NotStabilizing,
    /// Restricted to the output's literals, it is not a syntactic symmetry.
    NotSyntacticOnOutput,
    /// Restricted to the output's literals, it is not a semantic symmetry.
    NotSemanticOnOutput,
    /// Lifted to the input's literals, it is not a semantic symmetry.
    NotSemanticOnInput,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Generator {
        generator: LitPermutation,
        reason: Reason,
    },
    /// A complete assignment (over the input's universe) satisfying exactly
    /// one of the two formulas.
    Assignment {
        assignment: Assignment,
        satisfies_input: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// False when the check fell back to a sufficient test.
    pub exact: bool,
}

#[derive(Serialize)]
struct ReportJson {
    property: Property,
    holds: bool,
    exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<Reason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    assignment: Option<Vec<i32>>,
}

impl PropertyReport {
    fn holds(property: Property) -> Self {
        PropertyReport {
            property,
            holds: true,
            witness: None,
            exact: true,
        }
    }

    fn fails(property: Property, witness: Witness) -> Self {
        PropertyReport {
            property,
            holds: false,
            witness: Some(witness),
            exact: true,
        }
    }

    fn generator(property: Property, generator: LitPermutation, reason: Reason) -> Self {
        Self::fails(property, Witness::Generator { generator, reason })
    }

    pub fn witness_generator(&self) -> Option<&LitPermutation> {
        match &self.witness {
            Some(Witness::Generator { generator, .. }) => Some(generator),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut json = ReportJson {
            property: self.property,
            holds: self.holds,
            exact: self.exact,
            generator: None,
            reason: None,
            assignment: None,
        };
        match &self.witness {
            Some(Witness::Generator { generator, reason }) => {
                json.generator = Some(generator.to_string());
                json.reason = Some(*reason);
            }
            Some(Witness::Assignment { assignment, .. }) => {
                json.assignment = Some(assignment.iter().map(|(v, b)| v.lit(b).to_dimacs()).collect());
            }
            None => {}
        }
        serde_json::to_string(&json).expect("report serializes")
    }
}

/// Every element of `g` that setwise-stabilizes `keep`, restricted to it.
/// Uses the generators when they all stabilize, else enumerates the group.
/// The flag is false when the group was too large and only the stabilizing
/// generators were returned.
fn stabilizer_restrictions(g: &PermGroup, keep: &BTreeSet<Lit>) -> (Vec<LitPermutation>, bool) {
    let restrict = |p: &LitPermutation| p.restrict(keep);
    if g.generators().iter().all(|p| p.stabilizes(keep)) {
        return (g.generators().iter().map(restrict).collect(), true);
    }
    match g.elements(ELEMENT_LIMIT) {
        Some(all) => (all.iter().filter(|p| p.stabilizes(keep)).map(restrict).collect(), true),
        None => (
            g.generators()
                .iter()
                .filter(|p| p.stabilizes(keep))
                .map(restrict)
                .collect(),
            false,
        ),
    }
}

/// SP: `Aut(F)` setwise-stabilizes `Lit(F')`, and its restriction to
/// `Lit(F')` consists of syntactic symmetries of `F'`. `g_f` must be the
/// syntactic automorphism group of `f`.
pub fn check_sp(f: &Formula, fres: &TransformResult, g_f: &PermGroup) -> Result<PropertyReport> {
    if g_f.num_vars() < f.num_vars() {
        return Err(Error::DomainMismatch(format!(
            "group on {} variables for a formula on {}",
            g_f.num_vars(),
            f.num_vars()
        )));
    }
    let keep = fres.output.lits();
    for p in g_f.generators() {
        if !p.stabilizes(&keep) {
            return Ok(PropertyReport::generator(
                Property::SP,
                p.clone(),
                Reason::NotStabilizing,
            ));
        }
    }
    for p in g_f.generators() {
        if !is_syntactic_symmetry(&fres.output, &p.restrict(&keep))? {
            return Ok(PropertyReport::generator(
                Property::SP,
                p.clone(),
                Reason::NotSyntacticOnOutput,
            ));
        }
    }
    Ok(PropertyReport::holds(Property::SP))
}

/// WSP: the restriction of `Aut(F)`'s setwise stabilizer of `Lit(F')`
/// consists of semantic symmetries of `F'`.
pub fn check_wsp(f: &Formula, fres: &TransformResult, g_f: &PermGroup, max_vars: usize) -> Result<PropertyReport> {
    let keep = fres.output.lits();
    let models = ModelSet::over(&fres.output, f.num_vars(), max_vars)?;
    let (candidates, exact) = stabilizer_restrictions(g_f, &keep);
    for p in candidates {
        if !is_semantic_symmetry_of(&models, &p.extend(models.num_vars())) {
            return Ok(PropertyReport::generator(Property::WSP, p, Reason::NotSemanticOnOutput));
        }
    }
    let mut r = PropertyReport::holds(Property::WSP);
    r.exact = exact;
    Ok(r)
}

/// Visits the negation-equivariant permutations of `vars` (others fixed)
/// that are semantic symmetries for `models`, until `visit` returns false.
/// Partial maps are pruned when they already disagree on the projection of
/// the model set to the variables mapped so far.
fn for_each_semantic_symmetry(
    num_vars: u32,
    vars: &[Var],
    models: &ModelSet,
    mut visit: impl FnMut(LitPermutation) -> bool,
) {
    struct State<'a> {
        num_vars: u32,
        vars: &'a [Var],
        masks: Vec<u64>,
        images: Vec<Lit>,
        used: Vec<bool>,
    }
    fn bit(m: u64, v: Var) -> bool {
        m >> (v.index() - 1) & 1 == 1
    }
    impl State<'_> {
        fn consistent(&self) -> bool {
            let k = self.images.len();
            let mut a: Vec<u64> = Vec::with_capacity(self.masks.len());
            let mut b: Vec<u64> = Vec::with_capacity(self.masks.len());
            for &m in &self.masks {
                let (mut x, mut y) = (0u64, 0u64);
                for i in 0..k {
                    x |= u64::from(bit(m, self.vars[i])) << i;
                    let img = self.images[i];
                    y |= u64::from(bit(m, img.var()) == img.is_positive()) << i;
                }
                a.push(x);
                b.push(y);
            }
            a.sort_unstable();
            a.dedup();
            b.sort_unstable();
            b.dedup();
            a == b
        }

        fn go(&mut self, models: &ModelSet, visit: &mut dyn FnMut(LitPermutation) -> bool) -> bool {
            if self.images.len() == self.vars.len() {
                let map = self.vars.iter().copied().zip(self.images.iter().copied());
                let p = LitPermutation::from_var_map(self.num_vars, map).expect("bijection on vars");
                return !is_semantic_symmetry_of(models, &p) || visit(p);
            }
            for i in 0..self.vars.len() {
                if self.used[i] {
                    continue;
                }
                self.used[i] = true;
                for img in [self.vars[i].pos(), self.vars[i].neg()] {
                    self.images.push(img);
                    let keep_going = !self.consistent() || self.go(models, visit);
                    self.images.pop();
                    if !keep_going {
                        self.used[i] = false;
                        return false;
                    }
                }
                self.used[i] = false;
            }
            true
        }
    }
    let mut state = State {
        num_vars,
        vars,
        masks: models.masks().collect(),
        images: Vec::new(),
        used: vec![false; vars.len()],
    };
    state.go(models, &mut visit);
}

/// SL: every semantic symmetry of `F'` on `Lit(F')`, extended by the
/// identity, is a semantic symmetry of `F`. With `candidates` only those
/// permutations are checked (they must act on `Lit(F')` only); otherwise
/// the semantic group of `F'` is enumerated, which needs at most
/// [`SEMANTIC_ENUMERATION_VARS`] variables in `F'`.
pub fn check_sl(
    f: &Formula,
    fres: &TransformResult,
    candidates: Option<&[LitPermutation]>,
    max_vars: usize,
) -> Result<PropertyReport> {
    let n = f.num_vars();
    let out_models = ModelSet::over(&fres.output, n, max_vars)?;
    let in_models = ModelSet::over(f, n, max_vars)?;
    match candidates {
        Some(c) => {
            let keep = fres.output.lits();
            for p in c {
                if p.support().iter().any(|l| !keep.contains(l)) {
                    return Err(Error::contract(format!(
                        "candidate {p} acts outside the output's literals"
                    )));
                }
            }
            for p in c.iter().map(|p| p.extend(n)) {
                if !is_semantic_symmetry_of(&out_models, &p) {
                    // not a symmetry of F' at all: nothing to lift
                    continue;
                }
                if !is_semantic_symmetry_of(&in_models, &p) {
                    return Ok(PropertyReport::generator(Property::SL, p, Reason::NotSemanticOnInput));
                }
            }
        }
        None => {
            let vars: Vec<Var> = fres.output.vars().into_iter().collect();
            if vars.len() > SEMANTIC_ENUMERATION_VARS {
                return Err(Error::OracleTooLarge {
                    vars: vars.len(),
                    max: SEMANTIC_ENUMERATION_VARS,
                });
            }
            let mut bad = None;
            for_each_semantic_symmetry(n, &vars, &out_models, |p| {
                if is_semantic_symmetry_of(&in_models, &p) {
                    true
                } else {
                    bad = Some(p);
                    false
                }
            });
            if let Some(p) = bad {
                return Ok(PropertyReport::generator(Property::SL, p, Reason::NotSemanticOnInput));
            }
        }
    }
    Ok(PropertyReport::holds(Property::SL))
}

/// EQUIV: `F[σ] = F'[σ]` for every complete assignment `σ` of `F`'s
/// universe.
pub fn check_equiv(f: &Formula, fres: &TransformResult, max_vars: usize) -> Result<PropertyReport> {
    let n = f.num_vars().max(fres.output.num_vars());
    let a = ModelSet::over(f, n, max_vars)?;
    let b = ModelSet::over(&fres.output, n, max_vars)?;
    for m in 0..1u64 << n {
        let (x, y) = (a.contains_mask(m), b.contains_mask(m));
        if x != y {
            return Ok(PropertyReport::fails(
                Property::EQUIV,
                Witness::Assignment {
                    assignment: Assignment::from_mask(n, m),
                    satisfies_input: x,
                },
            ));
        }
    }
    Ok(PropertyReport::holds(Property::EQUIV))
}

/// Random renaming of the variables `1..=n` with random polarity flips.
pub fn random_relabeling(num_vars: u32, rng: &mut impl Rng) -> LitPermutation {
    let mut targets: Vec<u32> = (1..=num_vars).collect();
    targets.shuffle(rng);
    let images = targets
        .into_iter()
        .map(|t| Var::new(t).lit(rng.gen_bool(0.5)))
        .collect();
    LitPermutation::from_images(images).expect("shuffled variables")
}

/// Spot check of isomorphism invariance: for a random relabeling `π`,
/// `π(Π(F)) = Π(π(F))`. Returns the relabeling when the check fails.
pub fn check_isomorphism_invariance(
    f: &Formula,
    rule: impl Fn(&Formula) -> TransformResult,
    seed: u64,
) -> Option<LitPermutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pi = random_relabeling(f.num_vars(), &mut rng);
    let direct = pi.apply_formula(&rule(f).output);
    let relabeled = rule(&pi.apply_formula(f)).output;
    (direct != relabeled).then_some(pi)
}
