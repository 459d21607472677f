use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::cnf::Formula;
use crate::error::{Error, Result};

use super::PermGroup;

/// Group orders and the two symmetry ratios of a preprocessing run `F → F*`.
///
/// * reducible = |Aut(F)_(Lit(F*))|, the number of symmetries of `F` that
///   act only on removed literals;
/// * hidden = |Aut(F*)| · |Aut(F)_(Lit(F*))| / |Aut(F)|, the symmetry of
///   `F*` that `F` does not show. The denominator `|Aut(F)| / |Aut(F)_(Lit(F*))|`
///   is the order of `Aut(F)` restricted to `Lit(F*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryMetrics {
    pub aut_f_order: BigUint,
    pub aut_fstar_order: BigUint,
    pub pointwise_stab_order: BigUint,
    pub reducible: BigRational,
    pub hidden: BigRational,
}

#[derive(Serialize)]
struct MetricsJson {
    aut_f_order: String,
    aut_fstar_order: String,
    pointwise_stab_order: String,
    reducible: String,
    hidden: String,
}

impl SymmetryMetrics {
    /// Flat JSON object, every field a decimal string (`"p/q"` for
    /// non-integral ratios).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MetricsJson {
            aut_f_order: self.aut_f_order.to_string(),
            aut_fstar_order: self.aut_fstar_order.to_string(),
            pointwise_stab_order: self.pointwise_stab_order.to_string(),
            reducible: self.reducible.to_string(),
            hidden: self.hidden.to_string(),
        })
        .expect("metrics serialize")
    }
}

/// Computes the metrics from `g_f = Aut(f)` and `g_fstar = Aut(fstar)`.
/// Fails when `fstar` mentions a variable `f` does not.
pub fn compute_metrics(f: &Formula, fstar: &Formula, g_f: &PermGroup, g_fstar: &PermGroup) -> Result<SymmetryMetrics> {
    let lits_f = f.lits();
    let lits_star = fstar.lits();
    if let Some(l) = lits_star.iter().find(|l| !lits_f.contains(l)) {
        return Err(Error::contract(format!(
            "preprocessed formula uses literal {l} absent from the original"
        )));
    }
    let aut_f_order = g_f.order();
    let aut_fstar_order = g_fstar.order();
    let pointwise_stab_order = g_f.pointwise_stabilizer_order(&lits_star)?;
    let big = |x: &BigUint| BigInt::from(x.clone());
    let reducible = BigRational::from_integer(big(&pointwise_stab_order));
    let hidden = BigRational::new(big(&aut_fstar_order) * big(&pointwise_stab_order), big(&aut_f_order));
    Ok(SymmetryMetrics {
        aut_f_order,
        aut_fstar_order,
        pointwise_stab_order,
        reducible,
        hidden,
    })
}
