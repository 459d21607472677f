//! Generator files: one permutation per line in cycle notation over signed
//! literals, e.g. `(1 2)(-1 -2)`. Lines starting with `c` are comments and
//! `()` is the identity.

use crate::cnf::Lit;
use crate::error::{Error, Result};

use super::LitPermutation;

/// Parses a generator file. The permutation domain is the larger of
/// `num_vars` and the largest variable mentioned in the file.
pub fn parse_generators(text: &str, num_vars: u32) -> Result<Vec<LitPermutation>> {
    let mut parsed = Vec::new();
    let mut max_var = num_vars;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let cycles = parse_cycles(line).map_err(|m| Error::parse(idx + 1, m))?;
        for l in cycles.iter().flatten() {
            max_var = max_var.max(l.var().index());
        }
        parsed.push((idx + 1, cycles));
    }
    parsed
        .into_iter()
        .map(|(line, cycles)| {
            let map = cycles
                .iter()
                .flat_map(|c| c.iter().zip(c.iter().cycle().skip(1)).map(|(&a, &b)| (a, b)));
            LitPermutation::from_lit_map(max_var, map).map_err(|e| match e {
                Error::Contract(m) | Error::DomainMismatch(m) => Error::parse(line, m),
                other => other,
            })
        })
        .collect()
}

fn parse_cycles(line: &str) -> std::result::Result<Vec<Vec<Lit>>, String> {
    let mut cycles = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut rest = line;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        rest = &rest[start..];
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected `(` at `{rest}`"))?;
        let end = body.find(')').ok_or("unbalanced parentheses")?;
        let inner = &body[..end];
        if inner.contains('(') {
            return Err("unbalanced parentheses".into());
        }
        let mut cycle = Vec::new();
        for tok in inner.split_whitespace() {
            let v: i32 = tok.parse().map_err(|_| format!("invalid literal `{tok}`"))?;
            let l = Lit::from_dimacs(v).ok_or_else(|| format!("invalid literal `{tok}`"))?;
            if !seen.insert(l) {
                return Err(format!("literal {l} appears twice; not a bijection"));
            }
            cycle.push(l);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = &body[end + 1..];
    }
    if rest.contains(')') {
        return Err("unbalanced parentheses".into());
    }
    Ok(cycles)
}

/// One generator per line in canonical cycle form.
pub fn write_generators(gens: &[LitPermutation]) -> String {
    gens.iter().map(|g| format!("{g}\n")).collect()
}
