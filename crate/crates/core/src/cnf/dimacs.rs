use super::{Clause, Formula, Lit};
use crate::error::{Error, Result};

/// Parses DIMACS CNF.
///
/// Duplicate literals and duplicate clauses are merged and tautologies are
/// dropped. A clause may span lines; the last clause must be closed by `0`.
/// A trailing `%` line (common in benchmark archives) ends the input.
pub fn parse_dimacs(input: &[u8]) -> Result<Formula> {
    let text = std::str::from_utf8(input).map_err(|e| Error::parse(1, e.to_string()))?;
    if text.trim().is_empty() {
        return Err(Error::parse(1, "empty input"));
    }

    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    let mut open_since = 0;
    let mut last_line = 1;

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(lineno, "duplicate header"));
            }
            header =
                Some(parse_header(line).ok_or_else(|| Error::parse(lineno, format!("malformed header `{line}`")))?);
            continue;
        }
        let Some((nvars, _)) = header else {
            return Err(Error::parse(lineno, "clause before `p cnf` header"));
        };
        for tok in line.split_whitespace() {
            let value: i32 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("invalid literal `{tok}`")))?;
            if value == 0 {
                clauses.push(Clause::new(current.drain(..)));
                continue;
            }
            let lit =
                Lit::from_dimacs(value).ok_or_else(|| Error::parse(lineno, format!("invalid literal `{tok}`")))?;
            if lit.var().index() > nvars {
                return Err(Error::parse(
                    lineno,
                    format!("literal {value} exceeds declared variable count {nvars}"),
                ));
            }
            if current.is_empty() {
                open_since = lineno;
            }
            current.push(lit);
        }
    }

    let Some((nvars, _)) = header else {
        return Err(Error::parse(last_line, "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(Error::parse(open_since, "unterminated clause"));
    }
    Ok(Formula::new(nvars, clauses))
}

fn parse_header(line: &str) -> Option<(u32, usize)> {
    let mut it = line.split_whitespace();
    if it.next()? != "p" || it.next()? != "cnf" {
        return None;
    }
    let nvars = it.next()?.parse().ok()?;
    let nclauses = it.next()?.parse().ok()?;
    it.next().is_none().then_some((nvars, nclauses))
}

/// Writes canonical DIMACS: header with the variable universe and clause
/// count, then clauses in canonical order.
pub fn write_dimacs(f: &Formula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.len());
    for c in f.clauses() {
        for l in c.lits() {
            out.push_str(&l.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}
