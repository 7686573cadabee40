//! Text formats for groups.
//!
//! Cayley file: first line `n`, then `n` rows of `n` whitespace-separated
//! 0-based indices, optionally followed by a `# names: a b c ...` comment.
//!
//! Permutation file: one generator per line in cycle notation, e.g.
//! `(0 1 2)(3 4)`. Blank lines and lines starting with `#` are ignored.

use std::collections::HashMap;

use super::GroupTable;
use crate::error::{Error, Result};

pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// A permutation of `0..len`, stored as its image list.
pub type Permutation = Vec<usize>;

pub fn parse_cayley(text: &str) -> Result<GroupTable> {
    let mut names: Option<Vec<String>> = None;
    let mut rows: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(list) = rest.trim().strip_prefix("names:") {
                names = Some(list.split_whitespace().map(str::to_owned).collect());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        if names.is_some() {
            return Err(Error::Malformed {
                line: i + 1,
                msg: "data after the names comment".into(),
            });
        }
        rows.push((i + 1, line));
    }
    let Some(&(first_line, header)) = rows.first() else {
        return Err(Error::Malformed {
            line: 1,
            msg: "empty input".into(),
        });
    };
    let n: usize = header.parse().map_err(|_| Error::Malformed {
        line: first_line,
        msg: format!("expected group order, found `{header}`"),
    })?;
    if n == 0 {
        return Err(Error::Malformed {
            line: first_line,
            msg: "group order must be positive".into(),
        });
    }
    if rows.len() != n + 1 {
        let line = rows.last().map_or(first_line, |r| r.0);
        return Err(Error::Malformed {
            line,
            msg: format!("expected {n} table rows, found {}", rows.len() - 1),
        });
    }
    let mut table = Vec::with_capacity(n * n);
    for &(line, row) in &rows[1..] {
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != n {
            return Err(Error::Malformed {
                line,
                msg: format!("expected {n} entries, found {}", entries.len()),
            });
        }
        for tok in entries {
            let v: usize = tok.parse().map_err(|_| Error::Malformed {
                line,
                msg: format!("`{tok}` is not an element index"),
            })?;
            if v >= n {
                return Err(Error::Malformed {
                    line,
                    msg: format!("index {v} out of range 0..{n}"),
                });
            }
            table.push(v);
        }
    }
    GroupTable::from_table(n, table, names)
}

/// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
/// Commas between points are accepted.
pub fn parse_cycles(text: &str) -> std::result::Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(format!("expected `(` at `{rest}`"));
        };
        let close = body.find(')').ok_or_else(|| "unclosed cycle".to_string())?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format!("`{t}` is not a point"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut sorted = points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err("repeated point in a cycle".into());
        }
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn cycles_to_permutation(
    cycles: &[Vec<usize>],
    degree: usize,
) -> std::result::Result<Permutation, String> {
    let mut perm: Permutation = (0..degree).collect();
    let mut touched = vec![false; degree];
    for cycle in cycles {
        for (k, &p) in cycle.iter().enumerate() {
            if touched[p] {
                return Err(format!("point {p} appears in two cycles"));
            }
            touched[p] = true;
            perm[p] = cycle[(k + 1) % cycle.len()];
        }
    }
    Ok(perm)
}

/// One generator per non-blank, non-comment line.
pub fn parse_permutation_file(text: &str) -> Result<Vec<Permutation>> {
    let mut parsed = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cycles = parse_cycles(line).map_err(|msg| Error::Malformed { line: i + 1, msg })?;
        parsed.push((i + 1, cycles));
    }
    if parsed.is_empty() {
        return Err(Error::Malformed {
            line: 1,
            msg: "no generators".into(),
        });
    }
    let degree = parsed
        .iter()
        .flat_map(|(_, c)| c.iter().flatten())
        .max()
        .map_or(1, |&m| m + 1);
    parsed
        .into_iter()
        .map(|(line, cycles)| {
            cycles_to_permutation(&cycles, degree).map_err(|msg| Error::Malformed { line, msg })
        })
        .collect()
}

/// Cycle notation of a permutation, fixed points omitted; `()` for the identity.
pub fn format_cycles(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// `(p ∘ q)(x) = p(q(x))`.
fn compose(p: &[usize], q: &[usize]) -> Permutation {
    q.iter().map(|&x| p[x]).collect()
}

/// Closure of the generators under composition, with elements indexed in
/// breadth-first discovery order (identity first). The table entry for
/// `(i, j)` is the index of `perm_i ∘ perm_j`.
pub fn permutation_closure(
    generators: &[Permutation],
    bound: usize,
) -> Result<(GroupTable, Vec<Permutation>)> {
    let degree = generators.iter().map(Vec::len).max().unwrap_or(1).max(1);
    let pad = |p: &Permutation| -> Permutation {
        let mut q = p.clone();
        q.extend(p.len()..degree);
        q
    };
    let gens: Vec<Permutation> = generators.iter().map(pad).collect();
    for g in &gens {
        let mut seen = vec![false; degree];
        for &x in g {
            if x >= degree || seen[x] {
                return Err(Error::Shape(format!("{g:?} is not a permutation")));
            }
            seen[x] = true;
        }
    }
    let identity: Permutation = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in &gens {
            let y = compose(&x, g);
            if !index.contains_key(&y) {
                if elements.len() == bound {
                    return Err(Error::ClosureBound(bound));
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for p in &elements {
        for q in &elements {
            table.push(index[&compose(p, q)]);
        }
    }
    let names = elements.iter().map(|p| format_cycles(p)).collect();
    Ok((GroupTable::from_closure(n, table, names), elements))
}

pub fn from_permutations(generators: &[Permutation]) -> Result<GroupTable> {
    permutation_closure(generators, DEFAULT_CLOSURE_BOUND).map(|(g, _)| g)
}
