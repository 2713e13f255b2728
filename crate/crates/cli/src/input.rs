use std::io::Read;

use qbforge::format::parse_algebra;
use qbforge::{catalog, Error, FiniteAlgebra, Set, UpperSet};

/// `@name` loads a catalog entry, `-` reads stdin, anything else is a path.
pub fn load(spec: &str) -> Result<FiniteAlgebra, String> {
    if let Some(name) = spec.strip_prefix('@') {
        return catalog(name).map_err(|e| e.to_string());
    }
    let text = if spec == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?
    };
    parse_algebra(&text).map_err(|e| e.to_string())
}

/// Splits at commas outside parentheses, so product labels like `(0,1)`
/// stay whole.
fn split_labels(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().map(str::trim).filter(|l| !l.is_empty()).collect()
}

/// `{a,b}`, `a,b` or `{}`; labels are trimmed.
pub fn parse_set(alg: &FiniteAlgebra, s: &str) -> Result<Set, String> {
    let inner = s.trim();
    let inner = inner.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(inner);
    let mut out = Set::EMPTY;
    for label in split_labels(inner) {
        out.insert(alg.index_of(label).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

pub fn parse_upper(alg: &FiniteAlgebra, s: &str) -> Result<UpperSet, String> {
    let set = parse_set(alg, s)?;
    UpperSet::new(alg, set).map_err(|e| match e {
        Error::NotUpperSet(_) => format!("{} is not an upper set", alg.render_set(set)),
        e => e.to_string(),
    })
}

pub fn parse_elem(alg: &FiniteAlgebra, s: &str) -> Result<usize, String> {
    alg.index_of(s.trim()).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_split_outside_parentheses() {
        assert_eq!(split_labels("(0,1), (1,(0,1)),a"), ["(0,1)", "(1,(0,1))", "a"]);
        assert!(split_labels(" ").is_empty());
    }

    #[test]
    fn sets_resolve_labels() {
        let p = qbforge::catalog("prod(chain:2,chain:2)").unwrap();
        let s = parse_set(&p, "{(0,1),(1,1)}").unwrap();
        assert_eq!(p.render_set(s), "{(0,1),(1,1)}");
        assert!(parse_set(&p, "{(2,2)}").is_err());
        assert!(parse_upper(&p, "{(0,1)}").is_err());
    }
}
