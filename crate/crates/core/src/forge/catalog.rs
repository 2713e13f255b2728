//! Named algebras used as fixtures and examples.
//!
//! | name              | algebra                                                 |
//! |-------------------|---------------------------------------------------------|
//! | `godel:n`         | `n`-chain, `x·y = min`, `x→y = 1` if `x ≤ y` else `y`    |
//! | `lukasiewicz:n`   | `n`-chain with truncated sum and difference             |
//! | `chain:2`         | the two-element Boolean algebra                          |
//! | `heyting-d5`      | `0 < a, b < c < 1`, `a ∥ b`, Heyting implication         |
//! | `cyclic:n`        | the group `Z_n` with discrete order (unital, not integral) |
//! | `prod(e1,e2)`     | componentwise product of two entries                     |
//! | `trivial`         | the one-element algebra                                  |

use crate::algebra::{AlgebraParts, Elem, FiniteAlgebra};
use crate::bitset::{Set, MAX_CARRIER};
use crate::classes::{check_pseudo_hoop, check_residuated};
use crate::error::{Error, Result};
use crate::order::Poset;

/// Names accepted by [`catalog`] with concrete sizes, in listing order.
pub const SHIPPED: &[&str] = &[
    "trivial",
    "chain:2",
    "godel:3",
    "godel:4",
    "godel:5",
    "godel:6",
    "lukasiewicz:3",
    "lukasiewicz:4",
    "lukasiewicz:5",
    "lukasiewicz:6",
    "heyting-d5",
    "cyclic:2",
    "cyclic:3",
    "prod(chain:2,chain:2)",
    "prod(godel:3,chain:2)",
    "prod(lukasiewicz:3,chain:2)",
    "prod(godel:3,godel:3)",
    "prod(heyting-d5,chain:2)",
];

/// Builds the named algebra and validates it against its advertised classes.
pub fn catalog(name: &str) -> Result<FiniteAlgebra> {
    let name = name.trim();
    let (alg, hoop) = build(name)?;
    let fail = |reason: String| Error::ValidationFailed { name: name.to_string(), reason };
    let res = check_residuated(&alg)?;
    if !res.holds() {
        return Err(fail(res.to_string()));
    }
    if hoop {
        let ph = check_pseudo_hoop(&alg)?;
        if !ph.holds() {
            return Err(fail(ph.to_string()));
        }
    }
    Ok(alg)
}

/// Returns the algebra and whether it is advertised as a pseudo-hoop.
fn build(name: &str) -> Result<(FiniteAlgebra, bool)> {
    let unknown = || Error::UnknownName(name.to_string());
    if let Some(inner) = name.strip_prefix("prod(").and_then(|s| s.strip_suffix(')')) {
        let (l, r) = split_top_level(inner).ok_or_else(unknown)?;
        let (a, ha) = build(l.trim())?;
        let (b, hb) = build(r.trim())?;
        return Ok((product(&a, &b, name)?, ha && hb));
    }
    let sized = |prefix: &str| -> Option<Result<usize>> {
        name.strip_prefix(prefix).map(|s| {
            s.parse::<usize>()
                .ok()
                .filter(|&n| (1..=MAX_CARRIER).contains(&n))
                .ok_or_else(unknown)
        })
    };
    if let Some(n) = sized("godel:") {
        return Ok((godel(n?, name), true));
    }
    if let Some(n) = sized("lukasiewicz:") {
        return Ok((lukasiewicz(n?, name), true));
    }
    if let Some(n) = sized("cyclic:") {
        return Ok((cyclic(n?, name), false));
    }
    match name {
        "trivial" => Ok((godel(1, name), true)),
        "chain:2" => Ok((godel(2, name), true)),
        "heyting-d5" => Ok((heyting_d5(), true)),
        _ => Err(unknown()),
    }
}

fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn table(n: usize, f: impl Fn(Elem, Elem) -> Elem) -> Vec<Elem> {
    (0..n * n).map(|i| f(i / n, i % n)).collect()
}

fn assemble(
    name: &str,
    labels: Vec<String>,
    poset: Poset,
    to: Vec<Elem>,
    lto: Vec<Elem>,
    mul: Vec<Elem>,
) -> FiniteAlgebra {
    FiniteAlgebra::new(AlgebraParts {
        name: name.to_string(),
        labels,
        poset,
        to,
        lto,
        mul: Some(mul),
        unit: None,
        bottom: None,
    })
    .expect("catalog tables are well-formed")
}

fn chain_labels(n: usize) -> Vec<String> {
    match n {
        1 => vec!["1".into()],
        _ => {
            let mut v = vec!["0".to_string()];
            for i in 1..n - 1 {
                let l = if n - 2 <= 26 {
                    ((b'a' + (i - 1) as u8) as char).to_string()
                } else {
                    format!("a{i}")
                };
                v.push(l);
            }
            v.push("1".into());
            v
        }
    }
}

/// Gödel chain on `n` elements.
pub fn godel(n: usize, name: &str) -> FiniteAlgebra {
    let top = n - 1;
    let to = table(n, |x, y| if x <= y { top } else { y });
    let mul = table(n, |x, y| x.min(y));
    assemble(name, chain_labels(n), Poset::chain(n), to.clone(), to, mul)
}

/// Łukasiewicz chain on `n` elements, `{0, 1/m, .., 1}` with `m = n - 1`.
pub fn lukasiewicz(n: usize, name: &str) -> FiniteAlgebra {
    let m = n - 1;
    let to = table(n, |x, y| m.min(m - x + y));
    let mul = table(n, |x, y| (x + y).saturating_sub(m));
    let labels = (0..n)
        .map(|i| match i {
            _ if i == m => "1".to_string(),
            0 => "0".to_string(),
            _ => format!("{i}/{m}"),
        })
        .collect();
    assemble(name, labels, Poset::chain(n), to.clone(), to, mul)
}

/// `Z_n` with the discrete order: `x·y = x+y`, `y→z = z-y`, `x⇝z = z-x`.
pub fn cyclic(n: usize, name: &str) -> FiniteAlgebra {
    let mul = table(n, |x, y| (x + y) % n);
    let to = table(n, |y, z| (z + n - y) % n);
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    assemble(name, labels, Poset::antichain(n), to.clone(), to, mul)
}

/// The five-element Heyting algebra `0 < a, b < c < 1`.
pub fn heyting_d5() -> FiniteAlgebra {
    let poset = Poset::from_pairs(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])
        .expect("d5 order is valid");
    heyting("heyting-d5", ["0", "a", "b", "c", "1"].map(String::from).to_vec(), poset)
}

/// Heyting algebra on a finite distributive lattice: `· = ∧`,
/// `x→y = max{z | x∧z ≤ y}`.
fn heyting(name: &str, labels: Vec<String>, poset: Poset) -> FiniteAlgebra {
    let n = poset.len();
    let meet = |x: Elem, y: Elem| {
        poset
            .greatest_of(poset.lower_bounds(Set::from_iter([x, y])))
            .expect("lattice")
    };
    let mul = table(n, meet);
    let to = table(n, |x, y| {
        let ok: Set = (0..n).filter(|&z| poset.leq(meet(x, z), y)).collect();
        poset.greatest_of(ok).expect("Heyting implication exists")
    });
    assemble(name, labels, poset, to.clone(), to, mul)
}

/// Componentwise product; element `(i, j)` has index `i * |b| + j`.
pub fn product(a: &FiniteAlgebra, b: &FiniteAlgebra, name: &str) -> Result<FiniteAlgebra> {
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    if n > MAX_CARRIER {
        return Err(Error::CarrierTooLarge(n));
    }
    let mul_a = a.mul_table().ok_or(Error::MissingTable("mul"))?;
    let mul_b = b.mul_table().ok_or(Error::MissingTable("mul"))?;
    let split = |x: Elem| (x / nb, x % nb);
    let lift = |ta: &[Elem], tb: &[Elem]| {
        table(n, |x, y| {
            let ((x1, x2), (y1, y2)) = (split(x), split(y));
            ta[x1 * na + y1] * nb + tb[x2 * nb + y2]
        })
    };
    let up = (0..n)
        .map(|x| {
            let (x1, x2) = split(x);
            (0..n)
                .filter(|&y| {
                    let (y1, y2) = split(y);
                    a.leq(x1, y1) && b.leq(x2, y2)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|x| {
            let (x1, x2) = split(x);
            format!("({},{})", a.label(x1), b.label(x2))
        })
        .collect();
    Ok(assemble(
        name,
        labels,
        Poset::from_up_rows(up),
        lift(a.to_table(), b.to_table()),
        lift(a.lto_table(), b.lto_table()),
        lift(mul_a, mul_b),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{check_extras, check_mtl, check_quantum_b, classify};

    #[test]
    fn shipped_entries_build() {
        for name in SHIPPED {
            let a = catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(a.name(), *name);
            assert!(check_quantum_b(&a).holds(), "{name}");
        }
    }

    #[test]
    fn labels() {
        assert_eq!(catalog("godel:3").unwrap().labels(), ["0", "a", "1"]);
        assert_eq!(catalog("lukasiewicz:3").unwrap().labels(), ["0", "1/2", "1"]);
        assert_eq!(catalog("trivial").unwrap().labels(), ["1"]);
        let p = catalog("prod(chain:2,chain:2)").unwrap();
        assert_eq!(p.labels(), ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
    }

    #[test]
    fn unknown_names() {
        for bad in ["godel:0", "godel:x", "prod(godel:2)", "nope", "prod(nope,godel:2)"] {
            assert!(matches!(catalog(bad), Err(Error::UnknownName(_))), "{bad}");
        }
        assert!(matches!(catalog("prod(godel:8,godel:9)"), Err(Error::CarrierTooLarge(72))));
    }

    #[test]
    fn advertised_classes() {
        let g3 = catalog("godel:3").unwrap();
        assert!(check_mtl(&g3).unwrap().pseudo_mtl);
        let l3 = catalog("lukasiewicz:3").unwrap();
        assert!(check_extras(&l3).unwrap().pseudo_mv.holds());
        let d5 = catalog("heyting-d5").unwrap();
        let ex = check_extras(&d5).unwrap();
        let v = ex.prelinearity.violation("prelinearity.to").unwrap();
        assert_eq!(v.witness, vec![1usize.into(), 2.into()]);
        let z2 = catalog("cyclic:2").unwrap();
        let s = classify(&z2);
        assert!(s.residuated && s.unital && !s.integral && !s.pseudo_hoop);
    }
}
