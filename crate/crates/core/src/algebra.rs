//! The finite ordered algebra every check runs against.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::bitset::{Set, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::order::Poset;

/// Carrier element, an index into the algebra's tables.
pub type Elem = usize;

/// Raw, unvalidated ingredients of a [`FiniteAlgebra`].
///
/// Tables are row-major `n × n`: entry `x * n + y` holds `x ∘ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraParts {
    pub name: String,
    pub labels: Vec<String>,
    pub poset: Poset,
    pub to: Vec<Elem>,
    pub lto: Vec<Elem>,
    pub mul: Option<Vec<Elem>>,
    pub unit: Option<Elem>,
    pub bottom: Option<Elem>,
}

type Cached = OnceLock<std::result::Result<Vec<Elem>, (Elem, Elem)>>;

/// A finite poset with the two implications `→` (`to`) and `⇝` (`lto`),
/// an optional product `·`, and the inferred unit and least element.
///
/// Immutable after construction; joins and meets are derived from the
/// order on first use.
pub struct FiniteAlgebra {
    name: String,
    labels: Vec<String>,
    poset: Poset,
    to: Vec<Elem>,
    lto: Vec<Elem>,
    mul: Option<Vec<Elem>>,
    unit: Option<Elem>,
    bottom: Option<Elem>,
    join: Cached,
    meet: Cached,
}

impl FiniteAlgebra {
    /// Validates `parts` and builds the algebra.
    ///
    /// The unit is inferred from the tables and the bottom from the order;
    /// declared values must agree with what is inferred.
    pub fn new(parts: AlgebraParts) -> Result<Self> {
        let AlgebraParts { name, labels, poset, to, lto, mul, unit, bottom } = parts;
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        if labels.len() != n {
            return Err(Error::Format(format!("{} labels for {} elements", labels.len(), n)));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        check_table("to", &to, n)?;
        check_table("lto", &lto, n)?;
        if let Some(m) = &mul {
            check_table("mul", m, n)?;
        }

        let inferred_unit = scan_units(n, &to, &lto)?;
        if let Some(d) = unit {
            if d >= n {
                return Err(Error::ElementOutOfRange(d));
            }
            if inferred_unit != Some(d) {
                return Err(Error::UnitMismatch { declared: d, inferred: inferred_unit });
            }
        }
        let inferred_bottom = poset.bottom();
        if let Some(d) = bottom {
            if d >= n {
                return Err(Error::ElementOutOfRange(d));
            }
            if inferred_bottom != Some(d) {
                return Err(Error::BottomMismatch { declared: d, inferred: inferred_bottom });
            }
        }

        Ok(FiniteAlgebra {
            name,
            labels,
            poset,
            to,
            lto,
            mul,
            unit: inferred_unit,
            bottom: inferred_bottom,
            join: OnceLock::new(),
            meet: OnceLock::new(),
        })
    }

    /// Returns the validated ingredients, e.g. for editing and rebuilding.
    pub fn to_parts(&self) -> AlgebraParts {
        AlgebraParts {
            name: self.name.clone(),
            labels: self.labels.clone(),
            poset: self.poset.clone(),
            to: self.to.clone(),
            lto: self.lto.clone(),
            mul: self.mul.clone(),
            unit: self.unit,
            bottom: self.bottom,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    /// Always false: carriers are non-empty by construction.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    #[inline]
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.poset.leq(x, y)
    }

    /// `x → y`
    #[inline]
    pub fn to(&self, x: Elem, y: Elem) -> Elem {
        self.to[x * self.len() + y]
    }

    /// `x ⇝ y`
    #[inline]
    pub fn lto(&self, x: Elem, y: Elem) -> Elem {
        self.lto[x * self.len() + y]
    }

    /// `x · y`.
    ///
    /// Panics when the algebra has no product table; callers gate on
    /// [`FiniteAlgebra::require_mul`].
    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul.as_ref().expect("algebra has no product table")[x * self.len() + y]
    }

    pub fn has_mul(&self) -> bool {
        self.mul.is_some()
    }

    pub fn require_mul(&self) -> Result<()> {
        if self.mul.is_some() {
            Ok(())
        } else {
            Err(Error::MissingTable("mul"))
        }
    }

    pub fn to_table(&self) -> &[Elem] {
        &self.to
    }

    pub fn lto_table(&self) -> &[Elem] {
        &self.lto
    }

    pub fn mul_table(&self) -> Option<&[Elem]> {
        self.mul.as_deref()
    }

    pub fn unit(&self) -> Option<Elem> {
        self.unit
    }

    pub fn require_unit(&self) -> Result<Elem> {
        self.unit.ok_or(Error::NotUnital)
    }

    pub fn bottom(&self) -> Option<Elem> {
        self.bottom
    }

    pub fn top(&self) -> Option<Elem> {
        self.poset.top()
    }

    /// True when the unit exists and is the greatest element.
    pub fn is_integral(&self) -> bool {
        matches!((self.unit, self.top()), (Some(u), Some(t)) if u == t)
    }

    pub fn full(&self) -> Set {
        Set::full(self.len())
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<Elem> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Renders a set as `{a,b}` in carrier order.
    pub fn render_set(&self, s: Set) -> String {
        let items: Vec<&str> = s.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", items.join(","))
    }

    /// Join `x ∨ y`, computed from the order.
    pub fn join(&self, x: Elem, y: Elem) -> Result<Elem> {
        let t = self.join_table()?;
        Ok(t[x * self.len() + y])
    }

    /// Meet `x ∧ y`, computed from the order.
    pub fn meet(&self, x: Elem, y: Elem) -> Result<Elem> {
        let t = self.meet_table()?;
        Ok(t[x * self.len() + y])
    }

    /// The full join table, or the first pair (lexicographically) without a join.
    pub fn join_table(&self) -> Result<&[Elem]> {
        let p = &self.poset;
        self.join
            .get_or_init(|| bound_table(p, |s| p.least_of(p.upper_bounds(s))))
            .as_deref()
            .map_err(|&(x, y)| Error::JoinMissing(x, y))
    }

    pub fn meet_table(&self) -> Result<&[Elem]> {
        let p = &self.poset;
        self.meet
            .get_or_init(|| bound_table(p, |s| p.greatest_of(p.lower_bounds(s))))
            .as_deref()
            .map_err(|&(x, y)| Error::MeetMissing(x, y))
    }

    /// Meet of `x` and `y` if it exists, without requiring a full meet table.
    pub fn meet_opt(&self, x: Elem, y: Elem) -> Option<Elem> {
        match self.meet_table() {
            Ok(t) => Some(t[x * self.len() + y]),
            Err(_) => self.poset.greatest_of(self.poset.lower_bounds(Set::from_iter([x, y]))),
        }
    }

    /// `x ∨ y = 1` read as: the unit is the only common upper bound of `x` and `y`.
    pub fn join_is_unit(&self, x: Elem, y: Elem) -> bool {
        match self.unit {
            Some(u) => self.poset.up(x).intersection(self.poset.up(y)) == Set::singleton(u),
            None => false,
        }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        match &self.mul {
            Some(m) => (0..n).all(|x| (0..n).all(|y| m[x * n + y] == m[y * n + x])),
            None => self.to == self.lto,
        }
    }

    /// Relabels the algebra by `perm`: old element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[Elem]) -> FiniteAlgebra {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        let mut up = vec![Set::EMPTY; n];
        for x in 0..n {
            labels[perm[x]] = self.labels[x].clone();
            up[perm[x]] = self.poset.up(x).iter().map(|y| perm[y]).collect();
        }
        let remap = |t: &[Elem]| {
            let mut out = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    out[perm[x] * n + perm[y]] = perm[t[x * n + y]];
                }
            }
            out
        };
        FiniteAlgebra {
            name: self.name.clone(),
            labels,
            poset: Poset::from_up_rows(up),
            to: remap(&self.to),
            lto: remap(&self.lto),
            mul: self.mul.as_deref().map(remap),
            unit: self.unit.map(|u| perm[u]),
            bottom: self.bottom.map(|b| perm[b]),
            join: OnceLock::new(),
            meet: OnceLock::new(),
        }
    }
}

fn check_table(table: &'static str, t: &[Elem], n: usize) -> Result<()> {
    if t.len() != n * n {
        return Err(Error::TableShape { table, len: t.len(), expected: n * n });
    }
    if let Some(&value) = t.iter().find(|&&v| v >= n) {
        return Err(Error::TableValue { table, value });
    }
    Ok(())
}

/// All `u` with `u → x = u ⇝ x = x` for every `x`.
pub(crate) fn scan_units(n: usize, to: &[Elem], lto: &[Elem]) -> Result<Option<Elem>> {
    let mut found = None;
    for u in 0..n {
        if (0..n).all(|x| to[u * n + x] == x && lto[u * n + x] == x) {
            if let Some(prev) = found {
                return Err(Error::MultipleUnits(prev, u));
            }
            found = Some(u);
        }
    }
    Ok(found)
}

fn bound_table(
    p: &Poset,
    f: impl Fn(Set) -> Option<Elem>,
) -> std::result::Result<Vec<Elem>, (Elem, Elem)> {
    let n = p.len();
    let mut t = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            t[x * n + y] = f(Set::from_iter([x, y])).ok_or((x, y))?;
        }
    }
    Ok(t)
}

impl Clone for FiniteAlgebra {
    fn clone(&self) -> Self {
        FiniteAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            poset: self.poset.clone(),
            to: self.to.clone(),
            lto: self.lto.clone(),
            mul: self.mul.clone(),
            unit: self.unit,
            bottom: self.bottom,
            join: OnceLock::new(),
            meet: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.labels == other.labels
            && self.poset == other.poset
            && self.to == other.to
            && self.lto == other.lto
            && self.mul == other.mul
            && self.unit == other.unit
            && self.bottom == other.bottom
    }
}

impl Eq for FiniteAlgebra {}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteAlgebra")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("to", &self.to)
            .field("lto", &self.lto)
            .field("mul", &self.mul)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}
