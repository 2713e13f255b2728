//! Membership tests for quantum B-algebras, residuated posets, pseudo-hoops
//! and their refinements.
//!
//! Every tuple law lives in one registry, [`element_laws`], so a reported
//! witness can always be re-evaluated with [`law_holds_at`].

use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::report::{scan1, scan2, scan3, ClassReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Group {
    QuantumB,
    Residuated,
    PseudoHoop,
    Prelinear,
    Cancellative,
    DoubleNegation,
}

/// A law quantified over tuples of carrier elements.
pub struct ElementLaw {
    pub id: &'static str,
    pub arity: usize,
    eval: fn(&FiniteAlgebra, &[Elem]) -> bool,
    group: Group,
}

impl ElementLaw {
    pub fn holds_at(&self, a: &FiniteAlgebra, w: &[Elem]) -> bool {
        (self.eval)(a, w)
    }
}

fn unit(a: &FiniteAlgebra) -> Elem {
    a.unit().expect("law requires a unit")
}

fn bottom(a: &FiniteAlgebra) -> Elem {
    a.bottom().expect("law requires a least element")
}

static LAWS: &[ElementLaw] = &[
    // y→z ≤ (x→y)→(x→z)
    ElementLaw {
        id: "qb.to_exchange",
        arity: 3,
        group: Group::QuantumB,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            a.leq(a.to(y, z), a.to(a.to(x, y), a.to(x, z)))
        },
    },
    // y⇝z ≤ (x⇝y)⇝(x⇝z)
    ElementLaw {
        id: "qb.lto_exchange",
        arity: 3,
        group: Group::QuantumB,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            a.leq(a.lto(y, z), a.lto(a.lto(x, y), a.lto(x, z)))
        },
    },
    // y ≤ z ⇒ x→y ≤ x→z
    ElementLaw {
        id: "qb.to_monotone",
        arity: 3,
        group: Group::QuantumB,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            !a.leq(y, z) || a.leq(a.to(x, y), a.to(x, z))
        },
    },
    // x ≤ y→z ⇔ y ≤ x⇝z
    ElementLaw {
        id: "qb.adjoint",
        arity: 3,
        group: Group::QuantumB,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            a.leq(x, a.to(y, z)) == a.leq(y, a.lto(x, z))
        },
    },
    // x·y ≤ z ⇔ x ≤ y→z
    ElementLaw {
        id: "res.adjoint_to",
        arity: 3,
        group: Group::Residuated,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            a.leq(a.mul(x, y), z) == a.leq(x, a.to(y, z))
        },
    },
    // x·y ≤ z ⇔ y ≤ x⇝z
    ElementLaw {
        id: "res.adjoint_lto",
        arity: 3,
        group: Group::Residuated,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            a.leq(a.mul(x, y), z) == a.leq(y, a.lto(x, z))
        },
    },
    ElementLaw {
        id: "res.assoc",
        arity: 3,
        group: Group::Residuated,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z))
        },
    },
    // x ≤ y ⇒ x·z ≤ y·z and z·x ≤ z·y
    ElementLaw {
        id: "res.monotone",
        arity: 3,
        group: Group::Residuated,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            !a.leq(x, y) || (a.leq(a.mul(x, z), a.mul(y, z)) && a.leq(a.mul(z, x), a.mul(z, y)))
        },
    },
    ElementLaw {
        id: "ph.unit",
        arity: 1,
        group: Group::PseudoHoop,
        eval: |a, w| {
            let (x, u) = (w[0], unit(a));
            a.mul(x, u) == x && a.mul(u, x) == x
        },
    },
    ElementLaw {
        id: "ph.self_implication",
        arity: 1,
        group: Group::PseudoHoop,
        eval: |a, w| {
            let (x, u) = (w[0], unit(a));
            a.to(x, x) == u && a.lto(x, x) == u
        },
    },
    // (x·y)→z = x→(y→z)
    ElementLaw {
        id: "ph.curry_to",
        arity: 3,
        group: Group::PseudoHoop,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            a.to(a.mul(x, y), z) == a.to(x, a.to(y, z))
        },
    },
    // (x·y)⇝z = y⇝(x⇝z)
    ElementLaw {
        id: "ph.curry_lto",
        arity: 3,
        group: Group::PseudoHoop,
        eval: |a, w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            a.lto(a.mul(x, y), z) == a.lto(y, a.lto(x, z))
        },
    },
    // (x→y)·x = (y→x)·y = x·(x⇝y) = y·(y⇝x)
    ElementLaw {
        id: "ph.divisibility",
        arity: 2,
        group: Group::PseudoHoop,
        eval: |a, w| {
            let (x, y) = (w[0], w[1]);
            let d = a.mul(a.to(x, y), x);
            d == a.mul(a.to(y, x), y) && d == a.mul(x, a.lto(x, y)) && d == a.mul(y, a.lto(y, x))
        },
    },
    // x ≤ y ⇔ x→y = 1 ⇔ x⇝y = 1
    ElementLaw {
        id: "ph.order",
        arity: 2,
        group: Group::PseudoHoop,
        eval: |a, w| {
            let (x, y, u) = (w[0], w[1], unit(a));
            let le = a.leq(x, y);
            le == (a.to(x, y) == u) && le == (a.lto(x, y) == u)
        },
    },
    // x∧y = (x→y)·x = x·(x⇝y)
    ElementLaw {
        id: "ph.meet",
        arity: 2,
        group: Group::PseudoHoop,
        eval: |a, w| {
            let (x, y) = (w[0], w[1]);
            match a.meet_opt(x, y) {
                Some(m) => m == a.mul(a.to(x, y), x) && m == a.mul(x, a.lto(x, y)),
                None => false,
            }
        },
    },
    // (x→y)∨(y→x) = 1
    ElementLaw {
        id: "prelinearity.to",
        arity: 2,
        group: Group::Prelinear,
        eval: |a, w| a.join_is_unit(a.to(w[0], w[1]), a.to(w[1], w[0])),
    },
    // (x⇝y)∨(y⇝x) = 1
    ElementLaw {
        id: "prelinearity.lto",
        arity: 2,
        group: Group::Prelinear,
        eval: |a, w| a.join_is_unit(a.lto(w[0], w[1]), a.lto(w[1], w[0])),
    },
    // x·y = x·z ⇒ y = z
    ElementLaw {
        id: "cancellative.left",
        arity: 3,
        group: Group::Cancellative,
        eval: |a, w| a.mul(w[0], w[1]) != a.mul(w[0], w[2]) || w[1] == w[2],
    },
    // s·x = t·x ⇒ s = t, witness (s, t, x)
    ElementLaw {
        id: "cancellative.right",
        arity: 3,
        group: Group::Cancellative,
        eval: |a, w| a.mul(w[0], w[2]) != a.mul(w[1], w[2]) || w[0] == w[1],
    },
    // x⁻~ = x = x~⁻ with x⁻ = x→0, x~ = x⇝0
    ElementLaw {
        id: "mv.double_negation",
        arity: 1,
        group: Group::DoubleNegation,
        eval: |a, w| {
            let (x, z) = (w[0], bottom(a));
            a.lto(a.to(x, z), z) == x && a.to(a.lto(x, z), z) == x
        },
    },
];

/// Every registered tuple law.
pub fn element_laws() -> &'static [ElementLaw] {
    LAWS
}

/// Re-evaluates a registered law at `witness`; `None` for unknown ids or a
/// witness of the wrong arity.
pub fn law_holds_at(alg: &FiniteAlgebra, law: &str, witness: &[Elem]) -> Option<bool> {
    let l = LAWS.iter().find(|l| l.id == law)?;
    (l.arity == witness.len()).then(|| l.holds_at(alg, witness))
}

fn run_group(alg: &FiniteAlgebra, group: Group, rep: &mut ClassReport) {
    let n = alg.len();
    for law in LAWS.iter().filter(|l| l.group == group) {
        match law.arity {
            1 => scan1(rep, n, law.id, |x| law.holds_at(alg, &[x])),
            2 => scan2(rep, n, law.id, |x, y| law.holds_at(alg, &[x, y])),
            3 => scan3(rep, n, law.id, |x, y, z| law.holds_at(alg, &[x, y, z])),
            _ => unreachable!("law arities are 1..=3"),
        }
    }
}

/// The four quantum B-algebra axioms over all triples.
pub fn check_quantum_b(alg: &FiniteAlgebra) -> ClassReport {
    let mut rep = ClassReport::new("quantum_b");
    run_group(alg, Group::QuantumB, &mut rep);
    rep
}

/// Re-scans the tables for the unit `u` (`u→x = u⇝x = x` for all `x`).
pub fn check_unital(alg: &FiniteAlgebra) -> Result<Option<Elem>> {
    crate::algebra::scan_units(alg.len(), alg.to_table(), alg.lto_table())
}

/// Unit exists and is the greatest element.
pub fn check_integral(alg: &FiniteAlgebra) -> bool {
    alg.is_integral()
}

/// Residuation of `·` against both implications, associativity, and
/// monotonicity of `·`.
pub fn check_residuated(alg: &FiniteAlgebra) -> Result<ClassReport> {
    alg.require_mul()?;
    let mut rep = ClassReport::new("residuated");
    run_group(alg, Group::Residuated, &mut rep);
    Ok(rep)
}

/// `x·y ≤ x` and `x·y ≤ y` for all pairs.
pub fn check_two_sided(alg: &FiniteAlgebra) -> Result<bool> {
    alg.require_mul()?;
    Ok(alg
        .elements()
        .all(|x| alg.elements().all(|y| alg.leq(alg.mul(x, y), x) && alg.leq(alg.mul(x, y), y))))
}

/// Succeeds when every pair has a join; the table is cached on the algebra.
pub fn check_join_semilattice(alg: &FiniteAlgebra) -> Result<()> {
    alg.join_table().map(|_| ())
}

/// Pseudo-hoop axioms (unit, `x→x = 1`, currying for both implications,
/// divisibility), the induced order, and `x∧y = (x→y)·x = x·(x⇝y)`.
pub fn check_pseudo_hoop(alg: &FiniteAlgebra) -> Result<ClassReport> {
    alg.require_mul()?;
    let mut rep = ClassReport::new("pseudo_hoop");
    if alg.unit().is_none() {
        rep.record::<usize>("ph.unit", []);
        return Ok(rep);
    }
    run_group(alg, Group::PseudoHoop, &mut rep);
    Ok(rep)
}

/// Verdicts for the pseudo-hoop refinements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtrasReport {
    pub bounded: ClassReport,
    pub prelinearity: ClassReport,
    pub cancellative: ClassReport,
    pub pseudo_bl: ClassReport,
    pub pseudo_mv: ClassReport,
}

/// Bounded, prelinear, cancellative, pseudo BL and pseudo MV checks.
pub fn check_extras(alg: &FiniteAlgebra) -> Result<ExtrasReport> {
    alg.require_mul()?;
    alg.require_unit()?;

    let mut bounded = ClassReport::new("bounded");
    if alg.bottom().is_none() {
        bounded.record::<usize>("bounded.least_element", []);
    }

    let mut prelinearity = ClassReport::new("prelinearity");
    run_group(alg, Group::Prelinear, &mut prelinearity);

    let mut cancellative = ClassReport::new("cancellative");
    run_group(alg, Group::Cancellative, &mut cancellative);

    let mut pseudo_bl = ClassReport::new("pseudo_bl");
    pseudo_bl.absorb(bounded.clone());
    if let Err(Error::JoinMissing(x, y)) = alg.join_table() {
        pseudo_bl.record("lattice.join", [x, y]);
    }
    if let Err(Error::MeetMissing(x, y)) = alg.meet_table() {
        pseudo_bl.record("lattice.meet", [x, y]);
    }
    pseudo_bl.absorb(prelinearity.clone());

    let mut pseudo_mv = ClassReport::new("pseudo_mv");
    pseudo_mv.absorb(pseudo_bl.clone());
    if alg.bottom().is_some() {
        run_group(alg, Group::DoubleNegation, &mut pseudo_mv);
    }

    Ok(ExtrasReport { bounded, prelinearity, cancellative, pseudo_bl, pseudo_mv })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtlFlags {
    pub to_mtl: bool,
    pub lto_mtl: bool,
    pub pseudo_mtl: bool,
}

/// `(x→y)∨(y→x) = 1` and the `⇝` analogue, using the join table.
pub fn check_mtl(alg: &FiniteAlgebra) -> Result<MtlFlags> {
    let u = alg.require_unit()?;
    let join = alg.join_table()?;
    let n = alg.len();
    let prelinear = |imp: &dyn Fn(Elem, Elem) -> Elem| {
        (0..n).all(|x| (0..n).all(|y| join[imp(x, y) * n + imp(y, x)] == u))
    };
    let to_mtl = prelinear(&|x, y| alg.to(x, y));
    let lto_mtl = prelinear(&|x, y| alg.lto(x, y));
    Ok(MtlFlags { to_mtl, lto_mtl, pseudo_mtl: to_mtl && lto_mtl })
}

/// Position of an algebra in the class hierarchy.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub quantum_b: bool,
    pub unital: bool,
    pub integral: bool,
    pub residuated: bool,
    pub two_sided: bool,
    pub join_semilattice: bool,
    pub commutative: bool,
    pub pseudo_hoop: bool,
    pub bounded: bool,
    pub prelinear: bool,
    pub cancellative: bool,
    pub pseudo_bl: bool,
    pub pseudo_mv: bool,
    pub to_mtl: bool,
    pub lto_mtl: bool,
    pub pseudo_mtl: bool,
}

impl ClassSummary {
    /// Names of the classes that hold, most general first.
    pub fn names(&self) -> Vec<&'static str> {
        let flags = [
            (self.quantum_b, "quantum_b"),
            (self.unital, "unital"),
            (self.integral, "integral"),
            (self.residuated, "residuated"),
            (self.two_sided, "two_sided"),
            (self.join_semilattice, "join_semilattice"),
            (self.commutative, "commutative"),
            (self.pseudo_hoop, "pseudo_hoop"),
            (self.bounded, "bounded"),
            (self.prelinear, "prelinear"),
            (self.cancellative, "cancellative"),
            (self.pseudo_bl, "pseudo_bl"),
            (self.pseudo_mv, "pseudo_mv"),
            (self.to_mtl, "to_mtl"),
            (self.lto_mtl, "lto_mtl"),
            (self.pseudo_mtl, "pseudo_mtl"),
        ];
        flags.iter().filter(|(b, _)| *b).map(|(_, s)| *s).collect()
    }
}

/// Runs every class check and collects the verdicts.
pub fn classify(alg: &FiniteAlgebra) -> ClassSummary {
    let mut s = ClassSummary {
        quantum_b: check_quantum_b(alg).holds(),
        unital: alg.unit().is_some(),
        integral: check_integral(alg),
        join_semilattice: check_join_semilattice(alg).is_ok(),
        commutative: alg.is_commutative(),
        bounded: alg.bottom().is_some(),
        ..Default::default()
    };
    if alg.has_mul() {
        s.residuated = check_residuated(alg).map(|r| r.holds()).unwrap_or(false);
        s.two_sided = s.residuated && check_two_sided(alg).unwrap_or(false);
        s.pseudo_hoop = check_pseudo_hoop(alg).map(|r| r.holds()).unwrap_or(false);
        if s.pseudo_hoop {
            if let Ok(ex) = check_extras(alg) {
                s.prelinear = ex.prelinearity.holds();
                s.cancellative = ex.cancellative.holds();
                s.pseudo_bl = ex.pseudo_bl.holds();
                s.pseudo_mv = ex.pseudo_mv.holds();
            }
        }
    }
    if s.integral && s.residuated && s.join_semilattice {
        if let Ok(f) = check_mtl(alg) {
            s.to_mtl = f.to_mtl;
            s.lto_mtl = f.lto_mtl;
            s.pseudo_mtl = f.pseudo_mtl;
        }
    }
    s
}
