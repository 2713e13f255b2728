//! Boolean expressions over computed properties of an algebra.
//!
//! ```text
//! expr    := or
//! or      := and (("or" | "||") and)*
//! and     := unary (("and" | "&&") unary)*
//! unary   := ("not" | "!") unary | primary
//! primary := "(" expr ")" | "true" | "false" | ATOM | TERM ("==" | "!=") TERM
//! ```
//!
//! `ATOM` is a class flag (`pseudo_hoop`, `to_mtl`, ...), a law suite
//! (`mu_laws`, `coprime_laws`, ...) or an existence test (`subdirect_witness`,
//! `nonnormal_filter`). A law suite whose preconditions fail holds vacuously.
//! `TERM` is a filter family: `filters`, `PF_to`, `PF_lto`, `PF_vee`, `PF`;
//! a comparison whose families are undefined (no ∨-semilattice, not
//! integral residuated) is false.

use std::sync::OnceLock;

use crate::algebra::FiniteAlgebra;
use crate::bitset::Set;
use crate::classes::{classify, ClassSummary};
use crate::error::{Error, Result};
use crate::filters::{all_filters, mu_law_suite};
use crate::hoops::{
    coprime_laws, find_subdirect_witness, hoop_suite, is_normal_filter, least_element_normal,
    polar_laws, require_hoop,
};
use crate::primes::{classify_all, mtl_iff_theorem, prime_class_inclusions, prime_theorem_suite, PrimeClassification};
use crate::quantale::Quantale;
use crate::report::ClassReport;

pub const CLASS_ATOMS: &[&str] = &[
    "quantum_b",
    "unital",
    "integral",
    "residuated",
    "two_sided",
    "join_semilattice",
    "commutative",
    "pseudo_hoop",
    "bounded",
    "prelinear",
    "cancellative",
    "pseudo_bl",
    "pseudo_mv",
    "to_mtl",
    "lto_mtl",
    "pseudo_mtl",
];

pub const SUITE_ATOMS: &[&str] = &[
    "quantale_laws",
    "supercompact",
    "mu_laws",
    "polar_laws",
    "coprime_laws",
    "hoop_suite",
    "least_element_normal",
    "prime_inclusions",
    "prime_theorem",
    "mtl_iff",
];

pub const EXISTENCE_ATOMS: &[&str] = &["subdirect_witness", "nonnormal_filter"];

pub const TERMS: &[&str] = &["filters", "PF_to", "PF_lto", "PF_vee", "PF"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Const(bool),
    Atom(&'static str),
    Cmp { left: &'static str, equal: bool, right: &'static str },
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

/// A parsed predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate {
    source: String,
    expr: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Eq,
    Ne,
    Not,
    And,
    Or,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        let two: String = cs[i..(i + 2).min(cs.len())].iter().collect();
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            _ if two == "==" => {
                out.push(Tok::Eq);
                i += 2
            }
            _ if two == "!=" => {
                out.push(Tok::Ne);
                i += 2
            }
            _ if two == "&&" => {
                out.push(Tok::And);
                i += 2
            }
            _ if two == "||" => {
                out.push(Tok::Or);
                i += 2
            }
            '!' => {
                out.push(Tok::Not);
                i += 1
            }
            _ if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                let word: String = cs[start..i].iter().collect();
                out.push(match word.as_str() {
                    "not" => Tok::Not,
                    "and" => Tok::And,
                    "or" => Tok::Or,
                    _ => Tok::Ident(word),
                });
            }
            _ => return Err(Error::Predicate(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

fn known(list: &[&'static str], word: &str) -> Option<&'static str> {
    list.iter().copied().find(|&a| a == word)
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn or(&mut self) -> Result<Expr> {
        let mut e = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            e = Expr::Or(Box::new(e), Box::new(self.and()?));
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            e = Expr::And(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Not) {
            self.pos += 1;
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn term(&mut self) -> Result<&'static str> {
        match self.next() {
            Some(Tok::Ident(w)) => {
                known(TERMS, &w).ok_or_else(|| Error::Predicate(format!("`{w}` is not a filter family")))
            }
            t => Err(Error::Predicate(format!("expected a filter family, found {t:?}"))),
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::LParen) => {
                let e = self.or()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    t => Err(Error::Predicate(format!("expected `)`, found {t:?}"))),
                }
            }
            Some(Tok::Ident(w)) if w == "true" => Ok(Expr::Const(true)),
            Some(Tok::Ident(w)) if w == "false" => Ok(Expr::Const(false)),
            Some(Tok::Ident(w)) => {
                if let Some(left) = known(TERMS, &w) {
                    let equal = match self.next() {
                        Some(Tok::Eq) => true,
                        Some(Tok::Ne) => false,
                        t => return Err(Error::Predicate(format!("expected `==` or `!=`, found {t:?}"))),
                    };
                    let right = self.term()?;
                    return Ok(Expr::Cmp { left, equal, right });
                }
                [CLASS_ATOMS, SUITE_ATOMS, EXISTENCE_ATOMS]
                    .iter()
                    .find_map(|l| known(l, &w))
                    .map(Expr::Atom)
                    .ok_or_else(|| Error::Predicate(format!("unknown property `{w}`")))
            }
            t => Err(Error::Predicate(format!("unexpected token {t:?}"))),
        }
    }
}

/// Errors meaning "this property does not apply to this algebra".
fn inapplicable(e: &Error) -> bool {
    matches!(
        e,
        Error::PreconditionViolated(_)
            | Error::NotAHoop
            | Error::MissingTable(_)
            | Error::JoinMissing(..)
            | Error::MeetMissing(..)
            | Error::NotUnital
    )
}

fn vacuous(r: Result<ClassReport>) -> Result<bool> {
    match r {
        Ok(rep) => Ok(rep.holds()),
        Err(e) if inapplicable(&e) => Ok(true),
        Err(e) => Err(e),
    }
}

/// Lazily computed facts about one algebra.
struct Ctx<'a> {
    alg: &'a FiniteAlgebra,
    cap: usize,
    summary: OnceLock<ClassSummary>,
    primes: OnceLock<Option<Vec<PrimeClassification>>>,
}

impl Ctx<'_> {
    fn summary(&self) -> &ClassSummary {
        self.summary.get_or_init(|| classify(self.alg))
    }

    fn primes(&self) -> Result<Option<&[PrimeClassification]>> {
        if self.primes.get().is_none() {
            let v = match classify_all(self.alg, self.cap) {
                Ok(v) => Some(v),
                Err(e) if inapplicable(&e) => None,
                Err(e) => return Err(e),
            };
            let _ = self.primes.set(v);
        }
        Ok(self.primes.get().expect("set above").as_deref())
    }

    fn family(&self, term: &str) -> Result<Option<Vec<Set>>> {
        let Some(cs) = self.primes()? else { return Ok(None) };
        let pick = |c: &PrimeClassification| match term {
            "filters" => true,
            "PF_to" => c.to_prime,
            "PF_lto" => c.lto_prime,
            "PF_vee" => c.vee_prime,
            "PF" => c.prime,
            _ => unreachable!("terms are validated by the parser"),
        };
        Ok(Some(cs.iter().filter(|c| pick(c)).map(|c| c.filter.set()).collect()))
    }

    fn atom(&self, a: &str) -> Result<bool> {
        let s = self.summary();
        let flag = match a {
            "quantum_b" => Some(s.quantum_b),
            "unital" => Some(s.unital),
            "integral" => Some(s.integral),
            "residuated" => Some(s.residuated),
            "two_sided" => Some(s.two_sided),
            "join_semilattice" => Some(s.join_semilattice),
            "commutative" => Some(s.commutative),
            "pseudo_hoop" => Some(s.pseudo_hoop),
            "bounded" => Some(s.bounded),
            "prelinear" => Some(s.prelinear),
            "cancellative" => Some(s.cancellative),
            "pseudo_bl" => Some(s.pseudo_bl),
            "pseudo_mv" => Some(s.pseudo_mv),
            "to_mtl" => Some(s.to_mtl),
            "lto_mtl" => Some(s.lto_mtl),
            "pseudo_mtl" => Some(s.pseudo_mtl),
            _ => None,
        };
        if let Some(f) = flag {
            return Ok(f);
        }
        let (alg, cap) = (self.alg, self.cap);
        match a {
            "quantale_laws" => vacuous(Quantale::new(alg, cap).check_laws()),
            "supercompact" => vacuous(Quantale::new(alg, cap).supercompact_characterization()),
            "mu_laws" => vacuous(mu_law_suite(alg, cap)),
            "polar_laws" => vacuous(polar_laws(alg)),
            "coprime_laws" => vacuous(coprime_laws(alg)),
            "hoop_suite" => vacuous(hoop_suite(alg)),
            "least_element_normal" => vacuous(least_element_normal(alg, cap)),
            "prime_inclusions" => vacuous(prime_class_inclusions(alg, cap)),
            "prime_theorem" => vacuous(prime_theorem_suite(alg, cap)),
            "mtl_iff" => vacuous(mtl_iff_theorem(alg, cap)),
            "subdirect_witness" => match require_hoop(alg) {
                Ok(_) => Ok(find_subdirect_witness(alg)?.is_some()),
                Err(e) if inapplicable(&e) => Ok(false),
                Err(e) => Err(e),
            },
            "nonnormal_filter" => Ok(all_filters(alg, cap)?.iter().any(|f| !is_normal_filter(alg, f))),
            _ => unreachable!("atoms are validated by the parser"),
        }
    }

    fn eval(&self, e: &Expr) -> Result<bool> {
        Ok(match e {
            Expr::Const(b) => *b,
            Expr::Atom(a) => self.atom(a)?,
            Expr::Cmp { left, equal, right } => match (self.family(left)?, self.family(right)?) {
                (Some(l), Some(r)) => (l == r) == *equal,
                _ => false,
            },
            Expr::Not(x) => !self.eval(x)?,
            Expr::And(x, y) => self.eval(x)? && self.eval(y)?,
            Expr::Or(x, y) => self.eval(x)? || self.eval(y)?,
        })
    }
}

impl Predicate {
    pub fn parse(source: &str) -> Result<Self> {
        let mut p = Parser { toks: lex(source)?, pos: 0 };
        if p.toks.is_empty() {
            return Err(Error::Predicate("empty predicate".into()));
        }
        let expr = p.or()?;
        if let Some(t) = p.peek() {
            return Err(Error::Predicate(format!("trailing input at {t:?}")));
        }
        Ok(Predicate { source: source.to_string(), expr })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Evaluates on `alg`, enumerating `U(A)` up to `cap` sets where needed.
    pub fn eval(&self, alg: &FiniteAlgebra, cap: usize) -> Result<bool> {
        let ctx = Ctx { alg, cap, summary: OnceLock::new(), primes: OnceLock::new() };
        ctx.eval(&self.expr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quantale::DEFAULT_CAP;

    fn eval(src: &str, name: &str) -> bool {
        Predicate::parse(src).unwrap().eval(&catalog(name).unwrap(), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn parsing() {
        for ok in ["true", "not pseudo_mtl and PF != PF_vee", "!(commutative)", "(PF_to == PF_vee) || false"] {
            assert!(Predicate::parse(ok).is_ok(), "{ok}");
        }
        for bad in ["", "PF", "PF == commutative", "nope", "(true", "true false", "a $ b"] {
            assert!(matches!(Predicate::parse(bad), Err(Error::Predicate(_))), "{bad}");
        }
    }

    #[test]
    fn evaluation() {
        assert!(!eval("false", "godel:3"));
        assert!(eval("pseudo_hoop and pseudo_mtl and PF == PF_vee", "godel:3"));
        assert!(eval("PF_to != PF_vee and not to_mtl", "heyting-d5"));
        assert!(eval("coprime_laws and mu_laws", "heyting-d5"));
        // cyclic:2 is not a hoop, so hoop laws hold vacuously and filter families are undefined
        assert!(eval("coprime_laws", "cyclic:2"));
        assert!(!eval("PF == PF", "cyclic:2"));
        assert!(!eval("nonnormal_filter", "lukasiewicz:4"));
    }
}
