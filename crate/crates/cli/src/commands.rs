use serde_json::{json, Value};

use qbforge::classes::{check_pseudo_hoop, check_quantum_b, check_residuated, classify};
use qbforge::filters::{all_filters, mu_law_suite};
use qbforge::forge::catalog::SHIPPED;
use qbforge::forge::{run_sweep, SearchSpec, TargetClass};
use qbforge::format::{to_text, AlgebraFile};
use qbforge::hoops::{find_subdirect_witness, polar, polar_embedding, polar_laws, subdirect_witness};
use qbforge::primes::{
    classify_all, mtl_iff_theorem, prime_class_inclusions, prime_extension, prime_theorem_suite, PrimeClassification,
};
use qbforge::quantale::FactorSide;
use qbforge::{catalog, Error, Filter, FiniteAlgebra, Quantale, Set};

use crate::input::{parse_elem, parse_set, parse_upper};
use crate::report::{Report, VerdictOut};

/// Errors that make a command's question meaningless (exit 2).
pub type CmdResult = Result<(), String>;

fn labels(alg: &FiniteAlgebra, s: Set) -> Vec<String> {
    s.iter().map(|x| alg.label(x).to_string()).collect()
}

/// Suites whose preconditions fail are skipped rather than reported.
fn applicable<T>(r: qbforge::Result<T>) -> Result<Option<T>, String> {
    match r {
        Ok(rep) => Ok(Some(rep)),
        Err(
            Error::PreconditionViolated(_)
            | Error::NotAHoop
            | Error::MissingTable(_)
            | Error::JoinMissing(..)
            | Error::NotUnital,
        ) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

pub fn validate(alg: &FiniteAlgebra, rep: &mut Report) -> CmdResult {
    let summary = classify(alg);
    rep.line(format!("algebra: {} (size {})", alg.name(), alg.len()));
    let all = [
        ("quantum_b", summary.quantum_b),
        ("unital", summary.unital),
        ("integral", summary.integral),
        ("residuated", summary.residuated),
        ("two_sided", summary.two_sided),
        ("join_semilattice", summary.join_semilattice),
        ("commutative", summary.commutative),
        ("pseudo_hoop", summary.pseudo_hoop),
        ("bounded", summary.bounded),
        ("prelinear", summary.prelinear),
        ("cancellative", summary.cancellative),
        ("pseudo_bl", summary.pseudo_bl),
        ("pseudo_mv", summary.pseudo_mv),
        ("to_mtl", summary.to_mtl),
        ("lto_mtl", summary.lto_mtl),
        ("pseudo_mtl", summary.pseudo_mtl),
    ];
    for (name, holds) in all {
        rep.line(format!("  [{}] {name}", if holds { "x" } else { " " }));
    }
    rep.data = json!({ "name": alg.name(), "size": alg.len(), "classes": summary.names() });
    rep.verdict(VerdictOut::from_report(alg, &check_quantum_b(alg)));
    if alg.has_mul() {
        rep.verdict(VerdictOut::from_report(alg, &check_residuated(alg).map_err(|e| e.to_string())?));
        if let Some(ph) = applicable(check_pseudo_hoop(alg))? {
            if !ph.holds() {
                rep.line("pseudo-hoop axioms:");
                for v in ph.violations() {
                    let w: Vec<String> = v.witness.iter().map(|w| w.render(alg)).collect();
                    rep.line(format!("  {} fails at ({})", v.law, w.join(", ")));
                }
            }
        }
    }
    Ok(())
}

fn prime_row(alg: &FiniteAlgebra, c: &PrimeClassification) -> (String, Value) {
    let mark = |b: bool| if b { "yes" } else { "no" };
    let flag = if c.vee_prime && !c.to_prime { "  <- ∨-prime, not →-prime" } else { "" };
    let line = format!(
        "  {:<24} →-prime {:<3} ⇝-prime {:<3} ∨-prime {:<3} prime {}{flag}",
        alg.render_set(c.filter.set()),
        mark(c.to_prime),
        mark(c.lto_prime),
        mark(c.vee_prime),
        mark(c.prime)
    );
    let data = json!({
        "filter": labels(alg, c.filter.set()),
        "to_prime": c.to_prime,
        "lto_prime": c.lto_prime,
        "vee_prime": c.vee_prime,
        "prime": c.prime,
    });
    (line, data)
}

pub fn filters(alg: &FiniteAlgebra, cap: usize, primes: bool, rep: &mut Report) -> CmdResult {
    let lat = all_filters(alg, cap).map_err(|e| e.to_string())?;
    rep.line(format!("{} filters", lat.len()));
    for f in lat.iter() {
        rep.line(format!("  {}", alg.render_set(f.set())));
    }
    let mut data = json!({ "filters": lat.iter().map(|f| labels(alg, f.set())).collect::<Vec<_>>() });
    if let Some(mu) = applicable(mu_law_suite(alg, cap))? {
        rep.verdict(VerdictOut::from_report(alg, &mu));
    }
    if primes {
        match applicable(classify_all(alg, cap))? {
            None => rep.line("prime classification needs an integral residuated ∨-semilattice"),
            Some(classes) => {
                rep.line("prime classification:");
                let mut rows = Vec::new();
                for c in &classes {
                    let (line, row) = prime_row(alg, c);
                    rep.line(line);
                    rows.push(row);
                }
                data["primes"] = Value::Array(rows);
                if let Some(r) = applicable(prime_class_inclusions(alg, cap))? {
                    rep.verdict(VerdictOut::from_report(alg, &r));
                }
            }
        }
    }
    rep.data = data;
    Ok(())
}

pub struct QuantaleArgs<'a> {
    pub op: Option<&'a str>,
    pub x: Option<&'a str>,
    pub y: Option<&'a str>,
    pub laws: bool,
    pub samples: Option<usize>,
    pub seed: u64,
}

pub fn quantale<'a>(alg: &FiniteAlgebra, cap: usize, args: QuantaleArgs<'a>, rep: &mut Report) -> CmdResult {
    let q = Quantale::new(alg, cap);
    let mut data = json!({});
    if let Some(op) = args.op {
        let need = |s: Option<&'a str>, flag: &str| s.ok_or_else(|| format!("--op {op} needs {flag}"));
        let x = parse_upper(alg, need(args.x, "--x")?)?;
        let y = parse_upper(alg, need(args.y, "--y")?)?;
        let (sym, out) = match op {
            "umul" => ("·", q.umul(x, y)),
            "resl" => ("⇝", q.ures_l(x, y)),
            "resr" => ("→", q.ures_r(x, y)),
            "invres-left" => ("⇾", q.inv_res(x, y, FactorSide::Left).map_err(|e| e.to_string())?),
            "invres-right" => ("↣", q.inv_res(x, y, FactorSide::Right).map_err(|e| e.to_string())?),
            _ => return Err(format!("unknown op `{op}`")),
        };
        rep.line(format!(
            "{} {sym} {} = {}",
            alg.render_set(x.set()),
            alg.render_set(y.set()),
            alg.render_set(out.set())
        ));
        data = json!({
            "op": op,
            "x": labels(alg, x.set()),
            "y": labels(alg, y.set()),
            "result": labels(alg, out.set()),
        });
    }
    if args.laws || args.samples.is_some() {
        let report = match (args.samples, q.enumerate()) {
            (None, Ok(sets)) => {
                rep.line(format!("|U(A)| = {}", sets.len()));
                q.check_laws().map_err(|e| e.to_string())?
            }
            (Some(n), _) => q.sample_laws(n, args.seed),
            (None, Err(Error::CapExceeded { cap })) => {
                rep.line(format!("U(A) exceeds the cap of {cap}; sampling 10000 triples"));
                q.sample_laws(10_000, args.seed)
            }
            (None, Err(e)) => return Err(e.to_string()),
        };
        rep.verdict(VerdictOut::from_report(alg, &report));
    }
    if args.op.is_none() && !args.laws && args.samples.is_none() {
        return Err("nothing to do: give --op or --laws".into());
    }
    rep.data = data;
    Ok(())
}

fn hoop_only<T>(r: qbforge::Result<T>) -> Result<T, String> {
    r.map_err(|e| match e {
        Error::NotAHoop => "the algebra is not a pseudo-hoop".to_string(),
        e => e.to_string(),
    })
}

pub fn polar_cmd(alg: &FiniteAlgebra, set: &str, rep: &mut Report) -> CmdResult {
    let m = parse_set(alg, set)?;
    let p = match polar(alg, m) {
        Err(Error::TheoremViolated(msg)) => {
            rep.verdict(VerdictOut::simple(format!("polar: {msg}"), false));
            return Ok(());
        }
        r => hoop_only(r)?,
    };
    let pp = qbforge::hoops::polar_set(alg, p.polar_set.set());
    rep.line(format!("M     = {}", alg.render_set(m)));
    rep.line(format!("M⊥    = {}", alg.render_set(p.polar_set.set())));
    rep.line(format!("M⊥⊥   = {}", alg.render_set(pp)));
    let (emb, erep) = hoop_only(polar_embedding(alg, m))?;
    rep.line(format!("M⊥·M⊥⊥ = {}", alg.render_set(emb.image())));
    rep.data = json!({
        "set": labels(alg, m),
        "polar": labels(alg, p.polar_set.set()),
        "double_polar": labels(alg, pp),
        "embedding_image": labels(alg, emb.image()),
    });
    rep.verdict(VerdictOut::from_report(alg, &hoop_only(polar_laws(alg))?));
    rep.verdict(VerdictOut::from_report(alg, &erep));
    Ok(())
}

pub fn witness(alg: &FiniteAlgebra, set: Option<&str>, rep: &mut Report) -> CmdResult {
    let found = match set {
        Some(s) => subdirect_witness(alg, parse_set(alg, s)?),
        None => find_subdirect_witness(alg),
    };
    let found = match found {
        Err(Error::DecompositionFailed(msg)) => {
            rep.verdict(VerdictOut::simple(format!("subdirect decomposition: {msg}"), false));
            return Ok(());
        }
        r => hoop_only(r)?,
    };
    match found {
        None => {
            rep.line("none");
            rep.data = Value::Null;
        }
        Some(w) => {
            let l = |x| alg.label(x).to_string();
            rep.line(format!("M  = {}", alg.render_set(w.base)));
            rep.line(format!("x  = {}", l(w.x)));
            rep.line(format!("y  = {} = {} ∧ {}", l(w.y), l(w.y1), l(w.y2)));
            rep.line(format!("[{}) = {}", l(w.y1), alg.render_set(w.f1.set())));
            rep.line(format!("[{}) = {}", l(w.y2), alg.render_set(w.f2.set())));
            rep.line("both filters are normal and meet in {1}: subdirectly reducible");
            rep.data = json!({
                "set": labels(alg, w.base),
                "x": l(w.x), "y": l(w.y), "y1": l(w.y1), "y2": l(w.y2),
                "f1": labels(alg, w.f1.set()),
                "f2": labels(alg, w.f2.set()),
            });
        }
    }
    Ok(())
}

pub fn primes(
    alg: &FiniteAlgebra,
    cap: usize,
    filter: Option<&str>,
    element: Option<&str>,
    rep: &mut Report,
) -> CmdResult {
    match (filter, element) {
        (Some(f), Some(a)) => {
            let f = Filter::new(alg, parse_set(alg, f)?).map_err(|e| e.to_string())?;
            let a = parse_elem(alg, a)?;
            match prime_extension(alg, f, a) {
                Ok(g) => {
                    rep.line(format!(
                        "maximal filter containing {} and avoiding {}: {}",
                        alg.render_set(f.set()),
                        alg.label(a),
                        alg.render_set(g.set())
                    ));
                    rep.data = json!({ "filter": labels(alg, f.set()), "element": alg.label(a), "extension": labels(alg, g.set()) });
                    rep.verdict(VerdictOut::simple("prime.extension", true));
                }
                Err(Error::TheoremViolated(msg)) => rep.verdict(VerdictOut::simple(format!("prime.extension: {msg}"), false)),
                Err(e) => return Err(e.to_string()),
            }
        }
        (None, None) => {
            let classes = classify_all(alg, cap).map_err(|e| e.to_string())?;
            let mut rows = Vec::new();
            for c in &classes {
                let (line, row) = prime_row(alg, c);
                rep.line(line);
                rows.push(row);
            }
            rep.data = json!({ "filters": rows });
            if let Some(r) = applicable(prime_theorem_suite(alg, cap))? {
                rep.verdict(VerdictOut::from_report(alg, &r));
            }
            rep.verdict(VerdictOut::from_report(alg, &mtl_iff_theorem(alg, cap).map_err(|e| e.to_string())?));
        }
        _ => return Err("--filter and --element go together".into()),
    }
    Ok(())
}

pub struct SearchArgs<'a> {
    pub size: usize,
    pub min_size: usize,
    pub class: &'a str,
    pub predicate: Option<&'a str>,
    pub limit: Option<usize>,
    pub labeled: bool,
    pub size_cap: Option<usize>,
    pub out: Option<&'a std::path::Path>,
}

pub fn search(cap: usize, args: SearchArgs, rep: &mut Report) -> CmdResult {
    let target: TargetClass = args.class.parse().map_err(|e: Error| {
        let names: Vec<&str> = TargetClass::ALL.iter().map(|t| t.name()).collect();
        format!("{e}; classes: {}", names.join(", "))
    })?;
    let spec = SearchSpec {
        min_size: args.min_size,
        predicate: args.predicate.map(String::from),
        limit: args.limit,
        dedup: !args.labeled,
        size_cap: args.size_cap,
        ..SearchSpec::new(target, args.size)
    };
    let findings = qbforge::forge::search::find_with_cap(&spec, cap).map_err(|e| match e {
        Error::CapExceeded { cap } => {
            format!("size {} is above the size cap {cap} of class {target}; raise it with --size-cap", args.size)
        }
        e => e.to_string(),
    })?;
    let pred = args.predicate.unwrap_or("true");
    rep.line(format!("{} algebra(s) of class {target}, size {}..={}, with {pred}", findings.len(), args.min_size, args.size));
    if let Some(dir) = args.out {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    let mut files = Vec::new();
    for f in &findings {
        let text = to_text(&f.algebra);
        match args.out {
            Some(dir) => {
                let path = dir.join(format!("{}.json", f.algebra.name()));
                std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
                rep.line(format!("  {}", path.display()));
            }
            None => rep.line(text.trim_end().to_string()),
        }
        files.push(serde_json::to_value(AlgebraFile::from_algebra(&f.algebra)).expect("algebra files serialize"));
    }
    rep.data = json!({ "class": target.name(), "predicate": pred, "found": findings.len(), "algebras": files });
    rep.verdict(VerdictOut::simple(format!("no algebra satisfies `{pred}`"), findings.is_empty()));
    Ok(())
}

pub fn catalog_cmd(name: Option<&str>, list: bool, out: Option<&std::path::Path>, rep: &mut Report) -> CmdResult {
    if list || name.is_none() {
        for n in SHIPPED {
            rep.line(*n);
        }
        rep.line("families: godel:N, lukasiewicz:N, cyclic:N, prod(A,B)");
        rep.data = json!({ "shipped": SHIPPED });
        return Ok(());
    }
    let name = name.expect("checked above");
    let alg = catalog(name).map_err(|e| e.to_string())?;
    let text = to_text(&alg);
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
            rep.line(format!("wrote {}", path.display()));
        }
        None => rep.line(text.trim_end().to_string()),
    }
    rep.data = serde_json::to_value(AlgebraFile::from_algebra(&alg)).expect("algebra files serialize");
    Ok(())
}

pub fn sweep(size: usize, cap: usize, rep: &mut Report) -> CmdResult {
    let algs = qbforge::forge::search::sweep(size).map_err(|e| e.to_string())?;
    let report = run_sweep(&algs, cap).map_err(|e| e.to_string())?;
    rep.line(format!("{} integral quantum B-algebras of size ≤ {size}", algs.len()));
    for suite in qbforge::forge::sweep::SUITES {
        let failing: Vec<&str> =
            report.failures().into_iter().filter(|(s, _)| s == suite).map(|(_, n)| n).collect();
        rep.line(format!("  {suite:<18} ran on {:>4}, failing on {}", report.ran(suite), failing.len()));
        let mut v = VerdictOut::simple(*suite, failing.is_empty());
        for entry in report.entries.iter().filter(|e| failing.contains(&e.name.as_str())) {
            let verdict = entry.verdicts.iter().find(|v| v.suite == *suite).expect("every suite has a verdict");
            let alg = algs.iter().find(|a| a.name() == entry.name).expect("entry names come from the sweep");
            for viol in &verdict.violations {
                let mut w = vec![entry.name.clone()];
                w.extend(viol.witness.iter().map(|x| x.render(alg)));
                v.violations.push(crate::report::ViolationOut { law: viol.law.clone(), witness: w });
            }
        }
        rep.verdict(v);
    }
    rep.data = serde_json::to_value(&report).expect("sweep reports serialize");
    Ok(())
}
