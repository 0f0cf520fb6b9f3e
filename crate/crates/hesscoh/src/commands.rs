//! Executes validated requests into text and JSON reports.

use std::fmt::Write;

use billey::{alpha_to_t, billey_pi_word, billey_restrict_word};
use hessenberg::{peterson_fixed_points, HessenbergFunction, SubsetA};
use num::{Signed, Zero};
use peterson::{LocalizationElement, MonkConstants, PetersonA, PetersonSystem};
use permgroup::Permutation;
use polyring::{format_rational, HilbertSeriesPoly, Polynomial, Rational};
use presentation::{
    continued_fraction_check, f_table, ideal_for, is_regular_sequence, peterson_presentation_check,
    peterson_presentation_general, verify, verify_all, verify_budget, HessCertificate, IdealComparison,
    PresentationError, RegularityCertificate,
};
use rootsys::{CartanType, WeylElement};
use serde_json::{json, Value};

use crate::request::Request;

/// Output of one command.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    /// False when a mathematical certificate failed.
    pub passed: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, passed: true }
    }
}

/// A computation that could not be carried out.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ExecError(pub String);

fn err(e: impl std::fmt::Display) -> ExecError {
    ExecError(e.to_string())
}

fn q(r: &Rational) -> String {
    format_rational(r)
}

fn poly_json(p: &Polynomial) -> Value {
    let mut v = p.to_json();
    v["text"] = json!(p.to_string());
    v
}

fn series_json(s: &HilbertSeriesPoly) -> Value {
    json!({
        "text": s.to_string(),
        "numerator": s.numerator(),
        "denominator_exponent": s.denominator_exponent(),
    })
}

/// `c·t^d` for a localization value.
fn value_text(c: &Rational, degree: u32) -> String {
    if c.is_zero() {
        return "0".into();
    }
    match degree {
        0 => q(c),
        1 => format!("{}t", coeff_prefix(c)),
        _ => format!("{}t^{degree}", coeff_prefix(c)),
    }
}

fn coeff_prefix(c: &Rational) -> String {
    if *c == Rational::from_integer(1.into()) {
        String::new()
    } else if *c == Rational::from_integer((-1).into()) {
        "-".into()
    } else {
        format!("{}*", q(c))
    }
}

fn subset_json(a: &[usize]) -> Value {
    json!(a)
}

fn subset_text(a: &[usize]) -> String {
    let parts: Vec<String> = a.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn execute(req: &Request) -> Result<Report, ExecError> {
    match req {
        Request::FixedPoints(h) => Ok(fixed_points(h)),
        Request::PetersonPoints(n) => Ok(peterson_points(*n)),
        Request::Billey { datum, v, w: _, word, pi } => billey(datum.kind(), datum.rank(), v, word, *pi),
        Request::PetersonClass { n, a } => peterson_class(*n, a),
        Request::PetersonMonk { n, i, a } => peterson_monk(*n, *i, a),
        Request::PetersonGiambelli { n, a } => peterson_giambelli(*n, a),
        Request::PetersonGeneral { datum, k, i, budget } => {
            let sys = match budget {
                Some(b) => PetersonSystem::with_budget(datum.clone(), *b),
                None => PetersonSystem::new(datum.clone()),
            }
            .map_err(err)?;
            peterson_general(&sys, k, *i)
        }
        Request::Fij { n, entry, with_t } => Ok(fij(*n, *entry, *with_t)),
        Request::Ideal { h, with_t } => Ok(ideal(h, *with_t)),
        Request::Hilbert { h, with_t, max_degree } => hilbert(h, *with_t, *max_degree),
        Request::Verify { h, equivariant } => Ok(verify_one(h, *equivariant)),
        Request::VerifyAll { n, equivariant } => Ok(verify_every(*n, *equivariant)),
        Request::PetersonPresentation(n) => peterson_presentation(*n),
        Request::GeneralPresentation(datum) => {
            let r = peterson_presentation_general(datum).map_err(err)?;
            let mut text = String::new();
            let _ = writeln!(text, "{}: {} fixed points w_K", r.name, r.points);
            for (k, g) in r.relations.generators().iter().enumerate() {
                let _ = writeln!(text, "relation {}: {g}  vanishes: {}", k + 1, r.vanishing[k]);
            }
            let _ = writeln!(text, "ordinary: {}", regularity_line(&r.ordinary));
            let _ = writeln!(text, "equivariant: {}", regularity_line(&r.equivariant));
            let json = json!({
                "cartan": r.name,
                "points": r.points,
                "relations": r.relations.generators().iter().map(poly_json).collect::<Vec<_>>(),
                "vanishing": r.vanishing,
                "ordinary": regularity_json(&r.ordinary),
                "equivariant": regularity_json(&r.equivariant),
            });
            Ok(Report { text, json, passed: r.passed() })
        }
        Request::Cfrac { c, m } => Ok(cfrac(c, *m)),
    }
}

fn fixed_points(h: &HessenbergFunction) -> Report {
    let pts = h.fixed_points();
    let mut text = format!("h=({h}): {} fixed points\n", pts.len());
    if !h.is_indecomposable() {
        text.push_str("decomposable\n");
    }
    for w in &pts {
        let _ = writeln!(text, "{w}");
    }
    let json = json!({
        "h": h.values(),
        "fixed_points": pts.iter().map(Permutation::word).collect::<Vec<_>>(),
        "count": pts.len(),
        "indecomposable": h.is_indecomposable(),
    });
    Report::ok(text, json)
}

fn peterson_points(n: usize) -> Report {
    let pts = peterson_fixed_points(n);
    let mut text = format!("Peterson variety n={n}: {} fixed points\n", pts.len());
    for (a, w) in &pts {
        let _ = writeln!(text, "A={a} w_A={w}");
    }
    let json = json!({
        "n": n,
        "count": pts.len(),
        "fixed_points": pts.iter().map(|(a, w)| json!({"A": a.elems(), "w": w.word()})).collect::<Vec<_>>(),
    });
    Report::ok(text, json)
}

fn billey(kind: CartanType, rank: usize, v: &WeylElement, word: &[usize], pi: bool) -> Result<Report, ExecError> {
    let roots = billey_restrict_word(v, word).map_err(err)?;
    let poly = if kind == CartanType::A { alpha_to_t(&roots, rank + 1) } else { roots };
    let mut text = format!("{poly}\n");
    let mut json = json!({
        "cartan": v.datum().name(),
        "v": v.reduced_word(),
        "w_word": word,
        "restriction": poly_json(&poly),
    });
    if kind == CartanType::A {
        let n = rank + 1;
        let one_line = |b: &[usize]| Permutation::from_simple_word(n, b).map(|p| p.to_string()).map_err(err);
        json["v_permutation"] = json!(one_line(v.reduced_word())?);
        json["w_permutation"] = json!(one_line(word)?);
    }
    if pi {
        let c = billey_pi_word(v, word).map_err(err)?;
        let shown = value_text(&c, v.length() as u32);
        let _ = writeln!(text, "pi: {shown}");
        json["pi"] = json!({"coeff": q(&c), "degree": v.length(), "text": shown});
    }
    Ok(Report::ok(text, json))
}

fn localization_rows<P: ToString>(
    x: &LocalizationElement<P>,
    labels: &[String],
) -> (String, Vec<Value>) {
    let mut text = String::new();
    let mut rows = Vec::new();
    for (k, (p, c)) in x.points().iter().zip(x.values()).enumerate() {
        let shown = value_text(c, x.degree());
        let _ = writeln!(text, "{} w={}: {shown}", labels[k], p.to_string());
        rows.push(json!({"label": labels[k], "point": p.to_string(), "coeff": q(c), "text": shown}));
    }
    (text, rows)
}

fn peterson_class(n: usize, a: &SubsetA) -> Result<Report, ExecError> {
    let pa = PetersonA::new(n).map_err(err)?;
    let c = pa.class(a).map_err(err)?;
    let labels: Vec<String> = pa.subsets().iter().map(|b| format!("B={b}")).collect();
    let (rows_text, rows) = localization_rows(&c, &labels);
    let text = format!("p_{{v_A}} for A={a}, v_A={}, degree {}\n{rows_text}", a.v(), c.degree());
    let json = json!({"n": n, "A": a.elems(), "v_A": a.v().to_string(), "degree": c.degree(), "values": rows});
    Ok(Report::ok(text, json))
}

fn monk_json<S: Ord>(m: &MonkConstants<S>, label: impl Fn(&S) -> Value) -> Value {
    json!({
        "diagonal": q(&m.diagonal),
        "off": m.off.iter().map(|(s, c)| json!({"B": label(s), "coeff": q(c)})).collect::<Vec<_>>(),
    })
}

fn monk_text<S: Ord>(m: &MonkConstants<S>, label: impl Fn(&S) -> String) -> String {
    let mut text = format!("t coefficient: {}\n", q(&m.diagonal));
    for (s, c) in &m.off {
        if !c.is_zero() {
            let _ = writeln!(text, "B={}: {}", label(s), q(c));
        }
    }
    text
}

fn peterson_monk(n: usize, i: usize, a: &SubsetA) -> Result<Report, ExecError> {
    let pa = PetersonA::new(n).map_err(err)?;
    let closed = pa.monk_closed(i, a).map_err(err)?;
    let oracle = pa.monk_oracle(i, a).map_err(err)?;
    let integral = std::iter::once(&closed.diagonal)
        .chain(closed.off.values())
        .all(|c| c.is_integer() && !c.is_negative());
    let agree = closed == oracle;
    let mut text = format!("p_{{s_{i}}} * p_{{v_A}} for A={a}\n");
    text.push_str(&monk_text(&closed, |b| b.to_string()));
    let _ = writeln!(text, "closed form matches localization solve: {agree}");
    let _ = writeln!(text, "nonnegative integers: {integral}");
    let mut json = json!({
        "n": n,
        "i": i,
        "A": a.elems(),
        "closed_form": monk_json(&closed, |b| json!(b.elems())),
        "agrees_with_solve": agree,
        "nonnegative_integers": integral,
    });
    if !agree {
        json["counterexample"] = json!({"solve": monk_json(&oracle, |b| json!(b.elems()))});
    }
    Ok(Report { text, json, passed: agree && integral })
}

fn peterson_giambelli(n: usize, a: &SubsetA) -> Result<Report, ExecError> {
    let pa = PetersonA::new(n).map_err(err)?;
    let g = pa.giambelli(a).map_err(err)?;
    let text = format!(
        "A={a}: p_{{v_A}} = {} * product of p_{{s_i}} over A\nholds at every fixed point: {}\n",
        q(&g.scalar),
        g.holds
    );
    let labels: Vec<String> = pa.subsets().iter().map(|b| format!("B={b}")).collect();
    let (_, lhs) = localization_rows(&g.lhs, &labels);
    let (_, rhs) = localization_rows(&g.rhs, &labels);
    let json = json!({"n": n, "A": a.elems(), "scalar": q(&g.scalar), "holds": g.holds, "lhs": lhs, "rhs": rhs});
    Ok(Report { text, json, passed: g.holds })
}

fn peterson_general(sys: &PetersonSystem, k: &[usize], i: Option<usize>) -> Result<Report, ExecError> {
    let name = sys.datum().name();
    let c = sys.class(k).map_err(err)?;
    let labels: Vec<String> = sys.subsets().iter().map(|j| format!("J={}", subset_text(j))).collect();
    let points: Vec<String> = sys.points().iter().map(|w| format!("{:?}", w.reduced_word())).collect();
    let mut text = format!("{name}: p_{{v_K}} for K={}, degree {}\n", subset_text(k), c.degree());
    let mut rows = Vec::new();
    for (idx, v) in c.values().iter().enumerate() {
        let shown = value_text(v, c.degree());
        let _ = writeln!(text, "{} w_J={}: {shown}", labels[idx], points[idx]);
        rows.push(json!({"J": subset_json(&sys.subsets()[idx]), "w_word": sys.points()[idx].reduced_word(), "coeff": q(v), "text": shown}));
    }
    let g = sys.giambelli(k).map_err(err)?;
    let _ = writeln!(text, "giambelli holds: {}", g.holds);
    for (comp, count) in &g.reduced_word_counts {
        let _ = writeln!(text, "  component {}: {count} reduced words", subset_text(comp));
    }
    let mut passed = g.holds;
    let mut json = json!({
        "cartan": name,
        "K": k,
        "degree": c.degree(),
        "values": rows,
        "giambelli": {
            "holds": g.holds,
            "reduced_word_counts": g.reduced_word_counts.iter().map(|(s, n)| json!({"component": s, "count": n.to_string()})).collect::<Vec<_>>(),
        },
    });
    if let Some(i) = i {
        let quotient = sys.monk(i, k).map_err(err)?;
        let solve = sys.monk_oracle(i, k).map_err(err)?;
        let agree = quotient == solve;
        passed &= agree;
        let _ = writeln!(text, "p_{{s_{i}}} * p_{{v_K}}:");
        text.push_str(&monk_text(&quotient, |s| subset_text(s)));
        let _ = writeln!(text, "matches localization solve: {agree}");
        json["monk"] = json!({"i": i, "constants": monk_json(&quotient, |s| json!(s)), "agrees_with_solve": agree});
    }
    Ok(Report { text, json, passed })
}

fn fij(n: usize, entry: Option<(usize, usize)>, with_t: bool) -> Report {
    let table = f_table(n, with_t);
    let mut text = String::new();
    let mut rows = Vec::new();
    for ((i, j), p) in &table {
        if entry.is_some_and(|e| e != (*i, *j)) {
            continue;
        }
        let _ = writeln!(text, "f_{{{i},{j}}} = {p}");
        rows.push(json!({"i": i, "j": j, "degree": 2 * (i - j + 1), "poly": poly_json(p)}));
    }
    Report::ok(text, json!({"n": n, "equivariant": with_t, "entries": rows}))
}

fn ideal(h: &HessenbergFunction, with_t: bool) -> Report {
    let ideal = ideal_for(h, with_t);
    let mut text = format!("h=({h}) in Q[{}]\n", ideal.context().names().join(","));
    let mut rows = Vec::new();
    for (k, g) in ideal.generators().iter().enumerate() {
        let j = k + 1;
        let i = h.get(j);
        let _ = writeln!(text, "f_{{{i},{j}}} (degree {}): {g}", 2 * ideal.degrees()[k]);
        rows.push(json!({"i": i, "j": j, "degree": 2 * ideal.degrees()[k], "poly": poly_json(g)}));
    }
    Report::ok(text, json!({"h": h.values(), "variables": ideal.context().names(), "generators": rows}))
}

fn regularity_line(c: &RegularityCertificate) -> String {
    format!(
        "expected {}; computed {}; regular sequence: {}",
        c.expected,
        c.computed,
        if c.regular { "yes" } else { "no" }
    )
}

fn regularity_json(c: &RegularityCertificate) -> Value {
    json!({
        "expected": series_json(&c.expected),
        "computed": c.computed.dims,
        "finite_dimensional": c.finite_dimensional,
        "regular": c.regular,
        "adjoined_variables": c.adjoined,
    })
}

fn hilbert(h: &HessenbergFunction, with_t: bool, max_degree: Option<u32>) -> Result<Report, ExecError> {
    let ideal = ideal_for(h, with_t);
    let c = is_regular_sequence(&ideal, max_degree).map_err(|e: PresentationError| err(e))?;
    let mut text = format!("h=({h}) in Q[{}]\n", ideal.context().names().join(","));
    let _ = writeln!(text, "expected: {}", c.expected);
    let _ = writeln!(text, "computed: {}", c.computed);
    let _ = writeln!(text, "finite dimensional: {}", c.finite_dimensional);
    let _ = writeln!(text, "regular sequence: {}", if c.regular { "yes" } else { "no" });
    let mut json = json!({"h": h.values(), "variables": ideal.context().names(), "result": regularity_json(&c)});
    if !c.regular {
        let expected = c.expected.expand(c.computed.dims.len());
        if let Some(d) = c.computed.dims.iter().zip(&expected).position(|(&a, &b)| a as i64 != b) {
            json["counterexample"] = json!({"degree": 2 * d, "computed": c.computed.dims[d], "expected": expected[d]});
        }
    }
    Ok(Report { text, json, passed: c.regular })
}

fn certificate_counterexample(c: &HessCertificate) -> Option<Value> {
    if let Some(f) = c.vanishing.failures().first() {
        return Some(json!({
            "kind": "vanishing",
            "generator": [f.generator.0, f.generator.1],
            "point": f.point.to_string(),
            "value": value_text(&f.value, f.degree),
        }));
    }
    let expected = c.expected.expand(c.hilbert.dims.len());
    if let Some(d) = c.hilbert.dims.iter().zip(&expected).position(|(&a, &b)| a as i64 != b) {
        return Some(json!({"kind": "hilbert", "degree": 2 * d, "computed": c.hilbert.dims[d], "expected": expected[d]}));
    }
    if !c.regular {
        return Some(json!({"kind": "finite-dimensionality", "last_dimension": c.hilbert.dims.last()}));
    }
    if let Some(b) = c.basis.degrees.iter().find(|b| !b.independent || b.basis_count != b.quotient_dimension) {
        return Some(json!({
            "kind": "monomial-basis",
            "degree": 2 * b.degree,
            "basis_count": b.basis_count,
            "quotient_dimension": b.quotient_dimension,
            "independent": b.independent,
        }));
    }
    if let Some(e) = c.equivariant.as_ref().filter(|e| !e.regular) {
        return Some(json!({"kind": "equivariant", "computed": e.computed.dims}));
    }
    None
}

fn certificate_text(c: &HessCertificate) -> String {
    let mut text = format!("h=({})\n", c.h);
    let _ = writeln!(
        text,
        "vanishing: {} restrictions, {} nonzero",
        c.vanishing.entries.len(),
        c.vanishing.failures().len()
    );
    let _ = writeln!(text, "expected: {}", c.expected);
    let _ = writeln!(text, "hilbert: {}", c.hilbert);
    let _ = writeln!(text, "regular sequence: {}", if c.regular { "yes" } else { "no" });
    let _ = writeln!(
        text,
        "monomial basis: {} of {} monomials, independent in every degree: {}",
        c.basis.size,
        c.basis.expected_size,
        c.basis.degrees.iter().all(|d| d.independent)
    );
    if let Some(e) = &c.equivariant {
        let _ = writeln!(text, "equivariant: {}", regularity_line(e));
    }
    let _ = writeln!(text, "{}", if c.passed() { "certified" } else { "FAILED" });
    text
}

fn certificate_json(c: &HessCertificate) -> Value {
    let mut v = json!({
        "h": c.h.values(),
        "passed": c.passed(),
        "vanishing": {"restrictions": c.vanishing.entries.len(), "nonzero": c.vanishing.failures().len()},
        "expected": series_json(&c.expected),
        "hilbert": c.hilbert.dims,
        "regular": c.regular,
        "monomial_basis": {
            "size": c.basis.size,
            "expected_size": c.basis.expected_size,
            "independent": c.basis.degrees.iter().all(|d| d.independent),
        },
        "equivariant": c.equivariant.as_ref().map(regularity_json),
    });
    if let Some(ce) = certificate_counterexample(c) {
        v["counterexample"] = ce;
    }
    v
}

fn verify_one(h: &HessenbergFunction, equivariant: bool) -> Report {
    let c = verify(h, equivariant);
    Report { text: certificate_text(&c), json: certificate_json(&c), passed: c.passed() }
}

fn verify_every(n: usize, equivariant: bool) -> Report {
    let b = verify_budget(n);
    let mut text = format!(
        "budget: n={n}, {} Hessenberg functions, {} fixed points, largest Macaulay matrix {} columns\n",
        b.functions, b.fixed_points, b.max_columns
    );
    let all = verify_all(n, equivariant);
    let certified = all.iter().filter(|c| c.passed()).count();
    for c in &all {
        let status = if c.passed() { "certified".to_string() } else { "FAILED".to_string() };
        let _ = writeln!(text, "h=({}): {status}", c.h);
    }
    if certified == all.len() {
        let _ = writeln!(text, "{certified} Hessenberg functions certified");
    } else {
        let _ = writeln!(text, "{} of {} Hessenberg functions FAILED", all.len() - certified, all.len());
    }
    let json = json!({
        "budget": {"n": b.n, "functions": b.functions, "fixed_points": b.fixed_points, "max_columns": b.max_columns},
        "equivariant": equivariant,
        "certified": certified,
        "results": all.iter().map(certificate_json).collect::<Vec<_>>(),
    });
    Report { text, json, passed: certified == all.len() }
}

fn comparison_json(c: &IdealComparison) -> Value {
    json!({"left_in_right": c.left_in_right, "right_in_left": c.right_in_left, "equal": c.equal(), "max_degree": c.max_degree})
}

fn peterson_presentation(n: usize) -> Result<Report, ExecError> {
    let r = peterson_presentation_check(n).map_err(err)?;
    let mut text = format!("Peterson variety n={n}\n");
    let _ = writeln!(text, "quadratics (z_k = g_k) + g_n equal I_h: {}", r.quadratics_vs_f.equal());
    let _ = writeln!(text, "g_k(x_k - x_(k+1) - t) + g_n equal I_h: {}", r.simplified_vs_f.equal());
    let _ = writeln!(text, "same at t = 0: {}", r.ordinary_vs_f.equal());
    let _ = writeln!(text, "z quadratics, ordinary: {}", regularity_line(&r.z_ordinary));
    let _ = writeln!(text, "z quadratics, equivariant: {}", regularity_line(&r.z_equivariant));
    let _ = writeln!(text, "quadratics vanish at every w_A: {}", r.localization_vanishes);
    let json = json!({
        "n": n,
        "quadratics_vs_f": comparison_json(&r.quadratics_vs_f),
        "simplified_vs_f": comparison_json(&r.simplified_vs_f),
        "ordinary_vs_f": comparison_json(&r.ordinary_vs_f),
        "z_ordinary": regularity_json(&r.z_ordinary),
        "z_equivariant": regularity_json(&r.z_equivariant),
        "localization_vanishes": r.localization_vanishes,
    });
    Ok(Report { text, json, passed: r.passed() })
}

fn cfrac(c: &Rational, m: usize) -> Report {
    match continued_fraction_check(c, m) {
        Ok(cf) => {
            let mut text = String::new();
            for (k, x) in cf.values.iter().enumerate() {
                let _ = writeln!(text, "x_{k} = {}", q(x));
            }
            let positive = cf.all_positive();
            let _ = writeln!(text, "all positive: {positive}");
            let mut json = json!({
                "c": q(c),
                "values": cf.values.iter().map(q).collect::<Vec<_>>(),
                "all_positive": positive,
            });
            if let Some(k) = cf.values.iter().position(|x| !x.is_positive()) {
                json["counterexample"] = json!({"m": k, "value": q(&cf.values[k])});
            }
            Report { text, json, passed: positive }
        }
        Err(e) => {
            let text = format!("{e}\n");
            let m = match e {
                PresentationError::DivisionByZero { m } => m,
                _ => 0,
            };
            let json = json!({"c": q(c), "all_positive": false, "counterexample": {"m": m - 1, "value": "0"}});
            Report { text, json, passed: false }
        }
    }
}
