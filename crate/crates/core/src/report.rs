//! Structured reports for documents, as JSON values or plain text.
//!
//! Every verdict is accompanied by its certificate (bases, witnesses,
//! idempotents, dimension accounting) and a `checks` object holding the
//! results of re-verifying those certificates. A failed check is an
//! internal invariant violation.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{annihilators, find_unity, Algebra};
use crate::document::{Document, DocumentKind};
use crate::finite::{
    finite_structure, jacobson_definitional, largest_nilpotent_ideal, prop_f_decompose, FiniteRing,
    MixedElement, MixedRing,
};
use crate::idempotent::{
    brauer_idempotent, classify, definable_unitization, dorroh_unitization, find_idempotent,
    minimal_one_sided_ideal, pierce_decomposition, prime_check, reduced_decompose, semiprime_check,
    semisimple_decompose, BrauerOutcome, IdempotentError, Reducedness, Side, Unitization,
};
use crate::linalg::Subspace;
use crate::radical::{
    is_nilpotent, jacobson_radical, nilpotent_flag, radical_complement, radical_powers,
    verify_radical, NilpotencyCertificate,
};
use crate::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Classify,
    Radical,
    Idempotents,
    Unitize,
    Oracle,
}

impl Command {
    pub const ALL: [Command; 5] =
        [Command::Classify, Command::Radical, Command::Idempotents, Command::Unitize, Command::Oracle];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Radical => "radical",
            Command::Idempotents => "idempotents",
            Command::Unitize => "unitize",
            Command::Oracle => "oracle",
        }
    }

    /// Whether the command applies to documents of this kind.
    pub fn accepts(self, kind: DocumentKind) -> bool {
        match self {
            Command::Oracle => kind != DocumentKind::Algebra,
            _ => kind == DocumentKind::Algebra,
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown command `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("`{command}` does not apply to {kind} documents")]
    Unsupported { command: &'static str, kind: &'static str },
    #[error("certificate check failed: {0}")]
    Invariant(String),
    #[error("engine error: {0}")]
    Engine(String),
}

impl ReportError {
    /// `1` for requests the input cannot satisfy, `2` for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            ReportError::Unsupported { .. } => 1,
            _ => 2,
        }
    }
}

impl From<IdempotentError> for ReportError {
    fn from(e: IdempotentError) -> Self {
        ReportError::Engine(e.to_string())
    }
}

/// Builds the report and renders it.
pub fn run_report(doc: &Document, command: Command, format: Format) -> Result<String, ReportError> {
    let value = build_report(doc, command)?;
    Ok(render(&value, format))
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            write_text(&mut out, value, 0);
            out
        }
    }
}

/// The report as a JSON value. Fails with [`ReportError::Invariant`] when a
/// certificate does not re-verify.
pub fn build_report(doc: &Document, command: Command) -> Result<Value, ReportError> {
    if !command.accepts(doc.kind()) {
        return Err(ReportError::Unsupported { command: command.as_str(), kind: doc.kind().as_str() });
    }
    let mut body = match (doc, command) {
        (Document::Algebra(a), Command::Classify) => classify_report(a)?,
        (Document::Algebra(a), Command::Radical) => radical_report(a)?,
        (Document::Algebra(a), Command::Idempotents) => idempotents_report(a)?,
        (Document::Algebra(a), Command::Unitize) => unitize_report(a)?,
        (Document::FiniteRing(f), Command::Oracle) => finite_report(f),
        (Document::Mixed(m), Command::Oracle) => mixed_report(m),
        _ => unreachable!("filtered by accepts"),
    };
    let checks = body.remove("checks").unwrap_or_else(|| json!({}));
    let failed: Vec<String> = checks
        .as_object()
        .map(|m| m.iter().filter(|(_, v)| **v == Value::Bool(false)).map(|(k, _)| k.clone()).collect())
        .unwrap_or_default();
    if !failed.is_empty() {
        return Err(ReportError::Invariant(failed.join(", ")));
    }
    let mut out = Map::new();
    out.insert("command".into(), json!(command.as_str()));
    out.insert("kind".into(), json!(doc.kind().as_str()));
    out.insert("name".into(), json!(doc.name()));
    out.extend(body);
    out.insert("checks".into(), checks);
    Ok(Value::Object(out))
}

fn rat(q: &Rat) -> Value {
    Value::String(q.to_string())
}

fn vector(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

/// `E11 + E22`, `-1/2*e1 + e3`, `0`.
pub fn expression(alg: &Algebra<Rat>, v: &[Rat]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = alg.basis_name(i);
        let neg = c < &Rat::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs.is_one() {
            out.push_str(&name);
        } else {
            let _ = write!(out, "{abs}*{name}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn element(alg: &Algebra<Rat>, v: &[Rat]) -> Value {
    json!({ "coords": vector(v), "expr": expression(alg, v) })
}

fn subspace(alg: &Algebra<Rat>, s: &Subspace<Rat>) -> Value {
    let basis: Vec<Value> = s.basis_vectors().iter().map(|v| element(alg, v)).collect();
    json!({ "dim": s.dim(), "basis": basis })
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("report bodies are objects"),
    }
}

fn classify_report(alg: &Algebra<Rat>) -> Result<Map<String, Value>, ReportError> {
    let report = classify(alg)?;
    let verified = report.verify(alg);
    let factors: Vec<Value> = report
        .factors
        .iter()
        .map(|f| {
            let simple: Vec<Value> = f
                .simple_factors
                .iter()
                .map(|s| {
                    json!({
                        "field_label": s.field_label,
                        "ideal": subspace(alg, &s.ideal.subspace),
                        "matrix_degree": s.matrix_degree,
                        "division_dim": s.division_dim,
                        "division_type": s.division_type,
                        "central_idempotent": element(alg, s.central_idempotent.coords()),
                        "primitive_idempotents": s.primitive_idempotents.iter().map(|e| element(alg, e.coords())).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let semisimple_dim: usize = f.simple_factors.iter().map(|s| s.ideal.dim()).sum();
            json!({
                "label": f.label,
                "ideal": subspace(alg, &f.ideal.subspace),
                "is_nilpotent": f.is_nilpotent,
                "radical_dim": f.radical_dim,
                "semisimple_dim": semisimple_dim,
                "simple_factors": simple,
            })
        })
        .collect();
    let simple_dims_ok = report.factors.iter().all(|f| {
        f.simple_factors.iter().all(|s| s.ideal.dim() == s.matrix_degree * s.matrix_degree * s.division_dim)
            && f.simple_factors.iter().map(|s| s.ideal.dim()).sum::<usize>() + f.radical_dim == f.ideal.dim()
    });
    let unital_ok = !report.unital || (report.unity_subring_dim == report.s && report.r0_dim == 0);
    let factor_dims: usize = report.factors.iter().map(|f| f.ideal.dim()).sum();
    Ok(object(json!({
        "dim": alg.dim(),
        "labels": alg.distinct_labels(),
        "s": report.s,
        "r0": subspace(alg, &report.r0),
        "r0_dim": report.r0_dim,
        "factors": factors,
        "dimension_accounting": { "r0": report.r0_dim, "factors": factor_dims, "total": alg.dim() },
        "unital": report.unital,
        "unity": report.unity.as_ref().map(|u| element(alg, u.coords())),
        "unity_subring_dim": report.unity_subring_dim,
        "field_witnesses": report.field_witnesses,
        "radical": subspace(alg, &report.radical.subspace),
        "complement": report.complement.as_ref().map(|c| subspace(alg, &c.subspace)),
        "semiprime": semiprime_check(alg),
        "simple": prime_check(alg),
        "checks": {
            "classification": verified.is_ok(),
            "simple_factor_dims": simple_dims_ok,
            "unital_subring": unital_ok,
            "dimension_accounting": report.r0_dim + factor_dims == alg.dim(),
        },
    })))
}

fn nilpotency(alg: &Algebra<Rat>) -> Value {
    let n = is_nilpotent(alg);
    match n.certificate {
        NilpotencyCertificate::Index(k) => json!({ "nilpotent": true, "index": k }),
        NilpotencyCertificate::Witness(w) => json!({ "nilpotent": false, "witness": element(alg, w.coords()) }),
    }
}

fn witness_ok(alg: &Algebra<Rat>, cert: &Value) -> bool {
    // a witness must survive n + 1 multiplications by the algebra
    let Some(w) = cert.get("witness") else { return true };
    let coords: Vec<Rat> = w["coords"]
        .as_array()
        .map(|a| a.iter().filter_map(|x| x.as_str().and_then(|s| s.parse().ok())).collect())
        .unwrap_or_default();
    let n = alg.dim();
    let mut p = Subspace::full(n);
    for _ in 0..n {
        p = crate::algebra::next_power(alg, &p);
    }
    coords.iter().any(|c| !c.is_zero()) && p.contains(&coords)
}

fn radical_report(alg: &Algebra<Rat>) -> Result<Map<String, Value>, ReportError> {
    let n = alg.dim();
    let j = jacobson_radical(alg);
    let j_alg = alg
        .subalgebra(&j.subspace)
        .map_err(|e| ReportError::Engine(e.to_string()))?
        .algebra;
    let j_nil = is_nilpotent(&j_alg);
    let j_index = match j_nil.certificate {
        NilpotencyCertificate::Index(k) => Some(k),
        NilpotencyCertificate::Witness(_) => None,
    };
    let powers: Vec<usize> = radical_powers(alg, &j.subspace).iter().map(|p| p.dim()).collect();
    let rc = radical_complement(alg).map_err(|e| ReportError::Engine(e.to_string()))?;
    let whole = nilpotency(alg);
    let flag = match nilpotent_flag(alg) {
        Ok(f) => Some((
            json!({
                "dims": f.ideals.iter().map(|i| i.dim()).collect::<Vec<_>>(),
                "annihilator_index": f.annihilator_index,
                "steps": f.ideals.windows(2).map(|w| {
                    let step = w[0].subspace.complement_in(&w[1].subspace).expect("nested");
                    element(alg, step.basis().row(0))
                }).collect::<Vec<_>>(),
            }),
            f.verify(alg),
        )),
        Err(_) => None,
    };
    let ann = annihilators(alg, &alg.basis()).two_sided;
    Ok(object(json!({
        "dim": n,
        "radical": subspace(alg, &j.subspace),
        "radical_is_whole": j.dim() == n,
        "radical_nilpotency_index": j_index,
        "radical_power_dims": powers,
        "nilpotency": whole.clone(),
        "annihilator": subspace(alg, &ann.subspace),
        "complement": subspace(alg, &rc.complement.subspace),
        "section": rc.section.iter().map(|e| element(alg, e.coords())).collect::<Vec<_>>(),
        "quotient_dim": rc.quotient.algebra.dim(),
        "nilpotent_flag": flag.as_ref().map(|f| f.0.clone()),
        "checks": {
            "radical": verify_radical(alg, &j),
            "radical_nilpotent": j_nil.nilpotent,
            "complement": rc.verify(alg),
            "flag": flag.as_ref().is_none_or(|f| f.1),
            "nilpotency_witness": witness_ok(alg, &whole),
            "whole_iff_nilpotent": (j.dim() == n) == whole["nilpotent"].as_bool().unwrap_or(false),
        },
    })))
}

fn idempotents_report(alg: &Algebra<Rat>) -> Result<Map<String, Value>, ReportError> {
    let n = alg.dim();
    let mut checks = Map::new();
    let e = find_idempotent(alg);
    let nil = is_nilpotent(alg).nilpotent;
    checks.insert("idempotent_iff_not_nilpotent".into(), json!(e.is_some() != nil));
    let mut out = Map::new();
    out.insert("dim".into(), json!(n));
    out.insert("idempotent".into(), json!(e.as_ref().map(|e| element(alg, e.coords()))));
    if let Some(e) = &e {
        checks.insert("idempotent".into(), json!(alg.mul(e.coords(), e.coords()) == e.coords()));
        let p = pierce_decomposition(alg, e)?;
        checks.insert("pierce".into(), json!(p.verify(alg, e)));
        out.insert(
            "pierce".into(),
            json!({ "ee": subspace(alg, &p.ee), "ef": subspace(alg, &p.ef), "fe": subspace(alg, &p.fe), "ff": subspace(alg, &p.ff) }),
        );
    }
    if let Ok(ideal) = minimal_one_sided_ideal(alg, Side::Left) {
        let brauer = match brauer_idempotent(alg, &ideal) {
            Ok(BrauerOutcome::Idempotent(g)) => json!({ "generator": element(alg, g.coords()) }),
            Ok(BrauerOutcome::NullSquare) => json!("null-square"),
            Err(err) => json!({ "error": err.to_string() }),
        };
        out.insert("minimal_left_ideal".into(), json!({ "ideal": subspace(alg, &ideal.subspace), "brauer": brauer }));
    }
    if n > 0 && semiprime_check(alg) {
        let d = semisimple_decompose(alg)?;
        let one = find_unity(alg).map(|u| u.into_coords());
        checks.insert("orthogonal_idempotents".into(), json!(d.idempotents.verify(alg)));
        checks.insert("idempotents_sum_to_unity".into(), json!(Some(d.idempotents.sum(n).into_coords()) == one));
        let members: Vec<Value> = d
            .idempotents
            .members
            .iter()
            .zip(&d.idempotents.flags)
            .map(|(m, f)| json!({ "element": element(alg, m.coords()), "primitive": f.primitive, "central": f.central }))
            .collect();
        let factors: Vec<Value> = d
            .factors
            .iter()
            .map(|s| {
                json!({
                    "field_label": s.field_label,
                    "matrix_degree": s.matrix_degree,
                    "division_dim": s.division_dim,
                    "division_type": s.division_type,
                    "ideal_dim": s.ideal.dim(),
                })
            })
            .collect();
        out.insert("semisimple".into(), json!({ "factors": factors, "idempotents": members }));
    }
    let reduced = match reduced_decompose(alg)? {
        Reducedness::Reduced(counts) => json!({ "reduced": true, "counts": counts }),
        Reducedness::NotReduced { witness } => {
            let w = witness.coords();
            checks.insert("square_zero_witness".into(), json!(!witness.is_zero() && alg.mul(w, w).iter().all(Zero::is_zero)));
            json!({ "reduced": false, "witness": element(alg, w) })
        }
    };
    out.insert("reduced".into(), reduced);
    out.insert("checks".into(), Value::Object(checks));
    Ok(out)
}

fn unitization(u: &Unitization<Rat>) -> Value {
    json!({
        "dim": u.algebra.dim(),
        "labels": u.algebra.distinct_labels(),
        "embedding": u.embedding.iter().map(|k| k + 1).collect::<Vec<_>>(),
        "unity": element(&u.algebra, u.unity.coords()),
        "document": Document::Algebra(u.algebra.clone()).to_text(),
    })
}

fn unitize_report(alg: &Algebra<Rat>) -> Result<Map<String, Value>, ReportError> {
    let n = alg.dim();
    let report = classify(alg)?;
    let label = alg.distinct_labels().into_iter().next().unwrap_or_else(|| crate::algebra::DEFAULT_LABEL.into());
    let dorroh = dorroh_unitization(alg, &label);
    let definable = definable_unitization(alg);
    let increment = definable.algebra.dim() - n;
    let bound = report.r0_dim + report.s;
    Ok(object(json!({
        "dim": n,
        "r0_dim": report.r0_dim,
        "s": report.s,
        "dorroh": unitization(&dorroh),
        "definable": unitization(&definable),
        "increment": increment,
        "bound": bound,
        "checks": {
            "dorroh": dorroh.verify(alg),
            "definable": definable.verify(alg),
            "definable_unity": find_unity(&definable.algebra).is_some(),
            "bound": increment <= bound,
        },
    })))
}

fn finite_elements(f: &FiniteRing, xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|&x| json!(f.element_name(x))).collect())
}

fn finite_report(f: &FiniteRing) -> Map<String, Value> {
    let s = finite_structure(f);
    let j = jacobson_definitional(f);
    let oracle = largest_nilpotent_ideal(f);
    let mut sorted_j = j.clone();
    sorted_j.sort_unstable();
    let mut sorted_o = oracle.clone();
    sorted_o.sort_unstable();
    object(json!({
        "order": s.order,
        "nilpotent": s.nilpotent,
        "nilpotency_index": s.nilpotency_index,
        "nil": s.nil,
        "unity": s.unity.map(|u| f.element_name(u).to_string()),
        "idempotents": finite_elements(f, &s.idempotents),
        "units": finite_elements(f, &s.units),
        "zero_divisors": finite_elements(f, &s.zero_divisors),
        "jacobson": finite_elements(f, &j),
        "largest_nilpotent_ideal": finite_elements(f, &oracle),
        "reduced": s.reduced,
        "square_zero_witness": s.square_zero_witness.map(|w| f.element_name(w).to_string()),
        "ideal_count": f.ideals().len(),
        "checks": {
            "jacobson_is_ideal": f.is_ideal(&j),
            "jacobson_nilpotent": f.is_nilpotent_subset(&j),
            "oracles_agree": sorted_j == sorted_o,
            "trichotomy": s.nilpotent == (s.idempotents.len() == 1),
        },
    }))
}

fn mixed_element(m: &MixedRing, x: &MixedElement) -> Value {
    json!({
        "finite": m.finite().element_name(x.finite),
        "algebra": vector(&x.algebra),
        "torsion": vector(&x.torsion),
    })
}

fn mixed_report(m: &MixedRing) -> Map<String, Value> {
    let mut body = finite_report(m.finite());
    let finite_checks = body.remove("checks").unwrap_or_else(|| json!({}));
    let decomposition = prop_f_decompose(m);
    let n = m.finite().order();
    let torsion = m.torsion_ideal(n);
    let unity = m.unity();
    let mut checks = object(finite_checks);
    checks.insert("torsion_annihilates_connected".into(), json!(m.annihilates_connected(&torsion)));
    if let Some(d) = &decomposition {
        checks.insert("decomposition".into(), json!(d.verify(m)));
    }
    checks.insert("unity_iff_decomposes".into(), json!(unity.is_some() == decomposition.is_some()));
    object(json!({
        "finite": body,
        "algebra_dim": m.algebra().dim(),
        "torsion_rank": m.torsion_rank(),
        "unital": unity.is_some(),
        "unity": unity.as_ref().map(|u| mixed_element(m, u)),
        "square_in_torsion": m.square_in_torsion(),
        "n_torsion_size": torsion.len(),
        "decomposition": decomposition.as_ref().map(|d| json!({
            "unity": mixed_element(m, &d.unity),
            "finite_unity": m.finite().element_name(d.finite_unity),
            "connected_dim": d.connected.dim(),
            "connected_unity": vector(&d.connected_unity),
        })),
        "checks": checks,
    }))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_text(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                match v {
                    Value::Object(inner) if inner.contains_key("expr") => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar_text(&inner["expr"]));
                    }
                    Value::String(s) if s.contains('\n') => {
                        let _ = writeln!(out, "{pad}{k}: |");
                        for line in s.lines() {
                            let _ = writeln!(out, "{pad}  {line}");
                        }
                    }
                    _ if is_scalar(v) => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar_text(v));
                    }
                    Value::Array(a) if a.iter().all(is_scalar) => {
                        let items: Vec<String> = a.iter().map(scalar_text).collect();
                        let _ = writeln!(out, "{pad}{k}: [{}]", items.join(", "));
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}:");
                        write_text(out, v, indent + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for item in a {
                match item {
                    Value::Object(inner) if inner.contains_key("expr") => {
                        let _ = writeln!(out, "{pad}- {}", scalar_text(&inner["expr"]));
                    }
                    _ if is_scalar(item) => {
                        let _ = writeln!(out, "{pad}- {}", scalar_text(item));
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}-");
                        write_text(out, item, indent + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other));
        }
    }
}
