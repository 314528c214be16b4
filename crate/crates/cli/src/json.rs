//! Structured output for `--json`.

use matint_core::verify::{CellReport, DiscrepancyReport, LinearExampleFinding, QuadraticExampleFinding, Summary};
use matint_core::{PolyMatrix, Polynomial};
use serde_json::{json, Value};

pub fn polynomial(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let factors: Vec<Value> = m
                .factors()
                .iter()
                .map(|(v, e)| json!({ "var": v.to_string(), "exp": e }))
                .collect();
            json!({ "coefficient": c.to_string(), "monomial": factors })
        })
        .collect();
    json!({ "text": p.to_string(), "terms": terms })
}

pub fn poly_matrix(m: &PolyMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|r| m.row(r).iter().map(polynomial).collect())
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

fn cell(c: &CellReport) -> Value {
    let scheme = match &c.scheme_value.value {
        Ok(v) => json!(v.to_string()),
        Err(cause) => json!({ "error": cause.as_str() }),
    };
    json!({
        "k": c.k(),
        "j": c.j(),
        "scheme": scheme,
        "canonical": c.canonical.to_string(),
        "verdict": c.verdict.as_str(),
    })
}

fn summary(s: &Summary) -> Value {
    json!({ "agree": s.agree, "disagree": s.disagree, "failure": s.failure })
}

pub fn report(r: &DiscrepancyReport) -> Value {
    json!({
        "scheme": r.scheme.id.as_str(),
        "variant": r.scheme.variant.as_str(),
        "n": r.scheme.n(),
        "i": r.i,
        "cells": r.cells.iter().map(cell).collect::<Vec<_>>(),
        "summary": summary(&r.summary),
    })
}

pub fn linear_finding(f: &LinearExampleFinding) -> Value {
    json!({
        "printed": poly_matrix(&f.printed),
        "oracle": poly_matrix(&f.oracle),
        "scheme": poly_matrix(&f.scheme),
        "oracle_matches_printed": f.oracle_matches_printed,
        "scheme_matches_printed": f.scheme_matches_printed,
        "scheme_matches_oracle": f.scheme_matches_oracle,
        "reproduced": f.passed(),
    })
}

pub fn quadratic_finding(f: &QuadraticExampleFinding) -> Value {
    json!({
        "printed": polynomial(&f.printed),
        "scheme": polynomial(&f.scheme),
        "oracle": polynomial(&f.oracle),
        "scheme_equals_oracle": f.scheme_equals_oracle,
        "printed_equals_oracle": f.printed_equals_oracle,
        "printed_equals_scheme": f.printed_equals_scheme,
        "printed_flagged": f.printed_is_flagged(),
    })
}
