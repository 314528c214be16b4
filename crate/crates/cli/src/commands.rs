use std::io::Write;
use std::str::FromStr;
use std::time::Duration;

use matint_core::verify::{self, DiscrepancyReport, Verdict};
use matint_core::workload::{run_bench, BenchError};
use matint_core::{
    derivative_prop_quadratic, fib_signed, integrate_linear_form, integrate_quadratic_form, jacobian,
    render_poly_matrix, CoefficientScheme, CoefficientTable, Family, LinearForm, QuadraticForm, RationalMatrix,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{json as js, Kind};

/// How `integrate` computes its result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Scheme(CoefficientScheme),
}

impl FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "oracle" {
            return Ok(Method::Oracle);
        }
        s.parse()
            .map(Method::Scheme)
            .map_err(|e| CliError::Usage(format!("--method: {e}")))
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Oracle => f.write_str("oracle"),
            Method::Scheme(s) => write!(f, "{s}"),
        }
    }
}

fn write_json(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn parse_scheme(s: &str) -> Result<CoefficientScheme, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("--scheme: {e}")))
}

pub fn cmd_fib(k: i64, out: &mut dyn Write) -> Result<(), CliError> {
    let value = fib_signed(k)?;
    writeln!(out, "{value}")?;
    Ok(())
}

pub fn cmd_integrate(
    kind: Kind,
    var: usize,
    a: &RationalMatrix,
    method: Method,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if !(1..=a.cols()).contains(&var) {
        return Err(CliError::Usage(format!("--var {var} out of range 1..={}", a.cols())));
    }
    let kind_name = match kind {
        Kind::Linear => "linear",
        Kind::Quadratic => "quadratic",
    };
    let result = match kind {
        Kind::Linear => {
            let m = match method {
                Method::Oracle => integrate_linear_form(&LinearForm::new(a.clone()), var)?,
                Method::Scheme(s) => CoefficientTable::new(s).apply_linear(a, var)?,
            };
            if !json {
                write!(out, "{}", render_poly_matrix(&m))?;
                return Ok(());
            }
            js::poly_matrix(&m)
        }
        Kind::Quadratic => {
            let p = match method {
                Method::Oracle => integrate_quadratic_form(&QuadraticForm::new(a.clone())?, var)?,
                Method::Scheme(s) => CoefficientTable::new(s).apply_quadratic(a, var)?,
            };
            if !json {
                writeln!(out, "{p}")?;
                return Ok(());
            }
            js::polynomial(&p)
        }
    };
    write_json(
        out,
        &json!({ "kind": kind_name, "var": var, "method": method.to_string(), "result": result }),
    )
}

pub fn cmd_differentiate(kind: Kind, a: &RationalMatrix, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let m = match kind {
        Kind::Linear => jacobian(&a.apply_to_vars(Family::X), Family::X, a.cols())?,
        Kind::Quadratic => derivative_prop_quadratic(a)?,
    };
    if json {
        write_json(out, &js::poly_matrix(&m))
    } else {
        write!(out, "{}", render_poly_matrix(&m))?;
        Ok(())
    }
}

fn cell_label(k: Option<usize>, j: usize) -> String {
    match k {
        Some(k) => format!("(k={k}, j={j})"),
        None => format!("(j={j})"),
    }
}

pub fn cmd_scheme_table(scheme: &str, var: usize, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let s = parse_scheme(scheme)?;
    if !(1..=s.n()).contains(&var) {
        return Err(CliError::Usage(format!(
            "--var {var} out of range 1..={} for {s}",
            s.n()
        )));
    }
    let report = verify::audit_scheme(s, var);
    if json {
        return write_json(out, &js::report(&report));
    }
    writeln!(out, "{s} i={var}")?;
    for c in &report.cells {
        let value = match &c.scheme_value.value {
            Ok(v) => v.to_string(),
            Err(cause) => format!("error: {}", cause.as_str()),
        };
        writeln!(
            out,
            "{} {value} canonical {} {}",
            cell_label(c.k(), c.j()),
            c.canonical,
            c.verdict.as_str()
        )?;
    }
    Ok(())
}

fn summary_line(reports: &[DiscrepancyReport]) -> String {
    reports
        .iter()
        .map(|r| format!("i={}: {}/{} agree", r.i, r.summary.agree, r.summary.total()))
        .collect::<Vec<_>>()
        .join("; ")
}

fn write_scheme_audit(out: &mut dyn Write, s: CoefficientScheme) -> Result<Vec<DiscrepancyReport>, CliError> {
    let reports = verify::audit_branches(s);
    writeln!(out, "{s}: {}", summary_line(&reports))?;
    for r in &reports {
        for c in r.cells.iter().filter(|c| c.verdict != Verdict::Agree) {
            let value = match &c.scheme_value.value {
                Ok(v) => v.to_string(),
                Err(cause) => cause.as_str().to_string(),
            };
            writeln!(
                out,
                "  {} i={} {}: scheme {value}, canonical {}",
                c.verdict.as_str(),
                r.i,
                cell_label(c.k(), c.j()),
                c.canonical
            )?;
        }
    }
    Ok(reports)
}

pub fn cmd_verify(scheme: Option<&str>, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let schemes = match scheme {
        Some(s) => vec![parse_scheme(s)?],
        None => CoefficientScheme::all(),
    };
    let mut text = Vec::new();
    let mut reports = Vec::new();
    for s in schemes {
        reports.extend(write_scheme_audit(&mut text, s)?);
    }
    let with_fixtures = scheme.is_none();
    if json {
        let mut value = json!({ "reports": reports.iter().map(js::report).collect::<Vec<_>>() });
        if with_fixtures {
            value["fixtures"] = json!({
                "linear_example": js::linear_finding(&verify::reproduce_linear_example()),
                "quadratic_example": js::quadratic_finding(&verify::reproduce_quadratic_example()),
            });
        }
        return write_json(out, &value);
    }
    out.write_all(&text)?;
    if with_fixtures {
        let lin = verify::reproduce_linear_example();
        writeln!(
            out,
            "linear worked example: oracle {} printed matrix; lin3:printed {} printed matrix; {}",
            if lin.oracle_matches_printed {
                "matches"
            } else {
                "differs from"
            },
            if lin.scheme_matches_printed {
                "matches"
            } else {
                "differs from"
            },
            if lin.passed() { "reproduced" } else { "NOT reproduced" }
        )?;
        let quad = verify::reproduce_quadratic_example();
        writeln!(out, "quadratic worked example: printed {}", quad.printed)?;
        writeln!(out, "quadratic worked example: quad2:printed {}", quad.scheme)?;
        writeln!(out, "quadratic worked example: oracle {}", quad.oracle)?;
        let verdict = if quad.printed_equals_oracle {
            "printed result matches oracle"
        } else {
            "printed result differs from oracle"
        };
        writeln!(
            out,
            "quadratic worked example: {verdict}; scheme {} oracle",
            if quad.scheme_equals_oracle {
                "matches"
            } else {
                "differs from"
            }
        )?;
    }
    Ok(())
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn cmd_bench(n: usize, count: usize, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let report = run_bench(n, count, seed).map_err(|e| match e {
        BenchError::Scheme(e) => CliError::Math(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })?;
    writeln!(out, "bench n={n} count={count} seed={seed}")?;
    writeln!(out, "outputs identical: {}/{}", report.identical, report.count)?;
    for (name, d) in [("lookup", report.lookup_elapsed), ("oracle", report.oracle_elapsed)] {
        writeln!(
            out,
            "timing: {name} total {:.3} ms, mean {:.3} us/matrix",
            millis(d),
            millis(d) * 1e3 / count as f64
        )?;
    }
    writeln!(out, "timing: ratio oracle/lookup {:.3}", report.speedup())?;
    if let Some(at) = report.first_mismatch {
        return Err(CliError::Math(format!(
            "lookup and oracle outputs differ for {} of {count} matrices (first at position {at})",
            count - report.identical
        )));
    }
    Ok(())
}
