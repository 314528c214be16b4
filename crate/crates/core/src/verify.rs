//! Cell-by-cell audit of the coefficient schemes against the delta rule, and
//! reproduction of the two worked examples.

use crate::calculus::{integrate_linear_form, integrate_quadratic_form, LinearForm, QuadraticForm};
use crate::matrix::{PolyMatrix, RationalMatrix};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::schemes::{
    apply_linear_scheme, apply_quadratic_scheme, canonical_coefficient, scheme_coefficient, CellCoefficient,
    CoefficientScheme, SchemeId,
};
use crate::text::{parse_poly_matrix, parse_polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Agree,
    Disagree,
    SchemeFailure,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Agree => "agree",
            Verdict::Disagree => "disagree",
            Verdict::SchemeFailure => "scheme-failure",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub scheme_value: CellCoefficient,
    pub canonical: Rational,
    pub verdict: Verdict,
}

impl CellReport {
    pub fn k(&self) -> Option<usize> {
        self.scheme_value.k
    }

    pub fn j(&self) -> usize {
        self.scheme_value.j
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub agree: usize,
    pub disagree: usize,
    pub failure: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.agree + self.disagree + self.failure
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub scheme: CoefficientScheme,
    pub i: usize,
    /// Ordered by `(k, j)`; every cell appears exactly once.
    pub cells: Vec<CellReport>,
    pub summary: Summary,
}

impl DiscrepancyReport {
    pub fn fully_agrees(&self) -> bool {
        self.summary.agree == self.cells.len()
    }

    /// `(k, j)` of every cell whose verdict is `verdict`.
    pub fn cells_with(&self, verdict: Verdict) -> Vec<(Option<usize>, usize)> {
        self.cells
            .iter()
            .filter(|c| c.verdict == verdict)
            .map(|c| (c.k(), c.j()))
            .collect()
    }
}

/// Compares every cell of `(s, i)` with the delta rule.
///
/// # Panics
/// If `i` is outside `1..=s.n()`.
pub fn audit_scheme(s: CoefficientScheme, i: usize) -> DiscrepancyReport {
    let n = s.n();
    assert!((1..=n).contains(&i), "integration variable {i} outside 1..={n}");
    let ks: Vec<Option<usize>> = if s.id.is_quadratic() {
        (1..=n).map(Some).collect()
    } else {
        vec![None]
    };
    let mut cells = Vec::new();
    let mut summary = Summary::default();
    for k in ks {
        for j in 1..=n {
            let scheme_value = scheme_coefficient(s, i, k, j).expect("in-range cell");
            let canonical = canonical_coefficient(n, i, k, j).expect("in-range cell");
            let verdict = match &scheme_value.value {
                Ok(v) if *v == canonical => Verdict::Agree,
                Ok(_) => Verdict::Disagree,
                Err(_) => Verdict::SchemeFailure,
            };
            match verdict {
                Verdict::Agree => summary.agree += 1,
                Verdict::Disagree => summary.disagree += 1,
                Verdict::SchemeFailure => summary.failure += 1,
            }
            cells.push(CellReport {
                scheme_value,
                canonical,
                verdict,
            });
        }
    }
    DiscrepancyReport {
        scheme: s,
        i,
        cells,
        summary,
    }
}

/// Audits every branch of `s`, in ascending `i`.
pub fn audit_branches(s: CoefficientScheme) -> Vec<DiscrepancyReport> {
    (1..=s.n()).map(|i| audit_scheme(s, i)).collect()
}

/// Audits of every scheme, variant and branch, ordered by (id, variant, i).
pub fn audit_all() -> Vec<DiscrepancyReport> {
    CoefficientScheme::all().into_iter().flat_map(audit_branches).collect()
}

/// Coefficient matrix of the 3×3 linear worked example.
pub fn linear_example_matrix() -> RationalMatrix {
    RationalMatrix::from_i64_rows(&[&[2, 3, 4], &[3, 5, 6], &[7, 8, 6]]).expect("static fixture")
}

/// The integrated matrix as printed for the linear worked example.
pub const LINEAR_EXAMPLE_PRINTED: &str = "\
[x1^2, 3*x1*x2, 4*x1*x3]
[3/2*x1^2, 5*x1*x2, 6*x1*x3]
[7/2*x1^2, 8*x1*x2, 6*x1*x3]
";

/// Coefficient matrix of the 2×2 quadratic worked example.
pub fn quadratic_example_matrix() -> RationalMatrix {
    RationalMatrix::from_i64_rows(&[&[3, 4], &[2, 3]]).expect("static fixture")
}

/// The result as printed for the quadratic worked example. Kept as an
/// as-printed fixture; it is not the correct integral.
pub const QUADRATIC_EXAMPLE_PRINTED: &str = "x1^3 + 4*x1*x2^2";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearExampleFinding {
    pub printed: PolyMatrix,
    pub oracle: PolyMatrix,
    pub scheme: PolyMatrix,
    pub oracle_matches_printed: bool,
    pub scheme_matches_printed: bool,
    pub scheme_matches_oracle: bool,
}

impl LinearExampleFinding {
    pub fn passed(&self) -> bool {
        self.oracle_matches_printed && self.scheme_matches_printed && self.scheme_matches_oracle
    }
}

/// Integrates the linear example in `x1` by the oracle and by the printed
/// three-variable linear scheme, and compares both with the printed matrix.
pub fn reproduce_linear_example() -> LinearExampleFinding {
    let a = linear_example_matrix();
    let printed = parse_poly_matrix(LINEAR_EXAMPLE_PRINTED).expect("static fixture");
    let oracle = integrate_linear_form(&LinearForm::new(a.clone()), 1).expect("in range");
    let scheme = apply_linear_scheme(CoefficientScheme::printed(SchemeId::Lin3), &a, 1).expect("all cells defined");
    LinearExampleFinding {
        oracle_matches_printed: oracle == printed,
        scheme_matches_printed: scheme == printed,
        scheme_matches_oracle: scheme == oracle,
        printed,
        oracle,
        scheme,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticExampleFinding {
    pub printed: Polynomial,
    pub scheme: Polynomial,
    pub oracle: Polynomial,
    pub scheme_equals_oracle: bool,
    pub printed_equals_oracle: bool,
    pub printed_equals_scheme: bool,
}

impl QuadraticExampleFinding {
    /// The printed result disagrees with both its own formula and direct
    /// integration, while those two agree with each other.
    pub fn printed_is_flagged(&self) -> bool {
        self.scheme_equals_oracle && !self.printed_equals_oracle && !self.printed_equals_scheme
    }
}

/// Integrates the quadratic example in `x1` by the oracle and by the printed
/// two-variable quadratic scheme, and compares both with the printed result.
pub fn reproduce_quadratic_example() -> QuadraticExampleFinding {
    let a = quadratic_example_matrix();
    let printed = parse_polynomial(QUADRATIC_EXAMPLE_PRINTED).expect("static fixture");
    let qf = QuadraticForm::new(a.clone()).expect("square");
    let oracle = integrate_quadratic_form(&qf, 1).expect("in range");
    let scheme = apply_quadratic_scheme(CoefficientScheme::printed(SchemeId::Quad2), &a, 1).expect("all cells defined");
    QuadraticExampleFinding {
        scheme_equals_oracle: scheme == oracle,
        printed_equals_oracle: printed == oracle,
        printed_equals_scheme: printed == scheme,
        printed,
        scheme,
        oracle,
    }
}
