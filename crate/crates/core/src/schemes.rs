//! Closed-form Fibonacci-indexed integration coefficients for 2×2 and 3×3
//! linear and quadratic forms.
//!
//! Each scheme assigns a rational coefficient to every cell of the integrated
//! form: `x_i Σ_j c(i, j) a_kj x_j` for the linear schemes and
//! `x_i Σ_k x_k Σ_j c(i, k, j) a_kj x_j` for the quadratic ones. The
//! `Printed` variant evaluates each formula as typeset; `Reconstructed`
//! applies the smallest repair that makes the formula agree with term-by-term
//! integration, falling back to the delta rule where no repair is known.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fibonacci::fib_signed;
use crate::matrix::{Matrix, PolyMatrix, RationalMatrix};
use crate::poly::{Monomial, Polynomial, Variable};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchemeId {
    Lin3,
    Lin2,
    Quad3,
    Quad2,
}

impl SchemeId {
    pub const ALL: [SchemeId; 4] = [SchemeId::Lin3, SchemeId::Lin2, SchemeId::Quad3, SchemeId::Quad2];

    pub fn n(self) -> usize {
        match self {
            SchemeId::Lin3 | SchemeId::Quad3 => 3,
            SchemeId::Lin2 | SchemeId::Quad2 => 2,
        }
    }

    pub fn is_quadratic(self) -> bool {
        matches!(self, SchemeId::Quad3 | SchemeId::Quad2)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SchemeId::Lin3 => "lin3",
            SchemeId::Lin2 => "lin2",
            SchemeId::Quad3 => "quad3",
            SchemeId::Quad2 => "quad2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Printed,
    Reconstructed,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Printed => "printed",
            Variant::Reconstructed => "reconstructed",
        }
    }
}

/// A (formula, variant) pair. Its dimension is fixed by the formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoefficientScheme {
    pub id: SchemeId,
    pub variant: Variant,
}

impl CoefficientScheme {
    pub fn new(id: SchemeId, variant: Variant) -> Self {
        CoefficientScheme { id, variant }
    }

    pub fn printed(id: SchemeId) -> Self {
        CoefficientScheme::new(id, Variant::Printed)
    }

    pub fn reconstructed(id: SchemeId) -> Self {
        CoefficientScheme::new(id, Variant::Reconstructed)
    }

    pub fn n(self) -> usize {
        self.id.n()
    }

    /// Every (id, variant) pair, ordered by id then variant.
    pub fn all() -> Vec<CoefficientScheme> {
        SchemeId::ALL
            .iter()
            .flat_map(|&id| [Variant::Printed, Variant::Reconstructed].map(|v| CoefficientScheme::new(id, v)))
            .collect()
    }
}

impl fmt::Display for CoefficientScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.id.as_str(), self.variant.as_str())
    }
}

/// Parses `lin3`, `quad2:printed`, `lin2:reconstructed`, ... The variant
/// defaults to `reconstructed`.
impl FromStr for CoefficientScheme {
    type Err = SchemeError;

    fn from_str(s: &str) -> Result<Self, SchemeError> {
        let (id, variant) = s.split_once(':').unwrap_or((s, "reconstructed"));
        let id = SchemeId::ALL
            .into_iter()
            .find(|cand| cand.as_str() == id)
            .ok_or_else(|| SchemeError::UnknownScheme(s.to_string()))?;
        let variant = match variant {
            "printed" => Variant::Printed,
            "reconstructed" => Variant::Reconstructed,
            _ => return Err(SchemeError::UnknownScheme(s.to_string())),
        };
        Ok(CoefficientScheme::new(id, variant))
    }
}

/// Why a formula produced no value for a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum CellFailure {
    #[error("division by zero")]
    DivisionByZero,
    #[error("factorial of a negative value")]
    FactorialOfNegative,
    #[error("factorial of a non-integer")]
    NonIntegerFactorial,
    #[error("Fibonacci index out of domain")]
    FibDomain,
}

impl CellFailure {
    pub fn as_str(self) -> &'static str {
        match self {
            CellFailure::DivisionByZero => "division-by-zero",
            CellFailure::FactorialOfNegative => "factorial-of-negative",
            CellFailure::NonIntegerFactorial => "non-integer-factorial",
            CellFailure::FibDomain => "fib-domain-error",
        }
    }
}

/// One evaluated cell. Indices are 1-based; `k` is `None` for linear schemes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCoefficient {
    pub i: usize,
    pub k: Option<usize>,
    pub j: usize,
    pub value: Result<Rational, CellFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("unknown scheme {0:?} (expected lin3, lin2, quad3 or quad2 with optional :printed or :reconstructed)")]
    UnknownScheme(String),
    #[error("{name} index {index} out of range 1..={n}")]
    IndexOutOfRange { name: &'static str, index: usize, n: usize },
    #[error("row index k is required for quadratic coefficients and forbidden for linear ones")]
    RowIndexMismatch,
    #[error("scheme {0} does not apply to a {1} form")]
    WrongKind(CoefficientScheme, &'static str),
    #[error("scheme {scheme} is defined only for {n}x{n} forms, got {rows}x{cols}; use the oracle for other sizes")]
    Dimension {
        scheme: CoefficientScheme,
        n: usize,
        rows: usize,
        cols: usize,
    },
    #[error("scheme {scheme} fails at cell (i={i}, k={k}, j={j}): {cause}", k = k.map_or("-".to_string(), |k| k.to_string()))]
    Cell {
        scheme: CoefficientScheme,
        i: usize,
        k: Option<usize>,
        j: usize,
        cause: CellFailure,
    },
}

fn check(name: &'static str, index: usize, n: usize) -> Result<(), SchemeError> {
    if (1..=n).contains(&index) {
        Ok(())
    } else {
        Err(SchemeError::IndexOutOfRange { name, index, n })
    }
}

/// The delta rule: `1/(1 + [j=i])` for linear cells and
/// `1/(1 + [k=i] + [j=i])` for quadratic cells.
pub fn canonical_coefficient(n: usize, i: usize, k: Option<usize>, j: usize) -> Result<Rational, SchemeError> {
    check("i", i, n)?;
    check("j", j, n)?;
    if let Some(k) = k {
        check("k", k, n)?;
    }
    let hits = 1 + i64::from(j == i) + k.map_or(0, |k| i64::from(k == i));
    Ok(Rational::new(1, hits).expect("positive denominator"))
}

type Cell = Result<Rational, CellFailure>;

fn int(v: i64) -> Rational {
    Rational::integer(v)
}

fn factorial(r: &Rational) -> Cell {
    let v = r.to_i64().ok_or(if r.is_integer() {
        CellFailure::FactorialOfNegative
    } else {
        CellFailure::NonIntegerFactorial
    })?;
    if v < 0 {
        return Err(CellFailure::FactorialOfNegative);
    }
    Ok((2..=v).fold(Rational::one(), |acc, t| acc * int(t)))
}

fn fib(k: i64) -> Cell {
    let v = fib_signed(k).map_err(|_| CellFailure::FibDomain)?;
    Ok(int(i64::try_from(v).map_err(|_| CellFailure::FibDomain)?))
}

fn recip(r: Rational) -> Cell {
    r.recip().map_err(|_| CellFailure::DivisionByZero)
}

/// `base^exp` with `0^0 = 1`; a negative exponent inverts.
fn power(base: i64, exp: i64) -> Cell {
    let magnitude = int(base).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        Ok(magnitude)
    } else {
        recip(magnitude)
    }
}

fn evaluate(s: CoefficientScheme, i: usize, k: Option<usize>, j: usize) -> Cell {
    let n = s.n() as i64;
    let (i, j) = (i as i64, j as i64);
    let k = k.map(|k| k as i64);
    let canonical = || canonical_coefficient(s.n(), i as usize, k.map(|k| k as usize), j as usize).expect("validated");
    use SchemeId::*;
    use Variant::*;
    match (s.id, s.variant, i, k) {
        (Lin3, _, 1, None) => recip(factorial(&int(n - j))?),
        (Lin3, _, 2, None) => {
            // The factorial in ((n-j)/i)! only applies to non-negative integers.
            let arg = Rational::new(n - j, i).expect("i >= 1");
            if arg.is_integer() && !arg.is_negative() {
                factorial(&arg)
            } else {
                Ok(arg)
            }
        }
        (Lin3, _, 3, None) => recip(factorial(&int(j - 1))?),

        (Lin2, _, 1, None) => Ok(Rational::new(j, n).expect("n >= 1")),
        (Lin2, Printed, 2, None) => recip(int(i)),
        (Lin2, Reconstructed, 2, None) => recip(int(j)),

        (Quad3, Printed, 1, Some(k)) => recip(int(n) - fib(j - 1)? - factorial(&int(k - (k - 1)))?),
        (Quad3, Reconstructed, 1, Some(k)) => recip(int(n) - fib(j - 1)? - (int(k) - factorial(&int(k - 1))?)),
        (Quad3, Printed, 2, Some(k)) => recip(int(n) - fib((j - i).abs())? + int(i - k)),
        (Quad3, Reconstructed, 2, Some(k)) => recip(int(n) - fib((j - i).abs())? - fib((i - k).abs())?),
        (Quad3, Printed, 3, Some(k)) => recip(fib(j)? + power(n - j, n - k)?),
        (Quad3, Reconstructed, 3, Some(_)) => Ok(canonical()),

        (Quad2, _, 1, Some(k)) => recip(int(n + 1) - fib(j * k - i)?),
        (Quad2, Printed, 2, Some(k)) => recip(int(2) * fib(k + j)? - int((2 - j) * k)),
        (Quad2, Reconstructed, 2, Some(_)) => Ok(canonical()),

        _ => unreachable!("indices validated before evaluation"),
    }
}

pub fn scheme_coefficient(
    s: CoefficientScheme,
    i: usize,
    k: Option<usize>,
    j: usize,
) -> Result<CellCoefficient, SchemeError> {
    let n = s.n();
    check("i", i, n)?;
    check("j", j, n)?;
    match (s.id.is_quadratic(), k) {
        (true, Some(k)) => check("k", k, n)?,
        (false, None) => {}
        _ => return Err(SchemeError::RowIndexMismatch),
    }
    Ok(CellCoefficient {
        i,
        k,
        j,
        value: evaluate(s, i, k, j),
    })
}

/// Every cell coefficient of a scheme, evaluated once.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    scheme: CoefficientScheme,
    // indexed [i][k][j], 0-based; linear schemes use a single k slot
    cells: Vec<Cell>,
}

impl CoefficientTable {
    pub fn new(scheme: CoefficientScheme) -> Self {
        let n = scheme.n();
        let ks: Vec<Option<usize>> = if scheme.id.is_quadratic() {
            (1..=n).map(Some).collect()
        } else {
            vec![None]
        };
        let mut cells = Vec::with_capacity(n * ks.len() * n);
        for i in 1..=n {
            for &k in &ks {
                for j in 1..=n {
                    cells.push(evaluate(scheme, i, k, j));
                }
            }
        }
        CoefficientTable { scheme, cells }
    }

    pub fn scheme(&self) -> CoefficientScheme {
        self.scheme
    }

    fn lookup(&self, i: usize, k: Option<usize>, j: usize) -> Result<&Rational, SchemeError> {
        let n = self.scheme.n();
        let rows = if self.scheme.id.is_quadratic() { n } else { 1 };
        let at = ((i - 1) * rows + k.map_or(0, |k| k - 1)) * n + (j - 1);
        self.cells[at].as_ref().map_err(|&cause| SchemeError::Cell {
            scheme: self.scheme,
            i,
            k,
            j,
            cause,
        })
    }

    /// Entry `(k, j)` is `c(i, j) a_kj x_i x_j`.
    pub fn apply_linear(&self, a: &RationalMatrix, i: usize) -> Result<PolyMatrix, SchemeError> {
        let s = self.scheme;
        if s.id.is_quadratic() {
            return Err(SchemeError::WrongKind(s, "linear"));
        }
        let n = s.n();
        if a.cols() != n {
            return Err(SchemeError::Dimension {
                scheme: s,
                n,
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        check("i", i, n)?;
        let xi = Variable::x(i as u32);
        let mut rows = Vec::with_capacity(a.rows());
        for k in 0..a.rows() {
            let mut row = Vec::with_capacity(n);
            for j in 1..=n {
                let c = self.lookup(i, None, j)?;
                let m = Monomial::from_factors([(xi, 1), (Variable::x(j as u32), 1)]);
                row.push(Polynomial::term(c * a.get(k, j - 1), m));
            }
            rows.push(row);
        }
        Ok(Matrix::from_rows(rows).expect("non-empty rows of equal length"))
    }

    /// `Σ_k Σ_j c(i, k, j) a_kj x_i x_k x_j`.
    pub fn apply_quadratic(&self, a: &RationalMatrix, i: usize) -> Result<Polynomial, SchemeError> {
        let s = self.scheme;
        if !s.id.is_quadratic() {
            return Err(SchemeError::WrongKind(s, "quadratic"));
        }
        let n = s.n();
        if a.rows() != n || a.cols() != n {
            return Err(SchemeError::Dimension {
                scheme: s,
                n,
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        check("i", i, n)?;
        let xi = Variable::x(i as u32);
        let mut out = Polynomial::zero();
        for k in 1..=n {
            for j in 1..=n {
                let c = self.lookup(i, Some(k), j)?;
                let m = Monomial::from_factors([(xi, 1), (Variable::x(k as u32), 1), (Variable::x(j as u32), 1)]);
                out.add_term(c * a.get(k - 1, j - 1), m);
            }
        }
        Ok(out)
    }
}

pub fn apply_linear_scheme(s: CoefficientScheme, a: &RationalMatrix, i: usize) -> Result<PolyMatrix, SchemeError> {
    CoefficientTable::new(s).apply_linear(a, i)
}

pub fn apply_quadratic_scheme(s: CoefficientScheme, a: &RationalMatrix, i: usize) -> Result<Polynomial, SchemeError> {
    CoefficientTable::new(s).apply_quadratic(a, i)
}
