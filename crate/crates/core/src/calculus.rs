//! Term-by-term differentiation and integration, and the matrix-derivative
//! identities built on them. This is the ground truth the coefficient schemes
//! are audited against.

use crate::error::{MathError, Result};
use crate::matrix::{Matrix, PolyMatrix, RationalMatrix};
use crate::poly::{Family, Monomial, Polynomial, Variable};
use crate::rational::Rational;

/// `y = A v` for a constant `m × n` matrix `A` over the variables of `family`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    matrix: RationalMatrix,
    family: Family,
}

impl LinearForm {
    pub fn new(matrix: RationalMatrix) -> Self {
        LinearForm {
            matrix,
            family: Family::X,
        }
    }

    pub fn with_family(matrix: RationalMatrix, family: Family) -> Self {
        LinearForm { matrix, family }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    pub fn components(&self) -> Vec<Polynomial> {
        self.matrix.apply_to_vars(self.family)
    }
}

/// `β = xᵀ A x` for a square, not necessarily symmetric, `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    matrix: RationalMatrix,
}

impl QuadraticForm {
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(MathError::Dimension(format!(
                "quadratic form needs a square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(QuadraticForm { matrix })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// `Σ_k Σ_j a_kj x_k x_j`.
    pub fn expand(&self) -> Polynomial {
        let n = self.n();
        let mut beta = Polynomial::zero();
        for k in 0..n {
            for j in 0..n {
                let m = Monomial::from_factors([(x_var(k), 1), (x_var(j), 1)]);
                beta.add_term(self.matrix.get(k, j).clone(), m);
            }
        }
        beta
    }
}

fn x_var(zero_based: usize) -> Variable {
    Variable::x(zero_based as u32 + 1)
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(MathError::IndexOutOfRange { index: i, n })
    }
}

pub fn partial_derivative(p: &Polynomial, v: Variable) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let e = m.exponent(v);
        if e > 0 {
            out.add_term(c * &Rational::integer(e.into()), m.with_exponent(v, e - 1));
        }
    }
    out
}

/// Antiderivative in `v` with zero constant of integration. Terms free of `v`
/// are constants under `dv` and gain a factor of `v`.
pub fn integrate_poly(p: &Polynomial, v: Variable) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let e = m.exponent(v);
        let divisor = Rational::integer(i64::from(e) + 1);
        out.add_term(
            c.checked_div(&divisor).expect("positive divisor"),
            m.with_exponent(v, e + 1),
        );
    }
    out
}

/// Entry `(k, i)` is `∂ys[k]/∂v_i` for `v = family_1..family_n`.
pub fn jacobian(ys: &[Polynomial], family: Family, n: usize) -> Result<PolyMatrix> {
    if ys.is_empty() || n == 0 {
        return Err(MathError::Dimension(
            "jacobian needs at least one function and one variable".into(),
        ));
    }
    Ok(Matrix::from_fn(ys.len(), n, |k, i| {
        partial_derivative(&ys[k], Variable::new(family, i as u32 + 1))
    }))
}

/// Row vector `vᵀ M`, where `v` runs over the first `M.rows` variables of
/// `family`.
pub fn row_times_matrix(family: Family, m: &RationalMatrix) -> PolyMatrix {
    Matrix::from_fn(1, m.cols(), |_, c| {
        Polynomial::from_terms(
            (0..m.rows()).map(|r| (m.get(r, c).clone(), Monomial::var(Variable::new(family, r as u32 + 1)))),
        )
    })
}

/// Replaces each variable by the polynomial `subst` returns for it (or keeps it).
pub fn substitute(p: &Polynomial, subst: impl Fn(Variable) -> Option<Polynomial>) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let mut term = Polynomial::constant(c.clone());
        for &(v, e) in m.factors() {
            let base = subst(v).unwrap_or_else(|| Polynomial::var(v));
            term = &term * &base.pow(e);
        }
        out = out + term;
    }
    out
}

/// Chain rule for `y = A x`, `x = B z`: `∂y/∂z = A B`.
pub fn derivative_prop_composed(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    a.checked_mul(b)
}

/// Jacobian of `y = A (B z)` with respect to `z`, computed by substituting and
/// differentiating.
pub fn composed_jacobian(a: &RationalMatrix, b: &RationalMatrix) -> Result<PolyMatrix> {
    if a.cols() != b.rows() {
        return Err(MathError::Dimension(format!(
            "A has {} columns but B has {} rows",
            a.cols(),
            b.rows()
        )));
    }
    let xs = b.apply_to_vars(Family::Z);
    let ys: Vec<Polynomial> = a
        .apply_to_vars(Family::X)
        .iter()
        .map(|y| {
            substitute(y, |v| match v.family() {
                Family::X => xs.get(v.index() as usize - 1).cloned(),
                _ => None,
            })
        })
        .collect();
    jacobian(&ys, Family::Z, b.cols())
}

/// Builds `α = yᵀ A x` and returns `(∂α/∂x, ∂α/∂y)` as row vectors.
pub fn derivative_prop_bilinear(y_dim: usize, a: &RationalMatrix) -> Result<(PolyMatrix, PolyMatrix)> {
    if a.rows() != y_dim {
        return Err(MathError::Dimension(format!(
            "A has {} rows, expected {y_dim}",
            a.rows()
        )));
    }
    let ax = a.apply_to_vars(Family::X);
    let mut alpha = Polynomial::zero();
    for (r, row) in ax.iter().enumerate() {
        alpha = alpha + &Polynomial::var(Variable::y(r as u32 + 1)) * row;
    }
    let by_x = jacobian(std::slice::from_ref(&alpha), Family::X, a.cols())?;
    let by_y = jacobian(std::slice::from_ref(&alpha), Family::Y, y_dim)?;
    Ok((by_x, by_y))
}

/// Closed forms `yᵀ A` and `xᵀ Aᵀ` for the bilinear gradients.
pub fn bilinear_gradients(a: &RationalMatrix) -> (PolyMatrix, PolyMatrix) {
    (
        row_times_matrix(Family::Y, a),
        row_times_matrix(Family::X, &a.transpose()),
    )
}

/// `xᵀ (A + Aᵀ)`, the gradient of `xᵀ A x`.
pub fn derivative_prop_quadratic(a: &RationalMatrix) -> Result<PolyMatrix> {
    let qf = QuadraticForm::new(a.clone())?;
    let sym = qf.matrix().checked_add(&qf.matrix().transpose())?;
    Ok(row_times_matrix(Family::X, &sym))
}

/// Element-wise integration matrix: entry `(k, j)` is `∫ a_kj v_j dv_i`.
pub fn integrate_linear_form(lf: &LinearForm, i: usize) -> Result<PolyMatrix> {
    check_index(i, lf.n())?;
    let vi = Variable::new(lf.family(), i as u32);
    let a = lf.matrix();
    Ok(Matrix::from_fn(a.rows(), a.cols(), |k, j| {
        let cell = Polynomial::term(
            a.get(k, j).clone(),
            Monomial::var(Variable::new(lf.family(), j as u32 + 1)),
        );
        integrate_poly(&cell, vi)
    }))
}

/// `∫ β dx_i` by expanding `β = xᵀ A x` and integrating term by term.
pub fn integrate_quadratic_form(qf: &QuadraticForm, i: usize) -> Result<Polynomial> {
    check_index(i, qf.n())?;
    Ok(integrate_poly(&qf.expand(), Variable::x(i as u32)))
}
