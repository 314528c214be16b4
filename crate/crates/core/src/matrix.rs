//! Dense rectangular matrices of rationals and of polynomials.

use std::ops::{Add, Mul};

use crate::error::{MathError, Result};
use crate::poly::{Family, Polynomial, Variable};
use crate::rational::Rational;

/// Row-major `rows × cols` grid. Both dimensions are at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type RationalMatrix = Matrix<Rational>;
pub type PolyMatrix = Matrix<Polynomial>;

impl<T> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(MathError::Dimension(
                "matrix must have at least one row and one column".into(),
            ));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(MathError::Dimension(format!(
                "row {} has {} entries, expected {ncols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from a 0-based `(row, col)` generator.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be at least 1");
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// 0-based access.
    pub fn get(&self, row: usize, col: usize) -> &T {
        assert!(
            row < self.rows && col < self.cols,
            "({row}, {col}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { Rational::one() } else { Rational::zero() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::integer(v)).collect())
                .collect(),
        )
    }

    pub fn checked_mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(MathError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(Rational::zero(), |acc, t| acc + self.get(r, t) * rhs.get(t, c))
        }))
    }

    pub fn checked_add(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(MathError::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) + rhs.get(r, c)
        }))
    }

    /// `A v` where `v = (family_1, ..., family_cols)`, one polynomial per row.
    pub fn apply_to_vars(&self, family: Family) -> Vec<Polynomial> {
        (0..self.rows)
            .map(|r| {
                Polynomial::from_terms(self.row(r).iter().enumerate().map(|(c, a)| {
                    (
                        a.clone(),
                        crate::poly::Monomial::var(Variable::new(family, c as u32 + 1)),
                    )
                }))
            })
            .collect()
    }

    pub fn to_poly(&self) -> PolyMatrix {
        self.map(|a| Polynomial::constant(a.clone()))
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_add(rhs).expect("matrix dimensions agree")
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| Polynomial::zero())
    }
}
