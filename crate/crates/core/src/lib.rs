//! Exact symbolic integration of 2×2 and 3×3 linear and quadratic matrix
//! forms, with closed-form Fibonacci-indexed coefficient schemes audited
//! against a term-by-term calculus oracle.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! polynomials are kept in a canonical sparse form, so structural equality is
//! mathematical equality.

pub mod calculus;
pub mod error;
pub mod fibonacci;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod schemes;
pub mod text;
pub mod verify;
pub mod workload;

pub use calculus::{
    bilinear_gradients, composed_jacobian, derivative_prop_bilinear, derivative_prop_composed,
    derivative_prop_quadratic, integrate_linear_form, integrate_poly, integrate_quadratic_form, jacobian,
    partial_derivative, LinearForm, QuadraticForm,
};
pub use error::MathError;
pub use fibonacci::{fib, fib_signed, FibIndex};
pub use matrix::{Matrix, PolyMatrix, RationalMatrix};
pub use poly::{Family, Monomial, Polynomial, Variable};
pub use rational::Rational;
pub use schemes::{
    apply_linear_scheme, apply_quadratic_scheme, canonical_coefficient, scheme_coefficient, CellCoefficient,
    CellFailure, CoefficientScheme, CoefficientTable, SchemeError, SchemeId, Variant,
};
pub use text::{parse_poly_matrix, parse_polynomial, render_poly_matrix, render_polynomial, ParseError};
pub use verify::{audit_all, audit_branches, audit_scheme, DiscrepancyReport, Verdict};
