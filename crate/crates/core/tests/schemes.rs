//! Scheme-versus-oracle properties and the locked agreement sets.

use matint_core::verify::{audit_scheme, Verdict};
use matint_core::{
    apply_linear_scheme, apply_quadratic_scheme, integrate_linear_form, integrate_quadratic_form, CoefficientScheme,
    LinearForm, QuadraticForm, Rational, RationalMatrix, SchemeId, Variant,
};
use proptest::prelude::*;

fn matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec((-9i64..=9, 1i64..=3), n * n).prop_map(move |v| {
        let entries: Vec<Rational> = v.into_iter().map(|(a, b)| Rational::new(a, b).unwrap()).collect();
        RationalMatrix::from_rows(entries.chunks(n).map(<[Rational]>::to_vec).collect()).unwrap()
    })
}

fn s(id: &str) -> CoefficientScheme {
    id.parse().unwrap()
}

fn linear_equals_oracle(scheme: CoefficientScheme, a: &RationalMatrix, i: usize) -> bool {
    apply_linear_scheme(scheme, a, i).unwrap() == integrate_linear_form(&LinearForm::new(a.clone()), i).unwrap()
}

fn quadratic_equals_oracle(scheme: CoefficientScheme, a: &RationalMatrix, i: usize) -> bool {
    apply_quadratic_scheme(scheme, a, i).unwrap()
        == integrate_quadratic_form(&QuadraticForm::new(a.clone()).unwrap(), i).unwrap()
}

/// `c` at 0-based `(k, j)`, zero elsewhere.
fn single_cell(n: usize, k: usize, j: usize, c: &Rational) -> RationalMatrix {
    RationalMatrix::from_fn(n, n, |r, col| {
        if (r, col) == (k, j) {
            c.clone()
        } else {
            Rational::zero()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn lin3_matches_oracle(a in matrix(3)) {
        for variant in ["lin3:printed", "lin3:reconstructed"] {
            for i in 1..=3 {
                prop_assert!(linear_equals_oracle(s(variant), &a, i), "{variant} i={i}");
            }
        }
    }

    #[test]
    fn lin2_branches(a in matrix(2)) {
        prop_assert!(linear_equals_oracle(s("lin2:printed"), &a, 1));
        prop_assert!(linear_equals_oracle(s("lin2:reconstructed"), &a, 1));
        prop_assert!(linear_equals_oracle(s("lin2:reconstructed"), &a, 2));

        // printed i=2 is off exactly in column j=1: 1/2 instead of 1
        let printed = apply_linear_scheme(s("lin2:printed"), &a, 2).unwrap();
        let oracle = integrate_linear_form(&LinearForm::new(a.clone()), 2).unwrap();
        for k in 0..2 {
            prop_assert_eq!(printed.get(k, 1), oracle.get(k, 1));
            let half = oracle.get(k, 0).scale(&Rational::new(1, 2).unwrap());
            prop_assert_eq!(printed.get(k, 0), &half);
        }
    }

    #[test]
    fn quad3_reconstructed_matches_oracle(a in matrix(3)) {
        for i in 1..=3 {
            prop_assert!(quadratic_equals_oracle(s("quad3:reconstructed"), &a, i));
        }
    }

    #[test]
    fn quad2_matches_oracle(a in matrix(2)) {
        prop_assert!(quadratic_equals_oracle(s("quad2:printed"), &a, 1));
        prop_assert!(quadratic_equals_oracle(s("quad2:reconstructed"), &a, 1));
        prop_assert!(quadratic_equals_oracle(s("quad2:reconstructed"), &a, 2));
    }

    #[test]
    fn disagreement_depends_only_on_the_cell(c in (1i64..=9, 1i64..=5, any::<bool>())) {
        let c = Rational::new(if c.2 { c.0 } else { -c.0 }, c.1).unwrap();
        for scheme in CoefficientScheme::all() {
            let n = scheme.n();
            for i in 1..=n {
                let report = audit_scheme(scheme, i);
                for cell in &report.cells {
                    let j = cell.j() - 1;
                    let same = match cell.k() {
                        Some(k) => quadratic_equals_oracle(scheme, &single_cell(n, k - 1, j, &c), i),
                        None => (0..n).all(|k| linear_equals_oracle(scheme, &single_cell(n, k, j, &c), i)),
                    };
                    prop_assert_eq!(same, cell.verdict == Verdict::Agree, "{} i={} cell {:?}", scheme, i, (cell.k(), cell.j()));
                }
            }
        }
    }
}

type Cells = Vec<(Option<usize>, usize)>;

fn lin(js: &[usize]) -> Cells {
    js.iter().map(|&j| (None, j)).collect()
}

fn quad(cells: &[(usize, usize)]) -> Cells {
    cells.iter().map(|&(k, j)| (Some(k), j)).collect()
}

fn all_quad(n: usize) -> Cells {
    (1..=n).flat_map(|k| (1..=n).map(move |j| (Some(k), j))).collect()
}

/// The locked agreement set of every (scheme, variant, branch).
fn expected_agreement(scheme: CoefficientScheme, i: usize) -> Cells {
    use SchemeId::*;
    use Variant::*;
    match (scheme.id, scheme.variant, i) {
        (Lin3, _, _) => lin(&[1, 2, 3]),
        (Lin2, _, 1) => lin(&[1, 2]),
        (Lin2, Printed, 2) => lin(&[2]),
        (Lin2, Reconstructed, 2) => lin(&[1, 2]),
        (Quad3, Reconstructed, _) => all_quad(3),
        (Quad3, Printed, 1 | 2) => quad(&[(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]),
        (Quad3, Printed, 3) => quad(&[(1, 3), (2, 3), (3, 1), (3, 2), (3, 3)]),
        (Quad2, _, 1) => all_quad(2),
        (Quad2, Printed, 2) => quad(&[(1, 1), (2, 1)]),
        (Quad2, Reconstructed, 2) => all_quad(2),
        other => unreachable!("{other:?}"),
    }
}

#[test]
fn locked_agreement_sets() {
    for scheme in CoefficientScheme::all() {
        for i in 1..=scheme.n() {
            let report = audit_scheme(scheme, i);
            assert_eq!(
                report.cells_with(Verdict::Agree),
                expected_agreement(scheme, i),
                "{scheme} i={i}"
            );
            assert_eq!(report.summary.failure, 0, "{scheme} i={i}");
        }
    }
}
