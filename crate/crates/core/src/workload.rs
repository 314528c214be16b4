//! Seeded matrix workloads and the lookup-versus-oracle timing comparison.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::calculus::{integrate_linear_form, integrate_quadratic_form, LinearForm, QuadraticForm};
use crate::matrix::{Matrix, PolyMatrix, RationalMatrix};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::schemes::{CoefficientScheme, CoefficientTable, SchemeError, SchemeId};

pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

/// 64-bit linear congruential generator yielding matrix entries in `-9..=9`.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(LCG_MULTIPLIER).wrapping_add(LCG_INCREMENT);
        self.state
    }

    pub fn next_entry(&mut self) -> i64 {
        ((self.next_u64() >> 33) % 19) as i64 - 9
    }

    /// An `n × n` integer matrix filled in row-major order.
    pub fn matrix(&mut self, n: usize) -> RationalMatrix {
        Matrix::from_fn(n, n, |_, _| Rational::integer(self.next_entry()))
    }
}

/// Every integral computed for one matrix: the linear element-wise matrix and
/// the quadratic-form integral, for each integration variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integrals {
    pub linear: Vec<PolyMatrix>,
    pub quadratic: Vec<Polynomial>,
}

/// Reconstructed linear and quadratic coefficient tables for one dimension.
#[derive(Debug, Clone)]
pub struct LookupPath {
    linear: CoefficientTable,
    quadratic: CoefficientTable,
}

impl LookupPath {
    pub fn new(n: usize) -> Option<Self> {
        let (lin, quad) = match n {
            2 => (SchemeId::Lin2, SchemeId::Quad2),
            3 => (SchemeId::Lin3, SchemeId::Quad3),
            _ => return None,
        };
        Some(LookupPath {
            linear: CoefficientTable::new(CoefficientScheme::reconstructed(lin)),
            quadratic: CoefficientTable::new(CoefficientScheme::reconstructed(quad)),
        })
    }

    pub fn integrate(&self, a: &RationalMatrix) -> Result<Integrals, SchemeError> {
        let n = a.rows();
        let linear = (1..=n)
            .map(|i| self.linear.apply_linear(a, i))
            .collect::<Result<_, _>>()?;
        let quadratic = (1..=n)
            .map(|i| self.quadratic.apply_quadratic(a, i))
            .collect::<Result<_, _>>()?;
        Ok(Integrals { linear, quadratic })
    }
}

/// The same integrals through term-by-term expansion.
pub fn oracle_integrals(a: &RationalMatrix) -> Integrals {
    let n = a.rows();
    let lf = LinearForm::new(a.clone());
    let qf = QuadraticForm::new(a.clone()).expect("square workload matrix");
    Integrals {
        linear: (1..=n)
            .map(|i| integrate_linear_form(&lf, i).expect("in range"))
            .collect(),
        quadratic: (1..=n)
            .map(|i| integrate_quadratic_form(&qf, i).expect("in range"))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    /// Matrices whose lookup and oracle outputs were identical.
    pub identical: usize,
    /// First mismatching matrix (0-based position in the sequence), if any.
    pub first_mismatch: Option<usize>,
    pub lookup_elapsed: Duration,
    pub oracle_elapsed: Duration,
}

impl BenchReport {
    pub fn all_identical(&self) -> bool {
        self.identical == self.count
    }

    /// Oracle time divided by lookup time.
    pub fn speedup(&self) -> f64 {
        self.oracle_elapsed.as_secs_f64() / self.lookup_elapsed.as_secs_f64().max(f64::MIN_POSITIVE)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BenchError {
    #[error("dimension must be 2 or 3, got {0}")]
    Dimension(usize),
    #[error("count must be at least 1")]
    EmptyBatch,
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

const CHUNK: usize = 2048;

/// Generates `count` matrices from `seed` and integrates each through both
/// paths, timing each path separately and comparing outputs.
pub fn run_bench(n: usize, count: usize, seed: u64) -> Result<BenchReport, BenchError> {
    let lookup = LookupPath::new(n).ok_or(BenchError::Dimension(n))?;
    if count == 0 {
        return Err(BenchError::EmptyBatch);
    }
    let mut rng = Lcg::new(seed);
    let mut report = BenchReport {
        n,
        count,
        seed,
        identical: 0,
        first_mismatch: None,
        lookup_elapsed: Duration::ZERO,
        oracle_elapsed: Duration::ZERO,
    };
    let mut done = 0;
    while done < count {
        let batch: Vec<RationalMatrix> = (0..CHUNK.min(count - done)).map(|_| rng.matrix(n)).collect();

        let start = Instant::now();
        let fast: Vec<Integrals> = batch
            .par_iter()
            .map(|a| lookup.integrate(a))
            .collect::<Result<_, _>>()?;
        report.lookup_elapsed += start.elapsed();

        let start = Instant::now();
        let slow: Vec<Integrals> = batch.par_iter().map(oracle_integrals).collect();
        report.oracle_elapsed += start.elapsed();

        for (offset, (f, s)) in fast.iter().zip(&slow).enumerate() {
            if f == s {
                report.identical += 1;
            } else if report.first_mismatch.is_none() {
                report.first_mismatch = Some(done + offset);
            }
        }
        done += batch.len();
    }
    Ok(report)
}
