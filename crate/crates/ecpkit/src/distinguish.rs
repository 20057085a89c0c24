//! Distinguishing structured codes from random ones by square-code
//! dimensions, measured either directly or through a quadratic system read
//! off a systematic generator matrix.
//!
//! For a code with systematic generator (I | P) the system has one equation
//! per generator row and one variable per unordered pair of redundancy
//! columns; its kernel dimension always equals the symmetric-square kernel
//! dimension of the dual code, so the dual square is observable from the
//! public generator alone. Structured codes (evaluation codes and their
//! subcodes) have squares far below the dimension a random code attains,
//! which is what [`classify`] reports.

use crate::codes::{binomial, square, sym2_kernel_dim, LinearCode};
use crate::error::{Error, Result};
use crate::families::{random_code, random_grs_spec, random_grs_subcode};
use crate::field::FieldSpec;
use crate::linalg::Matrix;
use crate::rng::trial_rng;
use crate::trials::map_trials;
use serde::Serialize;
use std::fmt;

/// The quadratic system of an explicit redundancy block: row i lists the
/// products p_ij * p_ij' over all column pairs j < j' in lexicographic
/// order.
pub fn quadratic_system(spec: &FieldSpec, p: &Matrix) -> Result<Matrix> {
    if p.cols() < 2 {
        return Err(Error::InvalidParameter(format!(
            "a redundancy block with {} columns has no column pairs",
            p.cols()
        )));
    }
    let pairs = (binomial(p.cols(), 2)) as usize;
    let mut system = Matrix::zero(spec, p.rows(), pairs);
    for i in 0..p.rows() {
        let mut slot = 0;
        for j in 0..p.cols() {
            for jj in j + 1..p.cols() {
                system.set(i, slot, spec.mul(p.get(i, j), p.get(i, jj)));
                slot += 1;
            }
        }
        debug_assert_eq!(slot, pairs);
    }
    Ok(system)
}

/// The redundancy block of the code's systematic generator.
fn redundancy_block(code: &LinearCode) -> Result<Matrix> {
    let (sys, _) = code.generator().systematic_form()?;
    let cols: Vec<usize> = (code.k()..code.n()).collect();
    Ok(sys.select_cols(&cols))
}

/// The quadratic system of the code itself, built from its systematic form.
pub fn build_lp(code: &LinearCode) -> Result<Matrix> {
    quadratic_system(code.spec(), &redundancy_block(code)?)
}

/// Kernel dimension of the code's quadratic system. By the kernel identity
/// checked in [`check_prop1`] this equals the symmetric-square kernel
/// dimension of the dual code.
pub fn dim_k_lp(code: &LinearCode) -> Result<usize> {
    if code.n() - code.k() < 2 {
        return Ok(0);
    }
    let system = build_lp(code)?;
    Ok(system.cols() - system.rank())
}

/// Checks the kernel identity in both directions: the system of (I | P)
/// measures the dual's symmetric-square kernel, and the system of the
/// transposed block measures the code's own. Holds for every code; exposed
/// so the two independent computations can cross-validate each other.
pub fn check_prop1(code: &LinearCode) -> Result<bool> {
    let p = redundancy_block(code)?;
    let kernel_of = |block: &Matrix| -> Result<usize> {
        if block.cols() < 2 {
            return Ok(0);
        }
        let system = quadratic_system(code.spec(), block)?;
        Ok(system.cols() - system.rank())
    };
    let primal = kernel_of(&p)?;
    let through_transpose = kernel_of(&p.transpose())?;
    Ok(primal == sym2_kernel_dim(&code.dual())
        && through_transpose == sym2_kernel_dim(code))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Structured,
    RandomLike,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Structured => write!(f, "structured"),
            Verdict::RandomLike => write!(f, "random-like"),
        }
    }
}

/// Square-code measurements of one code, with the dimensions a random code
/// of the same parameters would attain for comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistinguisherReport {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    /// Dimension of the square code.
    pub dim_square: usize,
    /// Square dimension a random [n, k] code attains: min(n, k(k+1)/2).
    pub random_expectation: usize,
    /// Kernel dimension of the symmetric square map, k(k+1)/2 - dim_square.
    pub dim_k2: usize,
    /// Dual-side kernel, measured through the quadratic system.
    pub dim_klp: usize,
    /// The dual-side kernel a random code attains, for comparison.
    pub dual_kernel_expectation: usize,
    /// The primal square cannot exceed the length; when the random
    /// expectation is clipped there, only the dual side can separate.
    pub primal_saturated: bool,
    /// Result of the kernel-identity cross-check; true on every code.
    pub prop1_holds: bool,
    pub verdict: Verdict,
}

/// Measures the code's square and its dual's square (through the quadratic
/// system) and compares both against random-code expectations. The verdict
/// is structured when the primal square falls short of the random
/// expectation, or, once the primal test saturates at the length, when the
/// dual-side kernel exceeds its own random expectation.
pub fn classify(code: &LinearCode) -> Result<DistinguisherReport> {
    let n = code.n();
    let k = code.k();
    let sym_pairs = binomial(k + 1, 2) as usize;
    let dim_square = square(code).k();
    let random_expectation = sym_pairs.min(n);
    let dim_klp = dim_k_lp(code)?;
    let dual_pairs = binomial(n - k + 1, 2) as usize;
    let dual_kernel_expectation = dual_pairs - dual_pairs.min(n);
    let primal_saturated = sym_pairs >= n;
    let verdict = if dim_square < random_expectation
        || (primal_saturated && dim_klp > dual_kernel_expectation)
    {
        Verdict::Structured
    } else {
        Verdict::RandomLike
    };
    Ok(DistinguisherReport {
        q: code.spec().q(),
        n,
        k,
        dim_square,
        random_expectation,
        dim_k2: sym_pairs - dim_square,
        dim_klp,
        dual_kernel_expectation,
        primal_saturated,
        prop1_holds: check_prop1(code)?,
        verdict,
    })
}

/// All pairwise products of the two codes' generator rows, without spanning:
/// the rank of this matrix is the dimension of the product code.
pub fn star_matrix(a: &LinearCode, b: &LinearCode) -> Result<Matrix> {
    if a.spec() != b.spec() {
        return Err(Error::FieldMismatch);
    }
    if a.n() != b.n() {
        return Err(Error::Shape(format!(
            "lengths {} and {} differ",
            a.n(),
            b.n()
        )));
    }
    let spec = a.spec();
    let mut rows = Vec::with_capacity(a.k() * b.k());
    for i in 0..a.k() {
        for j in 0..b.k() {
            rows.push(crate::codes::star_vectors(
                spec,
                a.generator().row(i),
                b.generator().row(j),
            )?);
        }
    }
    Matrix::from_rows(spec, a.n(), &rows)
}

/// Square dimensions of independently sampled random [n, k] codes, one per
/// trial, reproducible from the seed.
pub fn experiment_square_dim(
    spec: &FieldSpec,
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<usize>> {
    map_trials(trials, |trial| {
        let mut rng = trial_rng(seed, trial);
        Ok(square(&random_code(spec, n, k, &mut rng)?).k())
    })
    .into_iter()
    .collect()
}

/// Square dimensions of random l-dimensional subcodes of per-trial random
/// generalized Reed-Solomon codes with the given parameters.
pub fn experiment_subcode_square_dim(
    spec: &FieldSpec,
    n: usize,
    k: usize,
    l: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<usize>> {
    map_trials(trials, |trial| {
        let mut rng = trial_rng(seed, trial);
        let g = random_grs_spec(spec, n, k, &mut rng)?;
        Ok(square(&random_grs_subcode(&g, l, &mut rng)?).k())
    })
    .into_iter()
    .collect()
}

/// Rank deficiencies st - rank of the star matrices of pairs of independent
/// random codes of dimensions s and t. Requires st < n so that full rank is
/// the generic outcome; deficiency zero means the products span freely.
pub fn experiment_star_rank(
    spec: &FieldSpec,
    n: usize,
    s: usize,
    t: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<usize>> {
    if s * t >= n {
        return Err(Error::InvalidParameter(format!(
            "star rank deficiency needs s*t < n, got {s}*{t} >= {n}"
        )));
    }
    map_trials(trials, |trial| {
        let mut rng = trial_rng(seed, trial);
        let a = random_code(spec, n, s, &mut rng)?;
        let b = random_code(spec, n, t, &mut rng)?;
        Ok(s * t - star_matrix(&a, &b)?.rank())
    })
    .into_iter()
    .collect()
}

/// Evaluates the kernel identity on random [n, k] codes, one per trial.
/// Every entry should come back true; a false value indicates a defect in
/// one of the two computations it compares.
pub fn experiment_prop1(
    spec: &FieldSpec,
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<bool>> {
    map_trials(trials, |trial| {
        let mut rng = trial_rng(seed, trial);
        check_prop1(&random_code(spec, n, k, &mut rng)?)
    })
    .into_iter()
    .collect()
}
