//! Runtime checks of solver output: substitution, factorization, and an
//! independent numeric oracle.

mod exhibit;
mod oracle;
mod poly;

use num_complex::Complex64;

use crate::complex::{ComplexField, ROOT_MATCH_TOL};
use crate::exact::ExactField;
use crate::rational::BigRational;
use crate::records::{Backend, Solution};
use crate::tower::TowerElement;

pub use exhibit::{negative_exhibit_two_cbrts, Adversarial, Exhibit};
pub use oracle::{
    durand_kerner, match_root_multisets, min_separation, MatchVerdict, OracleError, DK_MAX_ITER,
    DK_TOL,
};
pub use poly::{expand_monic_from_roots, horner_eval};

/// Float residuals must stay below this times `sum |a_i| |x|^i`.
pub const FLOAT_RESIDUAL_TOL: f64 = 1e-6;

/// Input polynomial, leading coefficient first.
#[derive(Debug, Clone, Copy)]
pub enum Coefficients<'a> {
    Rational(&'a [BigRational]),
    Complex(&'a [Complex64]),
}

impl Coefficients<'_> {
    fn monic_complex(&self) -> Vec<Complex64> {
        let raw: Vec<Complex64> = match self {
            Coefficients::Rational(q) => q.iter().map(|x| Complex64::new(x.to_f64(), 0.0)).collect(),
            Coefficients::Complex(c) => c.to_vec(),
        };
        raw.iter().map(|c| c / raw[0]).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Factorization {
    /// Exact comparison of `prod (x - r)` with the monic input.
    Exact(bool),
    /// Largest coefficient error of the float expansion.
    Float { max_error: f64, ok: bool },
}

impl Factorization {
    pub fn ok(&self) -> bool {
        match self {
            Factorization::Exact(ok) => *ok,
            Factorization::Float { ok, .. } => *ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleVerdict {
    pub converged: bool,
    pub matched: bool,
    pub max_distance: f64,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub backend: Backend,
    /// `|p(root)|` for the monic-normalized input, per root.
    pub residuals: Vec<f64>,
    /// Whether every residual is literally zero; `None` without exact roots.
    pub exact_residuals_zero: Option<bool>,
    pub factorization: Factorization,
    pub oracle: OracleVerdict,
    pub notes: Vec<String>,
    pub pass: bool,
}

fn exact_monic(q: &[BigRational]) -> Vec<TowerElement> {
    let lead = q[0].inverse().expect("nonzero leading coefficient");
    q.iter().map(|x| TowerElement::rational(x * &lead)).collect()
}

/// `sum |a_i| |z|^i` over the monic coefficients.
fn residual_scale(monic: &[Complex64], z: Complex64) -> f64 {
    monic
        .iter()
        .rev()
        .enumerate()
        .map(|(i, a)| a.norm() * z.norm().powi(i as i32))
        .sum()
}

fn float_residuals(monic: &[Complex64], roots: &[Complex64]) -> Vec<f64> {
    let f = ComplexField::new();
    roots.iter().map(|z| horner_eval(&f, monic, z).norm()).collect()
}

/// `|p(root)|` for the monic-normalized input; exact evaluation when the
/// roots carry exact values.
pub fn root_residuals(coeffs: Coefficients<'_>, solution: &Solution) -> Vec<f64> {
    match (coeffs, exact_roots(solution)) {
        (Coefficients::Rational(q), Some(roots)) => {
            let f = ExactField::new();
            let monic = exact_monic(q);
            roots
                .iter()
                .map(|r| horner_eval(&f, &monic, r).to_complex().norm())
                .collect()
        }
        _ => float_residuals(&coeffs.monic_complex(), &solution.approx_roots()),
    }
}

fn exact_roots(solution: &Solution) -> Option<Vec<TowerElement>> {
    solution.roots.iter().map(|r| r.exact.clone()).collect()
}

/// Checks `solution` against `coeffs`. A report passes when every residual
/// is within its threshold, the factorization identity holds, and the oracle
/// agrees; an oracle that fails to converge is noted instead of failing.
pub fn verify_solution(coeffs: Coefficients<'_>, solution: &Solution) -> VerificationReport {
    let monic_c = coeffs.monic_complex();
    let approx = solution.approx_roots();
    let mut notes = solution.notes.clone();

    let exact = match (coeffs, exact_roots(solution)) {
        (Coefficients::Rational(q), Some(roots)) => Some((q, roots)),
        _ => None,
    };
    let (residuals, exact_zero, residual_ok, factorization) = match exact {
        Some((q, roots)) => {
            let f = ExactField::new();
            let monic = exact_monic(q);
            let values: Vec<TowerElement> =
                roots.iter().map(|r| horner_eval(&f, &monic, r)).collect();
            let all_zero = values.iter().all(TowerElement::is_zero);
            let residuals = values.iter().map(|v| v.to_complex().norm()).collect();
            let expanded = expand_monic_from_roots(&f, &roots);
            (residuals, Some(all_zero), all_zero, Factorization::Exact(expanded == monic))
        }
        None => {
            let f = ComplexField::new();
            let residuals = float_residuals(&monic_c, &approx);
            let ok = residuals.iter().zip(&approx).all(|(r, z)| *r <= FLOAT_RESIDUAL_TOL * residual_scale(&monic_c, *z));
            let expanded = expand_monic_from_roots(&f, &approx);
            let max_error = expanded
                .iter()
                .zip(&monic_c)
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            let coeff_scale = monic_c.iter().map(|c| c.norm()).fold(1.0, f64::max);
            let fact = Factorization::Float {
                max_error,
                ok: max_error <= FLOAT_RESIDUAL_TOL * coeff_scale,
            };
            (residuals, None, ok, fact)
        }
    };

    let (oracle_roots, converged) = match durand_kerner(&monic_c, DK_TOL, DK_MAX_ITER) {
        Ok(r) => (r, true),
        Err(e) => {
            notes.push(format!("{e}; oracle result flagged, not failed"));
            (e.last, false)
        }
    };
    let m = match_root_multisets(&approx, &oracle_roots, ROOT_MATCH_TOL);
    if !m.matched && converged {
        notes.push(format!("oracle mismatch, max distance {:.3e}", m.max_distance));
    }
    let oracle = OracleVerdict {
        converged,
        matched: m.matched,
        max_distance: m.max_distance,
    };
    let pass = residual_ok && factorization.ok() && (oracle.matched || !oracle.converged);
    VerificationReport {
        backend: solution.backend,
        residuals,
        exact_residuals_zero: exact_zero,
        factorization,
        oracle,
        notes,
        pass,
    }
}
