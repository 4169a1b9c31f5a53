//! Closed-form solvers, generic over the field traits.
//!
//! Coefficient arguments follow the usual naming: `a x^n + b x^(n-1) + ...`.
//! Total solvers split on the backend's zero test and always return exactly
//! `degree` roots, with repetition. The `*_strict` entry points instead
//! refuse inputs outside the classical side conditions.

pub mod conditions;
pub mod cubic;
pub mod quadratic;
pub mod quartic;

use thiserror::Error;

use crate::field::{Field, FieldError};

pub use cubic::{
    cardano_root, cubic_roots_depressed_total, depress_cubic, solve_cubic, solve_cubic_strict,
    CbrtSelector, DepressedCubic,
};
pub use quadratic::{solve_linear, solve_quadratic_general, solve_quadratic_monic};
pub use quartic::{
    depress_quartic, quartic_roots_depressed_total, quartic_split_depressed, resolvent_coeffs,
    solve_quartic, solve_quartic_strict, DepressedQuartic, QuarticSplit,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("degenerate leading coefficient")]
    DegenerateLeading,
    #[error("use total solver")]
    UseTotalSolver,
    #[error("biquadratic case")]
    BiquadraticCase,
    #[error("excluded by hypothesis: {0}")]
    StrictHypothesis(&'static str),
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl SolveError {
    pub fn is_reducible_extension(&self) -> bool {
        matches!(self, SolveError::Field(FieldError::ReducibleExtension { .. }))
    }
}

/// A root together with the formula branch that produced it.
#[derive(Debug, Clone)]
pub struct Labeled<E> {
    pub branch: &'static str,
    pub value: E,
}

impl<E> Labeled<E> {
    pub fn new(branch: &'static str, value: E) -> Self {
        Labeled { branch, value }
    }
}

pub(crate) fn half<F: Field>(f: &F, x: &F::Elem) -> Result<F::Elem, FieldError> {
    f.div(x, &f.from_integer(2))
}

/// Divides every coefficient by the leading one; errors when it is zero.
pub fn make_monic<F: Field>(f: &F, coeffs: &[F::Elem]) -> Result<Vec<F::Elem>, SolveError> {
    let lead = &coeffs[0];
    if f.is_zero(lead) {
        return Err(SolveError::DegenerateLeading);
    }
    let inv = f.inverse(lead)?;
    Ok(std::iter::once(f.one())
        .chain(coeffs[1..].iter().map(|c| f.mul(c, &inv)))
        .collect())
}

/// Shifts every root by `-shift`.
pub(crate) fn unshift<F: Field>(
    f: &F,
    roots: impl IntoIterator<Item = Labeled<F::Elem>>,
    shift: &F::Elem,
) -> Vec<Labeled<F::Elem>> {
    roots
        .into_iter()
        .map(|r| Labeled::new(r.branch, f.sub(&r.value, shift)))
        .collect()
}
