//! End-to-end solving of a concrete polynomial into root records.

use std::fmt;

use num_complex::Complex64;

use crate::complex::ComplexField;
use crate::exact::ExactField;
use crate::field::{CbrtField, Field};
use crate::radical::{RadicalExpr, Traced};
use crate::rational::BigRational;
use crate::solvers::{
    self, solve_cubic, solve_cubic_strict, solve_linear, solve_quartic, solve_quartic_strict,
    Labeled, SolveError,
};
use crate::tower::TowerElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Complex,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Complex => "complex",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Case analysis covering every input.
    #[default]
    Total,
    /// Plain formulas only; excluded inputs are rejected.
    Strict,
}

/// One solved root. `exact`, when present, evaluates to `approx` within 1e-9.
#[derive(Debug, Clone)]
pub struct RootRecord {
    pub exact: Option<TowerElement>,
    pub approx: Complex64,
    pub radical: RadicalExpr,
    pub label: &'static str,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub backend: Backend,
    pub roots: Vec<RootRecord>,
    pub notes: Vec<String>,
}

impl Solution {
    pub fn approx_roots(&self) -> Vec<Complex64> {
        self.roots.iter().map(|r| r.approx).collect()
    }
}

/// Solves `coeffs` (leading first) over `f`, dispatching on the degree.
pub fn solve_in<F: CbrtField>(
    f: &mut F,
    coeffs: &[F::Elem],
    mode: Mode,
) -> Result<Vec<Labeled<F::Elem>>, SolveError> {
    let degree = coeffs.len().saturating_sub(1);
    if !(1..=4).contains(&degree) {
        return Err(SolveError::UnsupportedDegree(degree));
    }
    if f.is_zero(&coeffs[0]) {
        return Err(SolveError::DegenerateLeading);
    }
    let strict = mode == Mode::Strict;
    match coeffs {
        [a, b] => Ok(vec![Labeled::new("linear", solve_linear(f, a, b)?)]),
        [a, b, c] => {
            let [x, y] = solvers::solve_quadratic_general(f, a, b, c)?;
            Ok(vec![
                Labeled::new("quadratic-plus", x),
                Labeled::new("quadratic-minus", y),
            ])
        }
        [a, b, c, d] if strict => solve_cubic_strict(f, a, b, c, d),
        [a, b, c, d] => solve_cubic(f, a, b, c, d),
        [a, b, c, d, e] if strict => solve_quartic_strict(f, [a, b, c, d, e]),
        [a, b, c, d, e] => solve_quartic(f, [a, b, c, d, e]),
        _ => unreachable!(),
    }
}

/// Exact solve over a radical tower. Leading coefficient first.
pub fn solve_exact(coeffs: &[BigRational], mode: Mode) -> Result<Solution, SolveError> {
    let mut f = Traced::new(ExactField::new());
    let elems = coeffs
        .iter()
        .map(|q| f.from_rational(q))
        .collect::<Result<Vec<_>, _>>()?;
    let roots = solve_in(&mut f, &elems, mode)?;
    Ok(Solution {
        backend: Backend::Exact,
        roots: roots
            .into_iter()
            .map(|r| {
                let (exact, radical) = r.value;
                RootRecord {
                    approx: exact.to_complex(),
                    exact: Some(exact),
                    radical,
                    label: r.branch,
                }
            })
            .collect(),
        notes: Vec::new(),
    })
}

fn float_scale(coeffs: &[Complex64]) -> f64 {
    let lead = coeffs[0].norm();
    if lead == 0.0 {
        return 1.0;
    }
    coeffs[1..]
        .iter()
        .map(|c| c.norm() / lead)
        .fold(1.0, f64::max)
}

fn solve_float(
    values: Vec<Complex64>,
    exprs: Vec<RadicalExpr>,
    mode: Mode,
) -> Result<Solution, SolveError> {
    let mut f = Traced::new(ComplexField::with_scale(float_scale(&values)));
    let elems: Vec<_> = values.into_iter().zip(exprs).collect();
    let roots = solve_in(&mut f, &elems, mode)?;
    Ok(Solution {
        backend: Backend::Complex,
        roots: roots
            .into_iter()
            .map(|r| RootRecord {
                exact: None,
                approx: r.value.0,
                radical: r.value.1,
                label: r.branch,
            })
            .collect(),
        notes: Vec::new(),
    })
}

/// Float solve of complex coefficients. Case splits use the threshold
/// `1e-12 * max(1, max |coeff / lead|)`.
pub fn solve_complex(coeffs: &[Complex64], mode: Mode) -> Result<Solution, SolveError> {
    let exprs = coeffs.iter().map(|c| RadicalExpr::approx(*c)).collect();
    solve_float(coeffs.to_vec(), exprs, mode)
}

/// Float solve of rational coefficients; radicals keep the exact literals.
pub fn solve_complex_rational(coeffs: &[BigRational], mode: Mode) -> Result<Solution, SolveError> {
    let values = coeffs.iter().map(|q| Complex64::new(q.to_f64(), 0.0)).collect();
    let exprs = coeffs.iter().map(|q| RadicalExpr::literal(q.clone())).collect();
    solve_float(values, exprs, mode)
}

/// Exact solve, retried on floats when the tower turns out reducible.
pub fn solve_rational_auto(coeffs: &[BigRational], mode: Mode) -> Result<Solution, SolveError> {
    match solve_exact(coeffs, mode) {
        Err(err) if err.is_reducible_extension() => {
            let mut sol = solve_complex_rational(coeffs, mode)?;
            sol.notes.push(format!("{err}; retried on complex floats"));
            Ok(sol)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| BigRational::from_integer(n)).collect()
    }

    #[test]
    fn exact_cardano_record() {
        let sol = solve_exact(&qs(&[1, 0, -6, -9]), Mode::Total).unwrap();
        assert_eq!(sol.roots.len(), 3);
        let first = &sol.roots[0];
        assert_eq!(first.label, "cardano-A");
        assert_eq!(first.exact, Some(TowerElement::from_integer(3)));
        assert_eq!(
            first.radical.to_string(),
            "cbrt(9/2 + sqrt(49/4)) - (-6)/(3*cbrt(9/2 + sqrt(49/4)))"
        );
        for r in &sol.roots {
            assert!((r.radical.eval() - r.approx).norm() <= 1e-9);
            assert!((r.exact.as_ref().unwrap().to_complex() - r.approx).norm() <= 1e-9);
        }
    }

    #[test]
    fn degree_checks() {
        assert_eq!(
            solve_exact(&qs(&[1, 0, 0, 0, 0, 1]), Mode::Total).unwrap_err(),
            SolveError::UnsupportedDegree(5)
        );
        assert_eq!(
            solve_exact(&qs(&[3]), Mode::Total).unwrap_err(),
            SolveError::UnsupportedDegree(0)
        );
    }

    #[test]
    fn quadratic_radical_is_sqrt_form() {
        let sol = solve_exact(&qs(&[1, 0, -5]), Mode::Total).unwrap();
        assert_eq!(sol.roots[0].radical.to_string(), "sqrt(20)/2");
    }

    #[test]
    fn complex_backend_solves_x2_plus_1() {
        let sol = solve_complex_rational(&qs(&[1, 0, 1]), Mode::Total).unwrap();
        let mut ims: Vec<f64> = sol.roots.iter().map(|r| r.approx.im).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[0] + 1.0).abs() < 1e-12 && (ims[1] - 1.0).abs() < 1e-12);
    }
}
