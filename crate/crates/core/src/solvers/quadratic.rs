use crate::field::{Field, FieldError, SqrtField};

use super::{half, Labeled, SolveError};

/// `a x + b = 0`.
pub fn solve_linear<F: Field>(f: &F, a: &F::Elem, b: &F::Elem) -> Result<F::Elem, SolveError> {
    if f.is_zero(a) {
        return Err(SolveError::DegenerateLeading);
    }
    Ok(f.neg(&f.div(b, a)?))
}

/// Roots of `x^2 + b x + c`: `(-b + sqrt(b^2 - 4c))/2` first, then the `-` root.
pub fn solve_quadratic_monic<F: SqrtField>(
    f: &mut F,
    b: &F::Elem,
    c: &F::Elem,
) -> Result<[F::Elem; 2], FieldError> {
    let disc = f.sub(&f.square(b), &f.mul(&f.from_integer(4), c));
    let r = f.sqrt(&disc);
    let minus_b = f.neg(b);
    Ok([half(f, &f.add(&minus_b, &r))?, half(f, &f.sub(&minus_b, &r))?])
}

pub fn solve_quadratic_general<F: SqrtField>(
    f: &mut F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
) -> Result<[F::Elem; 2], SolveError> {
    if f.is_zero(a) {
        return Err(SolveError::DegenerateLeading);
    }
    let inv = f.inverse(a)?;
    let (b, c) = (f.mul(b, &inv), f.mul(c, &inv));
    Ok(solve_quadratic_monic(f, &b, &c)?)
}

pub(crate) fn labeled_pair<E>(values: [E; 2], plus: &'static str, minus: &'static str) -> [Labeled<E>; 2] {
    let [x, y] = values;
    [Labeled::new(plus, x), Labeled::new(minus, y)]
}
