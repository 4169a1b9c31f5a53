use crate::field::{CbrtField, Field, FieldError, SqrtField};

use super::conditions::quartic_conditions;
use super::cubic::{cardano_root, depress_cubic, depressed_cubic_root, CbrtSelector};
use super::quadratic::{labeled_pair, solve_quadratic_monic};
use super::{half, make_monic, unshift, Labeled, SolveError};

/// `u^4 + c u^2 + d u + e`, obtained by `x = u - shift`.
#[derive(Debug, Clone)]
pub struct DepressedQuartic<E> {
    pub c: E,
    pub d: E,
    pub e: E,
    pub shift: E,
}

/// Depresses `x^4 + b x^3 + c x^2 + d x + e`; `shift = b/4`.
pub fn depress_quartic<F: Field>(
    f: &F,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
    e: &F::Elem,
) -> Result<DepressedQuartic<F::Elem>, FieldError> {
    let k = |n: i64| f.from_integer(n);
    let h = f.div(b, &k(4))?;
    let h2 = f.square(&h);
    // c - 3b^2/8 = c - 6h^2
    let c1 = f.sub(c, &f.mul(&k(6), &h2));
    // b^3/8 - bc/2 + d = 8h^3 - 2ch + d
    let d1 = f.add(
        &f.sub(&f.mul(&k(8), &f.mul(&h2, &h)), &f.mul(&k(2), &f.mul(c, &h))),
        d,
    );
    // b^2 c/16 - 3b^4/256 - bd/4 + e = c h^2 - 3h^4 - dh + e
    let e1 = f.add(
        &f.sub(
            &f.sub(&f.mul(c, &h2), &f.mul(&k(3), &f.square(&h2))),
            &f.mul(d, &h),
        ),
        e,
    );
    Ok(DepressedQuartic {
        c: c1,
        d: d1,
        e: e1,
        shift: h,
    })
}

/// Coefficients `(2c, c^2 - 4e, -d^2)` of the monic resolvent cubic in `p^2`.
pub fn resolvent_coeffs<F: Field>(
    f: &F,
    c: &F::Elem,
    d: &F::Elem,
    e: &F::Elem,
) -> (F::Elem, F::Elem, F::Elem) {
    (
        f.mul(&f.from_integer(2), c),
        f.sub(&f.square(c), &f.mul(&f.from_integer(4), e)),
        f.neg(&f.square(d)),
    )
}

/// `u^4 + c u^2 + d u + e = (u^2 + p u + q)(u^2 - p u + s)`.
#[derive(Debug, Clone)]
pub struct QuarticSplit<E> {
    pub p: E,
    pub q: E,
    pub s: E,
    /// `p^2`, a root of the resolvent cubic.
    pub resolvent_root: E,
    pub resolvent_branch: &'static str,
}

/// Given `P = p^2` a nonzero resolvent root: `q = (c + P - d/p)/2`, `s = (c + P + d/p)/2`.
pub fn split_from_resolvent_root<F: SqrtField>(
    f: &mut F,
    c: &F::Elem,
    d: &F::Elem,
    big_p: &F::Elem,
) -> Result<(F::Elem, F::Elem, F::Elem), FieldError> {
    let p = f.sqrt(big_p);
    let d_over_p = f.mul(d, &f.inverse(&p)?);
    let base = f.add(c, big_p);
    let q = half(f, &f.sub(&base, &d_over_p))?;
    let s = half(f, &f.add(&base, &d_over_p))?;
    Ok((p, q, s))
}

fn split_impl<F: CbrtField>(
    f: &mut F,
    c: &F::Elem,
    d: &F::Elem,
    e: &F::Elem,
    strict: bool,
) -> Result<QuarticSplit<F::Elem>, SolveError> {
    if f.is_zero(d) {
        return Err(SolveError::BiquadraticCase);
    }
    let (rb, rc, rd) = resolvent_coeffs(f, c, d, e);
    let dc = depress_cubic(f, &rb, &rc, &rd)?;
    let mut last = SolveError::Field(FieldError::DivisionByZero);
    // Every resolvent root is nonzero in exact arithmetic (their product is
    // d^2), but a branch may still be unusable: a float root below the zero
    // threshold, or p landing on a reducible extension.
    for k in 0..3 {
        let root = if strict {
            let sel = CbrtSelector::ALL[k];
            cardano_root(f, &dc.c, &dc.d, sel).map(|v| Labeled::new(["cardano-A", "cardano-B", "cardano-C"][k], v))
        } else {
            depressed_cubic_root(f, &dc.c, &dc.d, k)
        };
        let root = match root {
            Ok(r) => r,
            Err(err) if err.is_reducible_extension() => {
                last = err;
                continue;
            }
            Err(err) => return Err(err),
        };
        let big_p = f.sub(&root.value, &dc.shift);
        if f.is_zero(&big_p) {
            continue;
        }
        match split_from_resolvent_root(f, c, d, &big_p) {
            Ok((p, q, s)) => {
                return Ok(QuarticSplit {
                    p,
                    q,
                    s,
                    resolvent_root: big_p,
                    resolvent_branch: root.branch,
                })
            }
            Err(err) => {
                let err = SolveError::Field(err);
                if !err.is_reducible_extension() {
                    return Err(err);
                }
                last = err;
            }
        }
    }
    Err(last)
}

/// Splits a depressed quartic with `d != 0` into two quadratics via the
/// resolvent cubic, trying resolvent branches in order A, B, C.
pub fn quartic_split_depressed<F: CbrtField>(
    f: &mut F,
    c: &F::Elem,
    d: &F::Elem,
    e: &F::Elem,
) -> Result<QuarticSplit<F::Elem>, SolveError> {
    split_impl(f, c, d, e, false)
}

fn roots_from_split<F: CbrtField>(
    f: &mut F,
    split: &QuarticSplit<F::Elem>,
) -> Result<[Labeled<F::Elem>; 4], SolveError> {
    let first = solve_quadratic_monic(f, &split.p, &split.q)?;
    let minus_p = f.neg(&split.p);
    let second = solve_quadratic_monic(f, &minus_p, &split.s)?;
    let [a, b] = labeled_pair(first, "quartic-1-plus", "quartic-1-minus");
    let [c, d] = labeled_pair(second, "quartic-2-plus", "quartic-2-minus");
    Ok([a, b, c, d])
}

/// All four roots of `u^4 + c u^2 + d u + e`, for any coefficients.
pub fn quartic_roots_depressed_total<F: CbrtField>(
    f: &mut F,
    c: &F::Elem,
    d: &F::Elem,
    e: &F::Elem,
) -> Result<[Labeled<F::Elem>; 4], SolveError> {
    if f.is_zero(d) {
        // y^2 + c y + e with y = u^2
        let [y1, y2] = solve_quadratic_monic(f, c, e)?;
        let r1 = f.sqrt(&y1);
        let r2 = f.sqrt(&y2);
        return Ok([
            Labeled::new("biquadratic-1-plus", r1.clone()),
            Labeled::new("biquadratic-1-minus", f.neg(&r1)),
            Labeled::new("biquadratic-2-plus", r2.clone()),
            Labeled::new("biquadratic-2-minus", f.neg(&r2)),
        ]);
    }
    let split = quartic_split_depressed(f, c, d, e)?;
    roots_from_split(f, &split)
}

/// Roots of `a x^4 + b x^3 + c x^2 + d x + e`, total for `a != 0`.
pub fn solve_quartic<F: CbrtField>(
    f: &mut F,
    coeffs: [&F::Elem; 5],
) -> Result<Vec<Labeled<F::Elem>>, SolveError> {
    let m = make_monic(f, &coeffs.map(|x| x.clone()))?;
    let dq = depress_quartic(f, &m[1], &m[2], &m[3], &m[4])?;
    let roots = quartic_roots_depressed_total(f, &dq.c, &dq.d, &dq.e)?;
    Ok(unshift(f, roots, &dq.shift))
}

/// Like [`solve_quartic`], but only when the depressed quartic has `d' != 0`,
/// `e' != 0` and `c'^2 + 12e' != 0`; the resolvent is solved by the plain
/// Cardano formula.
pub fn solve_quartic_strict<F: CbrtField>(
    f: &mut F,
    coeffs: [&F::Elem; 5],
) -> Result<Vec<Labeled<F::Elem>>, SolveError> {
    let [a, b, c, d, e] = coeffs;
    if f.is_zero(a) {
        return Err(SolveError::DegenerateLeading);
    }
    let (h_d, h_e, h_r) = quartic_conditions(f, a, b, c, d, e);
    if f.is_zero(&h_d) {
        return Err(SolveError::StrictHypothesis("depressed d = 0"));
    }
    if f.is_zero(&h_e) {
        return Err(SolveError::StrictHypothesis("depressed e = 0"));
    }
    if f.is_zero(&h_r) {
        return Err(SolveError::StrictHypothesis("c^2 - 3bd + 12ae = 0"));
    }
    let m = make_monic(f, &coeffs.map(|x| x.clone()))?;
    let dq = depress_quartic(f, &m[1], &m[2], &m[3], &m[4])?;
    let split = split_impl(f, &dq.c, &dq.d, &dq.e, true)?;
    let roots = roots_from_split(f, &split)?;
    Ok(unshift(f, roots, &dq.shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactField;
    use crate::tower::TowerElement;

    fn int(n: i64) -> TowerElement {
        TowerElement::from_integer(n)
    }

    fn quartic_at(c: i64, d: i64, e: i64, u: &TowerElement) -> TowerElement {
        let u2 = u * u;
        &(&(&(&u2 * &u2) + &(&int(c) * &u2)) + &(&int(d) * u)) + &int(e)
    }

    #[test]
    fn depress_examples() {
        let f = ExactField::new();
        let dq = depress_quartic(&f, &int(4), &int(0), &int(0), &int(0)).unwrap();
        assert_eq!((dq.c, dq.d, dq.e, dq.shift), (int(-6), int(8), int(-3), int(1)));
        let dq = depress_quartic(&f, &int(4), &int(6), &int(4), &int(1)).unwrap();
        assert_eq!((dq.c, dq.d, dq.e), (int(0), int(0), int(0)));
        let dq = depress_quartic(&f, &int(0), &int(2), &int(3), &int(4)).unwrap();
        assert_eq!((dq.c, dq.d, dq.e), (int(2), int(3), int(4)));
    }

    #[test]
    fn resolvent_examples() {
        let f = ExactField::new();
        let (b, c, d) = resolvent_coeffs(&f, &int(2), &int(1), &int(2));
        assert_eq!((b.clone(), c.clone(), d.clone()), (int(4), int(-4), int(-1)));
        // P = 1 is a root
        assert!((&(&(&int(1) + &b) + &c) + &d).is_zero());
        let (b, c, d) = resolvent_coeffs(&f, &int(0), &int(0), &int(5));
        assert_eq!((b, c, d), (int(0), int(-20), int(0)));
    }

    #[test]
    fn split_from_known_root() {
        let mut f = ExactField::new();
        let (p, q, s) = split_from_resolvent_root(&mut f, &int(2), &int(1), &int(1)).unwrap();
        assert_eq!((p, q, s), (int(1), int(1), int(2)));
    }

    #[test]
    fn split_identity_and_biquadratic_error() {
        let mut f = ExactField::new();
        let sp = quartic_split_depressed(&mut f, &int(2), &int(1), &int(2)).unwrap();
        // (u^2 + pu + q)(u^2 - pu + s): u^2 coeff q + s - p^2, u coeff p(s - q), const qs
        assert_eq!(&(&sp.q + &sp.s) - &(&sp.p * &sp.p), int(2));
        assert_eq!(&sp.p * &(&sp.s - &sp.q), int(1));
        assert_eq!(&sp.q * &sp.s, int(2));
        assert_eq!(
            quartic_split_depressed(&mut f, &int(3), &int(0), &int(1)).unwrap_err(),
            SolveError::BiquadraticCase
        );
    }

    #[test]
    fn total_examples() {
        let mut f = ExactField::new();
        let roots = quartic_roots_depressed_total(&mut f, &int(-5), &int(0), &int(4)).unwrap();
        let mut vals: Vec<_> = roots.iter().map(|r| r.value.as_rational().unwrap().clone()).collect();
        vals.sort();
        assert_eq!(vals, vec![(-2).into(), (-1).into(), 1.into(), 2.into()]);
        for r in quartic_roots_depressed_total(&mut f, &int(2), &int(1), &int(2)).unwrap() {
            assert!(quartic_at(2, 1, 2, &r.value).is_zero());
        }
        for r in quartic_roots_depressed_total(&mut f, &int(0), &int(0), &int(0)).unwrap() {
            assert!(r.value.is_zero());
        }
    }

    #[test]
    fn general_quartic() {
        let mut f = ExactField::new();
        let roots = solve_quartic(&mut f, [&int(1), &int(4), &int(0), &int(0), &int(0)]).unwrap();
        let mut vals: Vec<_> = roots.iter().map(|r| r.value.as_rational().unwrap().clone()).collect();
        vals.sort();
        assert_eq!(vals, vec![(-4).into(), 0.into(), 0.into(), 0.into()]);
        let a = solve_quartic(&mut f, [&int(1), &int(0), &int(2), &int(1), &int(2)]).unwrap();
        let b = solve_quartic(&mut f, [&int(3), &int(0), &int(6), &int(3), &int(6)]).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.value, y.value);
        }
    }

    #[test]
    fn strict_quartic() {
        let mut f = ExactField::new();
        assert!(matches!(
            solve_quartic_strict(&mut f, [&int(1), &int(0), &int(-5), &int(0), &int(4)]),
            Err(SolveError::StrictHypothesis(_))
        ));
        // c^2 + 12e = 0
        assert!(matches!(
            solve_quartic_strict(&mut f, [&int(1), &int(0), &int(6), &int(1), &int(-3)]),
            Err(SolveError::StrictHypothesis(_))
        ));
        let roots = solve_quartic_strict(&mut f, [&int(1), &int(0), &int(2), &int(1), &int(2)]).unwrap();
        for r in roots {
            assert!(quartic_at(2, 1, 2, &r.value).is_zero());
        }
    }
}
