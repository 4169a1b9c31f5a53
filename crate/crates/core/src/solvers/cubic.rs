use crate::field::{CbrtField, Field, FieldError};

use super::conditions::cubic_conditions;
use super::{half, make_monic, unshift, Labeled, SolveError};

/// `u^3 + c u + d`, obtained from `x^3 + b x^2 + ...` by `x = u - shift`.
#[derive(Debug, Clone)]
pub struct DepressedCubic<E> {
    pub c: E,
    pub d: E,
    pub shift: E,
}

/// Depresses `x^3 + b x^2 + c x + d`; `shift = b/3`.
pub fn depress_cubic<F: Field>(
    f: &F,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
) -> Result<DepressedCubic<F::Elem>, FieldError> {
    let shift = f.div(b, &f.from_integer(3))?;
    // c - b^2/3 = c - b*shift
    let c1 = f.sub(c, &f.mul(b, &shift));
    // 2b^3/27 - bc/3 + d = 2 shift^3 - c shift + d
    let d1 = f.add(
        &f.sub(
            &f.mul(&f.from_integer(2), &f.small_pow(&shift, 3)),
            &f.mul(c, &shift),
        ),
        d,
    );
    Ok(DepressedCubic { c: c1, d: d1, shift })
}

/// Which cube root of the Cardano radicand to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbrtSelector {
    Plain,
    Omega,
    OmegaSquared,
}

impl CbrtSelector {
    pub const ALL: [CbrtSelector; 3] = [Self::Plain, Self::Omega, Self::OmegaSquared];

    pub fn power(self) -> u32 {
        match self {
            Self::Plain => 0,
            Self::Omega => 1,
            Self::OmegaSquared => 2,
        }
    }

    fn label(self) -> &'static str {
        ["cardano-A", "cardano-B", "cardano-C"][self.power() as usize]
    }
}

/// A cube root `s` of `-d/2 + r` with `r^2 = d^2/4 + c^3/27`.
///
/// Both signs of `r` are valid; the one giving the radicand of larger
/// magnitude is used, which avoids cancellation on floats.
fn cardano_s<F: CbrtField>(f: &mut F, c: &F::Elem, d: &F::Elem) -> Result<F::Elem, FieldError> {
    let half_d = half(f, d)?;
    let c3_27 = f.div(&f.small_pow(c, 3), &f.from_integer(27))?;
    let r = f.sqrt(&f.add(&f.square(&half_d), &c3_27));
    let minus_half_d = f.neg(&half_d);
    let plus = f.add(&minus_half_d, &r);
    let minus = f.sub(&minus_half_d, &r);
    let radicand = if f.to_complex(&minus).norm() > f.to_complex(&plus).norm() {
        minus
    } else {
        plus
    };
    Ok(f.cbrt(&radicand))
}

// u = s - c/(3s); t is never taken as a second independent cube root.
fn cardano_from_s<F: Field>(f: &F, c: &F::Elem, s: &F::Elem) -> Result<F::Elem, FieldError> {
    let three_s = f.mul(&f.from_integer(3), s);
    Ok(f.sub(s, &f.mul(c, &f.inverse(&three_s)?)))
}

/// One root of `u^3 + c u + d`, requiring only `c != 0` (which forces `s != 0`).
pub fn cardano_root<F: CbrtField>(
    f: &mut F,
    c: &F::Elem,
    d: &F::Elem,
    selector: CbrtSelector,
) -> Result<F::Elem, SolveError> {
    if f.is_zero(c) {
        return Err(SolveError::UseTotalSolver);
    }
    let mut s = cardano_s(f, c, d)?;
    if selector != CbrtSelector::Plain {
        let w = f.omega()?;
        s = f.mul(&s, &f.small_pow(&w, selector.power()));
    }
    Ok(cardano_from_s(f, c, &s)?)
}

/// The `k`-th root (`k < 3`) of the total case analysis on `u^3 + c u + d`.
pub(crate) fn depressed_cubic_root<F: CbrtField>(
    f: &mut F,
    c: &F::Elem,
    d: &F::Elem,
    k: usize,
) -> Result<Labeled<F::Elem>, SolveError> {
    if f.is_zero(c) {
        // u^3 = -d
        let m = f.cbrt(&f.neg(d));
        let m = match k {
            0 => m,
            _ => {
                let w = f.omega()?;
                f.mul(&m, &f.small_pow(&w, k as u32))
            }
        };
        return Ok(Labeled::new(["cube-root-A", "cube-root-B", "cube-root-C"][k], m));
    }
    if f.is_zero(d) {
        // u (u^2 + c)
        if k == 0 {
            return Ok(Labeled::new("zero", f.zero()));
        }
        let r = f.sqrt(&f.neg(c));
        return Ok(match k {
            1 => Labeled::new("sqrt-plus", r),
            _ => Labeled::new("sqrt-minus", f.neg(&r)),
        });
    }
    let selector = CbrtSelector::ALL[k];
    Ok(Labeled::new(selector.label(), cardano_root(f, c, d, selector)?))
}

/// All three roots of `u^3 + c u + d`, for any `c` and `d`.
pub fn cubic_roots_depressed_total<F: CbrtField>(
    f: &mut F,
    c: &F::Elem,
    d: &F::Elem,
) -> Result<[Labeled<F::Elem>; 3], SolveError> {
    Ok([
        depressed_cubic_root(f, c, d, 0)?,
        depressed_cubic_root(f, c, d, 1)?,
        depressed_cubic_root(f, c, d, 2)?,
    ])
}

/// Roots of `a x^3 + b x^2 + c x + d`, total in every case with `a != 0`.
pub fn solve_cubic<F: CbrtField>(
    f: &mut F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
) -> Result<Vec<Labeled<F::Elem>>, SolveError> {
    let m = make_monic(f, &[a.clone(), b.clone(), c.clone(), d.clone()])?;
    let dc = depress_cubic(f, &m[1], &m[2], &m[3])?;
    let roots = cubic_roots_depressed_total(f, &dc.c, &dc.d)?;
    Ok(unshift(f, roots, &dc.shift))
}

/// Like [`solve_cubic`], but only for inputs with `3ac - b^2 != 0` and
/// `2b^3 - 9abc + 27a^2 d != 0`, using the plain formula on all three branches.
pub fn solve_cubic_strict<F: CbrtField>(
    f: &mut F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
) -> Result<Vec<Labeled<F::Elem>>, SolveError> {
    if f.is_zero(a) {
        return Err(SolveError::DegenerateLeading);
    }
    let (h1, h2) = cubic_conditions(f, a, b, c, d);
    if f.is_zero(&h1) {
        return Err(SolveError::StrictHypothesis("3ac - b^2 = 0"));
    }
    if f.is_zero(&h2) {
        return Err(SolveError::StrictHypothesis("2b^3 - 9abc + 27a^2d = 0"));
    }
    let m = make_monic(f, &[a.clone(), b.clone(), c.clone(), d.clone()])?;
    let dc = depress_cubic(f, &m[1], &m[2], &m[3])?;
    let mut roots = Vec::with_capacity(3);
    for sel in CbrtSelector::ALL {
        roots.push(Labeled::new(sel.label(), cardano_root(f, &dc.c, &dc.d, sel)?));
    }
    Ok(unshift(f, roots, &dc.shift))
}
