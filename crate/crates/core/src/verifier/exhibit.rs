//! Cardano's formula with two independent cube roots, for contrast with the
//! corrected `t = c/(3s)`.

use num_complex::Complex64;

use crate::field::{CbrtField, Field, FieldError, SqrtField};

/// Wraps a backend so that `cbrt(x)` returns `omega * cbrt(x)` whenever
/// `Re(x) < 0`. Still a valid cube-root provider.
#[derive(Debug, Clone, Default)]
pub struct Adversarial<F>(pub F);

impl<F: Field> Field for Adversarial<F> {
    type Elem = F::Elem;

    fn zero(&self) -> F::Elem {
        self.0.zero()
    }
    fn one(&self) -> F::Elem {
        self.0.one()
    }
    fn add(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.0.add(a, b)
    }
    fn neg(&self, a: &F::Elem) -> F::Elem {
        self.0.neg(a)
    }
    fn mul(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.0.mul(a, b)
    }
    fn inverse(&self, a: &F::Elem) -> Result<F::Elem, FieldError> {
        self.0.inverse(a)
    }
    fn is_zero(&self, a: &F::Elem) -> bool {
        self.0.is_zero(a)
    }
    fn to_complex(&self, a: &F::Elem) -> Complex64 {
        self.0.to_complex(a)
    }
}

impl<F: SqrtField> SqrtField for Adversarial<F> {
    fn sqrt(&mut self, a: &F::Elem) -> F::Elem {
        self.0.sqrt(a)
    }
}

impl<F: CbrtField> CbrtField for Adversarial<F> {
    fn cbrt(&mut self, a: &F::Elem) -> F::Elem {
        let r = self.0.cbrt(a);
        if self.0.to_complex(a).re < 0.0 {
            let w = self.0.omega().expect("char is not 2");
            self.0.mul(&w, &r)
        } else {
            r
        }
    }
}

#[derive(Debug, Clone)]
pub struct Exhibit<E> {
    /// `s - t` with `t` an independent cube root of `d/2 + r`.
    pub naive: E,
    /// `s - c/(3s)`.
    pub corrected: E,
    pub naive_residual: E,
    pub corrected_residual: E,
}

/// Evaluates both formulas on `u^3 + c u + d` (requires `c, d != 0`).
pub fn negative_exhibit_two_cbrts<F: CbrtField>(
    f: &mut F,
    c: &F::Elem,
    d: &F::Elem,
) -> Result<Exhibit<F::Elem>, FieldError> {
    let half_d = f.div(d, &f.from_integer(2))?;
    let c3_27 = f.div(&f.small_pow(c, 3), &f.from_integer(27))?;
    let r = f.sqrt(&f.add(&f.square(&half_d), &c3_27));
    let s = f.cbrt(&f.sub(&r, &half_d));
    let t = f.cbrt(&f.add(&half_d, &r));
    let naive = f.sub(&s, &t);
    let corrected = f.sub(&s, &f.div(c, &f.mul(&f.from_integer(3), &s))?);
    let residual = |u: &F::Elem| f.add(&f.add(&f.small_pow(u, 3), &f.mul(c, u)), d);
    Ok(Exhibit {
        naive_residual: residual(&naive),
        corrected_residual: residual(&corrected),
        naive,
        corrected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexField;
    use crate::exact::ExactField;
    use crate::tower::TowerElement;

    #[test]
    fn exact_worked_example_is_benign() {
        let mut f = ExactField::new();
        let ex = negative_exhibit_two_cbrts(&mut f, &TowerElement::from_integer(-6), &TowerElement::from_integer(-9))
            .unwrap();
        assert_eq!(ex.naive, TowerElement::from_integer(3));
        assert!(ex.naive_residual.is_zero());
        assert!(ex.corrected_residual.is_zero());
    }

    #[test]
    fn adversarial_provider_breaks_naive_formula() {
        let mut f = Adversarial(ExactField::new());
        let ex = negative_exhibit_two_cbrts(&mut f, &TowerElement::from_integer(-6), &TowerElement::from_integer(-9))
            .unwrap();
        assert!(!ex.naive_residual.is_zero());
        assert!(ex.corrected_residual.is_zero());
    }

    #[test]
    fn complex_principal_contrast() {
        // Principal cbrt(-1) is not -1, so the worked example already breaks.
        let mut f = ComplexField::new();
        let (c, d) = (Complex64::new(-6.0, 0.0), Complex64::new(-9.0, 0.0));
        let ex = negative_exhibit_two_cbrts(&mut f, &c, &d).unwrap();
        assert!(ex.naive_residual.norm() > 1.0);
        assert!(ex.corrected_residual.norm() < 1e-12);
    }

    #[test]
    fn complex_adversarial_contrast() {
        let mut f = Adversarial(ComplexField::new());
        let mut broken = 0;
        for (cr, ci, dr, di) in [(1.0, 2.0, -3.0, 1.0), (-2.0, -1.0, 4.0, 0.5), (0.5, -3.0, 2.0, -2.0)] {
            let (c, d) = (Complex64::new(cr, ci), Complex64::new(dr, di));
            let ex = negative_exhibit_two_cbrts(&mut f, &c, &d).unwrap();
            assert!(ex.corrected_residual.norm() < 1e-12);
            if ex.naive_residual.norm() > 1e-6 {
                broken += 1;
            }
        }
        assert!(broken > 0);
    }
}
