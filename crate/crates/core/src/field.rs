//! The abstract field contract shared by every backend.
//!
//! A backend supplies the commutative-field operations, a zero test, and a
//! numeric image of its elements. Square and cube roots are separate
//! capabilities ([`SqrtField`], [`CbrtField`]) because they may grow the field:
//! the exact backend adjoins a new generator on every irrational root, which is
//! why the providers take `&mut self`.
//!
//! Provider contracts, for every `a`:
//!
//! * `sqrt(a) * sqrt(a) == a`
//! * `cbrt(a) * cbrt(a) * cbrt(a) == a`
//! * `sqrt(0) == 0` and `cbrt(0) == 0`
//!
//! No branch is fixed here; formulas built on these traits must be correct for
//! any provider meeting the contracts.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;
use thiserror::Error;

use crate::rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    /// A nonzero element turned out not to be invertible: the defining
    /// polynomial of generator `g{level}` has the proper factor `factor`.
    #[error("reducible extension: x^n - radicand of g{level} has factor {factor}")]
    ReducibleExtension { level: usize, factor: String },
    #[error("tower mismatch")]
    TowerMismatch,
    #[error("characteristic {0} is not supported")]
    Characteristic(u32),
}

pub trait Field {
    type Elem: Clone + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; fails on zero instead of returning a junk value.
    fn inverse(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    /// Decidable zero test (exact for normal forms, thresholded for floats).
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Numeric image of an element, used for display and root matching.
    fn to_complex(&self, a: &Self::Elem) -> Complex64;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inverse(b)?))
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    /// `a^k` by repeated squaring; `a^0 = 1`.
    fn small_pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// Image of `n` under the canonical map from the integers.
    fn from_integer(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// Binary decomposition: one doubling per bit of `|n|`.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        let mut acc = self.zero();
        let mag = n.abs();
        for i in (0..mag.bits()).rev() {
            acc = self.add(&acc, &acc);
            if mag.bit(i) {
                acc = self.add(&acc, &self.one());
            }
        }
        if n.is_negative() {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, FieldError> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        self.div(&n, &d)
    }

    /// Witness that `1 + 1 != 0` and `1 + 1 + 1 != 0`.
    fn check_char_not_two_three(&self) -> Result<(), FieldError> {
        let two = self.from_integer(2);
        if self.is_zero(&two) {
            return Err(FieldError::Characteristic(2));
        }
        if self.is_zero(&self.add(&two, &self.one())) {
            return Err(FieldError::Characteristic(3));
        }
        Ok(())
    }
}

pub trait SqrtField: Field {
    fn sqrt(&mut self, a: &Self::Elem) -> Self::Elem;

    /// `(-1 + sqrt(-3)) / 2`, a primitive cube root of unity.
    fn omega(&mut self) -> Result<Self::Elem, FieldError> {
        let minus_three = self.from_integer(-3);
        let root = self.sqrt(&minus_three);
        let numer = self.add(&self.neg(&self.one()), &root);
        self.div(&numer, &self.from_integer(2))
    }
}

pub trait CbrtField: SqrtField {
    fn cbrt(&mut self, a: &Self::Elem) -> Self::Elem;
}

/// Whether `x` and `y` are equal in `field` (via the zero test of their difference).
pub fn elem_eq<F: Field>(field: &F, x: &F::Elem, y: &F::Elem) -> bool {
    field.is_zero(&field.sub(x, y))
}

/// Sum of the given elements; zero for an empty slice.
pub fn sum<F: Field>(field: &F, terms: &[F::Elem]) -> F::Elem {
    terms
        .iter()
        .fold(field.zero(), |acc, t| field.add(&acc, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexField;
    use crate::exact::ExactField;

    /// Counts additions so the doubling cost of `from_integer` is observable.
    struct Counting {
        adds: std::cell::Cell<u32>,
    }

    impl Field for Counting {
        type Elem = i64;
        fn zero(&self) -> i64 {
            0
        }
        fn one(&self) -> i64 {
            1
        }
        fn add(&self, a: &i64, b: &i64) -> i64 {
            self.adds.set(self.adds.get() + 1);
            a + b
        }
        fn neg(&self, a: &i64) -> i64 {
            -a
        }
        fn mul(&self, a: &i64, b: &i64) -> i64 {
            a * b
        }
        fn inverse(&self, _: &i64) -> Result<i64, FieldError> {
            Err(FieldError::DivisionByZero)
        }
        fn is_zero(&self, a: &i64) -> bool {
            *a == 0
        }
        fn to_complex(&self, a: &i64) -> Complex64 {
            Complex64::new(*a as f64, 0.0)
        }
    }

    #[test]
    fn from_integer_uses_doubling() {
        let f = Counting {
            adds: std::cell::Cell::new(0),
        };
        assert_eq!(f.from_integer(256), 256);
        // 9 bits: 9 doublings plus a single increment.
        assert_eq!(f.adds.get(), 10);
        assert_eq!(f.from_integer(0), 0);
        assert_eq!(f.from_integer(-37), -37);
    }

    #[test]
    fn from_integer_three_is_one_plus_one_plus_one() {
        let f = ExactField::new();
        let three = f.from_integer(3);
        let manual = f.add(&f.one(), &f.add(&f.one(), &f.one()));
        assert!(elem_eq(&f, &three, &manual));
    }

    #[test]
    fn from_integer_is_ring_homomorphism() {
        let f = ExactField::new();
        for m in (-300i64..=300).step_by(7) {
            for n in (-300i64..=300).step_by(11) {
                let (fm, fn_) = (f.from_integer(m), f.from_integer(n));
                assert!(elem_eq(&f, &f.from_integer(m + n), &f.add(&fm, &fn_)));
                assert!(elem_eq(&f, &f.from_integer(m * n), &f.mul(&fm, &fn_)));
            }
        }
        assert!(elem_eq(&f, &f.from_integer(-5), &f.neg(&f.from_integer(5))));
    }

    #[test]
    fn small_pow_examples() {
        let f = ExactField::new();
        let x = f.from_integer(7);
        assert!(elem_eq(&f, &f.small_pow(&x, 0), &f.one()));
        assert!(elem_eq(&f, &f.small_pow(&f.from_integer(2), 8), &f.from_integer(256)));
        let mut f = f;
        let w = f.omega().unwrap();
        assert!(elem_eq(&f, &f.small_pow(&w, 3), &f.one()));
    }

    #[test]
    fn omega_over_both_backends() {
        let mut f = ExactField::new();
        let w = f.omega().unwrap();
        let w2 = f.square(&w);
        assert!(f.is_zero(&f.add(&f.add(&w2, &w), &f.one())));
        assert!(!elem_eq(&f, &w, &f.one()));
        let mut g = ComplexField::new();
        let wc = g.omega().unwrap();
        assert!((wc * wc * wc - 1.0).norm() <= 1e-12);
        assert!((wc - Complex64::new(-0.5, 0.8660254037844386)).norm() <= 1e-12);
    }

    #[test]
    fn char_witnesses_hold() {
        assert!(ExactField::new().check_char_not_two_three().is_ok());
        assert!(ComplexField::new().check_char_not_two_three().is_ok());
    }
}
