//! Double-precision complex arithmetic with principal square and cube roots.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::field::{CbrtField, Field, FieldError, SqrtField};
use crate::rational::BigRational;

pub type ComplexD = Complex64;

/// Relative threshold used by float case splits (scaled by the coefficient magnitude).
pub const ZERO_THRESHOLD: f64 = 1e-12;
/// Relative tolerance for matching solver roots against the numeric oracle.
pub const ROOT_MATCH_TOL: f64 = 1e-6;
/// Relative tolerance for root-provider self checks.
pub const PROVIDER_TOL: f64 = 1e-12;

// Maps -0.0 to +0.0 so values on the negative real axis take the upper branch.
fn unsign_zero(z: ComplexD) -> ComplexD {
    ComplexD::new(
        if z.re == 0.0 { 0.0 } else { z.re },
        if z.im == 0.0 { 0.0 } else { z.im },
    )
}

/// Principal square root: nonnegative real part, `+i*sqrt(|z|)` on the negative real axis.
pub fn csqrt_principal(z: ComplexD) -> ComplexD {
    let z = unsign_zero(z);
    if z.re == 0.0 && z.im == 0.0 {
        return ComplexD::new(0.0, 0.0);
    }
    let m = z.norm();
    if z.re >= 0.0 {
        let t = ((m + z.re) * 0.5).sqrt();
        ComplexD::new(t, z.im / (2.0 * t))
    } else {
        let t = ((m - z.re) * 0.5).sqrt();
        ComplexD::new(z.im.abs() / (2.0 * t), t.copysign(z.im))
    }
}

/// Principal cube root: argument in `(-pi/3, pi/3]`. For negative reals this is
/// `|z|^(1/3) * e^(i*pi/3)`, not the real cube root.
pub fn ccbrt_principal(z: ComplexD) -> ComplexD {
    let z = unsign_zero(z);
    if z.re == 0.0 && z.im == 0.0 {
        return ComplexD::new(0.0, 0.0);
    }
    if z.im == 0.0 && z.re > 0.0 {
        return ComplexD::new(z.re.cbrt(), 0.0);
    }
    let r = z.norm().cbrt();
    let theta = z.im.atan2(z.re) / 3.0;
    let w = ComplexD::from_polar(r, theta);
    // One Newton step on w^3 = z removes most of the polar rounding error.
    let w2 = w * w;
    w - (w2 * w - z) / (3.0 * w2)
}

/// `|x - y| <= tol * max(1, |x|, |y|)`.
pub fn approx_eq(x: ComplexD, y: ComplexD, tol: f64) -> bool {
    (x - y).norm() <= tol * 1f64.max(x.norm()).max(y.norm())
}

/// The primitive cube root of unity `e^(2*pi*i/3)` raised to `k`.
pub fn omega_pow(k: u8) -> ComplexD {
    match k % 3 {
        0 => ComplexD::new(1.0, 0.0),
        1 => ComplexD::from_polar(1.0, 2.0 * PI / 3.0),
        _ => ComplexD::from_polar(1.0, -2.0 * PI / 3.0),
    }
}

/// The complex numbers as a field with principal root providers.
///
/// Zero tests are approximate: `|z| <= zero_tol`. Inversion only fails on an
/// exact zero.
#[derive(Debug, Clone, Copy)]
pub struct ComplexField {
    zero_tol: f64,
}

impl ComplexField {
    pub fn new() -> Self {
        Self::with_scale(1.0)
    }

    /// Zero threshold `ZERO_THRESHOLD * max(1, scale)`.
    pub fn with_scale(scale: f64) -> Self {
        ComplexField {
            zero_tol: ZERO_THRESHOLD * scale.max(1.0),
        }
    }

    pub fn zero_tol(&self) -> f64 {
        self.zero_tol
    }
}

impl Default for ComplexField {
    fn default() -> Self {
        Self::new()
    }
}

impl Field for ComplexField {
    type Elem = ComplexD;

    fn zero(&self) -> ComplexD {
        ComplexD::new(0.0, 0.0)
    }

    fn one(&self) -> ComplexD {
        ComplexD::new(1.0, 0.0)
    }

    fn add(&self, a: &ComplexD, b: &ComplexD) -> ComplexD {
        a + b
    }

    fn neg(&self, a: &ComplexD) -> ComplexD {
        -a
    }

    fn mul(&self, a: &ComplexD, b: &ComplexD) -> ComplexD {
        a * b
    }

    fn inverse(&self, a: &ComplexD) -> Result<ComplexD, FieldError> {
        if a.re == 0.0 && a.im == 0.0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(a.inv())
    }

    fn is_zero(&self, a: &ComplexD) -> bool {
        a.norm() <= self.zero_tol
    }

    fn to_complex(&self, a: &ComplexD) -> ComplexD {
        *a
    }

    fn from_bigint(&self, n: &BigInt) -> ComplexD {
        ComplexD::new(BigRational::from_integer(n.clone()).to_f64(), 0.0)
    }

    fn from_rational(&self, q: &BigRational) -> Result<ComplexD, FieldError> {
        Ok(ComplexD::new(q.to_f64(), 0.0))
    }
}

impl SqrtField for ComplexField {
    fn sqrt(&mut self, a: &ComplexD) -> ComplexD {
        csqrt_principal(*a)
    }
}

impl CbrtField for ComplexField {
    fn cbrt(&mut self, a: &ComplexD) -> ComplexD {
        ccbrt_principal(*a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> ComplexD {
        ComplexD::new(re, im)
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(csqrt_principal(c(4.0, 0.0)), c(2.0, 0.0));
        let r = csqrt_principal(c(-3.0, 0.0));
        assert_eq!(r.re, 0.0);
        assert!((r.im - 3f64.sqrt()).abs() < 1e-15);
        assert!((r * r + 3.0).norm() <= 1e-12);
        assert_eq!(csqrt_principal(c(0.0, 0.0)), c(0.0, 0.0));
        // Signed zero does not move the branch.
        assert_eq!(csqrt_principal(c(-4.0, -0.0)), c(0.0, 2.0));
    }

    #[test]
    fn cbrt_examples() {
        assert_eq!(ccbrt_principal(c(8.0, 0.0)), c(2.0, 0.0));
        let r = ccbrt_principal(c(-8.0, 0.0));
        assert!((r - c(1.0, 3f64.sqrt())).norm() < 1e-15);
        assert!((r * r * r + 8.0).norm() <= 1e-12 * 8.0);
        assert_eq!(ccbrt_principal(c(0.0, 0.0)), c(0.0, 0.0));
        assert_eq!(ccbrt_principal(c(-8.0, -0.0)), r);
    }

    #[test]
    fn approx_eq_examples() {
        assert!(approx_eq(c(1.0, 0.0), c(1.0 + 1e-15, 0.0), 1e-9));
        assert!(!approx_eq(c(1.0, 0.0), c(2.0, 0.0), 1e-9));
        // |diff| = 0.5 <= 1e-6 * (1e6 + 0.5)
        assert!(approx_eq(c(1e6, 0.0), c(1e6 + 0.5, 0.0), 1e-6));
    }

    #[test]
    fn omega_is_primitive() {
        let w = omega_pow(1);
        assert!((w * w * w - 1.0).norm() <= 1e-12);
        assert!((w * w + w + 1.0).norm() <= 1e-12);
        assert!((w - c(-0.5, 0.8660254037844386)).norm() < 1e-15);
    }

    #[test]
    fn provider_contract_on_random_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let mag = 10f64.powf(rng.gen_range(-6.0..6.0));
            let arg = rng.gen_range(-PI..PI);
            let z = ComplexD::from_polar(mag, arg);
            let s = csqrt_principal(z);
            let t = ccbrt_principal(z);
            assert!((s * s - z).norm() <= PROVIDER_TOL * z.norm(), "sqrt {z}");
            assert!((t * t * t - z).norm() <= PROVIDER_TOL * z.norm(), "cbrt {z}");
            assert!(s.re >= 0.0);
            let a = t.im.atan2(t.re);
            assert!(a > -PI / 3.0 - 1e-12 && a <= PI / 3.0 + 1e-12);
        }
    }

    proptest! {
        #[test]
        fn branch_determinism(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let z = c(re, im);
            let z2 = c(f64::from_bits(re.to_bits()), f64::from_bits(im.to_bits()));
            prop_assert_eq!(csqrt_principal(z).re.to_bits(), csqrt_principal(z2).re.to_bits());
            prop_assert_eq!(ccbrt_principal(z).im.to_bits(), ccbrt_principal(z2).im.to_bits());
        }
    }
}
