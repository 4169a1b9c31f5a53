mod common;

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use radica_core::complex::{ccbrt_principal, csqrt_principal, omega_pow, PROVIDER_TOL};
use radica_core::{CbrtField, ComplexField, Field, SqrtField};

fn sample(rng: &mut ChaCha8Rng) -> Complex64 {
    let modulus = 10f64.powf(rng.gen_range(-6.0..=6.0));
    Complex64::from_polar(modulus, rng.gen_range(-PI..=PI))
}

#[test]
fn principal_roots_invert_powers_on_many_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let z = sample(&mut rng);
        let s = csqrt_principal(z);
        let c = ccbrt_principal(z);
        assert!((s * s - z).norm() <= PROVIDER_TOL * z.norm(), "sqrt {z}");
        assert!((c * c * c - z).norm() <= PROVIDER_TOL * z.norm(), "cbrt {z}");
        for k in 1..3 {
            let ck = omega_pow(k) * c;
            assert!((ck * ck * ck - z).norm() <= PROVIDER_TOL * z.norm(), "omega^{k} cbrt {z}");
        }
        assert!(((-s) * (-s) - z).norm() <= PROVIDER_TOL * z.norm());
    }
}

#[test]
fn principal_branch_cuts() {
    assert_eq!(csqrt_principal(Complex64::new(-4.0, 0.0)), Complex64::new(0.0, 2.0));
    assert_eq!(csqrt_principal(Complex64::new(9.0, 0.0)), Complex64::new(3.0, 0.0));
    let c = ccbrt_principal(Complex64::new(-8.0, 0.0));
    assert!((c - Complex64::new(1.0, 3f64.sqrt())).norm() < 1e-12);
    assert_eq!(csqrt_principal(Complex64::new(0.0, 0.0)), Complex64::new(0.0, 0.0));
}

proptest! {
    #[test]
    fn deterministic_bit_patterns(re in any::<f64>(), im in any::<f64>()) {
        prop_assume!(re.is_finite() && im.is_finite());
        let z = Complex64::new(re, im);
        let (a, b) = (csqrt_principal(z), csqrt_principal(z));
        prop_assert_eq!((a.re.to_bits(), a.im.to_bits()), (b.re.to_bits(), b.im.to_bits()));
        let (a, b) = (ccbrt_principal(z), ccbrt_principal(z));
        prop_assert_eq!((a.re.to_bits(), a.im.to_bits()), (b.re.to_bits(), b.im.to_bits()));
    }

    #[test]
    fn complex_field_provider_contract(re in -1e3f64..1e3, im in -1e3f64..1e3) {
        let mut f = ComplexField::new();
        let a = Complex64::new(re, im);
        let scale = a.norm().max(1.0);
        let r = f.sqrt(&a);
        prop_assert!((f.square(&r) - a).norm() <= PROVIDER_TOL * scale);
        let c = f.cbrt(&a);
        let w = f.omega().unwrap();
        for k in 0..3 {
            let ck = f.mul(&c, &f.small_pow(&w, k));
            prop_assert!((f.small_pow(&ck, 3) - a).norm() <= PROVIDER_TOL * scale);
        }
    }
}
