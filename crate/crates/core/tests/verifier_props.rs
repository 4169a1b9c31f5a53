mod common;

use common::{elem, nonzero_rat, rat};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use radica_core::records::{solve_complex, Mode};
use radica_core::verifier::{
    durand_kerner, expand_monic_from_roots, horner_eval, match_root_multisets, min_separation,
    verify_solution, Coefficients, DK_MAX_ITER, DK_TOL,
};
use radica_core::{ComplexField, ExactField, SqrtField, TowerElement};

fn scale(coeffs: &[Complex64], z: Complex64) -> f64 {
    coeffs.iter().rev().enumerate().map(|(i, a)| a.norm() * z.norm().powi(i as i32)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn oracle_roots_have_small_residuals(seed in any::<u64>(), degree in 1usize..=4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let roots: Vec<Complex64> = (0..degree)
            .map(|_| Complex64::new(r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0)))
            .collect();
        prop_assume!(min_separation(&roots) >= 1e-3);
        let g = ComplexField::new();
        let coeffs = expand_monic_from_roots(&g, &roots);
        let found = durand_kerner(&coeffs, DK_TOL, DK_MAX_ITER).unwrap();
        for z in &found {
            prop_assert!(horner_eval(&g, &coeffs, z).norm() <= 1e-8 * scale(&coeffs, *z));
        }
        prop_assert!(match_root_multisets(&found, &roots, 1e-6).matched);
    }

    #[test]
    fn expansion_vanishes_at_each_exact_root(seed in any::<u64>(), degree in 1usize..=4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let mut f = ExactField::new();
        let roots: Vec<TowerElement> = (0..degree)
            .map(|i| {
                let q = elem(rat(&mut r, 20));
                if i % 2 == 1 { f.sqrt(&elem(nonzero_rat(&mut r, 20))) } else { q }
            })
            .collect();
        let coeffs = expand_monic_from_roots(&f, &roots);
        for x in &roots {
            prop_assert!(horner_eval(&f, &coeffs, x).is_zero());
        }
    }

    #[test]
    fn passing_reports_agree_with_the_oracle(seed in any::<u64>(), degree in 3usize..=4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let coeffs: Vec<Complex64> = (0..=degree)
            .map(|_| Complex64::new(r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0)))
            .collect();
        let sol = solve_complex(&coeffs, Mode::Total).unwrap();
        let rep = verify_solution(Coefficients::Complex(&coeffs), &sol);
        if rep.pass && rep.oracle.converged {
            let lead = coeffs[0];
            let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
            let oracle = durand_kerner(&monic, DK_TOL, DK_MAX_ITER).unwrap();
            prop_assert!(match_root_multisets(&sol.approx_roots(), &oracle, 1e-6).matched);
        }
    }
}
