//! A quick randomized pass over the solver invariants.

use std::io::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use radica_core::records::{solve_complex, solve_exact, solve_rational_auto};
use radica_core::verifier::{
    min_separation, negative_exhibit_two_cbrts, verify_solution, Adversarial, Coefficients,
};
use radica_core::{BigRational, ExactField, Mode, TowerElement};

use crate::{EXIT_OK, EXIT_VERIFY};

/// `RADICA_SEED` when set and numeric, otherwise a fresh random seed.
pub fn seed_from_env() -> u64 {
    std::env::var("RADICA_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or_else(rand::random)
}

fn rational(rng: &mut ChaCha8Rng, nonzero: bool) -> BigRational {
    loop {
        let n: i64 = rng.gen_range(-20..=20);
        let d: i64 = rng.gen_range(1..=20);
        if !(nonzero && n == 0) {
            return BigRational::from_i64s(n, d).expect("nonzero denominator");
        }
    }
}

fn complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0))
}

struct Tally {
    passed: usize,
    failed: usize,
    skipped: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            passed: 0,
            failed: 0,
            skipped: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

fn exact_verifies(coeffs: &[BigRational]) -> bool {
    match solve_rational_auto(coeffs, Mode::Total) {
        Ok(sol) => verify_solution(Coefficients::Rational(coeffs), &sol).pass,
        Err(_) => false,
    }
}

/// Runs the corpus for `seed`, writing one line per group; exit code 0 when
/// every group passes.
pub fn run_selftest(seed: u64, out: &mut dyn Write) -> i32 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let _ = writeln!(out, "seed {seed}");
    let mut all_ok = true;
    let mut report = |name: &str, t: &Tally, out: &mut dyn Write| {
        let verdict = if t.failed == 0 { "PASS" } else { "FAIL" };
        all_ok &= t.failed == 0;
        let _ = writeln!(
            out,
            "{verdict} {name}: {} passed, {} failed, {} skipped",
            t.passed, t.failed, t.skipped
        );
    };

    let mut t = Tally::new();
    for _ in 0..30 {
        let q = [rational(&mut rng, true), rational(&mut rng, false), rational(&mut rng, false)];
        t.record(exact_verifies(&q));
    }
    report("exact quadratics", &t, out);

    let mut t = Tally::new();
    for _ in 0..30 {
        let q = [
            BigRational::one(),
            BigRational::zero(),
            rational(&mut rng, true),
            rational(&mut rng, true),
        ];
        let ok = match solve_exact(&q, Mode::Total) {
            Ok(sol) => {
                let rep = verify_solution(Coefficients::Rational(&q), &sol);
                rep.pass && rep.exact_residuals_zero == Some(true)
            }
            Err(_) => false,
        };
        t.record(ok);
    }
    report("exact depressed cubics", &t, out);

    let mut t = Tally::new();
    for _ in 0..8 {
        let q: Vec<BigRational> = std::iter::once(rational(&mut rng, true))
            .chain((0..4).map(|_| rational(&mut rng, false)))
            .collect();
        t.record(exact_verifies(&q));
    }
    report("quartics over the rationals", &t, out);

    let mut t = Tally::new();
    for i in 0..200 {
        let degree = 3 + i % 2;
        let coeffs: Vec<Complex64> = (0..=degree).map(|_| complex(&mut rng)).collect();
        match solve_complex(&coeffs, Mode::Total) {
            Ok(sol) if min_separation(&sol.approx_roots()) < 1e-3 => t.skipped += 1,
            Ok(sol) => t.record(verify_solution(Coefficients::Complex(&coeffs), &sol).pass),
            Err(_) => t.record(false),
        }
    }
    report("complex differential", &t, out);

    let mut t = Tally::new();
    let mut f = Adversarial(ExactField::new());
    let ok = negative_exhibit_two_cbrts(&mut f, &TowerElement::from_integer(-6), &TowerElement::from_integer(-9))
        .map(|ex| !ex.naive_residual.is_zero() && ex.corrected_residual.is_zero())
        .unwrap_or(false);
    t.record(ok);
    report("independent cube roots break, corrected formula holds", &t, out);

    if all_ok {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}
