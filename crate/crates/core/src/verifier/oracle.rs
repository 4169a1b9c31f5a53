//! Independent numeric root finder and multiset matching.

use num_complex::Complex64;
use thiserror::Error;

use crate::complex::approx_eq;

pub const DK_TOL: f64 = 1e-12;
pub const DK_MAX_ITER: usize = 200;

#[derive(Debug, Clone, Error)]
#[error("Durand-Kerner did not converge in {iterations} iterations")]
pub struct OracleError {
    pub iterations: usize,
    pub last: Vec<Complex64>,
}

/// All roots of `coeffs` (leading first, leading nonzero) by Weierstrass
/// iteration from `(0.4 + 0.9i)^k`. Stops once every correction is at most
/// `tol * max(1, |z|)`.
pub fn durand_kerner(
    coeffs: &[Complex64],
    tol: f64,
    max_iter: usize,
) -> Result<Vec<Complex64>, OracleError> {
    assert!(coeffs.len() >= 2, "degree must be at least one");
    let lead = coeffs[0];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let n = monic.len() - 1;
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for iter in 1..=max_iter {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            let num = monic
                .iter()
                .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z[i] + c);
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(f64::EPSILON, 0.0);
            }
            let delta = num / den;
            z[i] -= delta;
            worst = worst.max(delta.norm() / z[i].norm().max(1.0));
        }
        if !worst.is_finite() {
            return Err(OracleError { iterations: iter, last: z });
        }
        if worst <= tol {
            return Ok(z);
        }
    }
    Err(OracleError {
        iterations: max_iter,
        last: z,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchVerdict {
    pub matched: bool,
    /// `b[permutation[i]]` is paired with `a[i]`.
    pub permutation: Vec<usize>,
    pub max_distance: f64,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Exhaustive pairing of two root lists of equal length. Among pairings where
/// every pair is `approx_eq` at `tol`, the one with smallest maximum distance
/// wins; if there is none, the overall closest pairing is reported unmatched.
pub fn match_root_multisets(a: &[Complex64], b: &[Complex64], tol: f64) -> MatchVerdict {
    if a.len() != b.len() {
        return MatchVerdict {
            matched: false,
            permutation: Vec::new(),
            max_distance: f64::INFINITY,
        };
    }
    let mut best: Option<MatchVerdict> = None;
    for perm in permutations(a.len()) {
        let matched = a.iter().zip(&perm).all(|(x, &j)| approx_eq(*x, b[j], tol));
        let max_distance = a
            .iter()
            .zip(&perm)
            .map(|(x, &j)| (x - b[j]).norm())
            .fold(0.0, f64::max);
        let better = match &best {
            None => true,
            Some(cur) => {
                (matched && !cur.matched) || (matched == cur.matched && max_distance < cur.max_distance)
            }
        };
        if better {
            best = Some(MatchVerdict {
                matched,
                permutation: perm,
                max_distance,
            });
        }
    }
    best.expect("at least one permutation")
}

/// Smallest pairwise distance among `roots`, infinite for fewer than two.
pub fn min_separation(roots: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}
