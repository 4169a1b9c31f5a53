#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use radica_core::{BigRational, CbrtField, ExactField, Field, SqrtField, TowerElement};

pub fn rat(rng: &mut ChaCha8Rng, bound: i64) -> BigRational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    BigRational::from_i64s(n, d).unwrap()
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng, bound: i64) -> BigRational {
    loop {
        let q = rat(rng, bound);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::from_i64s(n, d).unwrap()
}

pub fn elem(q: BigRational) -> TowerElement {
    TowerElement::rational(q)
}

/// Generators of a random tower of the given depth (at most 3): a square
/// root of a rational, a cube root over that, a square root over that.
pub fn random_tower(rng: &mut ChaCha8Rng, depth: usize) -> (ExactField, Vec<TowerElement>) {
    let mut f = ExactField::new();
    let mut gens: Vec<TowerElement> = Vec::new();
    for level in 0..depth.min(3) {
        let base = elem(nonzero_rat(rng, 50));
        let radicand = match gens.last() {
            Some(g) => f.add(&base, g),
            None => base,
        };
        let g = if level == 1 { f.cbrt(&radicand) } else { f.sqrt(&radicand) };
        gens.push(g);
    }
    (f, gens)
}

/// A random combination of generator monomials with coefficients in
/// `+-bound / 1..bound`.
pub fn random_element(rng: &mut ChaCha8Rng, f: &ExactField, gens: &[TowerElement], bound: i64) -> TowerElement {
    let mut monomials = vec![f.one()];
    for (level, g) in gens.iter().enumerate() {
        let degree = if level == 1 { 3 } else { 2 };
        let mut next = Vec::new();
        for m in &monomials {
            let mut p = m.clone();
            for _ in 0..degree {
                next.push(p.clone());
                p = f.mul(&p, g);
            }
        }
        monomials = next;
    }
    let mut acc = f.zero();
    for m in &monomials {
        if rng.gen_bool(0.6) {
            acc = f.add(&acc, &f.mul(&elem(rat(rng, bound)), m));
        }
    }
    acc
}

pub fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * a.norm().max(b.norm()).max(1.0)
}
