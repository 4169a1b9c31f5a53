//! Side conditions of the plain formulas, stated on general coefficients.
//!
//! Each expression is zero exactly when the corresponding depressed
//! coefficient is zero (they differ by a nonzero power of `a`).

use crate::field::Field;

/// `(3ac - b^2, 2b^3 - 9abc + 27a^2 d)`, zero iff depressed `c'` resp. `d'` is.
pub fn cubic_conditions<F: Field>(
    f: &F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
) -> (F::Elem, F::Elem) {
    let k = |n: i64| f.from_integer(n);
    let h1 = f.sub(&f.mul(&k(3), &f.mul(a, c)), &f.square(b));
    let h2 = f.add(
        &f.sub(
            &f.mul(&k(2), &f.small_pow(b, 3)),
            &f.mul(&k(9), &f.mul(a, &f.mul(b, c))),
        ),
        &f.mul(&k(27), &f.mul(&f.square(a), d)),
    );
    (h1, h2)
}

/// General-coefficient forms of the quartic conditions:
///
/// * `b^3 - 4abc + 8a^2 d` (`= 8a^3 d'`)
/// * `16ab^2 c - 3b^4 - 64a^2 bd + 256a^3 e` (`= 256a^4 e'`)
/// * `c^2 - 3bd + 12ae` (`= a^2 (c'^2 + 12e')`)
pub fn quartic_conditions<F: Field>(
    f: &F,
    a: &F::Elem,
    b: &F::Elem,
    c: &F::Elem,
    d: &F::Elem,
    e: &F::Elem,
) -> (F::Elem, F::Elem, F::Elem) {
    let k = |n: i64| f.from_integer(n);
    let a2 = f.square(a);
    let h_d = f.add(
        &f.sub(&f.small_pow(b, 3), &f.mul(&k(4), &f.mul(a, &f.mul(b, c)))),
        &f.mul(&k(8), &f.mul(&a2, d)),
    );
    let h_e = f.add(
        &f.sub(
            &f.sub(
                &f.mul(&k(16), &f.mul(a, &f.mul(&f.square(b), c))),
                &f.mul(&k(3), &f.small_pow(b, 4)),
            ),
            &f.mul(&k(64), &f.mul(&a2, &f.mul(b, d))),
        ),
        &f.mul(&k(256), &f.mul(&f.mul(&a2, a), e)),
    );
    let h_r = f.add(
        &f.sub(&f.square(c), &f.mul(&k(3), &f.mul(b, d))),
        &f.mul(&k(12), &f.mul(a, e)),
    );
    (h_d, h_e, h_r)
}
