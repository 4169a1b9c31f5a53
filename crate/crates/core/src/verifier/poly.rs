use crate::field::Field;

/// Value of `coeffs` (leading first) at `x`.
pub fn horner_eval<F: Field>(f: &F, coeffs: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in coeffs {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

/// Coefficients of `prod (x - r)`, leading first.
pub fn expand_monic_from_roots<F: Field>(f: &F, roots: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.one()];
    for r in roots {
        let mut next = out.clone();
        next.push(f.zero());
        for (i, c) in out.iter().enumerate() {
            next[i + 1] = f.sub(&next[i + 1], &f.mul(r, c));
        }
        out = next;
    }
    out
}
