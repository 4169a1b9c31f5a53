//! Text and JSON rendering of a solved polynomial.

use std::fmt::Write as _;

use num_complex::Complex64;
use radica_core::verifier::VerificationReport;
use radica_core::{RootRecord, Solution};
use serde::Serialize;

use crate::parse::PolynomialInput;

/// Relative width within which two real parts count as tied for ordering.
const ORDER_TIE: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct JsonCoefficient {
    pub deg: u32,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct JsonApprox {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct JsonRoot {
    pub label: String,
    pub radical: String,
    pub approx: JsonApprox,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct JsonVerification {
    pub factorization_ok: bool,
    pub oracle_match: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JsonReport {
    pub degree: u32,
    pub field: String,
    pub coefficients: Vec<JsonCoefficient>,
    pub roots: Vec<JsonRoot>,
    pub verification: Option<JsonVerification>,
}

fn tied(a: f64, b: f64) -> bool {
    (a - b).abs() <= ORDER_TIE * a.abs().max(b.abs()).max(1.0)
}

/// Indices of `roots` ordered by real part, then imaginary part among runs
/// of tied real parts.
pub fn display_order(roots: &[Complex64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..roots.len()).collect();
    idx.sort_by(|&i, &j| roots[i].re.total_cmp(&roots[j].re));
    let mut start = 0;
    while start < idx.len() {
        let mut end = start + 1;
        while end < idx.len() && tied(roots[idx[end - 1]].re, roots[idx[end]].re) {
            end += 1;
        }
        idx[start..end].sort_by(|&i, &j| roots[i].im.total_cmp(&roots[j].im));
        start = end;
    }
    idx
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

pub fn format_complex(z: Complex64) -> String {
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else if im < 0.0 {
        format!("{re} - {}i", -im)
    } else {
        format!("{re} + {im}i")
    }
}

pub struct Rendered<'a> {
    input: &'a PolynomialInput,
    degree: u32,
    solution: &'a Solution,
    residuals: &'a [f64],
    verification: Option<&'a VerificationReport>,
    order: Vec<usize>,
}

impl<'a> Rendered<'a> {
    pub fn new(
        input: &'a PolynomialInput,
        degree: u32,
        solution: &'a Solution,
        residuals: &'a [f64],
        verification: Option<&'a VerificationReport>,
    ) -> Self {
        let order = display_order(&solution.approx_roots());
        Rendered {
            input,
            degree,
            solution,
            residuals,
            verification,
            order,
        }
    }

    fn sorted(&self) -> impl Iterator<Item = (&RootRecord, f64)> + '_ {
        self.order
            .iter()
            .map(|&i| (&self.solution.roots[i], self.residuals[i]))
    }

    pub fn json_report(&self) -> JsonReport {
        let coefficients = self
            .input
            .leading_first()
            .into_iter()
            .zip((0..=self.degree).rev())
            .map(|(c, deg)| JsonCoefficient {
                deg,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        let roots = self
            .sorted()
            .map(|(r, residual)| JsonRoot {
                label: r.label.to_string(),
                radical: r.radical.to_string(),
                approx: JsonApprox {
                    re: clean(r.approx.re),
                    im: clean(r.approx.im),
                },
                residual,
            })
            .collect();
        let verification = self.verification.map(|v| JsonVerification {
            factorization_ok: v.factorization.ok(),
            oracle_match: v.oracle.matched,
            notes: v.notes.clone(),
        });
        JsonReport {
            degree: self.degree,
            field: self.solution.backend.to_string(),
            coefficients,
            roots,
            verification,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.json_report()).expect("serializable report")
    }

    pub fn to_text(&self, radical: bool) -> String {
        let var = self.input.variable_name();
        let mut s = String::new();
        let _ = writeln!(s, "polynomial: {}", self.input.source.trim());
        let _ = writeln!(s, "degree: {}", self.degree);
        let _ = writeln!(s, "field: {}", self.solution.backend);
        let _ = writeln!(s, "roots:");
        for (r, residual) in self.sorted() {
            match r.exact.as_ref().and_then(|e| e.as_rational()) {
                Some(q) => {
                    let _ = writeln!(s, "  {var} = {q}  [{}]", r.label);
                }
                None => {
                    let _ = writeln!(s, "  {var} ~ {}  [{}]", format_complex(r.approx), r.label);
                }
            }
            if radical {
                let _ = writeln!(s, "    radical: {}", r.radical);
                let _ = writeln!(s, "    residual: {residual:e}");
            }
        }
        if let Some(v) = self.verification {
            let _ = writeln!(s, "verification: {}", if v.pass { "pass" } else { "FAIL" });
            let _ = writeln!(
                s,
                "  factorization: {}",
                if v.factorization.ok() { "ok" } else { "mismatch" }
            );
            let oracle = match (v.oracle.converged, v.oracle.matched) {
                (_, true) => "matched",
                (false, false) => "did not converge",
                (true, false) => "mismatch",
            };
            let _ = writeln!(
                s,
                "  oracle: {oracle} (max distance {:e})",
                v.oracle.max_distance
            );
            if let Some(zero) = v.exact_residuals_zero {
                let _ = writeln!(s, "  exact residuals zero: {zero}");
            }
            for note in &v.notes {
                let _ = writeln!(s, "  note: {note}");
            }
        }
        s
    }
}
