//! Closed-form solutions of polynomial equations of degree at most four,
//! over any field that comes with a chosen square root and cube root.
//!
//! Two backends are provided: [`exact::ExactField`], a tower of radical
//! extensions over the rationals with exact equality, and
//! [`complex::ComplexField`], double-precision complex numbers with principal
//! branches. The formulas in [`solvers`] are written once against the
//! [`field`] traits and run unchanged on both.

pub mod complex;
pub mod exact;
pub mod field;
pub mod radical;
pub mod rational;
pub mod records;
pub mod solvers;
pub mod tower;
pub mod verifier;

pub use complex::{ComplexD, ComplexField};
pub use exact::ExactField;
pub use field::{CbrtField, Field, FieldError, SqrtField};
pub use radical::{RadicalExpr, Traced};
pub use rational::BigRational;
pub use records::{Backend, Mode, RootRecord, Solution};
pub use tower::{Tower, TowerElement, TowerError};
