//! The exact backend: a growing radical tower over the rationals.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::field::{CbrtField, Field, FieldError, SqrtField};
use crate::tower::{Node, RootKind, Tower, TowerElement};

/// Field view of a single growing tower.
///
/// Every root adjoins on top of the current tower, so all elements handed out
/// by one `ExactField` live on prefixes of one chain and always combine.
/// Mixing elements from two different `ExactField` values panics.
#[derive(Clone, Default)]
pub struct ExactField {
    tower: Tower,
    cache: HashMap<(RootKind, Node), TowerElement>,
}

impl ExactField {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    fn root(&mut self, kind: RootKind, a: &TowerElement) -> TowerElement {
        let key = (kind, a.node().clone());
        if let Some(r) = self.cache.get(&key) {
            return r.clone();
        }
        let (tower, r) = match kind {
            RootKind::Square => self.tower.adjoin_sqrt(a),
            RootKind::Cube => self.tower.adjoin_cbrt(a),
        }
        .expect("element from a foreign tower");
        self.tower = tower;
        self.cache.insert(key, r.clone());
        r
    }
}

impl Field for ExactField {
    type Elem = TowerElement;

    fn zero(&self) -> TowerElement {
        TowerElement::zero()
    }

    fn one(&self) -> TowerElement {
        TowerElement::one()
    }

    fn add(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        a + b
    }

    fn neg(&self, a: &TowerElement) -> TowerElement {
        -a
    }

    fn mul(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        a * b
    }

    fn inverse(&self, a: &TowerElement) -> Result<TowerElement, FieldError> {
        Ok(a.inverse()?)
    }

    fn is_zero(&self, a: &TowerElement) -> bool {
        a.is_zero()
    }

    fn to_complex(&self, a: &TowerElement) -> Complex64 {
        a.to_complex()
    }
}

impl SqrtField for ExactField {
    fn sqrt(&mut self, a: &TowerElement) -> TowerElement {
        self.root(RootKind::Square, a)
    }
}

impl CbrtField for ExactField {
    fn cbrt(&mut self, a: &TowerElement) -> TowerElement {
        self.root(RootKind::Cube, a)
    }
}
