//! Towers of radical extensions `Q(g1)(g2)...` with reduced normal forms.
//!
//! Every generator `g{k+1}` (stored at level `k`) satisfies `g^2 = a` or
//! `g^3 = a` for a radicand `a` built from lower levels only. An element is a
//! nested polynomial: at its top level `k` it has `deg(k)` coefficients, each
//! an element of strictly lower levels. The representation is sparse and
//! canonical: an `Ext` node always has some nonzero coefficient above degree
//! zero, otherwise it collapses to its constant coefficient. Structural
//! equality is therefore equality of normal forms, and `is_zero` is exact.
//!
//! Normal forms decide equality only when every defining polynomial `x^n - a`
//! is irreducible over the levels below it. When it is not, some nonzero
//! element is a zero divisor; [`TowerElement::inverse`] reports that as
//! [`TowerError::ReducibleExtension`] together with the factor it found.
//!
//! Towers are append-only and cheap to clone. Two elements can be combined
//! when one tower is a prefix of the other; the shorter one is lifted.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::complex::{ccbrt_principal, csqrt_principal};
use crate::field::FieldError;
use crate::rational::BigRational;

#[derive(Debug, Clone, Error)]
pub enum TowerError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("tower mismatch")]
    TowerMismatch,
    #[error("reducible extension: {} has factor {}", defining_polynomial(*level), render_factor(factor))]
    ReducibleExtension {
        level: usize,
        /// Monic proper factor of `x^n - a` over the lower levels, lowest degree first.
        factor: Vec<TowerElement>,
    },
}

fn defining_polynomial(level: usize) -> String {
    format!("the defining polynomial of g{}", level + 1)
}

fn render_factor(factor: &[TowerElement]) -> String {
    let mut terms = Vec::new();
    for (i, c) in factor.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "*x".to_string(),
            _ => format!("*x^{i}"),
        };
        terms.push(format!("({}){}", fmt_node(&c.node), var));
    }
    terms.join(" + ")
}

impl From<TowerError> for FieldError {
    fn from(e: TowerError) -> Self {
        match e {
            TowerError::DivisionByZero => FieldError::DivisionByZero,
            TowerError::TowerMismatch => FieldError::TowerMismatch,
            TowerError::ReducibleExtension { level, ref factor } => {
                FieldError::ReducibleExtension {
                    level: level + 1,
                    factor: render_factor(factor),
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    Square,
    Cube,
}

impl RootKind {
    pub fn degree(self) -> usize {
        match self {
            RootKind::Square => 2,
            RootKind::Cube => 3,
        }
    }
}

#[derive(Debug)]
struct Level {
    kind: RootKind,
    radicand: Node,
    embedding: Complex64,
}

/// An append-only chain of radical extensions over `Q`.
#[derive(Clone, Default)]
pub struct Tower {
    levels: Arc<Vec<Arc<Level>>>,
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.levels.iter().enumerate().map(|(k, l)| {
                format!(
                    "g{}^{} = {}",
                    k + 1,
                    l.kind.degree(),
                    fmt_node(&l.radicand)
                )
            }))
            .finish()
    }
}

impl Tower {
    /// The trivial tower, i.e. `Q` itself.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn kind(&self, level: usize) -> RootKind {
        self.levels[level].kind
    }

    pub fn radicand(&self, level: usize) -> TowerElement {
        TowerElement {
            tower: self.truncated(level),
            node: self.levels[level].radicand.clone(),
        }
    }

    /// Numeric value chosen for generator `level` when it was adjoined.
    pub fn embedding(&self, level: usize) -> Complex64 {
        self.levels[level].embedding
    }

    pub fn generator(&self, level: usize) -> TowerElement {
        let mut coeffs = vec![Node::zero(); self.kind(level).degree()];
        coeffs[1] = Node::one();
        TowerElement {
            tower: self.clone(),
            node: Node::Ext(level, coeffs.into()),
        }
    }

    fn truncated(&self, depth: usize) -> Tower {
        Tower {
            levels: Arc::new(self.levels[..depth].to_vec()),
        }
    }

    pub fn is_prefix_of(&self, other: &Tower) -> bool {
        let d = self.depth();
        d <= other.depth() && (d == 0 || Arc::ptr_eq(&self.levels[d - 1], &other.levels[d - 1]))
    }

    fn join(&self, other: &Tower) -> Result<Tower, TowerError> {
        if self.is_prefix_of(other) {
            Ok(other.clone())
        } else if other.is_prefix_of(self) {
            Ok(self.clone())
        } else {
            Err(TowerError::TowerMismatch)
        }
    }

    /// Returns a tower containing a square root of `a` and that root.
    ///
    /// Rational perfect squares are answered without growing the tower; any
    /// other radicand gets a new generator whose embedding is the principal
    /// square root of `a`'s embedding.
    pub fn adjoin_sqrt(&self, a: &TowerElement) -> Result<(Tower, TowerElement), TowerError> {
        self.adjoin(RootKind::Square, a)
    }

    /// Cube-root analogue of [`Tower::adjoin_sqrt`]. Rational perfect cubes
    /// return the real rational root (sign preserved).
    pub fn adjoin_cbrt(&self, a: &TowerElement) -> Result<(Tower, TowerElement), TowerError> {
        self.adjoin(RootKind::Cube, a)
    }

    fn adjoin(&self, kind: RootKind, a: &TowerElement) -> Result<(Tower, TowerElement), TowerError> {
        if !a.tower.is_prefix_of(self) {
            return Err(TowerError::TowerMismatch);
        }
        if let Node::Rat(q) = &a.node {
            let shortcut = match kind {
                RootKind::Square => q.perfect_sqrt(),
                RootKind::Cube => q.perfect_cbrt(),
            };
            if let Some(r) = shortcut {
                return Ok((
                    self.clone(),
                    TowerElement {
                        tower: self.clone(),
                        node: Node::Rat(r),
                    },
                ));
            }
        }
        let radicand_value = a.to_complex();
        let embedding = match kind {
            RootKind::Square => csqrt_principal(radicand_value),
            RootKind::Cube => ccbrt_principal(radicand_value),
        };
        let mut levels = (*self.levels).clone();
        levels.push(Arc::new(Level {
            kind,
            radicand: a.node.clone(),
            embedding,
        }));
        let tower = Tower {
            levels: Arc::new(levels),
        };
        let g = tower.generator(tower.depth() - 1);
        Ok((tower, g))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Node {
    Rat(BigRational),
    Ext(usize, Arc<[Node]>),
}

impl Node {
    fn zero() -> Node {
        Node::Rat(BigRational::zero())
    }

    fn one() -> Node {
        Node::Rat(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        matches!(self, Node::Rat(q) if q.is_zero())
    }

    fn is_one(&self) -> bool {
        matches!(self, Node::Rat(q) if q.is_one())
    }

    fn top(&self) -> Option<usize> {
        match self {
            Node::Rat(_) => None,
            Node::Ext(k, _) => Some(*k),
        }
    }
}

fn normalize(level: usize, mut coeffs: Vec<Node>) -> Node {
    if coeffs[1..].iter().all(Node::is_zero) {
        coeffs.swap_remove(0)
    } else {
        Node::Ext(level, coeffs.into())
    }
}

/// Arithmetic on nodes relative to a fixed tower.
struct Ctx<'a> {
    tower: &'a Tower,
}

impl Ctx<'_> {
    fn level(&self, k: usize) -> &Level {
        &self.tower.levels[k]
    }

    fn add(&self, a: &Node, b: &Node) -> Node {
        match (a, b) {
            (Node::Rat(x), Node::Rat(y)) => Node::Rat(x + y),
            _ if a.is_zero() => b.clone(),
            _ if b.is_zero() => a.clone(),
            _ => {
                if a.top() < b.top() {
                    return self.add(b, a);
                }
                let Node::Ext(k, ca) = a else { unreachable!() };
                match b {
                    Node::Ext(kb, cb) if kb == k => {
                        let sum = ca.iter().zip(cb.iter()).map(|(x, y)| self.add(x, y)).collect();
                        normalize(*k, sum)
                    }
                    _ => {
                        let mut coeffs = ca.to_vec();
                        coeffs[0] = self.add(&coeffs[0], b);
                        Node::Ext(*k, coeffs.into())
                    }
                }
            }
        }
    }

    fn neg(&self, a: &Node) -> Node {
        match a {
            Node::Rat(x) => Node::Rat(-x),
            Node::Ext(k, c) => Node::Ext(*k, c.iter().map(|x| self.neg(x)).collect()),
        }
    }

    fn sub(&self, a: &Node, b: &Node) -> Node {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Node, b: &Node) -> Node {
        match (a, b) {
            (Node::Rat(x), Node::Rat(y)) => Node::Rat(x * y),
            _ if a.is_zero() || b.is_zero() => Node::zero(),
            _ if a.is_one() => b.clone(),
            _ if b.is_one() => a.clone(),
            _ => {
                if a.top() < b.top() {
                    return self.mul(b, a);
                }
                let Node::Ext(k, ca) = a else { unreachable!() };
                match b {
                    Node::Ext(kb, cb) if kb == k => self.mul_same_level(*k, ca, cb),
                    _ => normalize(*k, ca.iter().map(|x| self.mul(x, b)).collect()),
                }
            }
        }
    }

    fn mul_same_level(&self, k: usize, ca: &[Node], cb: &[Node]) -> Node {
        let n = ca.len();
        let mut prod = vec![Node::zero(); 2 * n - 1];
        for (i, x) in ca.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in cb.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] = self.add(&prod[i + j], &self.mul(x, y));
            }
        }
        // g^(n+j) = a * g^j
        let radicand = &self.level(k).radicand;
        for j in (n..2 * n - 1).rev() {
            let hi = std::mem::replace(&mut prod[j], Node::zero());
            if !hi.is_zero() {
                prod[j - n] = self.add(&prod[j - n], &self.mul(&hi, radicand));
            }
        }
        prod.truncate(n);
        normalize(k, prod)
    }

    /// Inverse via the norm and adjugate of the multiplication map by `a`.
    fn inverse(&self, a: &Node) -> Result<Node, TowerError> {
        let (k, c) = match a {
            Node::Rat(q) => {
                return q
                    .inverse()
                    .map(Node::Rat)
                    .map_err(|_| TowerError::DivisionByZero)
            }
            Node::Ext(k, c) => (*k, c),
        };
        let r = &self.level(k).radicand;
        let (adjugate, norm) = match c.len() {
            2 => {
                // (a0 + a1 g)(a0 - a1 g) = a0^2 - a1^2 r
                let norm = self.sub(
                    &self.mul(&c[0], &c[0]),
                    &self.mul(&self.mul(&c[1], &c[1]), r),
                );
                (vec![c[0].clone(), self.neg(&c[1])], norm)
            }
            _ => {
                let (a0, a1, a2) = (&c[0], &c[1], &c[2]);
                let b0 = self.sub(&self.mul(a0, a0), &self.mul(r, &self.mul(a1, a2)));
                let b1 = self.sub(&self.mul(r, &self.mul(a2, a2)), &self.mul(a0, a1));
                let b2 = self.sub(&self.mul(a1, a1), &self.mul(a0, a2));
                let norm = self.add(
                    &self.mul(a0, &b0),
                    &self.mul(r, &self.add(&self.mul(a1, &b2), &self.mul(a2, &b1))),
                );
                (vec![b0, b1, b2], norm)
            }
        };
        if norm.is_zero() {
            return Err(self.reducible(k, c));
        }
        let inv_norm = self.inverse(&norm)?;
        Ok(normalize(
            k,
            adjugate.iter().map(|x| self.mul(x, &inv_norm)).collect(),
        ))
    }

    /// Called when `a` (as a polynomial in `g_k`) is a zero divisor: finds
    /// `gcd(a(x), x^n - r)` over the lower levels.
    fn reducible(&self, k: usize, coeffs: &[Node]) -> TowerError {
        let n = self.level(k).kind.degree();
        let mut defining = vec![Node::zero(); n + 1];
        defining[0] = self.neg(&self.level(k).radicand);
        defining[n] = Node::one();
        match self.poly_gcd(defining, coeffs.to_vec()) {
            Ok(g) => TowerError::ReducibleExtension {
                level: k,
                factor: g
                    .into_iter()
                    .map(|node| TowerElement {
                        tower: self.tower.truncated(k),
                        node,
                    })
                    .collect(),
            },
            Err(e) => e,
        }
    }

    fn poly_gcd(&self, mut a: Vec<Node>, mut b: Vec<Node>) -> Result<Vec<Node>, TowerError> {
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b)?;
            a = b;
            b = r;
        }
        let lead_inv = self.inverse(a.last().expect("gcd of nonzero polynomials"))?;
        Ok(a.iter().map(|x| self.mul(x, &lead_inv)).collect())
    }

    fn poly_rem(&self, a: &[Node], b: &[Node]) -> Result<Vec<Node>, TowerError> {
        let mut r = a.to_vec();
        let lead_inv = self.inverse(b.last().expect("nonzero divisor"))?;
        while r.len() >= b.len() {
            let q = self.mul(r.last().unwrap(), &lead_inv);
            let shift = r.len() - b.len();
            for (i, y) in b.iter().enumerate() {
                r[shift + i] = self.sub(&r[shift + i], &self.mul(&q, y));
            }
            r.pop();
            trim(&mut r);
        }
        Ok(r)
    }

    fn eval(&self, a: &Node) -> Complex64 {
        match a {
            Node::Rat(q) => Complex64::new(q.to_f64(), 0.0),
            Node::Ext(k, c) => {
                let g = self.level(*k).embedding;
                c.iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, x| acc * g + self.eval(x))
            }
        }
    }
}

fn trim(p: &mut Vec<Node>) {
    while p.last().is_some_and(Node::is_zero) {
        p.pop();
    }
}

fn fmt_node(n: &Node) -> String {
    match n {
        Node::Rat(q) => q.to_string(),
        Node::Ext(k, c) => {
            let mut terms = Vec::new();
            for (i, x) in c.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let g = match i {
                    0 => String::new(),
                    1 => format!("*g{}", k + 1),
                    _ => format!("*g{}^{}", k + 1, i),
                };
                terms.push(format!("({}){}", fmt_node(x), g));
            }
            terms.join(" + ")
        }
    }
}

/// An element of a radical tower, in reduced normal form.
#[derive(Clone)]
pub struct TowerElement {
    tower: Tower,
    node: Node,
}

impl TowerElement {
    pub fn rational(q: BigRational) -> Self {
        TowerElement {
            tower: Tower::new(),
            node: Node::Rat(q),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub(crate) fn node(&self) -> &Node {
        &self.node
    }

    pub fn is_zero(&self) -> bool {
        self.node.is_zero()
    }

    /// The rational value if the normal form has no generators.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.node {
            Node::Rat(q) => Some(q),
            Node::Ext(..) => None,
        }
    }

    /// Highest generator level used by this element, if any.
    pub fn top_level(&self) -> Option<usize> {
        self.node.top()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, TowerError> {
        let tower = self.tower.join(&other.tower)?;
        let node = Ctx { tower: &tower }.add(&self.node, &other.node);
        Ok(TowerElement { tower, node })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, TowerError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, TowerError> {
        let tower = self.tower.join(&other.tower)?;
        let node = Ctx { tower: &tower }.mul(&self.node, &other.node);
        Ok(TowerElement { tower, node })
    }

    pub fn inverse(&self) -> Result<Self, TowerError> {
        let node = Ctx { tower: &self.tower }.inverse(&self.node)?;
        Ok(TowerElement {
            tower: self.tower.clone(),
            node,
        })
    }

    /// Evaluates the normal form at the stored generator embeddings.
    pub fn to_complex(&self) -> Complex64 {
        Ctx { tower: &self.tower }.eval(&self.node)
    }

    /// Rebinds this element to `tower`, which must extend the current one.
    pub fn lift(&self, tower: &Tower) -> Result<Self, TowerError> {
        if !self.tower.is_prefix_of(tower) {
            return Err(TowerError::TowerMismatch);
        }
        Ok(TowerElement {
            tower: tower.clone(),
            node: self.node.clone(),
        })
    }
}

impl PartialEq for TowerElement {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node && self.tower.join(&other.tower).is_ok()
    }
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical text, e.g. `(3/2) + (1/2)*g1 where g1^2 = 2`.
impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_node(&self.node))?;
        if let Some(top) = self.node.top() {
            let defs: Vec<String> = (0..=top)
                .map(|k| {
                    let l = &self.tower.levels[k];
                    format!("g{}^{} = {}", k + 1, l.kind.degree(), fmt_node(&l.radicand))
                })
                .collect();
            write!(f, " where {}", defs.join("; "))?;
        }
        Ok(())
    }
}

impl From<BigRational> for TowerElement {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

// Operator forms panic on unrelated towers; use the `try_*` methods when the
// operands may come from different towers.
impl Add for &TowerElement {
    type Output = TowerElement;
    fn add(self, rhs: &TowerElement) -> TowerElement {
        self.try_add(rhs).expect("tower mismatch")
    }
}

impl Sub for &TowerElement {
    type Output = TowerElement;
    fn sub(self, rhs: &TowerElement) -> TowerElement {
        self.try_sub(rhs).expect("tower mismatch")
    }
}

impl Mul for &TowerElement {
    type Output = TowerElement;
    fn mul(self, rhs: &TowerElement) -> TowerElement {
        self.try_mul(rhs).expect("tower mismatch")
    }
}

impl Neg for &TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        TowerElement {
            tower: self.tower.clone(),
            node: Ctx { tower: &self.tower }.neg(&self.node),
        }
    }
}
