//! Free finite-dimensional algebras given by structure constants, and their
//! elements.
//!
//! An algebra stores the sparse triples `(i, j, k, B_ij^k)` it was built from
//! together with a per-pair product table, so `e_i * e_j` is a short list of
//! `(k, coefficient)` pairs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::builtin::QuaternionParams;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Which constructor produced an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraKind {
    Custom,
    Complex,
    Quaternion(QuaternionParams),
    Octonion,
    Tensor,
}

struct Inner {
    dim: usize,
    labels: Vec<String>,
    constants: Vec<(usize, usize, usize, Rational)>,
    unit: Option<usize>,
    table: Vec<Vec<(usize, Rational)>>,
    kind: AlgebraKind,
    b_left: OnceLock<Matrix>,
    b_right: OnceLock<Matrix>,
}

/// Cheap to clone; clones share the same definition.
#[derive(Clone)]
pub struct FreeAlgebra(Arc<Inner>);

impl FreeAlgebra {
    /// Builds an algebra from sparse structure constants `(i, j, k, B_ij^k)`.
    ///
    /// Empty `labels` yields `e0, e1, ...`. Duplicate triples are rejected
    /// rather than summed; zero-valued triples are accepted and dropped.
    pub fn new(
        dim: usize,
        labels: Vec<String>,
        constants: Vec<(usize, usize, usize, Rational)>,
        unit: Option<usize>,
    ) -> Result<Self> {
        Self::with_kind(dim, labels, constants, unit, AlgebraKind::Custom)
    }

    pub(crate) fn with_kind(
        dim: usize,
        labels: Vec<String>,
        constants: Vec<(usize, usize, usize, Rational)>,
        unit: Option<usize>,
        kind: AlgebraKind,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        let labels = if labels.is_empty() {
            (0..dim).map(|i| format!("e{i}")).collect()
        } else if labels.len() == dim {
            labels
        } else {
            return Err(Error::InvalidAlgebra(format!("{} labels for dimension {dim}", labels.len())));
        };
        let mut seen = vec![false; dim * dim * dim];
        let mut table = vec![Vec::new(); dim * dim];
        let mut kept = Vec::with_capacity(constants.len());
        for (i, j, k, v) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!("index ({i}, {j}, {k}) out of range")));
            }
            let slot = (i * dim + j) * dim + k;
            if seen[slot] {
                return Err(Error::InvalidAlgebra(format!("duplicate constant ({i}, {j}, {k})")));
            }
            seen[slot] = true;
            if v.is_zero() {
                continue;
            }
            table[i * dim + j].push((k, v.clone()));
            kept.push((i, j, k, v));
        }
        for row in &mut table {
            row.sort_by_key(|(k, _)| *k);
        }
        let alg = FreeAlgebra(Arc::new(Inner {
            dim,
            labels,
            constants: kept,
            unit: None,
            table,
            kind,
            b_left: OnceLock::new(),
            b_right: OnceLock::new(),
        }));
        match unit {
            None => Ok(alg),
            Some(u) => alg.with_unit(u),
        }
    }

    fn with_unit(self, u: usize) -> Result<Self> {
        let n = self.dim();
        if u >= n {
            return Err(Error::InvalidAlgebra(format!("unit index {u} out of range")));
        }
        for i in 0..n {
            let expected = [(i, Rational::one())];
            if self.basis_product(u, i) != expected || self.basis_product(i, u) != expected {
                return Err(Error::InvalidAlgebra(format!("e{u} does not act as a unit on e{i}")));
            }
        }
        let mut inner = Arc::try_unwrap(self.0).unwrap_or_else(|_| unreachable!("freshly built"));
        inner.unit = Some(u);
        Ok(FreeAlgebra(Arc::new(inner)))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.0.unit
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.0.kind
    }

    /// Nonzero structure constants in insertion order.
    pub fn constants(&self) -> &[(usize, usize, usize, Rational)] {
        &self.0.constants
    }

    /// `e_i * e_j` as sorted `(k, B_ij^k)` pairs.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.0.table[i * self.0.dim + j]
    }

    /// `B_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_product(i, j)
            .iter()
            .find(|(p, _)| *p == k)
            .map_or_else(Rational::zero, |(_, v)| v.clone())
    }

    /// Dense `n x n x n` array indexed `(i * n + j) * n + k`.
    pub fn dense_constants(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n * n * n];
        for (i, j, k, v) in self.constants() {
            out[(i * n + j) * n + k] = v.clone();
        }
        out
    }

    pub fn same_as(&self, other: &FreeAlgebra) -> bool {
        self == other
    }

    pub(crate) fn b_cache(&self, right_nested: bool) -> &OnceLock<Matrix> {
        if right_nested {
            &self.0.b_right
        } else {
            &self.0.b_left
        }
    }

    /// The algebra with product `x * y := y x`.
    pub fn opposite(&self) -> FreeAlgebra {
        let constants = self.constants().iter().map(|(i, j, k, v)| (*j, *i, *k, v.clone())).collect();
        FreeAlgebra::new(self.dim(), self.labels().to_vec(), constants, self.unit_index())
            .expect("opposite of a valid algebra is valid")
    }

    /// `B_ij^p = B_ji^p` for all indices.
    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `sum_p B_ij^p B_pk^q = sum_p B_ip^q B_jk^p` for all `i, j, k, q`.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let mut left = vec![Rational::zero(); n];
        let mut right = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    left.iter_mut().for_each(|x| *x = Rational::zero());
                    right.iter_mut().for_each(|x| *x = Rational::zero());
                    for (p, bijp) in self.basis_product(i, j) {
                        for (q, bpkq) in self.basis_product(*p, k) {
                            left[*q] += &(bijp * bpkq);
                        }
                    }
                    for (p, bjkp) in self.basis_product(j, k) {
                        for (q, bipq) in self.basis_product(i, *p) {
                            right[*q] += &(bjkp * bipq);
                        }
                    }
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Associativity decided by evaluating the associator on every basis triple.
    pub fn associator_vanishes_on_basis(&self) -> bool {
        let n = self.dim();
        let basis: Vec<AlgElement> = (0..n).map(|i| AlgElement::basis(self, i)).collect();
        basis.iter().all(|a| {
            basis.iter().all(|b| basis.iter().all(|c| a.associator(b, c).expect("same algebra").is_zero()))
        })
    }
}

impl PartialEq for FreeAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.dim == other.0.dim && self.0.unit == other.0.unit && self.0.table == other.0.table)
    }
}

impl Eq for FreeAlgebra {}

impl fmt::Debug for FreeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FreeAlgebra")
            .field("dim", &self.0.dim)
            .field("kind", &self.0.kind)
            .field("unit", &self.0.unit)
            .field("labels", &self.0.labels)
            .finish()
    }
}

/// An element `a = a^i e_i` of a [`FreeAlgebra`].
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElement {
    algebra: FreeAlgebra,
    coords: Vec<Rational>,
}

impl AlgElement {
    pub fn new(algebra: &FreeAlgebra, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), actual: coords.len() });
        }
        Ok(AlgElement { algebra: algebra.clone(), coords })
    }

    pub fn from_ints(algebra: &FreeAlgebra, coords: &[i64]) -> Result<Self> {
        Self::new(algebra, coords.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero(algebra: &FreeAlgebra) -> Self {
        AlgElement { algebra: algebra.clone(), coords: vec![Rational::zero(); algebra.dim()] }
    }

    /// Panics if `i` is out of range.
    pub fn basis(algebra: &FreeAlgebra, i: usize) -> Self {
        assert!(i < algebra.dim(), "basis index {i} out of range");
        let mut x = Self::zero(algebra);
        x.coords[i] = Rational::one();
        x
    }

    pub fn unit(algebra: &FreeAlgebra) -> Result<Self> {
        algebra.unit_index().map(|u| Self::basis(algebra, u)).ok_or(Error::NoUnit)
    }

    /// `c * e_unit`.
    pub fn scalar(algebra: &FreeAlgebra, c: Rational) -> Result<Self> {
        Ok(Self::unit(algebra)?.scale(&c))
    }

    pub fn algebra(&self) -> &FreeAlgebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    fn check_same(&self, other: &AlgElement) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// `(ab)^k = B_ij^k a^i b^j`.
    pub fn multiply(&self, other: &AlgElement) -> Result<AlgElement> {
        self.check_same(other)?;
        let alg = &self.algebra;
        let mut out = vec![Rational::zero(); alg.dim()];
        for (i, a) in self.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coords.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in alg.basis_product(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        Ok(AlgElement { algebra: alg.clone(), coords: out })
    }

    pub fn checked_add(&self, other: &AlgElement) -> Result<AlgElement> {
        self.check_same(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(AlgElement { algebra: self.algebra.clone(), coords })
    }

    pub fn checked_sub(&self, other: &AlgElement) -> Result<AlgElement> {
        self.check_same(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(AlgElement { algebra: self.algebra.clone(), coords })
    }

    pub fn scale(&self, c: &Rational) -> AlgElement {
        AlgElement { algebra: self.algebra.clone(), coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &AlgElement) -> Result<AlgElement> {
        self.multiply(other)?.checked_sub(&other.multiply(self)?)
    }

    /// `(a, b, c) = (ab)c - a(bc)`.
    pub fn associator(&self, b: &AlgElement, c: &AlgElement) -> Result<AlgElement> {
        self.check_same(c)?;
        self.multiply(b)?.multiply(c)?.checked_sub(&self.multiply(&b.multiply(c)?)?)
    }

    /// `(a,b,c) = (b,a,c) = (b,c,a) = 0` for all basis `b, c`.
    pub fn in_nucleus(&self) -> bool {
        let n = self.algebra.dim();
        let basis: Vec<AlgElement> = (0..n).map(|i| AlgElement::basis(&self.algebra, i)).collect();
        basis.iter().all(|b| {
            basis.iter().all(|c| {
                self.associator(b, c).unwrap().is_zero()
                    && b.associator(self, c).unwrap().is_zero()
                    && b.associator(c, self).unwrap().is_zero()
            })
        })
    }

    /// In the nucleus and commuting with every basis vector.
    pub fn in_center(&self) -> bool {
        let n = self.algebra.dim();
        (0..n).all(|i| self.commutator(&AlgElement::basis(&self.algebra, i)).unwrap().is_zero())
            && self.in_nucleus()
    }
}

/// Writes `3/5 - 2i`, `1 + e1 - 2e3`, `1/2*j`. The unit label `1` is omitted.
impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.algebra.labels()[i];
            let scalar = Some(i) == self.algebra.unit_index() && label == "1";
            let mag = c.abs();
            let body = if scalar {
                mag.to_string()
            } else if mag.is_one() {
                label.clone()
            } else if mag.is_integer() {
                format!("{mag}{label}")
            } else {
                format!("{mag}*{label}")
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElement({self})")
    }
}

impl Add for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        self.checked_add(rhs).expect("operands belong to different algebras")
    }
}

impl Sub for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        self.checked_sub(rhs).expect("operands belong to different algebras")
    }
}

impl Mul for &AlgElement {
    type Output = AlgElement;
    fn mul(self, rhs: &AlgElement) -> AlgElement {
        self.multiply(rhs).expect("operands belong to different algebras")
    }
}

impl Mul<&AlgElement> for &Rational {
    type Output = AlgElement;
    fn mul(self, rhs: &AlgElement) -> AlgElement {
        rhs.scale(self)
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.scale(&-Rational::one())
    }
}

/// `x * y` as a free function.
pub fn multiply(x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
    x.multiply(y)
}

pub fn commutator(x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
    x.commutator(y)
}

pub fn associator(x: &AlgElement, y: &AlgElement, z: &AlgElement) -> Result<AlgElement> {
    x.associator(y, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn two_dim_nilpotent() -> FreeAlgebra {
        // e1 * e1 = e0, everything else zero; no unit.
        FreeAlgebra::new(2, vec![], vec![(1, 1, 0, q(1, 1))], None).unwrap()
    }

    #[test]
    fn rejects_bad_definitions() {
        assert!(FreeAlgebra::new(0, vec![], vec![], None).is_err());
        assert!(FreeAlgebra::new(2, vec![], vec![(0, 2, 0, q(1, 1))], None).is_err());
        let dup = vec![(0, 0, 0, q(1, 1)), (0, 0, 0, q(1, 1))];
        assert!(matches!(FreeAlgebra::new(1, vec![], dup, None), Err(Error::InvalidAlgebra(_))));
        assert!(FreeAlgebra::new(2, vec!["a".into()], vec![], None).is_err());
        assert!(FreeAlgebra::new(2, vec![], vec![(1, 1, 0, q(1, 1))], Some(0)).is_err());
    }

    #[test]
    fn unitless_algebra_reports_no_unit() {
        let a = two_dim_nilpotent();
        assert_eq!(AlgElement::unit(&a).unwrap_err(), Error::NoUnit);
        let e1 = AlgElement::basis(&a, 1);
        assert_eq!((&e1 * &e1).coords(), &[q(1, 1), q(0, 1)]);
        assert!(a.is_commutative());
        assert!(a.is_associative());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = two_dim_nilpotent();
        let b = FreeAlgebra::new(2, vec![], vec![(0, 0, 0, q(1, 1))], None).unwrap();
        let x = AlgElement::basis(&a, 0);
        let y = AlgElement::basis(&b, 0);
        assert_eq!(x.multiply(&y).unwrap_err(), Error::AlgebraMismatch);
        assert_eq!(x.associator(&x, &y).unwrap_err(), Error::AlgebraMismatch);
    }

    #[test]
    fn opposite_reverses_products() {
        let a = FreeAlgebra::new(2, vec![], vec![(0, 1, 1, q(1, 1))], None).unwrap();
        let op = a.opposite();
        assert_eq!(op.constant(1, 0, 1), q(1, 1));
        assert!(op.constant(0, 1, 1).is_zero());
        assert!(!a.is_commutative());
    }

    #[test]
    fn display_forms() {
        let a = FreeAlgebra::new(2, vec!["1".into(), "i".into()], vec![(0, 0, 0, q(1, 1)), (0, 1, 1, q(1, 1)), (1, 0, 1, q(1, 1)), (1, 1, 0, q(-1, 1))], Some(0)).unwrap();
        let x = AlgElement::new(&a, vec![q(3, 5), q(-2, 1)]).unwrap();
        assert_eq!(x.to_string(), "3/5 - 2i");
        let y = AlgElement::new(&a, vec![q(0, 1), q(-1, 2)]).unwrap();
        assert_eq!(y.to_string(), "-1/2*i");
        assert_eq!(AlgElement::zero(&a).to_string(), "0");
    }
}
