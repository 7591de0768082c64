//! Tensor products of algebras and the twisted product on `A ⊗ A`.
//!
//! The basis of `A_1 ⊗ ... ⊗ A_n` is ordered row-major over the factor
//! indices, so `e_i ⊗ e_j` in a two-factor product sits at `i * n_2 + j`.

use std::fmt;

use crate::algebra::{AlgElement, AlgebraKind, FreeAlgebra};
use crate::error::{Error, InverseFailure, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorAlgebra {
    factors: Vec<FreeAlgebra>,
    algebra: FreeAlgebra,
}

/// Forms `A_1 ⊗ ... ⊗ A_n` with `B^{j..}_{k..·l..} = prod B^{j_i}_{k_i l_i}`.
pub fn tensor_product(factors: &[FreeAlgebra]) -> Result<TensorAlgebra> {
    let (first, rest) = factors.split_first().ok_or(Error::EmptyFactorList)?;
    let mut dim = first.dim();
    let mut labels = first.labels().to_vec();
    let mut constants = first.constants().to_vec();
    let mut unit = first.unit_index();
    for f in rest {
        let m = f.dim();
        let mut next = Vec::with_capacity(constants.len() * f.constants().len());
        for (i1, j1, k1, v1) in &constants {
            for (i2, j2, k2, v2) in f.constants() {
                next.push((i1 * m + i2, j1 * m + j2, k1 * m + k2, v1 * v2));
            }
        }
        constants = next;
        labels = labels.iter().flat_map(|a| f.labels().iter().map(move |b| format!("{a}⊗{b}"))).collect();
        unit = unit.zip(f.unit_index()).map(|(u, v)| u * m + v);
        dim *= m;
    }
    let algebra = FreeAlgebra::with_kind(dim, labels, constants, unit, AlgebraKind::Tensor)?;
    Ok(TensorAlgebra { factors: factors.to_vec(), algebra })
}

impl TensorAlgebra {
    pub fn factors(&self) -> &[FreeAlgebra] {
        &self.factors
    }

    pub fn algebra(&self) -> &FreeAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Flat basis index of `e_{i_1} ⊗ ... ⊗ e_{i_n}`.
    pub fn index(&self, multi: &[usize]) -> usize {
        assert_eq!(multi.len(), self.factors.len(), "one index per factor");
        multi.iter().zip(&self.factors).fold(0, |acc, (&i, f)| {
            assert!(i < f.dim(), "factor index out of range");
            acc * f.dim() + i
        })
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = flat % f.dim();
            flat /= f.dim();
        }
        out
    }

    /// `a_1 ⊗ ... ⊗ a_n`, whose components are the outer product of the coordinates.
    pub fn decomposable(&self, parts: &[AlgElement]) -> Result<AlgElement> {
        if parts.len() != self.factors.len() {
            return Err(Error::ShapeMismatch(format!("{} factors, {} parts", self.factors.len(), parts.len())));
        }
        let mut coords = vec![Rational::one()];
        for (p, f) in parts.iter().zip(&self.factors) {
            if p.algebra() != f {
                return Err(Error::AlgebraMismatch);
            }
            coords = coords.iter().flat_map(|a| p.coords().iter().map(move |b| a * b)).collect();
        }
        AlgElement::new(&self.algebra, coords)
    }

    /// Product in the tensor algebra.
    pub fn tensor_mul(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        if x.algebra() != &self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        x.multiply(y)
    }
}

/// An element of `A ⊗ A` given by its standard components `a^{ij}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor2 {
    algebra: FreeAlgebra,
    comps: Matrix,
}

impl Tensor2 {
    pub fn new(algebra: &FreeAlgebra, comps: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if comps.rows() != n || comps.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "components are {}x{}, algebra has dimension {n}",
                comps.rows(),
                comps.cols()
            )));
        }
        Ok(Tensor2 { algebra: algebra.clone(), comps })
    }

    pub fn zero(algebra: &FreeAlgebra) -> Self {
        let n = algebra.dim();
        Tensor2 { algebra: algebra.clone(), comps: Matrix::zeros(n, n) }
    }

    pub fn basis(algebra: &FreeAlgebra, i: usize, j: usize) -> Self {
        let mut t = Self::zero(algebra);
        t.comps[(i, j)] = Rational::one();
        t
    }

    /// `1 ⊗ 1`.
    pub fn unit(algebra: &FreeAlgebra) -> Result<Self> {
        let u = algebra.unit_index().ok_or(Error::NoUnit)?;
        Ok(Self::basis(algebra, u, u))
    }

    /// `a ⊗ b`.
    pub fn decomposable(a: &AlgElement, b: &AlgElement) -> Result<Self> {
        if a.algebra() != b.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        let n = a.algebra().dim();
        let comps = Matrix::from_fn(n, n, |i, j| a.coord(i) * b.coord(j));
        Ok(Tensor2 { algebra: a.algebra().clone(), comps })
    }

    /// Components `a^{ij}` read from `vec[i * n + j]`.
    pub fn from_vec(algebra: &FreeAlgebra, v: Vec<Rational>) -> Result<Self> {
        let n = algebra.dim();
        if v.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, actual: v.len() });
        }
        Ok(Tensor2 { algebra: algebra.clone(), comps: Matrix::from_vec(n, n, v) })
    }

    pub fn algebra(&self) -> &FreeAlgebra {
        &self.algebra
    }

    pub fn components(&self) -> &Matrix {
        &self.comps
    }

    pub fn component(&self, i: usize, j: usize) -> &Rational {
        &self.comps[(i, j)]
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        self.comps.data().to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_zero()
    }

    pub fn checked_add(&self, other: &Tensor2) -> Result<Tensor2> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Tensor2 { algebra: self.algebra.clone(), comps: self.comps.add(&other.comps) })
    }

    pub fn scale(&self, c: &Rational) -> Tensor2 {
        Tensor2 { algebra: self.algebra.clone(), comps: self.comps.scale(c) }
    }

    /// As an element of the two-factor tensor algebra `A ⊗ A`.
    pub fn to_element(&self, target: &TensorAlgebra) -> Result<AlgElement> {
        if target.factors().len() != 2 || target.factors().iter().any(|f| f != &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        AlgElement::new(target.algebra(), self.to_vec())
    }

    /// `(a ⊗ b) ∘ (c ⊗ d) = (ac) ⊗ (db)`, extended bilinearly.
    pub fn twisted_mul(&self, other: &Tensor2) -> Result<Tensor2> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let alg = &self.algebra;
        let n = alg.dim();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let s = &self.comps[(i, j)];
                if s.is_zero() {
                    continue;
                }
                for k in 0..n {
                    for l in 0..n {
                        let t = &other.comps[(k, l)];
                        if t.is_zero() {
                            continue;
                        }
                        let st = s * t;
                        for (p, b1) in alg.basis_product(i, k) {
                            let c = &st * b1;
                            for (q, b2) in alg.basis_product(l, j) {
                                out[(*p, *q)] += &(&c * b2);
                            }
                        }
                    }
                }
            }
        }
        Ok(Tensor2 { algebra: alg.clone(), comps: out })
    }

    /// Matrix of `u ↦ self ∘ u` (`left = true`) or `u ↦ u ∘ self` on vectorized components.
    pub fn multiplication_matrix(&self, left: bool) -> Matrix {
        let n = self.algebra.dim();
        let mut m = Matrix::zeros(n * n, n * n);
        for k in 0..n {
            for l in 0..n {
                let basis = Tensor2::basis(&self.algebra, k, l);
                let prod = if left { self.twisted_mul(&basis) } else { basis.twisted_mul(self) }.expect("same algebra");
                for (row, v) in prod.comps.data().iter().enumerate() {
                    if !v.is_zero() {
                        m[(row, k * n + l)] = v.clone();
                    }
                }
            }
        }
        m
    }

    /// The two-sided inverse under the twisted product.
    pub fn inverse(&self) -> Result<Tensor2> {
        let unit = Tensor2::unit(&self.algebra)?.to_vec();
        let right = self.multiplication_matrix(true);
        let left = self.multiplication_matrix(false);
        let mut rhs = unit.clone();
        rhs.extend(unit.iter().cloned());
        match right.vconcat(&left).solve(&rhs).particular {
            Some(u) => Tensor2::from_vec(&self.algebra, u),
            None if right.solve(&unit).particular.is_some() => Err(Error::SingularTensor(InverseFailure::OneSided)),
            None => Err(Error::SingularTensor(InverseFailure::NoRightInverse)),
        }
    }
}

pub fn twisted_mul(s: &Tensor2, t: &Tensor2) -> Result<Tensor2> {
    s.twisted_mul(t)
}

pub fn tensor_inverse(t: &Tensor2) -> Result<Tensor2> {
    t.inverse()
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.comps)
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor2({:?})", self.comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{complex_algebra, hamilton};
    use crate::rational::q;

    #[test]
    fn complex_square_of_i_tensor_i() {
        let c = complex_algebra();
        let cc = tensor_product(&[c.clone(), c.clone()]).unwrap();
        let i = AlgElement::basis(&c, 1);
        let one = AlgElement::basis(&c, 0);
        let ii = cc.decomposable(&[i.clone(), i.clone()]).unwrap();
        assert_eq!(cc.tensor_mul(&ii, &ii).unwrap(), AlgElement::basis(cc.algebra(), 0));
        let a = cc.decomposable(&[one.clone(), i.clone()]).unwrap();
        let b = cc.decomposable(&[i, one]).unwrap();
        assert_eq!(cc.tensor_mul(&a, &b).unwrap(), ii);
        assert_eq!(cc.algebra().unit_index(), Some(0));
    }

    #[test]
    fn single_factor_is_the_algebra() {
        let h = hamilton();
        let t = tensor_product(std::slice::from_ref(&h)).unwrap();
        assert_eq!(t.algebra(), &h);
        assert_eq!(tensor_product(&[]).unwrap_err(), Error::EmptyFactorList);
    }

    #[test]
    fn indices_are_row_major() {
        let h = hamilton();
        let c = complex_algebra();
        let t = tensor_product(&[h, c]).unwrap();
        assert_eq!(t.index(&[3, 1]), 7);
        assert_eq!(t.multi_index(5), vec![2, 1]);
    }

    #[test]
    fn twisted_product_in_h() {
        let h = hamilton();
        let e = |i| AlgElement::basis(&h, i);
        let s = Tensor2::decomposable(&e(1), &e(2)).unwrap();
        let t = Tensor2::decomposable(&e(3), &e(0)).unwrap();
        let expected = Tensor2::decomposable(&-&e(2), &e(2)).unwrap();
        assert_eq!(s.twisted_mul(&t).unwrap(), expected);
        assert_eq!(s.inverse().unwrap(), s);
        let unit = Tensor2::unit(&h).unwrap();
        assert_eq!(unit.twisted_mul(&t).unwrap(), t);
        assert_eq!(unit.inverse().unwrap(), unit);
    }

    #[test]
    fn zero_tensor_is_singular() {
        let h = hamilton();
        assert_eq!(
            Tensor2::zero(&h).inverse().unwrap_err(),
            Error::SingularTensor(InverseFailure::NoRightInverse)
        );
        let t = Tensor2::basis(&h, 0, 0).scale(&q(2, 1));
        assert_eq!(t.inverse().unwrap(), Tensor2::basis(&h, 0, 0).scale(&q(1, 2)));
    }

    #[test]
    fn twisted_product_is_product_with_opposite() {
        let h = hamilton();
        let hop = tensor_product(&[h.clone(), h.opposite()]).unwrap();
        let e = |i| AlgElement::basis(&h, i);
        for (a, b, c, d) in [(1, 2, 3, 1), (2, 3, 2, 1), (3, 3, 1, 2)] {
            let s = Tensor2::decomposable(&e(a), &e(b)).unwrap();
            let t = Tensor2::decomposable(&e(c), &e(d)).unwrap();
            let twisted = s.twisted_mul(&t).unwrap().to_vec();
            let sx = AlgElement::new(hop.algebra(), s.to_vec()).unwrap();
            let tx = AlgElement::new(hop.algebra(), t.to_vec()).unwrap();
            assert_eq!(hop.tensor_mul(&sx, &tx).unwrap().coords(), twisted.as_slice());
        }
    }
}
